"""
Cosets and cusps
================
"""

from thetagroup5 import Cusp, SL2Matrix, coset_reps_gamma1, cusps
from thetagroup5.gamma5 import cusp_count_from_cosets, in_gamma_theta_5

table = coset_reps_gamma1()
print(f"{len(table)} coset representatives, certificate: {table.certificate}")

result = cusps(bound=12)
print("cusp classes:", ", ".join(str(c) for c in result.reps), f"({result.status})")
print("T-orbits on the cosets:", cusp_count_from_cosets())

# 3/2 and -3/2 are identified by an explicit member of the group
g = SL2Matrix(-5, 6, 4, -5)
print(g, "in group:", in_gamma_theta_5(g), " 3/2 ->", Cusp(*g.act_cusp(3, 2)))
