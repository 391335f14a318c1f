"""
Multiplier systems on the level-5 theta group
=============================================

F = eta^6 / (theta[1/5;1/5] theta[1/5;9/5]) has weight 2 and a multiplier
with values in the 10th roots of unity. Its kernels are described by
congruences on the entries; we compare the two descriptions.
"""

from thetagroup5 import ResidueCase, kernel_member_F, nu_F, sample_members
from thetagroup5.gamma5 import verify_multiplier

for case in ResidueCase:
    m = sample_members(case, 1, 60, seed=1)[0]
    print(f"{case.value:>2}  {str(m):24s} nu_F = {nu_F(m)}  "
          f"law residual {float(verify_multiplier('F', m, '0+1i', 128)):.1e}")

# kernels only depend on k mod 10
agree = total = 0
for case in ResidueCase:
    for m in sample_members(case, 200, 10**4, seed=2):
        for k in range(10):
            total += 1
            agree += kernel_member_F(m, k) == nu_F(m, k).is_one()
print(f"congruence test agrees with nu_F = 1 in {agree} of {total} cases")
