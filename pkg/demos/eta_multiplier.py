"""
The eta multiplier, exactly and numerically
===========================================

nu_eta(M) is a 24th root of unity. We compute it from the closed formula
with Jacobi symbols and then check it against the q-product at a point.
"""

import random

from thetagroup5 import SL2Matrix, nu_eta, verify_eta_transform
from thetagroup5.arith import complete_bottom_row, random_sl2

# the three classical values
for name, m in [("T", SL2Matrix.T()), ("S", SL2Matrix.S()), ("-I", -SL2Matrix.identity())]:
    print(f"nu_eta({name}) = exp(i pi * {nu_eta(m).exponent})")

# a big matrix: entries are plain Python ints, so nothing overflows
m = complete_bottom_row(10**30 + 7, 10**30 + 6)
print("a large matrix:", m, "->", nu_eta(m))

# eta(M tau) = nu_eta(M) (c tau + d)^(1/2) eta(tau), checked at 128 bits
rng = random.Random(0)
for _ in range(5):
    m = random_sl2(rng, 300)
    r = verify_eta_transform(m, "0.1+0.9i", prec=128)
    print(f"{str(m):28s} residual {float(r):.2e}")
