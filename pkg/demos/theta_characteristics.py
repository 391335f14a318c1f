"""
Theta functions with characteristics
====================================

Two evaluators (the defining series and the Jacobi triple product) should
agree, and the characteristic algebra should be visible numerically.
"""

from fractions import Fraction as F

import gmpy2

from thetagroup5 import ThetaChar, reduce_char, shift_integer, theta_product, theta_series, zero_location
from thetagroup5.arith import format_complex, to_mpc
from thetagroup5.theta import apply_shift

char = ThetaChar(F(1, 5), F(9, 5))
tau = "0+2i"
a = theta_series(char, 0, tau, 128)
b = theta_product(char, 0, tau, 128)
print("series :", format_complex(a, 30))
print("product:", format_complex(b, 30))

# v -> v + n + m tau only multiplies by an explicit exponential
lhs, rhs = apply_shift(shift_integer(char, 1, -1), "0.2+0.1i", "0.3+1.1i", 128)
with gmpy2.context(gmpy2.get_context(), precision=128):
    print("quasi-periodicity residual:", float(abs(lhs - rhs) / abs(lhs)))

# characteristics differing by even integers differ by a root of unity
print("reduce (1/5, -19/5):", reduce_char(ThetaChar(F(1, 5), F(-19, 5))))

# theta[0;0] vanishes at tau/2 + 1/2
t, s = zero_location(ThetaChar(0, 0))
tt = to_mpc("0+1i", 200)
with gmpy2.context(gmpy2.get_context(), precision=200):
    z = tt * float(t) + float(s)
print("|theta[0;0](i/2 + 1/2, i)| =", float(abs(theta_series(ThetaChar(0, 0), z, tt, 128))))
