"""The Dedekind eta function and its multiplier system.

``nu_eta`` is Knopp's closed formula, evaluated exactly; ``eta_numeric`` is
the q-product used to check it.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2
from gmpy2 import mpc

from .arith import (
    DEFAULT_PREC,
    RootOfUnity,
    SL2Matrix,
    principal_sqrt,
    require_upper_half_plane,
    symbol_lower,
    symbol_upper,
    to_mpc,
)
from .theta import ThetaChar, _gauss_sum, _input_prec

_LN2 = math.log(2.0)
_GUARD = 24
# eta(tau) = exp(pi i / 6) * theta[-1/3; 1](0, 3 tau)
_PENTAGONAL = ThetaChar(Fraction(-1, 3), 1)


def nu_eta(m: SL2Matrix) -> RootOfUnity:
    """Exact value of the eta multiplier ``nu_eta(M)``."""
    a, b, c, d = m.entries()
    if c % 2:
        sym = symbol_upper(d, c)
        expo = Fraction((a + d) * c - b * d * (c * c - 1) - 3 * c, 12)
    else:
        sym = symbol_lower(c, d)
        expo = Fraction((a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d, 12)
    return RootOfUnity(expo + (0 if sym == 1 else 1))


def _product_terms(imt: float, prec: int) -> int:
    budget = (prec + 8) * _LN2 + 2.0
    return math.ceil(budget / (2 * math.pi * imt)) + 1


def eta_numeric(tau, prec: int = DEFAULT_PREC) -> mpc:
    """``eta(tau) = q^(1/24) prod (1 - q^n)`` to ``prec`` bits.

    For small ``Im tau`` the product needs ~1/Im(tau) factors, so the Euler
    pentagonal series (a theta series, ~1/sqrt(Im tau) terms) is used instead.
    """
    tau = to_mpc(tau, _input_prec(tau, prec))
    require_upper_half_plane(tau)
    imt = float(tau.imag)
    n_prod = _product_terms(imt, prec)
    n_series = 2 * math.sqrt((prec + 8) * _LN2 * 12 / (math.pi * imt)) / 6 + 4
    if n_prod > 4 * n_series:
        return eta_pentagonal(tau, prec)
    return eta_product(tau, prec)


def eta_product(tau, prec: int = DEFAULT_PREC) -> mpc:
    tau = to_mpc(tau, _input_prec(tau, prec))
    require_upper_half_plane(tau)
    # tail: |log prod_{n>N} (1 - q^n)| <= |q|^(N+1) / (1 - |q|)^2
    imt = float(tau.imag)
    absq = math.exp(-2 * math.pi * imt)
    count = _product_terms(imt, prec)
    while count > 1 and (absq ** (count + 1)) / (1 - absq) ** 2 > 2.0 ** (-prec - 8):
        count += 1
    wp = prec + _GUARD + int(math.log2(count + 1)) + int(math.log2(1.0 + abs(complex(tau))))
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        tt = mpc(tau)
        two_pi_i = 2 * gmpy2.const_pi() * mpc(0, 1)
        q = gmpy2.exp(two_pi_i * tt)
        qn = q
        total = gmpy2.exp(two_pi_i * tt / 24)
        for _ in range(count):
            total *= 1 - qn
            qn *= q
    return mpc(total, precision=prec)


def eta_pentagonal(tau, prec: int = DEFAULT_PREC) -> mpc:
    """``eta(tau) = sum (-1)^n q^((6n-1)^2/24)``."""
    tau = to_mpc(tau, _input_prec(tau, prec))
    require_upper_half_plane(tau)
    wp = prec + _GUARD
    with gmpy2.context(gmpy2.get_context(), precision=max(wp, max(tau.precision))):
        t3 = 3 * mpc(tau)
    series = _gauss_sum(_PENTAGONAL, mpc(0), t3, wp, deriv=False)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        value = gmpy2.exp(gmpy2.const_pi() * mpc(0, 1) / 6) * series
    return mpc(value, precision=prec)


def _transform_precision(m: SL2Matrix, prec: int) -> int:
    # Im(M tau) shrinks like 1/|c tau + d|^2 and the series exponents grow accordingly
    return prec + _GUARD + 4 * max(1, m.height().bit_length())


def verify_eta_transform(m: SL2Matrix, tau, prec: int = DEFAULT_PREC) -> mpc:
    """Relative residual of ``eta(M tau) = nu_eta(M) (c tau + d)^(1/2) eta(tau)``."""
    wp = _transform_precision(m, prec)
    tau = to_mpc(tau, max(wp, _input_prec(tau, wp)))
    require_upper_half_plane(tau)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        w = m.c * tau + m.d
        mt = (m.a * tau + m.b) / w
    lhs = eta_numeric(mt, wp)
    rhs_eta = eta_numeric(tau, wp)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        rhs = nu_eta(m).to_complex(wp) * principal_sqrt(w) * rhs_eta
        residual = abs(lhs - rhs) / abs(lhs)
    return gmpy2.mpfr(residual, precision=prec)
