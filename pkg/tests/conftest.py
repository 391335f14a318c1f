"""Independent oracles built on mpmath, kept apart from the package's own evaluators."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

ORACLE_DPS = 60


def mp_complex(text: str) -> mpmath.mpc:
    """Parse "x+yi" without going through the package."""
    s = text.replace(" ", "")
    if not s.endswith("i"):
        return mpmath.mpc(_mpq(s))
    s = s[:-1]
    for k in range(len(s) - 1, 0, -1):
        if s[k] in "+-" and s[k - 1] != "e":
            return mpmath.mpc(_mpq(s[:k]), _mpq(s[k:] or "1"))
    return mpmath.mpc(0, _mpq(s))


def _mpq(s: str) -> mpmath.mpf:
    if s in ("+", "-"):
        s += "1"
    f = Fraction(s)
    return mpmath.mpf(f.numerator) / f.denominator


def theta_oracle(eps, epsp, v, tau, terms: int = 80) -> mpmath.mpc:
    """Plain truncated sum over |n| <= terms of exp(pi i m^2 tau + 2 pi i m (v + eps'/2)), m = n + eps/2."""
    with mpmath.workdps(ORACLE_DPS):
        e = mpmath.mpf(Fraction(eps).numerator) / Fraction(eps).denominator
        ep = mpmath.mpf(Fraction(epsp).numerator) / Fraction(epsp).denominator
        v = mp_complex(v) if isinstance(v, str) else mpmath.mpc(v)
        tau = mp_complex(tau) if isinstance(tau, str) else mpmath.mpc(tau)
        total = mpmath.mpc(0)
        for n in range(-terms, terms + 1):
            m = n + e / 2
            total += mpmath.exp(mpmath.pi * 1j * m * m * tau + 2j * mpmath.pi * m * (v + ep / 2))
        return total


def eta_oracle(tau) -> mpmath.mpc:
    with mpmath.workdps(ORACLE_DPS):
        tau = mp_complex(tau) if isinstance(tau, str) else mpmath.mpc(tau)
        return mpmath.eta(tau)


def rel(x, y) -> float:
    """Relative difference of two values given as gmpy2 or mpmath numbers, at oracle precision."""
    with mpmath.workdps(ORACLE_DPS):
        a, b = to_mp(x), to_mp(y)
        scale = max(abs(a), abs(b))
        return 0.0 if scale == 0 else float(abs(a - b) / scale)


def to_mp(z) -> mpmath.mpc:
    if isinstance(z, mpmath.mpc | mpmath.mpf):
        return mpmath.mpc(z)
    return mpmath.mpc(mpmath.mpf(str(z.real)), mpmath.mpf(str(z.imag)))


@pytest.fixture
def oracle_dps():
    return ORACLE_DPS
