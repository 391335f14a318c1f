"""Transformation of theta functions with characteristics under SL(2, Z).

For ``M = [[a, b], [c, d]]`` the law reads

    theta[e; e'](v/(c tau + d), M tau)
        = nu_eta(M)^3 (c tau + d)^(1/2) exp(pi i c v^2/(c tau + d))
          * exp(pi i E) * theta[a e + c e' - a c; b e + d e' - b d](v, tau)

with ``E`` an exact rational depending on ``M`` and the characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpc, mpfr

from .arith import (
    DEFAULT_PREC,
    ONE,
    RootOfUnity,
    SL2Matrix,
    principal_sqrt,
    require_upper_half_plane,
    to_mpc,
)
from .eta import _transform_precision, nu_eta
from .theta import ThetaChar, _input_prec, theta_series

ODD_CHAR = ThetaChar(1, 1)


@dataclass(frozen=True)
class TransformData:
    """Everything on the right-hand side of the transformation law except ``theta[new_char](v, tau)``.

    ``gaussian_c`` is the integer ``c`` of the factor ``exp(pi i c v^2/(c tau + d))``;
    ``d`` is kept alongside so the automorphy factor can be rebuilt.
    """

    new_char: ThetaChar
    eta_cube: RootOfUnity
    extra_phase: RootOfUnity
    gaussian_c: int
    d: int
    weight: Fraction = Fraction(1, 2)

    @property
    def phase(self) -> RootOfUnity:
        return self.eta_cube * self.extra_phase

    def factor(self, v, tau, prec: int = DEFAULT_PREC) -> mpc:
        """``nu_eta^3 (c tau + d)^(1/2) exp(pi i c v^2/(c tau + d)) exp(pi i E)`` at ``(v, tau)``."""
        with gmpy2.context(gmpy2.get_context(), precision=prec):
            v = to_mpc(v, _input_prec(v, prec))
            tau = to_mpc(tau, _input_prec(tau, prec))
            w = self.gaussian_c * tau + self.d
            gauss = gmpy2.exp(gmpy2.const_pi() * mpc(0, 1) * self.gaussian_c * v * v / w)
            return self.phase.to_complex(prec) * principal_sqrt(w) * gauss

    def to_json(self) -> dict:
        return {
            "new_char": self.new_char.to_json(),
            "eta_cube": self.eta_cube.to_json(),
            "extra_phase": self.extra_phase.to_json(),
            "weight": str(self.weight),
            "gaussian_c": self.gaussian_c,
        }


def transform_11(m: SL2Matrix) -> TransformData:
    return TransformData(ODD_CHAR, nu_eta(m) ** 3, ONE, m.c, m.d)


def transformed_char(m: SL2Matrix, char: ThetaChar) -> ThetaChar:
    a, b, c, d = m.entries()
    eps, epsp = char
    return ThetaChar(a * eps + c * epsp - a * c, b * eps + d * epsp - b * d)


def extra_exponent(m: SL2Matrix, char: ThetaChar) -> Fraction:
    """The exponent ``E`` (mod 2) of the extra phase ``exp(pi i E)``."""
    a, b, c, d = m.entries()
    u = (1 - char.eps) / 2
    w = (1 - char.eps_prime) / 2
    top = a * u + c * w
    bottom = b * u + d * w
    return (top * (b + d - b * d)
            + Fraction((b - 1) * (d - 1), 2)
            - u
            - b * u * top
            - c * w * bottom)


def transform_general(m: SL2Matrix, char: ThetaChar) -> TransformData:
    """Transformation data for ``theta[char]``; the new characteristic is left unreduced."""
    return TransformData(
        transformed_char(m, char),
        nu_eta(m) ** 3,
        RootOfUnity(extra_exponent(m, char)),
        m.c,
        m.d,
    )


def _transformed_point(m: SL2Matrix, v, tau, wp: int) -> tuple[mpc, mpc, mpc, mpc]:
    tau = to_mpc(tau, max(wp, _input_prec(tau, wp)))
    v = to_mpc(v, max(wp, _input_prec(v, wp)))
    require_upper_half_plane(tau)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        w = m.c * tau + m.d
        return v, tau, v / w, (m.a * tau + m.b) / w


def verify_transform(m: SL2Matrix, char: ThetaChar, v, tau, prec: int = DEFAULT_PREC) -> mpfr:
    """Relative residual of the transformation law at ``(v, tau)``."""
    wp = _transform_precision(m, prec)
    v, tau, v_new, tau_new = _transformed_point(m, v, tau, wp)
    data = transform_general(m, char)
    lhs = theta_series(char, v_new, tau_new, wp)
    rhs_theta = theta_series(data.new_char, v, tau, wp)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        rhs = data.factor(v, tau, wp) * rhs_theta
        scale = abs(lhs)
        residual = abs(lhs - rhs) / scale if scale != 0 else abs(rhs)
    return mpfr(residual, precision=prec)


def elliptic_ratio(m: SL2Matrix, v, tau, prec: int = DEFAULT_PREC) -> mpc:
    """``theta[1;1](v/(c tau + d), M tau) / (exp(pi i c v^2/(c tau + d)) theta[1;1](v, tau))``.

    As a function of ``v`` this is elliptic and entire, hence constant.
    """
    wp = _transform_precision(m, prec)
    v, tau, v_new, tau_new = _transformed_point(m, v, tau, wp)
    num = theta_series(ODD_CHAR, v_new, tau_new, wp)
    den = theta_series(ODD_CHAR, v, tau, wp)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        w = m.c * tau + m.d
        gauss = gmpy2.exp(gmpy2.const_pi() * mpc(0, 1) * m.c * v * v / w)
        return mpc(num / (gauss * den), precision=prec)
