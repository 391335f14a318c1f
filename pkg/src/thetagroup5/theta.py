"""Theta functions with rational characteristics.

The series is

    theta[eps; eps'](v, tau) = sum_n exp(2 pi i [ (n + eps/2)^2 tau / 2 + (n + eps/2)(v + eps'/2) ])

and the product form is the Jacobi triple product in ``x = exp(pi i tau)``,
``z = exp(2 pi i v)``.  Characteristics are exact rationals; the phases they
produce are handled as :class:`~thetagroup5.arith.RootOfUnity` values and
only become floating point at the last moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpc, mpfr

from .arith import (
    DEFAULT_PREC,
    ONE,
    InvalidArgument,
    Rational,
    RootOfUnity,
    log2_abs,
    require_upper_half_plane,
    rou_to_complex,
    to_mpc,
)

_LN2 = math.log(2.0)
# bits kept beyond the requested precision in every evaluation
_GUARD = 24


@dataclass(frozen=True, init=False)
class ThetaChar:
    """A characteristic ``(eps, eps')`` with exact rational entries."""

    eps: Fraction
    eps_prime: Fraction

    def __init__(self, eps: Rational | str, eps_prime: Rational | str) -> None:
        object.__setattr__(self, "eps", Fraction(eps))
        object.__setattr__(self, "eps_prime", Fraction(eps_prime))

    @classmethod
    def parse(cls, text: str) -> ThetaChar:
        parts = text.replace(",", " ").split()
        if len(parts) != 2:
            raise InvalidArgument(f"expected two rationals, got {text!r}")
        try:
            return cls(parts[0], parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"cannot parse characteristic {text!r}") from exc

    def __iter__(self):
        return iter((self.eps, self.eps_prime))

    def is_integral(self) -> bool:
        return self.eps.denominator == 1 and self.eps_prime.denominator == 1

    def is_odd(self) -> bool:
        """Integral with ``eps * eps'`` odd, so that ``theta(v)`` is odd in ``v``."""
        return self.is_integral() and (self.eps * self.eps_prime) % 2 == 1

    def is_even_integral(self) -> bool:
        return self.is_integral() and (self.eps * self.eps_prime) % 2 == 0

    def to_json(self) -> list[str]:
        return [str(self.eps), str(self.eps_prime)]

    def __str__(self) -> str:
        return f"[{self.eps}; {self.eps_prime}]"


@dataclass(frozen=True)
class PhasedChar:
    """``theta[original] = phase * theta[char]``."""

    char: ThetaChar
    phase: RootOfUnity


@dataclass(frozen=True)
class ExpFactor:
    """The factor ``exp(i pi phase) * exp(2 pi i (v_coeff * v + tau_coeff * tau))``."""

    phase: RootOfUnity = ONE
    v_coeff: Fraction = Fraction(0)
    tau_coeff: Fraction = Fraction(0)

    def is_identity(self) -> bool:
        return self.phase.is_one() and self.v_coeff == 0 and self.tau_coeff == 0

    def evaluate(self, v, tau, prec: int = DEFAULT_PREC) -> mpc:
        wp = prec + _GUARD
        with gmpy2.context(gmpy2.get_context(), precision=wp):
            v = to_mpc(v, wp)
            tau = to_mpc(tau, wp)
            two_pi_i = 2 * gmpy2.const_pi() * mpc(0, 1)
            expo = two_pi_i * (_q(self.v_coeff) * v + _q(self.tau_coeff) * tau)
            value = rou_to_complex(self.phase, wp) * gmpy2.exp(expo)
        return mpc(value, precision=prec)


@dataclass(frozen=True)
class ShiftRule:
    """``theta[source](v + arg_tau * tau + arg_const, tau) = factor(v, tau) * theta[target](v, tau)``."""

    source: ThetaChar
    target: ThetaChar
    arg_tau: Fraction
    arg_const: Fraction
    factor: ExpFactor

    def is_identity(self) -> bool:
        return (self.source == self.target and self.arg_tau == 0 and self.arg_const == 0
                and self.factor.is_identity())


@dataclass(frozen=True)
class Negation:
    """``theta[-eps; -eps'](v) = theta[eps; eps'](-v)``; derivatives pick up ``deriv_sign``."""

    source: ThetaChar
    target: ThetaChar
    v_sign: int = -1
    deriv_sign: int = -1


def _q(r: Fraction) -> mpfr:
    r = Fraction(r)
    return mpfr(gmpy2.mpq(r.numerator, r.denominator))


# ---------------------------------------------------------------------------
# characteristic algebra


def shift_integer(char: ThetaChar, m: int, n: int) -> ShiftRule:
    """Quasi-periodicity under ``v -> v + n + m tau`` for integers ``m, n``."""
    eps, epsp = char
    factor = ExpFactor(
        phase=RootOfUnity(n * eps - m * epsp),
        v_coeff=Fraction(-m),
        tau_coeff=Fraction(-m * m, 2),
    )
    return ShiftRule(char, char, Fraction(m), Fraction(n), factor)


def half_shift(char: ThetaChar, m: Rational, n: Rational) -> ShiftRule:
    """Shift ``v -> v + (m tau + n)/2`` for rational ``m, n``; moves the characteristic by ``(m, n)``."""
    m, n = Fraction(m), Fraction(n)
    eps, epsp = char
    factor = ExpFactor(
        phase=RootOfUnity(-m * (epsp + n) / 2),
        v_coeff=-m / 2,
        tau_coeff=-m * m / 8,
    )
    return ShiftRule(char, ThetaChar(eps + m, epsp + n), m / 2, n / 2, factor)


def reduce_char(char: ThetaChar) -> PhasedChar:
    """Move ``char`` into ``[0, 2) x [0, 2)``, returning the phase picked up on the way."""
    eps, epsp = char
    m = math.floor(eps / 2)
    n = math.floor(epsp / 2)
    reduced = ThetaChar(eps - 2 * m, epsp - 2 * n)
    return PhasedChar(reduced, RootOfUnity(reduced.eps * n))


def negate_char(char: ThetaChar) -> Negation:
    return Negation(ThetaChar(-char.eps, -char.eps_prime), char)


def zero_location(char: ThetaChar) -> tuple[Fraction, Fraction]:
    """The zero ``v = t * tau + s`` in the fundamental parallelogram, returned as ``(t, s)``."""
    return (1 - char.eps) / 2, (1 - char.eps_prime) / 2


# ---------------------------------------------------------------------------
# numerical evaluation


def _gauss_sum(char: ThetaChar, v: mpc, tau: mpc, prec: int, deriv: bool) -> mpc:
    """Sum the defining series (or its termwise v-derivative) at ``prec`` bits."""
    e = char.eps / 2
    imt = float(tau.imag)
    imv = float(v.imag)
    center = -imv / imt
    budget = (prec + 8) * _LN2 + 4.0
    half_width = math.sqrt(budget / (math.pi * imt)) + 2.0
    n_lo = math.floor(center - half_width - float(e))
    n_hi = math.ceil(center + half_width - float(e))
    count = n_hi - n_lo + 1
    m_max = max(abs(n_lo + float(e)), abs(n_hi + float(e))) + 1.0
    # rounding in the exponent grows like m^2 |tau|; the recurrence adds about 2 log2(count)
    extra = 2 * math.log2(m_max) + math.log2(1.0 + abs(complex(tau))) + 2 * math.log2(count + 1)
    # the peak term sits near the centre and sets the scale of cancellation
    peak_bits = math.pi * imt * center * center / _LN2
    wp = prec + _GUARD + int(extra)

    for _attempt in range(2):
        with gmpy2.context(gmpy2.get_context(), precision=wp):
            pi = gmpy2.const_pi()
            i = mpc(0, 1)
            vv = mpc(v)
            tt = mpc(tau)
            m0 = n_lo + e
            phase0 = rou_to_complex(RootOfUnity(m0 * char.eps_prime), wp)
            term = phase0 * gmpy2.exp(pi * i * (tt * _q(m0) * _q(m0) + 2 * _q(m0) * vv))
            ratio = (rou_to_complex(RootOfUnity(char.eps_prime), wp)
                     * gmpy2.exp(pi * i * (tt * (2 * _q(m0) + 1) + 2 * vv)))
            q2 = gmpy2.exp(2 * pi * i * tt)
            total = mpc(0)
            if deriv:
                m = _q(m0)
                for _ in range(count):
                    total += m * term
                    term *= ratio
                    ratio *= q2
                    m += 1
                total *= 2 * pi * i
            else:
                for _ in range(count):
                    total += term
                    term *= ratio
                    ratio *= q2
        loss = peak_bits - log2_abs(total)
        if loss < _GUARD - 8 or total == 0:
            break
        wp += int(min(loss, 4 * prec)) + _GUARD
    return total


def theta_series(char: ThetaChar, v, tau, prec: int = DEFAULT_PREC) -> mpc:
    """``theta[char](v, tau)`` from the defining series, to ``prec`` bits."""
    tau = to_mpc(tau, _input_prec(tau, prec))
    v = to_mpc(v, _input_prec(v, prec))
    require_upper_half_plane(tau)
    if char.is_odd() and v == 0:
        return mpc(0, precision=prec)
    return mpc(_gauss_sum(char, v, tau, prec, deriv=False), precision=prec)


def theta_deriv(char: ThetaChar, tau, prec: int = DEFAULT_PREC) -> mpc:
    """``d/dv theta[char](v, tau)`` at ``v = 0``, differentiated term by term."""
    tau = to_mpc(tau, _input_prec(tau, prec))
    require_upper_half_plane(tau)
    if char.is_even_integral():
        return mpc(0, precision=prec)
    return mpc(_gauss_sum(char, mpc(0), tau, prec, deriv=True), precision=prec)


def theta_product(char: ThetaChar, v, tau, prec: int = DEFAULT_PREC) -> mpc:
    """``theta[char](v, tau)`` from the Jacobi triple product."""
    tau = to_mpc(tau, _input_prec(tau, prec))
    v = to_mpc(v, _input_prec(v, prec))
    require_upper_half_plane(tau)
    eps, epsp = char
    imt = float(tau.imag)
    imv = float(v.imag)
    budget = (prec + 8) * _LN2 + 4.0
    log_p2 = -math.pi * imt * (1 + float(eps)) - 2 * math.pi * imv
    log_p3 = -math.pi * imt * (1 - float(eps)) + 2 * math.pi * imv
    count = math.ceil((budget + max(0.0, log_p2, log_p3)) / (2 * math.pi * imt)) + 1
    wp = prec + _GUARD + int(math.log2(count + 1)) + int(math.log2(1.0 + abs(complex(tau))))
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        pi = gmpy2.const_pi()
        i = mpc(0, 1)
        tt = mpc(tau)
        vv = mpc(v)
        x2 = gmpy2.exp(2 * pi * i * tt)
        z = gmpy2.exp(2 * pi * i * vv)
        e = _q(eps)
        pre = (rou_to_complex(RootOfUnity(eps * epsp / 2), wp)
               * gmpy2.exp(pi * i * (tt * e * e / 4 + vv * e)))
        p1 = x2
        p2 = rou_to_complex(RootOfUnity(epsp), wp) * gmpy2.exp(pi * i * tt * (1 + e)) * z
        p3 = rou_to_complex(RootOfUnity(-epsp), wp) * gmpy2.exp(pi * i * tt * (1 - e)) / z
        total = pre
        for _ in range(count):
            total *= (1 - p1) * (1 + p2) * (1 + p3)
            if total == 0:
                break
            p1 *= x2
            p2 *= x2
            p3 *= x2
    return mpc(total, precision=prec)


def _input_prec(z, prec: int) -> int:
    """Keep the full precision of an mpc argument; other inputs are rounded at ``prec + guard``."""
    if isinstance(z, mpc):
        return max(max(z.precision), prec)
    return prec + 2 * _GUARD


def apply_shift(rule: ShiftRule, v, tau, prec: int = DEFAULT_PREC) -> tuple[mpc, mpc]:
    """Evaluate both sides of a :class:`ShiftRule` numerically; returns ``(lhs, rhs)``."""
    wp = prec + _GUARD
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        vv = to_mpc(v, wp)
        tt = to_mpc(tau, wp)
        shifted = vv + _q(rule.arg_tau) * tt + _q(rule.arg_const)
    lhs = theta_series(rule.source, shifted, tt, prec)
    factor = rule.factor.evaluate(vv, tt, wp)
    base = theta_series(rule.target, vv, tt, wp)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        rhs = factor * base
    return lhs, mpc(rhs, precision=prec)
