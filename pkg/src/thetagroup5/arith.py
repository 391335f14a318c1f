"""Exact integer, matrix, residue and root-of-unity arithmetic.

Everything here is exact: matrices carry Python ints, roots of unity carry a
reduced rational exponent.  The only inexact pieces are the small helpers at
the bottom that convert to and from :class:`gmpy2.mpc`, which is the
arbitrary-precision complex type used by the numerical modules.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpc, mpfr

Rational = Union[int, Fraction]

DEFAULT_PREC = 128


class InvalidArgument(ValueError):
    """Raised when an argument violates an operation's precondition."""


class OutOfDomain(ValueError):
    """Raised when a point lies outside the upper half plane."""


# ---------------------------------------------------------------------------
# Jacobi symbols


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol ``(a/n)`` for odd ``n >= 1``."""
    if n <= 0 or n % 2 == 0:
        raise InvalidArgument(f"Jacobi symbol needs a positive odd modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _check_symbol_args(c: int, d: int) -> None:
    if d % 2 == 0:
        raise InvalidArgument(f"lower argument must be odd, got {d}")
    if math.gcd(c, d) != 1:
        raise InvalidArgument(f"arguments must be coprime, got ({c}, {d})")


def _sign(x: int) -> int:
    # sign(0) := +1
    return -1 if x < 0 else 1


def symbol_upper(c: int, d: int) -> int:
    """The symbol ``(c/d)^* = (c/|d|)``."""
    _check_symbol_args(c, d)
    return jacobi_symbol(c, abs(d))


def symbol_lower(c: int, d: int) -> int:
    """The symbol ``(c/d)_*``: ``(c/|d|)`` with a sign flip when ``c`` and ``d`` are both negative."""
    _check_symbol_args(c, d)
    sign = -1 if (_sign(c) < 0 and _sign(d) < 0) else 1
    return sign * jacobi_symbol(c, abs(d))


# ---------------------------------------------------------------------------
# SL(2, Z)


@dataclass(frozen=True)
class SL2Matrix:
    """An element ``[[a, b], [c, d]]`` of SL(2, Z)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in "abcd":
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidArgument(f"entry {name} must be an integer, got {value!r}")
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidArgument(f"determinant of {self.entries()} is not 1")

    @classmethod
    def identity(cls) -> SL2Matrix:
        return cls(1, 0, 0, 1)

    @classmethod
    def T(cls, n: int = 1) -> SL2Matrix:
        """Translation ``tau -> tau + n``."""
        return cls(1, n, 0, 1)

    @classmethod
    def S(cls) -> SL2Matrix:
        return cls(0, -1, 1, 0)

    @classmethod
    def parse(cls, text: str) -> SL2Matrix:
        """Read ``"a b c d"`` (row-major, whitespace separated) or the JSON object form."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(json.loads(text))
        parts = text.replace(",", " ").split()
        if len(parts) != 4:
            raise InvalidArgument(f"expected four integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, InvalidArgument):
                raise
            raise InvalidArgument(f"non-integer matrix entry in {text!r}") from exc

    @classmethod
    def from_json(cls, obj: dict) -> SL2Matrix:
        try:
            return cls(obj["a"], obj["b"], obj["c"], obj["d"])
        except KeyError as exc:
            raise InvalidArgument(f"matrix JSON is missing key {exc}") from exc

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def to_text(self) -> str:
        return f"{self.a} {self.b} {self.c} {self.d}"

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: SL2Matrix) -> SL2Matrix:
        return mat_mul(self, other)

    def __neg__(self) -> SL2Matrix:
        return mat_neg(self)

    def __pow__(self, n: int) -> SL2Matrix:
        base = self if n >= 0 else mat_inv(self)
        result = SL2Matrix.identity()
        n = abs(n)
        while n:
            if n & 1:
                result = mat_mul(result, base)
            base = mat_mul(base, base)
            n >>= 1
        return result

    def inverse(self) -> SL2Matrix:
        return mat_inv(self)

    def act(self, tau):
        """Moebius action ``(a tau + b) / (c tau + d)`` on an mpc (or any number type)."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def act_cusp(self, p: int, q: int) -> tuple[int, int]:
        """Action on the projective point ``p/q`` (``q = 0`` is infinity), normalised."""
        return normalize_cusp(self.a * p + self.b * q, self.c * p + self.d * q)

    def height(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def mat_mul(m1: SL2Matrix, m2: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def mat_inv(m: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(m.d, -m.b, -m.c, m.a)


def mat_neg(m: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(-m.a, -m.b, -m.c, -m.d)


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*x + t*y = g = gcd(x, y) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def complete_bottom_row(c: int, d: int) -> SL2Matrix:
    """Some matrix of SL(2, Z) with bottom row ``(c, d)``; needs ``gcd(c, d) = 1``."""
    g, s, t = ext_gcd(c, d)
    if g != 1:
        raise InvalidArgument(f"bottom row ({c}, {d}) is not primitive")
    # s*c + t*d = 1, so a = t, b = -s gives a*d - b*c = 1
    return SL2Matrix(t, -s, c, d)


def random_sl2(rng, bound: int) -> SL2Matrix:
    """A seeded pseudo-random element of SL(2, Z) with bottom row entries bounded by ``bound``."""
    while True:
        c, d = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if math.gcd(c, d) == 1:
            break
    m = complete_bottom_row(c, d)
    # shift the top row so a and b stay comparable to the bottom row
    t = rng.randint(-2, 2)
    return SL2Matrix(m.a + t * c, m.b + t * d, c, d)


def normalize_cusp(p: int, q: int) -> tuple[int, int]:
    """Reduce ``p/q`` to lowest terms with ``q > 0``, or ``(1, 0)`` for infinity."""
    g = math.gcd(p, q)
    if g == 0:
        raise InvalidArgument("0/0 is not a cusp")
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


# ---------------------------------------------------------------------------
# Reduction modulo N


@dataclass(frozen=True)
class ResidueMatrix:
    """A matrix of SL(2, Z/NZ) with entries stored in ``range(N)``."""

    a: int
    b: int
    c: int
    d: int
    N: int

    def __post_init__(self) -> None:
        if self.N <= 0:
            raise InvalidArgument(f"modulus must be positive, got {self.N}")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.N)
        if (self.a * self.d - self.b * self.c - 1) % self.N:
            raise InvalidArgument(f"{self.entries()} is not unimodular mod {self.N}")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: ResidueMatrix) -> ResidueMatrix:
        if self.N != other.N:
            raise InvalidArgument("moduli differ")
        return ResidueMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.N,
        )

    def __neg__(self) -> ResidueMatrix:
        return ResidueMatrix(-self.a, -self.b, -self.c, -self.d, self.N)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "N": self.N}


def lambda_N(m: SL2Matrix, N: int) -> ResidueMatrix:
    """Entrywise reduction of ``m`` modulo ``N``."""
    if N <= 0:
        raise InvalidArgument(f"modulus must be positive, got {N}")
    return ResidueMatrix(m.a, m.b, m.c, m.d, N)


# ---------------------------------------------------------------------------
# Roots of unity


@dataclass(frozen=True, init=False)
class RootOfUnity:
    """The number ``exp(i*pi*num/den)`` with ``num/den`` reduced into ``[0, 2)``."""

    num: int
    den: int

    def __init__(self, num: Rational = 0, den: int = 1) -> None:
        r = Fraction(num) / den
        r -= 2 * math.floor(r / 2)
        object.__setattr__(self, "num", r.numerator)
        object.__setattr__(self, "den", r.denominator)

    @classmethod
    def from_exponent(cls, r: Rational) -> RootOfUnity:
        return cls(r)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return rou_mul(self, other)

    def __truediv__(self, other: RootOfUnity) -> RootOfUnity:
        return rou_mul(self, rou_inv(other))

    def __pow__(self, k: int) -> RootOfUnity:
        return rou_pow(self, k)

    def is_one(self) -> bool:
        return self.num == 0

    def order(self) -> int:
        """Multiplicative order, i.e. the least ``n`` with ``self**n == 1``."""
        return self.den if self.num % 2 == 0 else 2 * self.den

    def to_complex(self, prec: int = DEFAULT_PREC) -> mpc:
        return rou_to_complex(self, prec)

    def to_json(self) -> dict:
        return {"num": self.num, "den": self.den}

    @classmethod
    def from_json(cls, obj: dict) -> RootOfUnity:
        return cls(obj["num"], obj["den"])

    def __repr__(self) -> str:
        return f"RootOfUnity({self.num}/{self.den})"


ONE = RootOfUnity(0)


def rou_mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    return RootOfUnity(x.exponent + y.exponent)


def rou_inv(x: RootOfUnity) -> RootOfUnity:
    return RootOfUnity(-x.exponent)


def rou_pow(x: RootOfUnity, k: int) -> RootOfUnity:
    return RootOfUnity(k * x.exponent)


_QUARTER_TURNS = {Fraction(0): (1, 0), Fraction(1, 2): (0, 1), Fraction(1): (-1, 0), Fraction(3, 2): (0, -1)}


def rou_to_complex(x: RootOfUnity, prec: int = DEFAULT_PREC) -> mpc:
    r = x.exponent
    if r in _QUARTER_TURNS:
        return mpc(*_QUARTER_TURNS[r], precision=prec)
    with gmpy2.context(gmpy2.get_context(), precision=prec + 10):
        angle = gmpy2.const_pi() * gmpy2.mpq(r.numerator, r.denominator)
        z = mpc(gmpy2.cos(angle), gmpy2.sin(angle))
    return mpc(z, precision=prec)


# ---------------------------------------------------------------------------
# Arbitrary-precision complex helpers

def _parse_real(text: str) -> Fraction:
    return Fraction(text)


def parse_complex(text: str) -> tuple[Fraction, Fraction]:
    """Parse ``"x+yi"`` (also ``"x"``, ``"yi"``, ``"i"``, rationals like ``"1/3+i"``) exactly."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InvalidArgument("empty complex number")
    if s[-1] in "ij":
        body = s[:-1]
        # split at the last sign that is not part of an exponent
        idx = None
        for k in range(len(body) - 1, -1, -1):
            if body[k] in "+-" and (k == 0 or body[k - 1] not in "eE"):
                idx = k
                break
        if idx is None:
            real_part, imag_part = "", body
        else:
            real_part, imag_part = body[:idx], body[idx:]
        if imag_part in ("", "+"):
            imag_part = "1"
        elif imag_part == "-":
            imag_part = "-1"
    else:
        real_part, imag_part = s, "0"
    try:
        return (_parse_real(real_part) if real_part else Fraction(0)), _parse_real(imag_part)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"cannot parse complex number {text!r}") from exc


def to_mpc(z, prec: int = DEFAULT_PREC) -> mpc:
    """Convert a string, Fraction pair, int, float, complex or mpc to an mpc of ``prec`` bits."""
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        if isinstance(z, str):
            x, y = parse_complex(z)
            return mpc(mpfr(gmpy2.mpq(x.numerator, x.denominator)),
                       mpfr(gmpy2.mpq(y.numerator, y.denominator)))
        if isinstance(z, tuple):
            x, y = (Fraction(t) for t in z)
            return mpc(mpfr(gmpy2.mpq(x.numerator, x.denominator)),
                       mpfr(gmpy2.mpq(y.numerator, y.denominator)))
        if isinstance(z, Fraction):
            return mpc(mpfr(gmpy2.mpq(z.numerator, z.denominator)))
        return mpc(z)


def format_complex(z: mpc, digits: int = 40) -> str:
    """Decimal ``"x+yi"`` string."""
    x = gmpy2.mpfr(z.real)
    y = gmpy2.mpfr(z.imag)
    xs = f"{x:.{digits}g}" if x != 0 else "0"
    ys = f"{abs(y):.{digits}g}" if y != 0 else "0"
    sign = "-" if y < 0 else "+"
    return f"{xs}{sign}{ys}i"


def principal_sqrt(w: mpc) -> mpc:
    """Square root with argument in ``(-pi/2, pi/2]``, so that ``sqrt(-1) = i``."""
    if w.imag == 0:
        # drop a possible negative zero so the branch cut is approached from above
        w = mpc(w.real, 0, precision=w.precision)
    return gmpy2.sqrt(w)


def log2_abs(z) -> float:
    """``log2 |z|`` as a float, ``-inf`` for zero; safe for huge and tiny mpfr exponents."""
    a = abs(z)
    if a == 0:
        return float("-inf")
    e, m = gmpy2.frexp(mpfr(a))
    return math.log2(float(m)) + e


def require_upper_half_plane(tau: mpc) -> None:
    if not tau.imag > 0:
        raise OutOfDomain(f"tau must have positive imaginary part, got {tau}")
