"""The level-5 theta group and the modular forms built on it.

``Gamma_{theta,5}`` is the set of ``M`` in SL(2, Z) congruent to one of
``+I, -I, +S, -S`` modulo 5, with ``S = [[0, -1], [1, 0]]``.  On it live the
weight-one theta products

    A(tau) = theta[1/5; 1/5] theta[1/5; 9/5],   B(tau) = theta[3/5; 3/5] theta[3/5; 7/5]

and the weight-two quotients ``F = eta^6 / A`` and ``G = eta^6 / B``.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import gmpy2
from gmpy2 import mpc, mpfr

from . import tables
from .arith import (
    DEFAULT_PREC,
    InvalidArgument,
    ResidueMatrix,
    RootOfUnity,
    SL2Matrix,
    complete_bottom_row,
    lambda_N,
    normalize_cusp,
    require_upper_half_plane,
    to_mpc,
)
from .eta import _transform_precision, eta_numeric, nu_eta
from .theta import ThetaChar, _input_prec, theta_series


class NotAMember(ValueError):
    """Raised when a matrix outside ``Gamma_{theta,5}`` is passed where a member is required."""


class IllConditioned(ArithmeticError):
    """Raised when a quotient's denominator is numerically indistinguishable from zero."""


class ResidueCase(enum.Enum):
    PLUS_I = "I"
    MINUS_I = "-I"
    PLUS_S = "S"
    MINUS_S = "-S"

    @property
    def residue(self) -> tuple[int, int, int, int]:
        return _CASE_RESIDUES[self]

    @classmethod
    def parse(cls, text: str) -> ResidueCase:
        try:
            return cls(text.strip().upper().replace("+", ""))
        except ValueError as exc:
            raise InvalidArgument(f"unknown residue case {text!r}") from exc


_CASE_RESIDUES = {
    ResidueCase.PLUS_I: (1, 0, 0, 1),
    ResidueCase.MINUS_I: (4, 0, 0, 4),
    ResidueCase.PLUS_S: (0, 4, 1, 0),
    ResidueCase.MINUS_S: (0, 1, 4, 0),
}
_RESIDUE_TO_CASE = {v: k for k, v in _CASE_RESIDUES.items()}


# ---------------------------------------------------------------------------
# membership


def in_gamma_theta_N(m: SL2Matrix, N: int) -> bool:
    """``a = d`` and ``b = -c`` modulo ``N``."""
    if N <= 0:
        raise InvalidArgument(f"level must be positive, got {N}")
    return (m.a - m.d) % N == 0 and (m.b + m.c) % N == 0


def in_gamma_theta_5(m: SL2Matrix) -> bool:
    return in_gamma_theta_N(m, 5)


def residue_case(m: SL2Matrix) -> ResidueCase:
    case = _RESIDUE_TO_CASE.get(lambda_N(m, 5).entries())
    if case is None:
        raise NotAMember(f"{m} is not in Gamma_theta,5")
    return case


def _split(x: int) -> int:
    # every quotient by 5 below is exact on members; a remainder would mean a wrong case
    q, r = divmod(x, 5)
    if r:
        raise ArithmeticError(f"{x} is not divisible by 5")
    return q


# ---------------------------------------------------------------------------
# multiplier systems


def f_exponent(m: SL2Matrix) -> int:
    """The integer ``f(M)`` with ``nu_F(M) = exp(pi i f(M) / 5)``."""
    a, b, c, d = m.entries()
    case = residue_case(m)
    if case is ResidueCase.PLUS_I:
        return _split(4 * b + 8 * a * b + 8 * c * d)
    if case is ResidueCase.MINUS_I:
        return _split(6 * b + 8 * a * b + 8 * c * d)
    if case is ResidueCase.PLUS_S:
        return 5 + _split(4 * d + 8 * a * b + 8 * c * d)
    return 5 + _split(-4 * d + 8 * a * b + 8 * c * d)


def g_exponent(m: SL2Matrix) -> int:
    """The integer ``g(M)`` with ``nu_G(M) = exp(pi i g(M) / 5)``."""
    a, b, c, d = m.entries()
    case = residue_case(m)
    if case is ResidueCase.PLUS_I:
        return _split(6 * b + 2 * a * b + 2 * c * d)
    if case is ResidueCase.MINUS_I:
        return _split(24 * b + 2 * a * b + 2 * c * d)
    if case is ResidueCase.PLUS_S:
        return 5 + _split(6 * d + 2 * a * b + 2 * c * d)
    return 5 + _split(-6 * d + 2 * a * b + 2 * c * d)


@dataclass(frozen=True)
class MultiplierResult:
    """``value = nu_eta(M)^eta_power * exp(pi i exponent / 5)``.

    ``eta_power`` is 6 for the theta products and 0 for ``F^k``, ``G^k``.
    """

    value: RootOfUnity
    exponent: int
    case: ResidueCase
    eta_power: int = 0

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "exponent": self.exponent,
            "eta_power": self.eta_power,
            "case": self.case.value,
        }


def product_A_exponent(m: SL2Matrix) -> int:
    """``E`` in ``nu_A(M) = nu_eta(M)^6 exp(pi i E / 5)``; equals ``-f(M)``."""
    return -f_exponent(m)


def product_B_exponent(m: SL2Matrix) -> int:
    return -g_exponent(m)


def nu_product_A(m: SL2Matrix) -> RootOfUnity:
    """Multiplier of ``theta[1/5; 1/5] theta[1/5; 9/5]`` (weight 1)."""
    return nu_eta(m) ** 6 * RootOfUnity(Fraction(product_A_exponent(m), 5))


def nu_product_B(m: SL2Matrix) -> RootOfUnity:
    """Multiplier of ``theta[3/5; 3/5] theta[3/5; 7/5]`` (weight 1)."""
    return nu_eta(m) ** 6 * RootOfUnity(Fraction(product_B_exponent(m), 5))


def nu_F(m: SL2Matrix, k: int = 1) -> RootOfUnity:
    return RootOfUnity(Fraction((k % 10) * f_exponent(m), 5))


def nu_G(m: SL2Matrix, k: int = 1) -> RootOfUnity:
    return RootOfUnity(Fraction((k % 10) * g_exponent(m), 5))


def multiplier(system: str, m: SL2Matrix, k: int = 1) -> MultiplierResult:
    """Uniform front end: ``system`` is one of ``A, B, F, G``."""
    case = residue_case(m)
    system = system.upper()
    if system == "A":
        return MultiplierResult(nu_product_A(m), product_A_exponent(m), case, 6)
    if system == "B":
        return MultiplierResult(nu_product_B(m), product_B_exponent(m), case, 6)
    if system == "F":
        return MultiplierResult(nu_F(m, k), (k % 10) * f_exponent(m), case)
    if system == "G":
        return MultiplierResult(nu_G(m, k), (k % 10) * g_exponent(m), case)
    raise InvalidArgument(f"unknown multiplier system {system!r}")


# ---------------------------------------------------------------------------
# numerical forms

CHARS_A = (ThetaChar(Fraction(1, 5), Fraction(1, 5)), ThetaChar(Fraction(1, 5), Fraction(9, 5)))
CHARS_B = (ThetaChar(Fraction(3, 5), Fraction(3, 5)), ThetaChar(Fraction(3, 5), Fraction(7, 5)))


def theta_product_A(tau, prec: int = DEFAULT_PREC) -> mpc:
    return _theta_constant_product(CHARS_A, tau, prec)


def theta_product_B(tau, prec: int = DEFAULT_PREC) -> mpc:
    return _theta_constant_product(CHARS_B, tau, prec)


def _theta_constant_product(chars, tau, prec: int) -> mpc:
    tau = to_mpc(tau, _input_prec(tau, prec))
    x = theta_series(chars[0], 0, tau, prec + 8)
    y = theta_series(chars[1], 0, tau, prec + 8)
    with gmpy2.context(gmpy2.get_context(), precision=prec + 8):
        return mpc(x * y, precision=prec)


def _eta6_quotient(chars, tau, prec: int) -> mpc:
    tau = to_mpc(tau, _input_prec(tau, prec))
    require_upper_half_plane(tau)
    den = _theta_constant_product(chars, tau, prec + 8)
    eta = eta_numeric(tau, prec + 8)
    with gmpy2.context(gmpy2.get_context(), precision=prec + 8):
        if abs(den) < mpfr(2) ** (-(prec // 2)):
            raise IllConditioned(f"theta product is {abs(den)} at tau = {tau}")
        return mpc(eta ** 6 / den, precision=prec)


def F_numeric(tau, prec: int = DEFAULT_PREC) -> mpc:
    """``F = eta^6 / (theta[1/5; 1/5] theta[1/5; 9/5])``."""
    return _eta6_quotient(CHARS_A, tau, prec)


def G_numeric(tau, prec: int = DEFAULT_PREC) -> mpc:
    """``G = eta^6 / (theta[3/5; 3/5] theta[3/5; 7/5])``."""
    return _eta6_quotient(CHARS_B, tau, prec)


_SYSTEMS = {
    "A": (theta_product_A, nu_product_A, 1),
    "B": (theta_product_B, nu_product_B, 1),
    "F": (F_numeric, lambda m: nu_F(m, 1), 2),
    "G": (G_numeric, lambda m: nu_G(m, 1), 2),
}


def verify_multiplier(system: str, m: SL2Matrix, tau, prec: int = DEFAULT_PREC) -> mpfr:
    """Relative residual of ``h(M tau) = nu(M) (c tau + d)^w h(tau)`` for ``h`` in ``A, B, F, G``."""
    func, nu, weight = _SYSTEMS[system.upper()]
    value = nu(m)
    wp = _transform_precision(m, prec)
    tau = to_mpc(tau, max(wp, _input_prec(tau, wp)))
    require_upper_half_plane(tau)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        w = m.c * tau + m.d
        mt = (m.a * tau + m.b) / w
    lhs = func(mt, wp)
    base = func(tau, wp)
    with gmpy2.context(gmpy2.get_context(), precision=wp):
        rhs = value.to_complex(wp) * w ** weight * base
        residual = abs(lhs - rhs) / abs(lhs)
    return mpfr(residual, precision=prec)


# ---------------------------------------------------------------------------
# kernels


def _kernel_condition(m: SL2Matrix, k: int) -> bool:
    case = residue_case(m)
    k %= 10
    plus_minus_i = case in (ResidueCase.PLUS_I, ResidueCase.MINUS_I)
    if k == 0:
        return True
    if k == 5:
        return plus_minus_i
    if plus_minus_i:
        cond = (m.b // 5 - m.c // 5) % 5 == 0
    else:
        cond = False
    if k % 2:
        return cond
    return cond or (not plus_minus_i and (m.a // 5 + m.d // 5) % 5 == 0)


def kernel_member_F(m: SL2Matrix, k: int) -> bool:
    """Membership in ``Ker nu_{F^k}`` decided by congruences on the entries."""
    return _kernel_condition(m, k)


def kernel_member_G(m: SL2Matrix, k: int) -> bool:
    """Membership in ``Ker nu_{G^k}``; the same congruence sets as for ``F``."""
    return _kernel_condition(m, k)


ALL_OF_GAMMA_THETA_5 = None


def kernel_residue_list(k: int) -> list[ResidueMatrix] | None:
    """Classes mod 25 making up ``Ker nu_{F^k}``; ``None`` stands for all of ``Gamma_{theta,5}``."""
    k %= 10
    if k == 0:
        return ALL_OF_GAMMA_THETA_5
    if k == 5:
        return [r for r in _sl2_mod(25) if lambda_N_residue(r, 5) in
                ((1, 0, 0, 1), (4, 0, 0, 4))]
    table = tables.KERNEL_ODD_MOD25 if k % 2 else tables.KERNEL_EVEN_MOD25
    return [ResidueMatrix(*e, 25) for e in table]


def lambda_N_residue(r: ResidueMatrix, N: int) -> tuple[int, int, int, int]:
    if r.N % N:
        raise InvalidArgument(f"{N} does not divide {r.N}")
    return tuple(x % N for x in r.entries())


def _sl2_mod(N: int) -> list[ResidueMatrix]:
    out = []
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    if (a * d - b * c - 1) % N == 0:
                        out.append(ResidueMatrix(a, b, c, d, N))
    return out


# ---------------------------------------------------------------------------
# coset tables


@dataclass
class CosetTable:
    """Right coset representatives ``H * r`` of a group modulo a subgroup ``H``."""

    reps: list[SL2Matrix]
    subgroup_oracle: Callable[[SL2Matrix], bool]
    group_label: str
    certificate: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.reps)

    def pairwise_inequivalent(self) -> bool:
        for i, r in enumerate(self.reps):
            for s in self.reps[i + 1:]:
                if self.subgroup_oracle(r @ s.inverse()):
                    return False
        return True

    def locate(self, m: SL2Matrix) -> int:
        """Index of the coset containing ``m``."""
        hits = [i for i, r in enumerate(self.reps) if self.subgroup_oracle(m @ r.inverse())]
        if len(hits) != 1:
            raise ArithmeticError(f"{m} lies in {len(hits)} cosets")
        return hits[0]


_THETA5_RESIDUES = [ResidueMatrix(*e, 5) for e in _CASE_RESIDUES.values()]


def coset_reps_gamma1() -> CosetTable:
    """The 30 representatives of ``Gamma(1)`` modulo ``Gamma_{theta,5}``, with their certificate."""
    reps = [SL2Matrix(*e) for e in tables.GAMMA1_COSET_REPS]
    table = CosetTable(reps, in_gamma_theta_5, "Gamma(1)/Gamma_theta,5")
    covered = {(h @ lambda_N(r, 5)).entries() for r in reps for h in _THETA5_RESIDUES}
    table.certificate = {
        "pairwise_inequivalent": table.pairwise_inequivalent(),
        "residues_covered": len(covered),
        "order_SL2_Z5": len(_sl2_mod(5)),
        "image_of_subgroup": len(_THETA5_RESIDUES),
    }
    table.certificate["complete"] = (
        table.certificate["residues_covered"] == table.certificate["order_SL2_Z5"]
    )
    return table


def kernel_transversal(k: int) -> list[SL2Matrix]:
    """A transversal of ``Gamma_{theta,5}`` modulo ``Ker nu_{F^k}``."""
    k %= 10
    if k == 0:
        return [SL2Matrix.identity()]
    if k == 5:
        return [SL2Matrix.identity(), SL2Matrix.S()]
    translations = [SL2Matrix.T(n) for n in (0, 5, 10, 15, 20)]
    if k % 2 == 0:
        return translations
    return translations + [SL2Matrix(n, -1, 1, 0) for n in (0, 5, 10, 15, 20)]


def nu_F_image(k: int) -> set[RootOfUnity]:
    """The image of ``nu_{F^k}``: generated by ``nu_{F^k}(T^5)`` and ``nu_{F^k}(S)``."""
    gens = [nu_F(SL2Matrix.T(5), k), nu_F(SL2Matrix.S(), k)]
    image = {RootOfUnity(0)}
    frontier = list(image)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y not in image:
                image.add(y)
                frontier.append(y)
    return image


def certify_kernel_transversal(reps: Iterable[SL2Matrix], k: int) -> dict:
    values = [nu_F(r, k) for r in reps]
    image = nu_F_image(k)
    return {
        "size": len(values),
        "distinct_values": len(set(values)) == len(values),
        "image_order": len(image),
        "enumerates_image": set(values) == image,
    }


def coset_reps_kernel(k: int) -> CosetTable:
    reps = kernel_transversal(k)
    table = CosetTable(reps, lambda m: in_gamma_theta_5(m) and kernel_member_F(m, k),
                       f"Gamma_theta,5/Ker nu_F^{k % 10}")
    table.certificate = certify_kernel_transversal(reps, k)
    return table


def printed_kernel_transversal(k: int) -> list[SL2Matrix]:
    """The transversal printed for the case of ``k`` mod 10 (only ``k = 5, +-1, +-3, +-2, +-4``)."""
    k %= 10
    key = 5 if k == 5 else (1 if k % 2 else 2)
    if k == 0:
        raise InvalidArgument("no transversal is printed for k = 0 mod 10")
    return [SL2Matrix(*e) for e in tables.PRINTED_KERNEL_TRANSVERSALS[key]]


def cusp_count_from_cosets() -> int:
    """Number of cusps, as orbits of ``T`` acting on the right of the 30 cosets."""
    table = coset_reps_gamma1()
    n = len(table)
    step = [table.locate(r @ SL2Matrix.T()) for r in table.reps]
    seen = [False] * n
    orbits = 0
    for i in range(n):
        if not seen[i]:
            orbits += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = step[j]
    return orbits


# ---------------------------------------------------------------------------
# cusps


@dataclass(frozen=True, order=True)
class Cusp:
    """The point ``p/q`` of the projective line over Q; ``q = 0`` is infinity."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = normalize_cusp(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def key(self) -> tuple:
        # simplest representative first; ties prefer the negative point
        return (self.q, abs(self.p), self.p > 0)

    def __str__(self) -> str:
        if self.q == 0:
            return "oo"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "text": str(self)}


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y, key=None) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if key is not None and key(ry) < key(rx):
            rx, ry = ry, rx
        self.parent[ry] = rx

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def cusp_invariant(cusp: Cusp) -> tuple[int, int]:
    """Orbit label of ``+-(p, q) mod 5`` under ``{+-I, +-S}``; constant on ``Gamma_{theta,5}``-classes."""
    p, q = cusp.p % 5, cusp.q % 5
    images = [(p, q), (-p % 5, -q % 5), (-q % 5, p), (q, -p % 5)]
    return min(images)


def members_up_to(height: int) -> list[SL2Matrix]:
    """All members of ``Gamma_{theta,5}`` whose entries are bounded by ``height`` in absolute value."""
    out = []
    for c in range(-height, height + 1):
        for d in range(-height, height + 1):
            if math.gcd(c, d) != 1:
                continue
            if c == 0:
                for b in range(-height, height + 1):
                    m = SL2Matrix(d, b, 0, d)
                    if in_gamma_theta_5(m):
                        out.append(m)
                continue
            base = complete_bottom_row(c, d)
            lo, hi = sorted(((-height - base.a) / c, (height - base.a) / c))
            for t in range(math.ceil(lo), math.floor(hi) + 1):
                a, b = base.a + t * c, base.b + t * d
                if abs(a) <= height and abs(b) <= height:
                    m = SL2Matrix(a, b, c, d)
                    if in_gamma_theta_5(m):
                        out.append(m)
    return out


@dataclass
class CuspResult:
    classes: list[list[Cusp]]
    reps: list[Cusp]
    decided: bool
    bound: int
    element_bound: int
    elements_used: int
    status: str

    def class_of(self, cusp: Cusp) -> int:
        cusp = Cusp(cusp.p, cusp.q)
        for i, members in enumerate(self.classes):
            if cusp in members:
                return i
        raise KeyError(cusp)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "bound": self.bound,
            "element_bound": self.element_bound,
            "elements_used": self.elements_used,
            "class_count": len(self.reps) if self.decided else None,
            "reps": [c.to_json() for c in self.reps],
            "class_sizes": [len(m) for m in self.classes],
        }


def cusps(bound: int = 12, element_bound: int = 60) -> CuspResult:
    """Cusp classes of ``Gamma_{theta,5}`` among points ``p/q`` with ``|p|, |q| <= bound``.

    Points are merged by union-find along explicit group elements (so every
    merge is witnessed).  Classes are separated by :func:`cusp_invariant`,
    which is constant on orbits.  When the two disagree the search has not
    stabilised at this bound and the result is reported as undecided.
    """
    points = {Cusp(1, 0)}
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                points.add(Cusp(p, q))
    uf = UnionFind(sorted(points, key=Cusp.key))
    elements = members_up_to(element_bound)
    for pt in points:
        for g in elements:
            image = Cusp(*g.act_cusp(pt.p, pt.q))
            if image in points:
                uf.union(pt, image, key=Cusp.key)
    raw = list(uf.classes().values())
    classes = sorted((sorted(m, key=Cusp.key) for m in raw), key=lambda m: m[0].key())
    labels = [{cusp_invariant(c) for c in members} for members in classes]
    consistent = all(len(lab) == 1 for lab in labels)
    distinct = len({next(iter(lab)) for lab in labels}) == len(labels) if consistent else False
    decided = consistent and distinct
    status = "decided" if decided else ("inconsistent" if not consistent else "undecided")
    return CuspResult(
        classes=classes,
        reps=[m[0] for m in classes] if decided else [],
        decided=decided,
        bound=bound,
        element_bound=element_bound,
        elements_used=len(elements),
        status=status,
    )


# ---------------------------------------------------------------------------
# sampling


def lift_residue(target: ResidueMatrix, entry_bound: int, rng: random.Random,
                 max_attempts: int = 10_000) -> SL2Matrix:
    """A random ``M`` in SL(2, Z) with ``lambda_N(M) = target`` and entries bounded by ``entry_bound``."""
    N = target.N
    ta, tb, tc, td = target.entries()
    lo_c, hi_c = math.ceil((-entry_bound - tc) / N), math.floor((entry_bound - tc) / N)
    lo_d, hi_d = math.ceil((-entry_bound - td) / N), math.floor((entry_bound - td) / N)
    if lo_c > hi_c or lo_d > hi_d:
        raise InvalidArgument(f"no entries of size <= {entry_bound} reduce to {target.entries()}")
    for _ in range(max_attempts):
        c = tc + N * rng.randint(lo_c, hi_c)
        d = td + N * rng.randint(lo_d, hi_d)
        if math.gcd(c, d) != 1:
            continue
        base = complete_bottom_row(c, d)
        shift = next((t for t in range(N)
                      if (base.a + t * c - ta) % N == 0 and (base.b + t * d - tb) % N == 0), None)
        if shift is None:
            continue
        a1, b1 = base.a + shift * c, base.b + shift * d
        lo, hi = -math.inf, math.inf
        for start, step in ((a1, N * c), (b1, N * d)):
            if step == 0:
                if abs(start) > entry_bound:
                    lo, hi = 1, 0
                continue
            s1, s2 = (-entry_bound - start) / step, (entry_bound - start) / step
            lo, hi = max(lo, math.ceil(min(s1, s2))), min(hi, math.floor(max(s1, s2)))
        if lo > hi:
            continue
        if math.isinf(lo) or math.isinf(hi):
            lo, hi = (0, 0) if math.isinf(lo) and math.isinf(hi) else (lo, hi)
        s = rng.randint(int(lo), int(hi))
        return SL2Matrix(a1 + s * N * c, b1 + s * N * d, c, d)
    raise InvalidArgument(f"could not reach {target.entries()} mod {N} within entry bound {entry_bound}")


def sample_members(case: ResidueCase, count: int, entry_bound: int, seed: int) -> list[SL2Matrix]:
    """``count`` seeded pseudo-random members of ``Gamma_{theta,5}`` in the given residue case."""
    rng = random.Random(seed)
    target = ResidueMatrix(*case.residue, 5)
    return [lift_residue(target, entry_bound, rng) for _ in range(count)]
