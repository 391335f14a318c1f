"""The acceptance suite behind ``thetagroup5 verify``.

Every check is deterministic given ``(prec, seed)`` and returns a
:class:`CheckResult`; reports carry no timings so that two runs are
byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import gmpy2
from gmpy2 import mpc, mpfr

from . import gamma5 as g5
from .arith import DEFAULT_PREC, RootOfUnity, SL2Matrix, lambda_N, random_sl2, to_mpc
from .eta import eta_numeric, nu_eta, verify_eta_transform
from .theta import (
    ThetaChar,
    apply_shift,
    shift_integer,
    theta_deriv,
    theta_product,
    theta_series,
)
from .transform import verify_transform

TOL_ANALYTIC = mpfr("1e-25")
TOL_FORMS = mpfr("1e-23")
FIFTH_CHARS = (g5.CHARS_A + g5.CHARS_B)
THETA_TAUS = ("0+1i", "1/3+1i", "-0.7+0.4i")


@dataclass
class CheckResult:
    id: int
    name: str
    passed: int = 0
    failed: int = 0
    worst: mpfr | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, good: bool, residual: mpfr | None = None) -> None:
        if good:
            self.passed += 1
        else:
            self.failed += 1
        if residual is not None and (self.worst is None or residual > self.worst):
            self.worst = residual

    def to_json(self) -> dict:
        out = {"id": self.id, "name": self.name, "ok": self.ok,
               "passed": self.passed, "failed": self.failed}
        if self.worst is not None:
            out["worst_residual"] = _fmt(self.worst)
        if self.details:
            out["details"] = self.details
        return out


def _fmt(x: mpfr) -> str:
    return "0" if x == 0 else f"{float(x):.3e}"


def _rel(x: mpc, y: mpc) -> mpfr:
    # the default context is 53 bits; subtract at the operands' precision
    with gmpy2.context(gmpy2.get_context(), precision=max(*x.precision, *y.precision)):
        scale = max(abs(x), abs(y))
        return mpfr(0) if scale == 0 else abs(x - y) / scale


def _sub_rng(seed: int, label: str) -> random.Random:
    # independent streams per check, so adding a check never perturbs the others
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def member_set(seed: int, label: str, per_case: int, entry_bound: int) -> dict:
    rng = _sub_rng(seed, label)
    return {case: g5.sample_members(case, per_case, entry_bound, rng.randrange(2**32))
            for case in g5.ResidueCase}


# ---------------------------------------------------------------------------
# 1-3: eta and theta


def check_eta_spot(prec: int, seed: int) -> CheckResult:
    res = CheckResult(1, "eta multiplier spot values")
    expected = {
        "T": (SL2Matrix.T(), RootOfUnity(1, 12)),
        "S": (SL2Matrix.S(), RootOfUnity(-1, 4)),
        "-I": (-SL2Matrix.identity(), RootOfUnity(-1, 2)),
    }
    for label, (m, want) in expected.items():
        got = nu_eta(m)
        res.record(got == want)
        res.details[label] = got.to_json()
    return res


def eta_test_matrices(seed: int, count: int = 200, bound: int = 200) -> list[SL2Matrix]:
    """Edge cases (``c = 0``, ``d = 0``, signs) followed by random matrices of both parities of ``c``."""
    edges = [SL2Matrix.identity(), SL2Matrix.T(), SL2Matrix.T(-1), SL2Matrix.T(7),
             SL2Matrix.S(), SL2Matrix(3, -1, 1, 0), SL2Matrix(-4, -1, 1, 0), SL2Matrix(5, 1, -1, 0)]
    edges += [-m for m in edges]
    rng = _sub_rng(seed, "eta-matrices")
    out = list(edges)
    while len(out) < count:
        m = random_sl2(rng, bound)
        want_odd = len(out) % 2 == 0
        if (m.c % 2 == 1) == want_odd:
            out.append(m)
    return out


def check_eta_transform(prec: int, seed: int) -> CheckResult:
    res = CheckResult(2, "eta transformation law")
    taus = ("0.1+0.9i", "-0.37+1.2i", "0.5+0.6i")
    mats = eta_test_matrices(seed)
    for m in mats:
        for tau in taus:
            r = verify_eta_transform(m, tau, prec)
            res.record(r < TOL_ANALYTIC, r)
    res.details = {"matrices": len(mats), "taus": list(taus),
                   "odd_c": sum(m.c % 2 for m in mats), "c_zero": sum(m.c == 0 for m in mats),
                   "d_zero": sum(m.d == 0 for m in mats)}
    return res


def check_theta_identities(prec: int, seed: int) -> CheckResult:
    res = CheckResult(3, "theta engine identities")
    values = [Fraction(0), Fraction(1), Fraction(1, 5), Fraction(3, 5), Fraction(7, 5), Fraction(9, 5)]
    chars = [ThetaChar(e, f) for e in values for f in values]
    vs = ("0", "0.1", "0.2+0.1i")
    tally: dict[str, int] = {}

    def note(label: str, good: bool, r: mpfr) -> None:
        res.record(good, r)
        if not good:
            tally[label] = tally.get(label, 0) + 1

    for char in chars:
        for v in vs:
            for tau in THETA_TAUS:
                r = _rel(theta_series(char, v, tau, prec), theta_product(char, v, tau, prec))
                note("series_vs_product", r < TOL_ANALYTIC, r)
    odd = ThetaChar(1, 1)
    for tau in THETA_TAUS:
        d = theta_deriv(odd, tau, prec)
        with gmpy2.context(gmpy2.get_context(), precision=prec + 16):
            pi = gmpy2.const_pi()
            eta3 = -2 * pi * eta_numeric(tau, prec + 16) ** 3
            jac = -pi * (theta_series(ThetaChar(0, 0), 0, tau, prec + 16)
                         * theta_series(ThetaChar(1, 0), 0, tau, prec + 16)
                         * theta_series(ThetaChar(0, 1), 0, tau, prec + 16))
        r = _rel(d, eta3)
        note("derivative_eta_cube", r < TOL_ANALYTIC, r)
        r = _rel(d, jac)
        note("jacobi_derivative", r < TOL_ANALYTIC, r)
    for char in chars:
        for m in (-1, 0, 1):
            for n in (-1, 0, 1):
                lhs, rhs = apply_shift(shift_integer(char, m, n), "0.2+0.1i", "0.3+1.1i", prec)
                r = _rel(lhs, rhs)
                note("quasi_periodicity", r < TOL_ANALYTIC, r)
    for tau in THETA_TAUS:
        t = to_mpc(tau, prec + 48)
        with gmpy2.context(gmpy2.get_context(), precision=prec + 48):
            z = t / 2 + mpfr("0.5")
        a = abs(theta_series(ThetaChar(0, 0), z, t, prec))
        note("zero_of_theta00", a < TOL_ANALYTIC, mpfr(a))
    res.details = {"failures_by_identity": tally}
    return res


# ---------------------------------------------------------------------------
# 4-6: transformation laws on Gamma_{theta,5}


def check_general_transform(prec: int, seed: int) -> CheckResult:
    res = CheckResult(4, "general characteristic transformation on Gamma_theta,5")
    members = member_set(seed, "transform", 10, 100)
    vs = ("0.1+0.05i", "-0.23+0.11i")
    for case, mats in members.items():
        for m in mats:
            for char in FIFTH_CHARS:
                for v in vs:
                    r = verify_transform(m, char, v, "0.05+1.1i", prec)
                    res.record(r < TOL_ANALYTIC, r)
    return res


def _multiplier_check(cid: int, name: str, systems: str, prec: int, seed: int) -> CheckResult:
    res = CheckResult(cid, name)
    members = member_set(seed, "multipliers", 20, 60)
    taus = ("0+1i", "0.21+0.83i")
    per_system: dict[str, int] = {}
    for system in systems:
        bad = 0
        for mats in members.values():
            for m in mats:
                for tau in taus:
                    r = g5.verify_multiplier(system, m, tau, prec)
                    good = r < TOL_FORMS
                    bad += not good
                    res.record(good, r)
        per_system[system] = bad
    res.details = {"failures_by_system": per_system, "members_per_case": 20, "taus": list(taus)}
    return res


def check_product_multipliers(prec: int, seed: int) -> CheckResult:
    return _multiplier_check(5, "theta product multiplier systems", "AB", prec, seed)


def check_weight_two(prec: int, seed: int) -> CheckResult:
    return _multiplier_check(6, "weight-two law for F and G", "FG", prec, seed)


# ---------------------------------------------------------------------------
# 7-9: kernels, cosets, cusps


def check_kernels(prec: int, seed: int) -> CheckResult:
    res = CheckResult(7, "kernel characterisation")
    members = member_set(seed, "kernels", 500, 10_000)
    lists = {k: g5.kernel_residue_list(k) for k in range(10)}
    keys = {k: None if v is None else {r.entries() for r in v} for k, v in lists.items()}
    tally = {"F_condition": 0, "G_condition": 0, "F_equals_G": 0, "residue_list": 0, "witness": 0}
    for mats in members.values():
        for m in mats:
            r25 = lambda_N(m, 25).entries()
            for k in range(10):
                kf = g5.kernel_member_F(m, k)
                kg = g5.kernel_member_G(m, k)
                checks = {
                    "F_condition": kf == g5.nu_F(m, k).is_one(),
                    "G_condition": kg == g5.nu_G(m, k).is_one(),
                    "F_equals_G": kf == kg,
                    "residue_list": not kf or keys[k] is None or r25 in keys[k],
                }
                for label, good in checks.items():
                    res.record(good)
                    tally[label] += not good
    rng = _sub_rng(seed, "witnesses")
    for k, lst in lists.items():
        for r in lst or []:
            w = g5.lift_residue(r, 10_000, rng)
            good = (g5.in_gamma_theta_5(w) and lambda_N(w, 25).entries() == r.entries()
                    and g5.kernel_member_F(w, k))
            res.record(good)
            tally["witness"] += not good
    res.details = {"failures": tally,
                   "list_sizes": {str(k): (None if v is None else len(v)) for k, v in lists.items()}}
    return res


def check_cosets(prec: int, seed: int) -> CheckResult:
    res = CheckResult(8, "coset transversals")
    table = g5.coset_reps_gamma1()
    cert = table.certificate
    res.record(len(table) == 30 and cert["pairwise_inequivalent"] and cert["complete"])
    res.details["gamma1"] = {"size": len(table), **cert}
    printed = {}
    for k in (5, 1, 3, 7, 9, 2, 4, 6, 8):
        c = g5.certify_kernel_transversal(g5.printed_kernel_transversal(k), k)
        res.record(c["distinct_values"] and c["enumerates_image"])
        printed[str(k)] = c
    res.details["printed_kernel_transversals"] = printed
    res.details["computed_kernel_transversals"] = {
        str(k): g5.coset_reps_kernel(k).certificate for k in range(10)}
    return res


EXPECTED_CUSPS = [g5.Cusp(p, q) for p, q in ((1, 0), (-1, 1), (1, 2), (-1, 2),
                                              (3, 2), (-3, 2), (5, 2), (-5, 2))]


def check_cusps(prec: int, seed: int) -> CheckResult:
    res = CheckResult(9, "cusp classes")
    result = g5.cusps(bound=12)
    res.record(result.decided)
    if result.decided:
        labels = [result.class_of(c) for c in EXPECTED_CUSPS]
        res.record(len(result.reps) == len(EXPECTED_CUSPS))
        res.record(len(set(labels)) == len(EXPECTED_CUSPS))
        res.details["expected_point_classes"] = {str(c): i for c, i in zip(EXPECTED_CUSPS, labels)}
    else:
        res.record(False)
    res.details["computed"] = result.to_json()
    res.details["coset_orbit_count"] = g5.cusp_count_from_cosets()
    return res


def check_determinism(prec: int, seed: int) -> CheckResult:
    res = CheckResult(10, "determinism")
    for label, per_case, bound in (("transform", 10, 100), ("multipliers", 20, 60), ("kernels", 500, 10_000)):
        first = member_set(seed, label, per_case, bound)
        second = member_set(seed, label, per_case, bound)
        res.record(first == second)
    res.record(json.dumps(check_cosets(prec, seed).to_json(), sort_keys=True)
               == json.dumps(check_cosets(prec, seed).to_json(), sort_keys=True))
    res.record(eta_test_matrices(seed) == eta_test_matrices(seed))
    return res


CHECKS: dict[int, Callable[[int, int], CheckResult]] = {
    1: check_eta_spot,
    2: check_eta_transform,
    3: check_theta_identities,
    4: check_general_transform,
    5: check_product_multipliers,
    6: check_weight_two,
    7: check_kernels,
    8: check_cosets,
    9: check_cusps,
    10: check_determinism,
}

SUITES = {
    "all": list(CHECKS),
    "eta": [1, 2],
    "theta": [3],
    "transform": [4],
    "multipliers": [5, 6],
    "kernels": [7],
    "cosets": [8],
    "cusps": [9],
    "determinism": [10],
}


def resolve_suite(suite: str) -> list[int]:
    ids: list[int] = []
    for part in suite.split(","):
        part = part.strip()
        if part in SUITES:
            ids.extend(SUITES[part])
        elif part.isdigit() and int(part) in CHECKS:
            ids.append(int(part))
        else:
            raise KeyError(part)
    return sorted(set(ids))


def run_suite(suite: str = "all", prec: int = DEFAULT_PREC, seed: int = 42,
              progress: Callable[[str], None] | None = None) -> dict:
    results = []
    for cid in resolve_suite(suite):
        if progress:
            progress(f"check {cid}: {CHECKS[cid].__name__}")
        results.append(CHECKS[cid](prec, seed))
    return {
        "suite": suite,
        "prec": prec,
        "seed": seed,
        "checks": [r.to_json() for r in results],
        "summary": {
            "checks": len(results),
            "passed": sum(r.ok for r in results),
            "failed": sum(not r.ok for r in results),
            "failed_ids": [r.id for r in results if not r.ok],
        },
        "ok": all(r.ok for r in results),
    }
