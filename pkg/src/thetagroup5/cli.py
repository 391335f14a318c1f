"""Command-line entry point: ``thetagroup5 <subcommand> ...``.

JSON goes to stdout and diagnostics to stderr. Exit status is 0 on success,
1 on a domain error, 2 when a verification fails and 64 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import gamma5 as g5
from .arith import DEFAULT_PREC, InvalidArgument, OutOfDomain, SL2Matrix, format_complex
from .eta import nu_eta, verify_eta_transform
from .theta import ThetaChar, theta_deriv, theta_product, theta_series
from .transform import transform_general
from .verify import SUITES, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64
DEFAULT_SEED = 42


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _digits(prec: int) -> int:
    return max(1, math.ceil(prec * math.log10(2)))


# ---------------------------------------------------------------------------
# subcommands


def cmd_eta_mult(args) -> int:
    _emit(nu_eta(SL2Matrix.parse(args.matrix)).to_json())
    return EXIT_OK


def cmd_eta_verify(args) -> int:
    m = SL2Matrix.parse(args.matrix)
    residual = verify_eta_transform(m, args.tau, args.prec)
    ok = residual < args.tol
    _emit({"residual": f"{float(residual):.6e}", "tol": args.tol, "ok": bool(ok)})
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_theta_eval(args) -> int:
    char = ThetaChar.parse(args.char)
    if args.deriv:
        value = theta_deriv(char, args.tau, args.prec)
    elif args.method == "product":
        value = theta_product(char, args.v, args.tau, args.prec)
    else:
        value = theta_series(char, args.v, args.tau, args.prec)
    _emit({"char": char.to_json(), "method": args.method, "deriv": args.deriv,
           "value": format_complex(value, _digits(args.prec))})
    return EXIT_OK


def cmd_transform(args) -> int:
    data = transform_general(SL2Matrix.parse(args.matrix), ThetaChar.parse(args.char))
    _emit(data.to_json())
    return EXIT_OK


def cmd_mult(args) -> int:
    _emit(g5.multiplier(args.system, SL2Matrix.parse(args.matrix), args.k).to_json())
    return EXIT_OK


def cmd_kernel(args) -> int:
    m = SL2Matrix.parse(args.matrix)
    member = (g5.kernel_member_F if args.form == "F" else g5.kernel_member_G)(m, args.k)
    _emit({"member": member})
    return EXIT_OK


def cmd_cosets(args) -> int:
    if args.group == "gamma1":
        table = g5.coset_reps_gamma1()
    elif args.k is None:
        raise UsageError("cosets --group kernel needs --k")
    elif args.printed:
        reps = g5.printed_kernel_transversal(args.k)
        table = g5.CosetTable(reps, g5.in_gamma_theta_5, f"printed, k = {args.k % 10}",
                              g5.certify_kernel_transversal(reps, args.k))
    else:
        table = g5.coset_reps_kernel(args.k)
    if args.plain:
        for r in table.reps:
            sys.stdout.write(r.to_text() + "\n")
    else:
        _emit({"group": table.group_label, "reps": [list(r.entries()) for r in table.reps],
               "certificate": table.certificate})
    return EXIT_OK


def cmd_cusps(args) -> int:
    result = g5.cusps(bound=args.bound, element_bound=args.element_bound)
    _emit(result.to_json())
    return EXIT_OK


def cmd_sample(args) -> int:
    case = g5.ResidueCase.parse(args.case)
    members = g5.sample_members(case, args.count, args.bound, args.seed)
    _emit({"case": case.value, "seed": args.seed, "members": [list(m.entries()) for m in members]})
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr))
        report = run_suite(args.suite, args.prec, args.seed, progress)
    except KeyError as exc:
        raise UsageError(f"unknown suite {exc}; choose from {', '.join(SUITES)} or check ids") from exc
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted both before and after the subcommand
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--prec", type=int, default=default(DEFAULT_PREC), help="working precision in bits")
    parser.add_argument("--seed", type=int, default=default(DEFAULT_SEED))
    parser.add_argument("--quiet", action="store_true", default=default(False))
    parser.add_argument("--json", action="store_true", default=default(True), help="JSON output (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thetagroup5", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("eta-mult", cmd_eta_mult, "exact eta multiplier")
    p.add_argument("--matrix", required=True, help='"a b c d"')

    p = add("eta-verify", cmd_eta_verify, "numerical check of the eta transformation law")
    p.add_argument("--matrix", required=True)
    p.add_argument("--tau", required=True, help='"x+yi"')
    p.add_argument("--tol", type=float, default=1e-25)

    p = add("theta-eval", cmd_theta_eval, "theta function with characteristic")
    p.add_argument("--char", required=True, help='"eps eps\'"')
    p.add_argument("--v", default="0")
    p.add_argument("--tau", required=True)
    p.add_argument("--method", choices=("series", "product"), default="series")
    p.add_argument("--deriv", action="store_true", help="v-derivative at v = 0 instead of the value")

    p = add("transform", cmd_transform, "transformation data of a characteristic")
    p.add_argument("--matrix", required=True)
    p.add_argument("--char", required=True)

    p = add("mult", cmd_mult, "multiplier systems on Gamma_theta,5")
    p.add_argument("--system", type=str.upper, choices=("A", "B", "F", "G"), required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=int, default=1)

    p = add("kernel", cmd_kernel, "membership in Ker nu_{F^k}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--form", type=str.upper, choices=("F", "G"), default="F")

    p = add("cosets", cmd_cosets, "coset transversals")
    p.add_argument("--group", choices=("gamma1", "kernel"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--printed", action="store_true", help="the transversal as printed in the source tables")
    p.add_argument("--plain", action="store_true", help="one 'a b c d' line per matrix")

    p = add("cusps", cmd_cusps, "cusp classes by bounded union-find")
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--element-bound", type=int, default=60)

    p = add("sample", cmd_sample, "seeded random members of Gamma_theta,5")
    p.add_argument("--case", required=True, help="I, -I, S or -S")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--bound", type=int, default=10_000, help="bound on |entries|")

    p = add("verify", cmd_verify, "run the acceptance suite")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, or check ids, comma separated")
    return parser


# values of these flags may legitimately start with "-" (e.g. "-S", "-0.7+0.4i")
_VALUE_FLAGS = frozenset({"--case", "--tau", "--v", "--char", "--matrix"})


def _attach_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    tokens = iter(argv)
    for tok in tokens:
        if tok in _VALUE_FLAGS:
            value = next(tokens, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_attach_values(argv))
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except (InvalidArgument, OutOfDomain, g5.NotAMember, g5.IllConditioned) as exc:
        print(f"thetagroup5: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
