"""Command-line entry point ``pb``.

Exit status: 0 when every check passes, 1 when any fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import lie, masses, operators, verify
from .serialize import lie_basis_to_obj, serialize_operator_set, structure_constants_to_obj


def _complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not vals or any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("alpha sweep values must be positive")
    return vals


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _env_tol():
    v = os.environ.get("PB_TOL")
    return float(v) if v else None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tol", type=float, default=_env_tol(),
                        help="override the default tolerance (also PB_TOL)")
    common.add_argument("--out", help="write the report to FILE instead of stdout")

    p = argparse.ArgumentParser(prog="pb", description="Pegg-Barnett oscillator algebra checks")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("ops", parents=[common], help="oscillator generators and commutator table")
    q.add_argument("--s", type=_positive_int, required=True)
    q.add_argument("--emit", choices=("json",), help="print the operator set instead of the report")

    q = sub.add_parser("closure", parents=[common], help="commutator closure and su(s+1) checks")
    q.add_argument("--s", type=_positive_int, required=True)
    q.add_argument("--samples", type=_positive_int, default=50)
    q.add_argument("--emit", choices=("json",), help="print basis and structure constants")

    q = sub.add_parser("gellmann", parents=[common], help="generalized Gell-Mann matrices")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--paper-su3", action="store_true", help="compare the oscillator-built lambdas at s=2")

    q = sub.add_parser("susy", parents=[common], help="Jaynes-Cummings supercharge algebra")
    q.add_argument("--k", type=_positive_int, required=True)
    q.add_argument("--nmax", type=_positive_int, required=True)
    q.add_argument("--g", type=_complex, default=complex(1.0), help="coupling RE or RE,IM")

    q = sub.add_parser("masses", parents=[common], help="charged-lepton mass formula")
    q.add_argument("--alpha-inv", type=float, default=masses.ALPHA_INV)
    q.add_argument("--me", type=float, default=masses.M_E)
    q.add_argument("--exp-mu", type=float, default=masses.EXP_MU)
    q.add_argument("--exp-tau", type=float, default=masses.EXP_TAU)
    q.add_argument("--alpha-sweep", type=_float_list)
    q.add_argument("--table", choices=("masses", "precision", "sweep"), default="masses",
                   help="table written by --format csv")

    q = sub.add_parser("verify-all", parents=[common], help="run every check")
    q.add_argument("--max-s", type=_positive_int, default=5)
    return p


def _dispatch(args, parser):
    if args.command == "ops":
        return verify.ops_report(args.s, args.tol)
    if args.command == "closure":
        return verify.closure_report(args.s, args.tol, samples=args.samples)
    if args.command == "gellmann":
        if not args.paper_su3 and args.n < 2:
            parser.error("--n must be >= 2")
        return verify.gellmann_report(args.n, args.paper_su3, args.tol)
    if args.command == "susy":
        if args.nmax < args.k:
            parser.error("--nmax must be >= --k")
        if args.g == 0:
            parser.error("--g must be nonzero")
        return verify.susy_report(args.k, args.nmax, args.g, args.tol)
    if args.command == "masses":
        if args.alpha_inv <= 0 or args.me <= 0 or args.exp_mu <= 0 or args.exp_tau <= 0:
            parser.error("masses and alpha_inv must be positive")
        if args.table == "sweep" and not args.alpha_sweep:
            parser.error("--table sweep needs --alpha-sweep")
        return verify.masses_report(args.alpha_inv, args.me, args.exp_mu, args.exp_tau,
                                    args.alpha_sweep, args.table)
    if args.command == "verify-all":
        return verify.verify_all(args.max_s, tol=args.tol)
    parser.error(f"unknown command {args.command}")


def _emit(args) -> str:
    if args.command == "ops":
        return serialize_operator_set(operators.derived_generators(args.s)) + "\n"
    basis = lie.closure(lie.pb_seed(args.s), tol=args.tol or lie.CLOSURE_TOL)
    obj = {"basis": lie_basis_to_obj(basis),
           "structure_constants": structure_constants_to_obj(lie.structure_constants(basis))}
    return json.dumps(obj) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _dispatch(args, parser)
    except ValueError as exc:
        parser.error(str(exc))
    text = _emit(args) if getattr(args, "emit", None) else report.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
