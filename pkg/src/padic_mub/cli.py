"""Command-line surface: one subcommand per verification pipeline.

Every run emits a machine-readable report embedding the resolved
configuration; identical configurations (including seeds) produce
byte-identical JSON.  Exit codes: 0 = pass, 1 = a verification failed
numerically, 2 = invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import mub_finite, mub_padic, sweeps
from .errors import CapError, OddPrimeError, PrecisionError, ResolutionError
from .gauss import DEFAULT_TERM_CAP, IntegralParams, RingSumParams, integral_report, ring_report
from .mub_padic import ball_fourier_closed, ball_state, fourier, make_grid
from .padic import PadicNumber, as_fraction, frac_valuation, parse_padic

FLOAT_DIGITS = 12


@dataclass
class RunConfig:
    """The fully resolved invocation, embedded verbatim in every report."""

    command: str
    options: dict

    def to_dict(self) -> dict:
        return {"command": self.command, **self.options}


def _round_floats(obj):
    """Normalize every float to 12 significant digits for stable output."""
    if isinstance(obj, float):
        return float(f"{obj:.{FLOAT_DIGITS}g}") if math.isfinite(obj) else str(obj)
    if isinstance(obj, (np.floating,)):
        return _round_floats(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, complex):
        return [_round_floats(obj.real), _round_floats(obj.imag)]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _round_floats(obj.tolist())
    return obj


def _fmt(x: float) -> str:
    return f"{x:.{FLOAT_DIGITS}g}"


def _coefficient(text: str, p: int) -> Fraction | PadicNumber:
    """Parse `num/den` or an explicit digit string `d0 d1 ... *p^v`."""
    text = text.strip()
    if "*" in text:
        return parse_padic(text, p)
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _emit(report: dict, args, csv_text: str | None = None, table: str | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        text = json.dumps(_round_floats(report), sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        if csv_text is None:
            raise ValueError("this command has no CSV form; use json or table")
        text = csv_text
    else:
        text = table if table is not None else _default_table(report)
    out = getattr(args, "out", None)
    if out:
        path = Path(out)
        if not path.is_absolute():
            path = Path(os.environ.get("PADIC_MUB_OUTDIR", ".")) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _default_table(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in {"config", "entries", "pairs", "combos"}:
            continue
        if isinstance(value, float):
            value = _fmt(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gauss_ring(args) -> int:
    params = RingSumParams(args.p, args.k, args.l, args.a, args.b)
    if args.p == 2:
        raise OddPrimeError("the ring Gauss-sum norm table")
    report = ring_report(params, oracle=args.oracle, tol=args.tol, term_cap=args.term_cap)
    d = report.to_json_dict()
    d["config"] = RunConfig("gauss-ring", _options(args)).to_dict()
    closed = d["closed_exact"]
    numeric = "" if report.numeric is None else f"  numeric {_fmt(report.numeric)}"
    table = (
        f"ring Gauss sum p={args.p} k={args.k} l={args.l} a={args.a} b={args.b}\n"
        f"closed {closed} ({report.case}){numeric}\n"
        f"{'PASS' if report.passed else 'FAIL'}\n"
    )
    _emit(d, args, table=table)
    return 0 if report.passed else 1


def cmd_gauss_integral(args) -> int:
    if args.p == 2:
        raise OddPrimeError("the Gauss-integral norm table")
    a = _coefficient(args.a, args.p)
    b = _coefficient(args.b, args.p)
    af = as_fraction(a, args.p, need_abs_precision=2 * args.r)
    bf = as_fraction(b, args.p, need_abs_precision=args.r)
    params = IntegralParams(args.p, args.r, af, bf)
    report = integral_report(params, oracle=args.oracle, tol=args.tol, term_cap=args.term_cap)
    d = report.to_json_dict()
    d["config"] = RunConfig("gauss-integral", _options(args)).to_dict()
    numeric = "" if report.numeric is None else f"  numeric {_fmt(report.numeric)}"
    table = (
        f"Gauss integral p={args.p} r={args.r} a={af} b={bf}\n"
        f"closed {d['closed_exact']} ({report.case}){numeric}\n"
        f"{'PASS' if report.passed else 'FAIL'}\n"
    )
    _emit(d, args, table=table)
    return 0 if report.passed else 1


def cmd_mub_finite(args) -> int:
    if args.p == 2:
        raise OddPrimeError("certifying unbiasedness of the quadratic-phase bases")
    from .finite_field import build_field

    field = build_field(args.p, args.r)
    bases = mub_finite.build_mub_set(field)
    report = mub_finite.verify_mub(bases, tol=args.tol, ortho_tol=args.ortho_tol)
    d = report.to_json_dict()
    d["bases"] = len(bases)
    d["config"] = RunConfig("mub-finite", _options(args)).to_dict()
    table = (
        f"{len(bases)} bases in C^{field.size} (modulus {field.modulus})\n"
        f"target modulus {_fmt(report.target)}  max deviation {_fmt(report.max_deviation)}\n"
        f"orthonormality deviation {_fmt(report.ortho_deviation)}\n"
        f"{'PASS' if report.passed else 'FAIL'}\n"
    )
    csv_lines = ["i,j,label_i,label_j,min_mod,max_mod,max_dev"]
    for s in report.pairs:
        csv_lines.append(
            f"{s.i},{s.j},{s.labels[0]},{s.labels[1]},{s.min_mod!r},{s.max_mod!r},{s.max_dev!r}"
        )
    _emit(d, args, csv_text="\n".join(csv_lines) + "\n", table=table)
    return 0 if report.passed else 1


def cmd_mub_padic(args) -> int:
    if args.p == 2:
        raise OddPrimeError("the closed norm table behind the p+1 families")
    b_samples = (
        [_coefficient(t, args.p) for t in args.bs.split(",")] if args.bs else None
    )
    params = mub_padic.canonical_family_params(args.p, b_samples)
    report = mub_padic.gram_report(
        params, r=args.r, p=args.p, auto_raise=args.auto_raise, tol=args.tol
    )
    d = report.to_json_dict()
    d["config"] = RunConfig("mub-padic", _options(args)).to_dict()
    raised = f" (raised from {report.r_requested})" if report.r_used != report.r_requested else ""
    table = (
        f"{args.p + 1} families, {len(report.labels)} vectors, "
        f"r={report.r_used}{raised}, k={report.k_used}\n"
        f"max certified deviation {_fmt(report.max_certified_deviation)}  "
        f"uncertified pairs {report.uncertified_pairs}\n"
        f"family ranks {report.family_ranks}\n"
        f"{'PASS' if report.passed else 'FAIL'}\n"
    )
    _emit(d, args, csv_text=report.to_csv(), table=table)
    return 0 if report.passed else 1


def cmd_fourier_ball(args) -> int:
    z = _coefficient(args.z, args.p)
    zf = as_fraction(z, args.p)
    vz = frac_valuation(zf, args.p)
    r0 = max(0, -int(vz) if zf != 0 else 0, -args.r)
    k = max(args.r, 1 - r0) if args.k is None else args.k
    grid = make_grid(args.p, r0, k)
    psi = ball_state(zf, args.r, grid)
    phat = fourier(psi)
    closed = ball_fourier_closed(zf, args.r, phat.grid)
    deviation = float(np.abs(phat.amplitudes - closed).max())
    norm_dev = abs(phat.norm_sq() - psi.norm_sq())
    passed = deviation <= args.tol and norm_dev <= args.tol
    d = {
        "schema": 1,
        "kind": "fourier-ball",
        "grid": {"p": args.p, "r": grid.r, "k": grid.k},
        "ball_exponent": args.r,
        "z": str(zf),
        "max_pointwise_deviation": deviation,
        "norm_deviation": norm_dev,
        "tol": args.tol,
        "passed": passed,
        "config": RunConfig("fourier-ball", _options(args)).to_dict(),
    }
    table = (
        f"ball z={zf} + p^{args.r}Z_p on grid (p={args.p}, r={grid.r}, k={grid.k})\n"
        f"max pointwise deviation {_fmt(deviation)}  norm deviation {_fmt(norm_dev)}\n"
        f"{'PASS' if passed else 'FAIL'}\n"
    )
    _emit(d, args, table=table)
    return 0 if passed else 1


def cmd_eigen_check(args) -> int:
    a = _coefficient(args.a, args.p)
    b = _coefficient(args.b, args.p)
    c = _coefficient(args.c, args.p)
    report = mub_padic.eigen_check(a, b, c, p=args.p, tol=args.tol)
    d = report.to_json_dict()
    d["config"] = RunConfig("eigen-check", _options(args)).to_dict()
    table = (
        f"shift/modulation composite on the (a={report.a}, b={report.b}) state, c={report.c}\n"
        f"expected phase {report.expected_phase}  residual {_fmt(report.residual)}\n"
        f"{'PASS' if report.passed else 'FAIL'}\n"
    )
    _emit(d, args, table=table)
    return 0 if report.passed else 1


def cmd_sweep(args) -> int:
    runner = sweeps.SUITES[args.suite]
    report = runner(args.seed, args.term_cap)
    report["config"] = RunConfig("sweep", _options(args)).to_dict()
    _emit(report, args)
    return 0 if report["passed"] else 1


def _options(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub, *, oracle=False) -> None:
    sub.add_argument("--format", choices=["table", "json", "csv"], default="table")
    sub.add_argument("--out", help="write the report here instead of stdout "
                     "(relative paths resolve under $PADIC_MUB_OUTDIR)")
    sub.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP, dest="term_cap")
    if oracle:
        sub.add_argument("--oracle", action="store_true",
                         help="also run the brute-force oracles and compare")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-mub",
        description="Verification pipelines for quadratic Gauss sums and "
        "mutually unbiased bases over finite fields and Q_p.  Coefficients "
        "accept rationals 'num/den' or digit strings 'd0 d1 ... *p^v'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gauss-ring", help="norm of a quadratic Gauss sum over Z/p^k")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-l", type=int, required=True)
    s.add_argument("-a", type=int, required=True)
    s.add_argument("-b", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-6)
    _add_common(s, oracle=True)
    s.set_defaults(func=cmd_gauss_ring)

    s = sub.add_parser("gauss-integral", help="norm of a Gauss integral over p^(-r)Z_p")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-r", type=int, required=True)
    s.add_argument("-a", required=True)
    s.add_argument("-b", required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    _add_common(s, oracle=True)
    s.set_defaults(func=cmd_gauss_integral)

    s = sub.add_parser("mub-finite", help="build and verify the p^r+1 bases of C^(p^r)")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--ortho-tol", type=float, default=1e-12, dest="ortho_tol")
    _add_common(s)
    s.set_defaults(func=cmd_mub_finite)

    s = sub.add_parser("mub-padic", help="Gram table of the p+1 families on a grid")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--bs", help="comma-separated b sample (default 0..p-1)")
    s.add_argument("--auto-raise", action=argparse.BooleanOptionalAction,
                   default=True, dest="auto_raise",
                   help="raise r past every pairwise threshold (reported)")
    s.add_argument("--tol", type=float, default=1e-9)
    _add_common(s)
    s.set_defaults(func=cmd_mub_padic)

    s = sub.add_parser("fourier-ball", help="transform of a ball indicator vs closed form")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-r", type=int, required=True, help="ball exponent: z + p^r Z_p")
    s.add_argument("-z", default="0")
    s.add_argument("-k", type=int, default=None, help="override the grid resolution")
    s.add_argument("--tol", type=float, default=1e-10)
    _add_common(s)
    s.set_defaults(func=cmd_fourier_ball)

    s = sub.add_parser("eigen-check", help="eigenrelation of the shift/modulation composite")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-a", required=True)
    s.add_argument("-b", required=True)
    s.add_argument("-c", required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    _add_common(s)
    s.set_defaults(func=cmd_eigen_check)

    s = sub.add_parser("sweep", help="run a whole verification suite")
    s.add_argument("suite", choices=sorted(sweeps.SUITES))
    s.add_argument("--seed", type=int, default=0)
    _add_common(s)
    s.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, PrecisionError, ResolutionError, OddPrimeError, CapError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
