"""Command-line front end.

Exit codes: 0 determinate answer, 1 failed verification, 2 bad input,
3 undetermined within budget, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .survivor import Hole, boundary_curves, cycle_census, hole_report, _write_census, _write_points
from .thresholds import chi, foch_classify, phi, psi, soch_classify
from .verify import SUITES, run_suite
from .words import format_point, parse_point, word_value

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDETERMINED, EXIT_IO = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class Config:
    q_max: int = 64
    n_max: int = 16
    max_period: int = 20
    precision: Fraction = Fraction(1, 2**64)
    threads: int | None = None

    def __post_init__(self):
        if min(self.q_max, self.n_max, self.max_period) < 1:
            raise ValueError("bounds must be >= 1")
        if self.precision <= 0:
            raise ValueError("precision must be positive")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be >= 1")


def parse_exact(text: str) -> Fraction:
    """``p/q``, a decimal literal (taken exactly) or a word literal ``0.PRE(CYC)``."""
    text = text.strip()
    if "(" in text:
        return word_value(parse_point(text))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse {text!r} as an exact number") from None


def _exact_arg(text: str) -> Fraction:
    try:
        return parse_exact(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _render_threshold(th) -> str:
    if th.is_exact:
        return f"{format_point(th.word)} = {th.lo} ({float(th.lo):.12f})"
    return f"[{th.lo}, {th.hi}] ({th.kind}: {float(th.lo):.12f} .. {float(th.hi):.12f}; {th.basis})"


def cmd_classify(args, cfg: Config) -> int:
    h = Hole(args.a, args.b)
    report = hole_report(h, q_max=cfg.q_max, n_max=cfg.n_max, max_period=cfg.max_period,
                         oracle=not args.no_oracle)
    _dump(report.to_dict())
    return EXIT_OK if report.determinate else EXIT_UNDETERMINED


def cmd_threshold(args, cfg: Config) -> int:
    a = args.a
    if args.which in ("foch", "soch"):
        fn = foch_classify if args.which == "foch" else soch_classify
        ans = fn(a, q_max=cfg.q_max) if args.which == "foch" else fn(a, q_max=cfg.q_max, n_max=cfg.n_max)
        words = " .. ".join(format_point(w) for w in ans.words)
        if ans.lo == ans.hi:
            print(f"b = {words} = {ans.lo}" if words else f"b = {ans.lo}")
        else:
            print(f"b in [{ans.lo}, {ans.hi}] ({ans.kind}{'; ' + words if words else ''})")
        return EXIT_UNDETERMINED if ans.kind == "unresolved" else EXIT_OK
    if args.which == "phi":
        th = phi(a, q_max=cfg.q_max, precision=cfg.precision)
    elif args.which == "chi":
        th = chi(a, precision=cfg.precision, q_max=cfg.q_max, n_max=cfg.n_max)
    else:
        th = psi(a, q_max=cfg.q_max, precision=cfg.precision)
    print(_render_threshold(th))
    return EXIT_OK if th.resolved else EXIT_UNDETERMINED


def _open_out(path):
    return sys.stdout if path in (None, "-") else open(path, "w", newline="")


def cmd_boundary(args, cfg: Config) -> int:
    curves = boundary_curves(args.qmax, args.levels, coords=args.coords, inner_q_max=args.inner_qmax)
    fh = _open_out(args.out)
    try:
        _write_points(fh, curves[args.curve], args.coords)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_census(args, cfg: Config) -> int:
    census = cycle_census(Hole(args.a, args.b), cfg.max_period)
    fh = _open_out(args.out)
    try:
        _write_census(fh, census)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    checks = run_suite(args.suite)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail and c.detail != "[]" else ""))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def _budget_options(p: argparse.ArgumentParser, defaults: bool) -> None:
    d = (lambda value: value) if defaults else (lambda value: argparse.SUPPRESS)
    p.add_argument("--q-max", type=int, default=d(64), help="largest rotation denominator searched")
    p.add_argument("--n-max", type=int, default=d(16), help="deepest renormalisation level searched")
    p.add_argument("--max-period", type=int, default=d(20), help="largest cycle period in the census")
    p.add_argument("--precision", type=_exact_arg, default=d(Fraction(1, 2**64)), help="width of approximate brackets")
    p.add_argument("--threads", type=int, default=d(None), help="accepted for compatibility; work is vectorised")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doubling-holes", description="Survivor sets of the doubling map with a hole.")
    _budget_options(p, defaults=True)
    # the same options after the subcommand; SUPPRESS keeps them from clobbering the top-level values
    common = argparse.ArgumentParser(add_help=False)
    _budget_options(common, defaults=False)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="verdict for the hole (a, b) as JSON")
    c.add_argument("a", type=_exact_arg)
    c.add_argument("b", type=_exact_arg)
    c.add_argument("--no-oracle", action="store_true", help="skip the cycle census")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("threshold", parents=[common], help="phi, chi, psi or the critical holes over a")
    t.add_argument("which", choices=["phi", "chi", "psi", "foch", "soch"])
    t.add_argument("a", type=_exact_arg)
    t.set_defaults(func=cmd_threshold)

    b = sub.add_parser("boundary", parents=[common], help="step curves of the region boundaries as CSV")
    b.add_argument("--coords", choices=["ab", "uv"], default="ab")
    b.add_argument("--qmax", type=int, default=7)
    b.add_argument("--levels", type=int, default=2)
    b.add_argument("--inner-qmax", type=int, default=None)
    b.add_argument("--curve", choices=["d0", "d1"], default="d1")
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_boundary)

    n = sub.add_parser("census", parents=[common], help="surviving cycles by period as CSV")
    n.add_argument("a", type=_exact_arg)
    n.add_argument("b", type=_exact_arg)
    n.add_argument("--out", default=None)
    n.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = Config(args.q_max, args.n_max, args.max_period, args.precision, args.threads)
        return args.func(args, cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
