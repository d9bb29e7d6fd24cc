"""``hawking-concurrence`` command line: point, sweep and verify.

Exit codes: 0 ok, 1 usage, 2 verification failure, 3 I/O.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .hawking import Sector
from .sweep import CHANNELS, SweepConfig, UsageError, evaluate, parse_grid, to_csv, to_svg
from .verify import faulty, run_verify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _temp(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    return float(text)


def _common(sub: argparse.ArgumentParser, verify: bool = False) -> None:
    sub.add_argument("--channel", choices=CHANNELS, action="append" if verify else "store",
                     default=None if verify else "none")
    sub.add_argument("--sector", action="append", choices=[s.value for s in Sector],
                     help="repeatable; default is all four")
    sub.add_argument("--p", type=float)
    sub.add_argument("--ra", type=float, help="radians, in [0, pi/4]")
    sub.add_argument("--rb", type=float, help="radians, in [0, pi/4]")
    sub.add_argument("--omega", type=float)
    sub.add_argument("--temp", type=_temp, help="Hawking temperature; 'inf' allowed")
    sub.add_argument("--lock-rab", action="store_true", help="use rb = ra")
    sub.add_argument("--k", type=float)
    sub.add_argument("--grid", action="append", default=[], metavar="AXIS=START:STOP:N")
    sub.add_argument("--out")
    sub.add_argument("--tol", type=float, default=1e-9)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hawking-concurrence",
                     description="Concurrence of an isotropic state under Hawking dilation and Bob-side noise.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    point = subs.add_parser("point", help="evaluate one parameter point")
    _common(point)
    sweep = subs.add_parser("sweep", help="evaluate a grid, write CSV and/or SVG")
    _common(sweep)
    sweep.add_argument("--emit", choices=("csv", "svg", "both"), default="csv")
    verify = subs.add_parser("verify", help="compare closed forms with the numeric route")
    _common(verify, verify=True)
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _values(args, allow_grid: bool) -> tuple[dict[str, np.ndarray], tuple[str, ...]]:
    values: dict[str, np.ndarray] = {}
    for name, attr in (("p", "p"), ("ra", "ra"), ("rb", "rb"), ("omega", "omega"), ("T", "temp"), ("k", "k")):
        v = getattr(args, attr)
        if v is not None:
            values[name] = np.array([float(v)])
    swept = []
    for text in args.grid:
        if not allow_grid:
            raise UsageError("point takes no --grid")
        axis, grid = parse_grid(text)
        if axis in swept or axis in values:
            raise UsageError(f"axis {axis} given more than once")
        values[axis] = grid
        swept.append(axis)
    return values, tuple(a for a in ("p", "ra", "rb", "omega", "T", "k") if a in swept)


def _sectors(args) -> tuple[Sector, ...]:
    if not args.sector:
        return tuple(Sector)
    return tuple(dict.fromkeys(Sector(s) for s in args.sector))


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _svg_path(out: str | None) -> str | None:
    if out is None or out == "-":
        return out
    return out[:-4] + ".svg" if out.endswith(".csv") else out + ".svg"


def cmd_point(args) -> int:
    values, swept = _values(args, allow_grid=False)
    cfg = SweepConfig(args.channel, _sectors(args), values, swept, args.lock_rab)
    _write(args.out, to_csv(evaluate(cfg)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    values, swept = _values(args, allow_grid=True)
    cfg = SweepConfig(args.channel, _sectors(args), values, swept, args.lock_rab, args.out, args.emit)
    rows = evaluate(cfg)
    if args.emit in ("csv", "both"):
        _write(args.out, to_csv(rows))
    if args.emit == "svg":
        _write(args.out, to_svg(cfg, rows))
    elif args.emit == "both":
        _write(_svg_path(args.out), to_svg(cfg, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    values, _ = _values(args, allow_grid=True)
    if "omega" not in values and "T" not in values:
        from .verify import DEFAULT_GRID

        for axis in ("p", "ra", "rb", "k"):
            if axis == "rb" and args.lock_rab:
                continue
            values.setdefault(axis, DEFAULT_GRID[axis])
    elif "p" not in values:
        from .verify import DEFAULT_GRID

        values["p"] = DEFAULT_GRID["p"]
    channels = tuple(dict.fromkeys(args.channel or CHANNELS))
    fn = faulty() if args.inject_fault else None
    kwargs = {"analytic_fn": fn} if fn else {}
    try:
        report = run_verify(channels, _sectors(args), values, args.tol, args.lock_rab, **kwargs)
    except (ValueError, ArithmeticError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc)) from None
    if args.out is not None:
        _write(args.out, to_csv(report.records))
    print(report.summary(), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK if report.passed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"point": cmd_point, "sweep": cmd_sweep, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        where = exc.filename or args.out
        print(f"{parser.prog}: cannot write {where}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
