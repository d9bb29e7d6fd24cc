"""Analytic-versus-numeric verification over a parameter grid."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import analytic
from .hawking import R_MAX, HawkingFrame, Sector
from .pipeline import numeric_concurrence
from .sweep import AnalyticFn, Record, SweepConfig, evaluate

DEFAULT_GRID = {
    "p": np.linspace(0.0, 1.0, 6),
    "ra": np.linspace(0.0, R_MAX, 5),
    "rb": np.linspace(0.0, R_MAX, 5),
    "k": np.linspace(0.0, 1.0, 11),
}
ZERO_TOL = 1e-8
IDENTITY_TOL = 1e-12
PROBE = 0.01


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


@dataclass
class VerifyReport:
    tol: float
    records: list[Record] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    @property
    def max_delta(self) -> float:
        return max((r.delta for r in self.records), default=0.0)

    @property
    def offending(self) -> list[Record]:
        return [r for r in self.records if not r.delta <= self.tol]

    @property
    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.offending and not self.failed_checks

    def summary(self) -> str:
        lines = [
            f"cases: {len(self.records)}  max |delta|: {self.max_delta:.3e}  tol: {self.tol:g}  "
            f"over tol: {len(self.offending)}",
            f"checks: {len(self.checks)}  failed: {len(self.failed_checks)}",
        ]
        for r in self.offending:
            lines.append("  row " + ",".join(r.cells()))
        for c in self.failed_checks:
            lines.append(f"  check {c.name}: {c.detail}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _threshold_checks(sector: Sector, p: float, frame: HawkingFrame, analytic_fn: AnalyticFn) -> list[Check]:
    th = analytic.bf_thresholds(sector, p, frame)
    tag = f"bf {sector.value} p={p:.17g} ra={frame.ra:.17g} rb={frame.rb:.17g}"
    if th.lo_threshold == 0.0 and th.hi_threshold == 1.0:
        return []
    out = []
    for name, k in (("k_lo", th.lo_threshold), ("k_hi", th.hi_threshold)):
        c = numeric_concurrence("bf", sector, p, frame, k)
        out.append(Check(f"{tag} zero at {name}", abs(c) <= ZERO_TOL, f"C({k:.17g}) = {c:.3e}"))
    for name, k in (("k_lo-0.01", th.lo_threshold - PROBE), ("k_hi+0.01", th.hi_threshold + PROBE)):
        if 0.0 <= k <= 1.0:
            c = numeric_concurrence("bf", sector, p, frame, k)
            a = float(analytic_fn("bf", sector, p, frame, k))
            out.append(Check(f"{tag} alive at {name}", c > 0.0 and a > 0.0, f"C({k:.17g}) = {c:.3e}, analytic {a:.3e}"))
    return out


def _tradeoff_checks(channel: str, frame: HawkingFrame, ks, analytic_fn: AnalyticFn, tol: float) -> list[Check]:
    out = []
    sectors = tuple(Sector)
    for k in ks:
        if channel == "pf" and k > 0.5:
            continue
        target = analytic.tradeoff_target(channel, k)
        ana = sum(float(analytic_fn(None if channel == "none" else channel, s, 1.0, frame, k)) ** 2 for s in sectors)
        num = sum(numeric_concurrence(channel, s, 1.0, frame, k) ** 2 for s in sectors)
        tag = f"trade-off {channel} ra={frame.ra:.17g} rb={frame.rb:.17g} k={k:.17g}"
        out.append(Check(tag + " analytic", abs(ana - target) <= IDENTITY_TOL, f"sum {ana:.17g} vs {target:.17g}"))
        out.append(Check(tag + " numeric", abs(num - target) <= tol, f"sum {num:.17g} vs {target:.17g}"))
    return out


def run_verify(
    channels=("none", "pd", "pf", "bf"),
    sectors=tuple(Sector),
    values: dict[str, np.ndarray] | None = None,
    tol: float = 1e-9,
    lock_rab: bool = False,
    analytic_fn: AnalyticFn = analytic.concurrence,
) -> VerifyReport:
    """Compare closed forms with the dilation oracle and run structural checks.

    Bit-flip thresholds are checked on every (sector, p, frame) of the grid.
    Trade-off sums are checked for each frame when the grid contains p = 1.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    values = dict(DEFAULT_GRID if values is None else values)
    report = VerifyReport(tol)
    for ch in channels:
        vals = {a: v for a, v in values.items() if not (ch == "none" and a == "k")}
        if ch != "none" and "k" not in vals:
            vals["k"] = DEFAULT_GRID["k"]
        cfg = SweepConfig(ch, tuple(sectors), vals, lock_rab=lock_rab)
        report.records += evaluate(cfg, analytic_fn)
        seen = {}
        for pt in cfg.points():
            fr = cfg.frame(pt)
            seen.setdefault((pt["p"], fr.ra, fr.rb), fr)
        if ch == "bf":
            for (p, _, _), fr in seen.items():
                for s in sectors:
                    report.checks += _threshold_checks(s, p, fr, analytic_fn)
        ks = vals.get("k", [0.0]) if ch != "none" else [0.0]
        for (p, _, _), fr in seen.items():
            if p == 1.0 and ch != "bf":
                report.checks += _tradeoff_checks(ch, fr, ks, analytic_fn, tol)
    return report


def faulty(analytic_fn: AnalyticFn = analytic.concurrence, scale: float = 1.0 + 1e-3) -> AnalyticFn:
    """Analytic function with a deliberately wrong overall coefficient."""

    def wrapped(*args, **kwargs):
        return analytic_fn(*args, **kwargs) * scale

    return wrapped

