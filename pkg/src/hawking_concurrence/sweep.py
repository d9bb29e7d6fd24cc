"""Grid sweeps of analytic and numeric concurrence, written as CSV rows."""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import analytic
from .errors import BadParam, BadSpec
from .hawking import HawkingFrame, Sector, ThermalSpec, acceleration_parameter
from .pipeline import numeric_grid

AXES = ("p", "ra", "rb", "omega", "T", "k")
CHANNELS = ("none", "pd", "pf", "bf")
HEADER = (
    "channel", "sector", "p", "ra", "rb", "omega", "T", "k",
    "concurrence_analytic", "concurrence_numeric", "abs_delta",
)


class UsageError(ValueError):
    """Inconsistent or incomplete sweep settings."""


def parse_grid(text: str) -> tuple[str, np.ndarray]:
    """``axis=start:stop:n`` -> (axis, linspace). Accepts ``temp`` for ``T``."""
    try:
        axis, rng = text.split("=", 1)
        start, stop, n = rng.split(":")
        start, stop, n = float(start), float(stop), int(n)
    except ValueError:
        raise UsageError(f"bad grid {text!r}; expected axis=start:stop:n") from None
    axis = {"temp": "T", "t": "T"}.get(axis.strip(), axis.strip())
    if axis not in AXES:
        raise UsageError(f"unknown grid axis {axis!r}; choose from {', '.join(AXES)}")
    if n < 2:
        raise UsageError(f"grid {axis} needs at least 2 points")
    if not (math.isfinite(start) and math.isfinite(stop)) or not stop > start:
        raise UsageError(f"grid {axis} must be finite and strictly increasing")
    return axis, np.linspace(start, stop, n)


@dataclass
class SweepConfig:
    channel: str
    sectors: tuple[Sector, ...]
    values: dict[str, np.ndarray]
    swept: tuple[str, ...] = ()
    lock_rab: bool = False
    out: str | None = None
    emit: str = "csv"
    thermal: bool = field(init=False, default=False)

    def __post_init__(self):
        if self.channel not in CHANNELS:
            raise UsageError(f"unknown channel {self.channel!r}")
        if not self.sectors:
            raise UsageError("no sector selected")
        have = set(self.values)
        thermal = bool(have & {"omega", "T"})
        direct = bool(have & {"ra", "rb"})
        if thermal and direct:
            raise UsageError("give either --ra/--rb or --omega/--temp, not both")
        if "p" not in have:
            raise UsageError("--p is required")
        if thermal:
            if not {"omega", "T"} <= have:
                raise UsageError("thermal frames need both --omega and --temp")
            if not self.lock_rab:
                raise UsageError("thermal frames describe one shared horizon; pass --lock-rab")
        else:
            if "ra" not in have:
                raise UsageError("--ra is required (or --omega with --temp)")
            if self.lock_rab and "rb" in have:
                raise UsageError("--lock-rab sets rb = ra; do not also give --rb")
            if not self.lock_rab and "rb" not in have:
                raise UsageError("--rb is required unless --lock-rab")
        if self.channel == "none" and "k" in have:
            raise UsageError("--k has no meaning without a channel")
        if self.channel != "none" and "k" not in have:
            raise UsageError(f"channel {self.channel} needs --k")
        if self.emit in ("svg", "both") and len(self.swept) > 2:
            raise UsageError(f"SVG supports at most 2 swept axes, got {len(self.swept)}")
        if self.emit in ("svg", "both") and not self.swept:
            raise UsageError("SVG output needs at least one --grid axis")
        self.thermal = thermal

    def axes(self) -> tuple[str, ...]:
        return tuple(a for a in AXES if a in self.values)

    def points(self) -> Iterable[dict[str, float]]:
        names = self.axes()
        for combo in itertools.product(*(self.values[a] for a in names)):
            yield dict(zip(names, map(float, combo)))

    def frame(self, pt: dict[str, float]) -> HawkingFrame:
        if self.thermal:
            r = acceleration_parameter(ThermalSpec(pt["omega"], T=pt["T"]))
            return HawkingFrame(r, r)
        return HawkingFrame(pt["ra"], pt["ra"] if self.lock_rab else pt["rb"])


@dataclass(frozen=True)
class Record:
    channel: str
    sector: Sector
    p: float
    ra: float
    rb: float
    omega: float | None
    T: float | None
    k: float | None
    analytic: float
    numeric: float

    @property
    def delta(self) -> float:
        return abs(self.analytic - self.numeric)

    def cells(self) -> list[str]:
        vals = (self.p, self.ra, self.rb, self.omega, self.T, self.k, self.analytic, self.numeric, self.delta)
        return [self.channel, self.sector.value] + ["" if v is None else format(v, ".17g") for v in vals]


AnalyticFn = Callable[..., float]


def evaluate(cfg: SweepConfig, analytic_fn: AnalyticFn = analytic.concurrence) -> list[Record]:
    """All rows, sector-major, then grid points in axis order."""
    try:
        pts = list(cfg.points())
        frames = [cfg.frame(pt) for pt in pts]
    except (BadParam, BadSpec) as exc:
        raise UsageError(str(exc)) from None
    chan = None if cfg.channel == "none" else cfg.channel
    p = np.array([pt["p"] for pt in pts])
    ra = np.array([f.ra for f in frames])
    rb = np.array([f.rb for f in frames])
    k = np.array([pt.get("k", 0.0) for pt in pts])
    rows = []
    for sector in cfg.sectors:
        try:
            num = numeric_grid(chan, sector, p, ra, rb, k)
            ana = [float(analytic_fn(chan, sector, pt["p"], fr, pt.get("k", 0.0))) for pt, fr in zip(pts, frames)]
        except (BadParam, BadSpec) as exc:
            raise UsageError(str(exc)) from None
        for pt, fr, a, n in zip(pts, frames, ana, num):
            rows.append(Record(cfg.channel, sector, pt["p"], fr.ra, fr.rb,
                               pt.get("omega"), pt.get("T"), pt.get("k"), a, float(n)))
    return rows


def to_csv(rows: Iterable[Record]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(r.cells())
    return buf.getvalue()


def to_svg(cfg: SweepConfig, rows: list[Record]) -> str:
    from . import svg

    by_sector = {s: np.array([r.analytic for r in rows if r.sector is s]) for s in cfg.sectors}
    if len(cfg.swept) == 1:
        axis = cfg.swept[0]
        x = cfg.values[axis]
        # fixed axes other than the swept one have a single value, so each
        # sector column is already ordered along x
        return svg.line_chart(x, {s.value: v for s, v in by_sector.items()}, axis,
                              title=f"channel {cfg.channel}")
    ax, ay = cfg.swept
    x, y = cfg.values[ax], cfg.values[ay]
    shape = [len(cfg.values[a]) for a in cfg.axes()]
    ix, iy = cfg.axes().index(ax), cfg.axes().index(ay)
    panels = {}
    for s, v in by_sector.items():
        z = v.reshape(shape)
        z = np.moveaxis(z, (ix, iy), (0, 1)).reshape(len(x), len(y))
        panels[s.value] = z
    return svg.heatmap(x, y, panels, ax, ay)
