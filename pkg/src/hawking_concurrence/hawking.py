"""Kruskal-to-Schwarzschild mode splitting for two observers.

Each observer's qubit is mapped by the isometry

    |0> -> cos r |0>_I |0>_II + sin r |1>_I |1>_II,     |1> -> |1>_I |0>_II

where region I lies outside the horizon and region II inside it. The angle r
is fixed by the mode frequency and the Hawking temperature through
``tan r = exp(-omega / (2 T))``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParam, BadSpec
from .quantum_core import BlochXParams, QubitLabel, partial_trace

R_MAX = math.pi / 4
# absorbs pi/4 typed to ten digits; accepted angles are clamped into range
_R_SLACK = 1e-9


class Sector(enum.Enum):
    """Bipartite reductions of the four-mode state, as (A-mode, B-mode)."""

    AI_BI = "ai-bi"
    AII_BII = "aii-bii"
    AI_BII = "ai-bii"
    AII_BI = "aii-bi"

    @property
    def keep(self) -> tuple[QubitLabel, QubitLabel]:
        a, b = self.name.split("_")
        return QubitLabel["A_" + a[1:]], QubitLabel["B_" + b[1:]]

    @property
    def accessible(self) -> bool:
        return self is Sector.AI_BI


def _check_angle(name: str, r: float) -> float:
    r = float(r)
    if not (-_R_SLACK <= r <= R_MAX + _R_SLACK):
        raise BadParam(f"{name}={r!r} outside [0, pi/4]")
    return min(max(r, 0.0), R_MAX)


def check_probability(name: str, x) -> None:
    x = np.asarray(x, dtype=float)
    bad = ~(np.isfinite(x) & (x >= 0.0) & (x <= 1.0))
    if np.any(bad):
        raise BadParam(f"{name} must lie in [0, 1], got {float(x[bad].flat[0])!r}")


@dataclass(frozen=True)
class ThermalSpec:
    """Mode frequency plus either the Hawking temperature or the hole mass."""

    omega: float
    T: float | None = None
    M: float | None = None

    def __post_init__(self):
        if (self.T is None) == (self.M is None):
            raise BadSpec("give exactly one of T or M")
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise BadSpec(f"omega must be positive, got {self.omega!r}")
        if self.T is not None and (math.isnan(self.T) or self.T < 0):
            raise BadSpec(f"T must be >= 0, got {self.T!r}")
        if self.M is not None and not self.M > 0:
            raise BadSpec(f"M must be > 0, got {self.M!r}")

    @property
    def temperature(self) -> float:
        return self.T if self.T is not None else hawking_temperature(self.M)


def hawking_temperature(M: float) -> float:
    """Schwarzschild temperature 1/(8 pi M) in natural units."""
    if not M > 0:
        raise BadSpec(f"black-hole mass must be > 0, got {M!r}")
    return 1.0 / (8.0 * math.pi * M)


def acceleration_parameter(spec: ThermalSpec) -> float:
    """Angle r with cos r = (e^{-w/T}+1)^{-1/2}, sin r = (e^{w/T}+1)^{-1/2}.

    Evaluated as ``atan(exp(-w/(2T)))``, which is exact at both ends:
    T = 0 gives 0 and T = inf gives pi/4.
    """
    T = spec.temperature
    if T == 0:
        return 0.0
    return math.atan(math.exp(-spec.omega / (2.0 * T)))


@dataclass(frozen=True)
class HawkingFrame:
    """Acceleration parameters of Alice (``ra``) and Bob (``rb``), radians."""

    ra: float
    rb: float

    def __post_init__(self):
        object.__setattr__(self, "ra", _check_angle("ra", self.ra))
        object.__setattr__(self, "rb", _check_angle("rb", self.rb))

    @classmethod
    def from_thermal(cls, alice: ThermalSpec, bob: ThermalSpec | None = None) -> "HawkingFrame":
        """Frame from per-observer thermal data; ``bob=None`` locks rb = ra."""
        ra = acceleration_parameter(alice)
        rb = ra if bob is None else acceleration_parameter(bob)
        return cls(ra, rb)


def kruskal_isometry(r: float) -> np.ndarray:
    """4x2 map from a Kruskal qubit to the (region I, region II) pair."""
    v = np.zeros((4, 2))
    v[0b00, 0] = math.cos(r)
    v[0b11, 0] = math.sin(r)
    v[0b10, 1] = 1.0
    return v


def dilate_two_qubit(rho, frame: HawkingFrame) -> np.ndarray:
    """Four-mode state ``(V_a x V_b) rho (V_a x V_b)^T``, order A_I A_II B_I B_II."""
    w = np.kron(kruskal_isometry(frame.ra), kruskal_isometry(frame.rb))
    return w @ np.asarray(rho, dtype=np.complex128) @ w.T


def reduce_sector(rho16, sector: Sector) -> np.ndarray:
    return partial_trace(rho16, Sector(sector).keep)


def isotropic_state(p: float) -> BlochXParams:
    """(1-p) I/4 + p |Psi+><Psi+| with |Psi+> = (|01> + |10>)/sqrt(2)."""
    check_probability("p", p)
    p = float(p)
    return BlochXParams(0.0, 0.0, p, p, -p)


def reduced_params(sector: Sector, p, ra, rb):
    """Bloch parameters of a reduced state; broadcasts over array inputs."""
    sector = Sector(sector)
    ca, sa, cb, sb = np.cos(ra), np.sin(ra), np.cos(rb), np.sin(rb)
    if sector is Sector.AI_BI:
        r, s, c = -sa**2, -sb**2, p * ca * cb
        return r, s, c, c, sa**2 * sb**2 - p * ca**2 * cb**2
    if sector is Sector.AII_BII:
        r, s, c = ca**2, cb**2, p * sa * sb
        return r, s, c, c, ca**2 * cb**2 - p * sa**2 * sb**2
    if sector is Sector.AI_BII:
        r, s, c = -sa**2, cb**2, p * ca * sb
        return r, s, c, -c, -(sa**2 * cb**2 - p * ca**2 * sb**2)
    r, s, c = ca**2, -sb**2, p * sa * cb
    return r, s, c, -c, -(ca**2 * sb**2 - p * sa**2 * cb**2)


def reduced_state(sector: Sector, p: float, frame: HawkingFrame) -> BlochXParams:
    """Analytic reduced state of the dilated isotropic state in one sector."""
    check_probability("p", p)
    return BlochXParams(*(float(x) for x in reduced_params(sector, float(p), frame.ra, frame.rb)))
