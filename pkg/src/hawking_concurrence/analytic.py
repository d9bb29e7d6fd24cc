"""Closed-form concurrences of the dilated isotropic state.

All four sectors share one algebraic shape once the trigonometric factors are
relabelled. With ``ca = cos ra`` etc., each sector is described by four
numbers ``(P, Q, R, S)``:

    P  amplitude of Alice's kept mode (ca for A_I, sa for A_II)
    Q  amplitude of Alice's traced mode (sa for A_I, ca for A_II)
    R  amplitude of Bob's kept mode   (cb for B_I, sb for B_II)
    S  amplitude of Bob's traced mode (sb for B_I, cb for B_II)

Every expression below is written in these symbols and is clamped at zero.
Bit-flip thresholds are named ``k_lo``/``k_hi``: the noise strengths where
the concurrence dies and where it revives.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .channels import ChannelKind
from .errors import BadParam, DegenerateQuadratic, NoDeadZone
from .hawking import HawkingFrame, Sector, check_probability

SECTORS = tuple(Sector)


def _scalar_or_array(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def sector_trig(sector: Sector, ra, rb):
    """Return ``(P, Q, R, S)`` for a sector (see module docstring)."""
    ca, sa, cb, sb = np.cos(ra), np.sin(ra), np.cos(rb), np.sin(rb)
    return {
        Sector.AI_BI: (ca, sa, cb, sb),
        Sector.AII_BII: (sa, ca, sb, cb),
        Sector.AI_BII: (ca, sa, sb, cb),
        Sector.AII_BI: (sa, ca, cb, sb),
    }[Sector(sector)]


def _coherent_form(sector, p, frame, gain):
    """(1/2)(2 p g P R - P R sqrt((1-p)(2Q^2 + 2S^2 + (1-p) P^2 R^2)))."""
    check_probability("p", p)
    P, Q, R, S = sector_trig(sector, frame.ra, frame.rb)
    p = np.asarray(p, dtype=float)
    mixed = np.sqrt((1 - p) * (2 * Q**2 + 2 * S**2 + (1 - p) * P**2 * R**2))
    return _scalar_or_array(np.maximum(0.5 * (2 * p * gain * P * R - P * R * mixed), 0.0))


def concurrence_vacuum(sector: Sector, p, frame: HawkingFrame):
    """Concurrence of a reduced state with no channel noise.

    At p = 1 this reduces to ``P * R``, e.g. ``cos ra cos rb`` for (A_I, B_I).
    """
    return _coherent_form(sector, p, frame, 1.0)


def concurrence_pd(sector: Sector, p, frame: HawkingFrame, k):
    """Phase damping on Bob: the coherence shrinks by sqrt(1-k)."""
    check_probability("k", k)
    return _coherent_form(sector, p, frame, np.sqrt(1.0 - np.asarray(k, dtype=float)))


def concurrence_pf(sector: Sector, p, frame: HawkingFrame, k):
    """Phase flip on Bob: the coherence scales by |1 - 2k|.

    For k > 1/2 the flip is dominated by the unitary Z, so the concurrence
    revives symmetrically; this matches the Kraus evolution.
    """
    check_probability("k", k)
    return _coherent_form(sector, p, frame, np.abs(1.0 - 2.0 * np.asarray(k, dtype=float)))


# --- bit flip -----------------------------------------------------------------


class Branch(enum.Enum):
    LOW = "low"
    DEAD = "dead"
    HIGH = "high"


@dataclass(frozen=True)
class PiecewiseBranch:
    """Bit-flip regime boundaries in k.

    The low-noise branch holds on ``[0, lo_threshold]``, the concurrence is
    identically zero strictly between the thresholds, and the high-noise
    branch holds on ``[hi_threshold, 1]``.
    """

    lo_threshold: float
    hi_threshold: float

    def branch_at(self, k: float) -> Branch:
        if k <= self.lo_threshold:
            return Branch.LOW
        if k >= self.hi_threshold:
            return Branch.HIGH
        return Branch.DEAD


@dataclass(frozen=True)
class CoefficientTable:
    """Quadratics ``x1 k^2 + x2 k + x3 = 0`` whose roots are the thresholds."""

    low: tuple[float, float, float]
    high: tuple[float, float, float]


def bf_branches(sector: Sector, p, frame: HawkingFrame, k):
    """Unclamped low- and high-noise bit-flip expressions.

    The low branch pairs the coherence that keeps weight (1-k) with the
    geometric mean of its two diagonal populations; the high branch does the
    same for the coherence of weight k. ``t = 1 - 2k``.
    """
    P, Q, R, S = sector_trig(sector, frame.ra, frame.rb)
    k = np.asarray(k, dtype=float)
    t = 1 - 2 * k
    # both radicals carry a factor P^2; P >= 0 is pulled out so that a tiny P
    # cannot underflow inside the root while surviving outside it
    lo_rad = (2 * k + t * (1 - p) * R**2) * ((1 + Q**2) * (1 + t * S**2) - t * p * P**2 * R**2)
    hi_rad = (2 * (1 - k) - t * (1 - p) * R**2) * ((1 + Q**2) * (1 - t * S**2) + t * p * P**2 * R**2)
    lo = P * ((1 - k) * p * R - 0.5 * np.sqrt(np.maximum(lo_rad, 0.0)))
    hi = P * (k * p * R - 0.5 * np.sqrt(np.maximum(hi_rad, 0.0)))
    return lo, hi


def bf_coefficients(sector: Sector, p: float, frame: HawkingFrame) -> CoefficientTable:
    """Threshold quadratics obtained by squaring ``branch = 0``.

    With ``u = (1-p) R^2`` and
        W  = (1+Q^2) S^2     - p P^2 R^2
        Z  = (1+Q^2)(1+S^2)  - p P^2 R^2
        Z2 = (1+Q^2)(1-S^2)  + p P^2 R^2
    the low branch vanishes where
        (4p^2R^2 + 4(1-u)W) k^2 + (-8p^2R^2 - 2(1-u)Z + 2uW) k + (4p^2R^2 - uZ) = 0
    and the high branch where
        (4p^2R^2 + 4(1-u)W) k^2 + (2(1-u)Z2 - 2(2-u)W) k - (2-u)Z2 = 0.
    """
    P, Q, R, S = sector_trig(sector, frame.ra, frame.rb)
    u = (1 - p) * R**2
    W = (1 + Q**2) * S**2 - p * P**2 * R**2
    Z = (1 + Q**2) * (1 + S**2) - p * P**2 * R**2
    Z2 = (1 + Q**2) * (1 - S**2) + p * P**2 * R**2
    lead = 4 * p**2 * R**2 + 4 * (1 - u) * W
    low = (lead, -8 * p**2 * R**2 - 2 * (1 - u) * Z + 2 * u * W, 4 * p**2 * R**2 - u * Z)
    high = (lead, 2 * (1 - u) * Z2 - 2 * (2 - u) * W, -(2 - u) * Z2)
    return CoefficientTable(tuple(map(float, low)), tuple(map(float, high)))


def quadratic_roots(a: float, b: float, c: float, rel_tol: float = 1e-13) -> list[float]:
    """Real roots of ``a x^2 + b x + c`` without cancellation.

    A negligible leading coefficient falls back to the linear root; a
    discriminant that is negative only by rounding is treated as zero.

    Raises:
        DegenerateQuadratic: if both ``a`` and ``b`` are negligible.
    """
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0 or (abs(a) <= rel_tol * scale and abs(b) <= rel_tol * scale):
        raise DegenerateQuadratic(f"no root for {a}k^2 + {b}k + {c}")
    if abs(a) <= rel_tol * scale:
        return [-c / b]
    disc = b * b - 4 * a * c
    if disc < 0:
        if disc < -rel_tol * max(b * b, abs(4 * a * c)):
            return []
        disc = 0.0
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q / a, c / q])


_ROOT_SLACK = 1e-9


def bf_thresholds(sector: Sector, p: float, frame: HawkingFrame) -> PiecewiseBranch:
    """Bit-flip thresholds ``(k_lo, k_hi)`` from the squared-branch quadratics.

    When the state is already separable at k = 0 the dead region is the
    whole interval and ``(0, 1)`` is returned.

    Raises:
        NoDeadZone: if the low branch is positive at k = 0 but its
            quadratic has no root in [0, 1/2] (cannot happen for valid input).
    """
    check_probability("p", p)
    p = float(p)
    lo0, _ = bf_branches(sector, p, frame, 0.0)
    if not lo0 > 0.0:
        return PiecewiseBranch(0.0, 1.0)
    table = bf_coefficients(sector, p, frame)
    lo_roots = [x for x in quadratic_roots(*table.low) if -_ROOT_SLACK <= x <= 0.5 + _ROOT_SLACK]
    hi_roots = [x for x in quadratic_roots(*table.high) if 0.5 - _ROOT_SLACK <= x <= 1 + _ROOT_SLACK]
    if not lo_roots or not hi_roots:
        raise NoDeadZone(f"no admissible bit-flip threshold for {Sector(sector).value}, p={p}, {frame}")
    return PiecewiseBranch(min(max(lo_roots[0], 0.0), 0.5), max(min(hi_roots[-1], 1.0), 0.5))


def concurrence_bf(sector: Sector, p: float, frame: HawkingFrame, k):
    """Bit flip on Bob: piecewise low branch / zero / high branch in k.

    ``k`` may be an array; thresholds are computed once per call.
    """
    check_probability("k", k)
    th = bf_thresholds(sector, p, frame)
    k = np.asarray(k, dtype=float)
    lo, hi = bf_branches(sector, float(p), frame, k)
    value = np.where(k <= th.lo_threshold, lo, np.where(k >= th.hi_threshold, hi, 0.0))
    return _scalar_or_array(np.maximum(value, 0.0))


# --- p = 1 closed forms ----------------------------------------------------------


def bf_thresholds_p1(sector: Sector, frame: HawkingFrame) -> PiecewiseBranch:
    """Explicit p = 1 thresholds for an arbitrary frame.

    For (A_I, B_I) with ``x = sin^2 ra``, ``y = sin^2 rb``:
        k_lo = (x - y + 2 - sqrt((x - y + 2)^2 - 4(x + y)(1 - y))) / (2(x + y))
        k_hi = (x + 3y - 2 + sqrt((x + 3y - 2)^2 + 4(x + y)(1 - y))) / (2(x + y))
    (A_II, B_II) uses cosines in place of sines. The cross sectors use
        k_lo = (x + y + 1 - sqrt((x + y + 1)^2 - 4y(1 + x - y))) / (2(1 + x - y))
        k_hi = (x - 3y + 1 + sqrt((x - 3y + 1)^2 + 4y(1 + x - y))) / (2(1 + x - y))
    with sines for (A_I, B_II) and cosines for (A_II, B_I).
    The diagonal-sector forms divide by x + y and are undefined when it
    vanishes; :func:`bf_thresholds` covers that case.

    Raises:
        BadParam: when the denominator is zero.
    """
    sector = Sector(sector)
    if sector in (Sector.AI_BI, Sector.AI_BII):
        x, y = math.sin(frame.ra) ** 2, math.sin(frame.rb) ** 2
    else:
        x, y = math.cos(frame.ra) ** 2, math.cos(frame.rb) ** 2
    if sector in (Sector.AI_BI, Sector.AII_BII):
        b1, b2, den = x - y + 2, x + 3 * y - 2, x + y
        if den == 0.0:
            raise BadParam(f"explicit thresholds undefined for {sector.value} at {frame}")
        lo = (b1 - math.sqrt(b1**2 - 4 * den * (1 - y))) / (2 * den)
        hi = (b2 + math.sqrt(b2**2 + 4 * den * (1 - y))) / (2 * den)
    else:
        b1, b2, den = x + y + 1, x - 3 * y + 1, 1 + x - y
        lo = (b1 - math.sqrt(b1**2 - 4 * y * den)) / (2 * den)
        hi = (b2 + math.sqrt(b2**2 + 4 * y * den)) / (2 * den)
    return PiecewiseBranch(lo, hi)


def bf_thresholds_equal(sector: Sector, r: float) -> PiecewiseBranch:
    """Explicit p = 1 thresholds when both observers share the angle ``r``."""
    sector = Sector(sector)
    s2, c2 = math.sin(r) ** 2, math.cos(r) ** 2
    if sector in (Sector.AI_BI, Sector.AII_BII):
        x = s2 if sector is Sector.AI_BI else c2
        lo = (1 - math.sqrt(1 - 2 * s2 * c2)) / (2 * x)
        hi = (2 * x - 1 + math.sqrt((2 * x - 1) ** 2 + 2 * s2 * c2)) / (2 * x)
    else:
        x = s2 if sector is Sector.AI_BII else c2
        lo = (1 + 2 * x - math.sqrt((1 + 2 * x) ** 2 - 4 * x)) / 2
        hi = (1 - 2 * x + math.sqrt((1 - 2 * x) ** 2 + 4 * x)) / 2
    return PiecewiseBranch(lo, hi)


def concurrence_bf_p1(sector: Sector, frame: HawkingFrame, k):
    """Bit-flip concurrence at p = 1 from the simplified branch formulas."""
    check_probability("k", k)
    P, Q, R, S = sector_trig(sector, frame.ra, frame.rb)
    k = np.asarray(k, dtype=float)
    t = 1 - 2 * k
    if Sector(sector) in (Sector.AI_BI, Sector.AII_BII):
        lo_rad = k * (k + (1 - k) * Q**2 + t * S**2)
        hi_rad = (1 - k) * (1 - k + k * Q**2 - t * S**2)
    else:
        lo_rad = k * (1 - k + (1 - k) * Q**2 - t * R**2)
        hi_rad = (1 - k) * (k + k * Q**2 + t * R**2)
    lo = P * ((1 - k) * R - np.sqrt(np.maximum(lo_rad, 0.0)))
    hi = P * (k * R - np.sqrt(np.maximum(hi_rad, 0.0)))
    th = bf_thresholds(sector, 1.0, frame)
    value = np.where(k <= th.lo_threshold, lo, np.where(k >= th.hi_threshold, hi, 0.0))
    return _scalar_or_array(np.maximum(value, 0.0))


# --- dispatch and trade-offs ------------------------------------------------------


def concurrence(channel, sector: Sector, p, frame: HawkingFrame, k=0.0):
    """Closed-form concurrence for ``channel`` in {None, 'none', 'pd', 'pf', 'bf'}."""
    if channel is None or channel == "none":
        return concurrence_vacuum(sector, p, frame)
    kind = ChannelKind(channel)
    if kind is ChannelKind.PHASE_DAMPING:
        return concurrence_pd(sector, p, frame, k)
    if kind is ChannelKind.PHASE_FLIP:
        return concurrence_pf(sector, p, frame, k)
    return concurrence_bf(sector, p, frame, k)


class TradeoffMode(enum.Enum):
    VACUUM = "none"
    PD = "pd"
    PF = "pf"


def tradeoff_target(mode: TradeoffMode, k: float = 0.0) -> float:
    """Conserved value of the summed squared concurrences at p = 1."""
    mode = TradeoffMode(mode)
    if mode is TradeoffMode.VACUUM:
        return 1.0
    if mode is TradeoffMode.PD:
        return 1.0 - k
    return (1.0 - 2.0 * k) ** 2


def tradeoff_sum(mode: TradeoffMode, p: float, frame: HawkingFrame, k: float = 0.0) -> float:
    """Sum over the four sectors of the squared concurrence.

    Raises:
        BadParam: unless p == 1, the only case where a conservation law holds.
    """
    if p != 1:
        raise BadParam(f"trade-off identities hold only at p = 1, got p={p!r}")
    mode = TradeoffMode(mode)
    channel = mode.value
    return float(sum(concurrence(channel, s, 1.0, frame, k) ** 2 for s in SECTORS))
