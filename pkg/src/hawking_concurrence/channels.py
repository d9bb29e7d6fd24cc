"""Single-qubit Kraus noise applied on Bob's side of a reduced state.

Every post-noise reduced state carries exactly one power of the channel's
coherence factor, i.e. the channel acts on one party only. That party is Bob
(the second tensor factor). ``apply_one_sided(..., both=True)`` also hits Alice;
it is kept for exploration and has no closed-form counterpart here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BadParam
from .hawking import HawkingFrame, Sector, check_probability, reduced_params
from .quantum_core import I2, BlochXParams


class ChannelKind(enum.Enum):
    PHASE_DAMPING = "pd"
    PHASE_FLIP = "pf"
    BIT_FLIP = "bf"


@dataclass(frozen=True)
class KrausChannel:
    kind: ChannelKind
    k: float
    operators: tuple[np.ndarray, ...]

    def completeness_defect(self) -> float:
        total = sum(e.conj().T @ e for e in self.operators)
        return float(np.max(np.abs(total - I2)))


def kraus_operators(kind: ChannelKind, k: float) -> tuple[np.ndarray, np.ndarray]:
    kind = ChannelKind(kind)
    check_probability("k", k)
    a, b = np.sqrt(1.0 - k), np.sqrt(k)
    if kind is ChannelKind.PHASE_DAMPING:
        e1, e2 = [[1, 0], [0, a]], [[0, 0], [0, b]]
    elif kind is ChannelKind.PHASE_FLIP:
        e1, e2 = [[a, 0], [0, a]], [[b, 0], [0, -b]]
    else:
        e1, e2 = [[a, 0], [0, a]], [[0, b], [b, 0]]
    return np.array(e1, dtype=np.complex128), np.array(e2, dtype=np.complex128)


def make_channel(kind: ChannelKind, k: float) -> KrausChannel:
    """Kraus channel of the given kind with noise strength ``k`` in [0, 1]."""
    kind = ChannelKind(kind)
    return KrausChannel(kind, float(k), kraus_operators(kind, k))


def apply_one_sided(rho, ch: KrausChannel, both: bool = False) -> np.ndarray:
    """``sum_k (I x E_k) rho (I x E_k)^H``; works on stacks of 4x4 states."""
    rho = np.asarray(rho, dtype=np.complex128)
    out = np.zeros_like(rho)
    for e in ch.operators:
        lift = np.kron(I2, e)
        out = out + lift @ rho @ lift.conj().T
    if both:
        rho, out = out, np.zeros_like(out)
        for e in ch.operators:
            lift = np.kron(e, I2)
            out = out + lift @ rho @ lift.conj().T
    return out


def channel_factors(kind: ChannelKind, k):
    """Multipliers the channel applies to (r, s, c1, c2, c3) of an X-state.

    Phase damping and phase flip shrink the transverse correlations; bit flip
    keeps sigma_x on Bob and shrinks sigma_y and sigma_z.
    """
    kind = ChannelKind(kind)
    one = np.ones_like(np.asarray(k, dtype=float))
    if kind is ChannelKind.PHASE_DAMPING:
        g = np.sqrt(1.0 - np.asarray(k, dtype=float))
        return one, one, g, g, one
    t = 1.0 - 2.0 * np.asarray(k, dtype=float)
    if kind is ChannelKind.PHASE_FLIP:
        return one, one, t, t, one
    return one, t, one, t, t


def noisy_params(kind: ChannelKind, sector: Sector, p, ra, rb, k):
    """Vectorised Bloch parameters of a reduced state after Bob's channel."""
    base = reduced_params(sector, p, ra, rb)
    return tuple(x * f for x, f in zip(base, channel_factors(kind, k)))


def noisy_reduced_state(kind: ChannelKind, sector: Sector, p: float, frame: HawkingFrame, k: float) -> BlochXParams:
    check_probability("p", p)
    check_probability("k", k)
    vals = noisy_params(kind, sector, float(p), frame.ra, frame.rb, float(k))
    return BlochXParams(*(float(x) for x in vals))


@dataclass(frozen=True)
class NoisySector:
    """A sector whose Bob mode passes through ``channel``.

    ``side`` is always ``"B"``: every closed form here assumes one-sided noise.
    """

    sector: Sector
    channel: KrausChannel
    side: str = "B"

    def __post_init__(self):
        object.__setattr__(self, "sector", Sector(self.sector))
        if self.side != "B":
            raise BadParam(f"only Bob-side noise is modelled, got side={self.side!r}")

    def state(self, p: float, frame: HawkingFrame) -> BlochXParams:
        return noisy_reduced_state(self.channel.kind, self.sector, p, frame, self.channel.k)
