"""Two-qubit concurrence, generic and X-state routes.

The generic route is the numeric reference used to check every closed form in
the package, so it avoids shortcuts that rely on the X structure. For a state
``rho`` with spin flip ``rho~ = (Y x Y) rho* (Y x Y)`` the square roots of the
eigenvalues of ``rho rho~`` are the singular values of ``sqrt(rho) sqrt(rho~)``;
those are computed directly with a one-sided Jacobi sweep so that zero
eigenvalues do not pick up ``sqrt(eps)`` noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositive
from .jacobi import jacobi_eigh, jacobi_singular_values
from .quantum_core import SY, BlochXParams, check_density

YY = np.kron(SY, SY)

# Eigenvalues of rho below this are treated as exact zeros when forming sqrt(rho).
RANK_TOL = 1e-14


@dataclass(frozen=True)
class ConcurrenceResult:
    """Concurrence with the descending square-rooted spectrum behind it.

    For a stack of states the fields are arrays: ``value`` and ``clamped`` of
    the batch shape, ``sqrt_eigs`` with a trailing axis of length 4.
    """

    value: float
    sqrt_eigs: tuple[float, float, float, float]
    clamped: bool


def _from_sqrt_eigs(sq) -> ConcurrenceResult:
    sq = np.maximum(np.asarray(sq, dtype=float), 0.0)
    sq = -np.sort(-sq, axis=-1)
    raw = sq[..., 0] - sq[..., 1] - sq[..., 2] - sq[..., 3]
    if sq.ndim == 1:
        return ConcurrenceResult(max(float(raw), 0.0), tuple(float(x) for x in sq), bool(raw < 0.0))
    return ConcurrenceResult(np.maximum(raw, 0.0), sq, raw < 0.0)


def spin_flip(rho) -> np.ndarray:
    """Wootters spin-flipped state (works on stacks)."""
    return YY @ np.conj(rho) @ YY


def matrix_sqrt_psd(rho, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Principal square root of PSD matrices via Jacobi eigendecomposition."""
    w, v = jacobi_eigh(rho)
    w = np.where(w > rank_tol, w, 0.0)
    return (v * np.sqrt(w)[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))


def wootters_sqrt_eigs(rho) -> np.ndarray:
    """Square roots of the eigenvalues of ``rho rho~``, descending.

    Accepts a single 4x4 state or a stack ``(..., 4, 4)``; no validation.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    root = matrix_sqrt_psd(rho)
    return jacobi_singular_values(root @ spin_flip(root))


def concurrence_values(rho) -> np.ndarray:
    """Vectorised concurrence for a stack of (already validated) states."""
    sq = wootters_sqrt_eigs(rho)
    return np.maximum(sq[..., 0] - sq[..., 1] - sq[..., 2] - sq[..., 3], 0.0)


def concurrence_wootters(rho) -> ConcurrenceResult:
    """Concurrence of an arbitrary two-qubit density matrix, or of a stack.

    Raises:
        NotPositive: when ``rho`` (or any member of the stack) is not a valid
            4x4 density matrix.
    """
    rho = check_density(rho)
    if rho.shape[-2:] != (4, 4):
        raise NotPositive(f"concurrence needs 4x4 states, got {rho.shape}")
    return _from_sqrt_eigs(wootters_sqrt_eigs(rho))


def _xstate_sqrt_terms(q: BlochXParams):
    outer = np.sqrt(max((1 + q.r + q.s + q.c3) * (1 - q.r - q.s + q.c3), 0.0))
    inner = np.sqrt(max((1 + q.r - q.s - q.c3) * (1 - q.r + q.s - q.c3), 0.0))
    d, a = q.c1 - q.c2, q.c1 + q.c2
    return (d - outer, d + outer, a - inner, a + inner)


def xstate_spectrum(q: BlochXParams) -> tuple[float, float, float, float]:
    """The four eigenvalues of ``rho rho~`` for an X-state, in closed form.

    Order follows the usual labelling: the first pair comes from the
    ``|00>,|11>`` coherence ``c1 - c2``, the second from ``c1 + c2``.
    """
    return tuple(max(x * x / 16.0, 0.0) for x in _xstate_sqrt_terms(q))


def concurrence_xstate(q: BlochXParams) -> ConcurrenceResult:
    """Closed-form concurrence ``max(2 max_i sqrt(l_i) - sum_i sqrt(l_i), 0)``."""
    sq = [abs(x) / 4.0 for x in _xstate_sqrt_terms(q)]
    raw = 2 * max(sq) - sum(sq)
    return ConcurrenceResult(
        value=max(raw, 0.0), sqrt_eigs=tuple(sorted(sq, reverse=True)), clamped=raw < 0.0
    )
