"""Dense 2/4/16-dimensional state algebra.

Density matrices are plain ``numpy`` complex arrays. The four field modes are
always laid out as ``A_I (x) A_II (x) B_I (x) B_II``; :class:`QubitLabel`
values are the tensor-factor positions in that order.
"""

from __future__ import annotations

import enum
from dataclasses import astuple, dataclass
from typing import NamedTuple

import numpy as np

from .errors import BadKeepSet, BadParam, NotPositive, NotXState
from .jacobi import jacobi_eigh

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
XSTATE_TOL = 1e-12

I2 = np.eye(2, dtype=np.complex128)
SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (SX, SY, SZ)

# entries of a 4x4 X-state that must vanish
_OFF_X = ~(np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool)))


class QubitLabel(enum.IntEnum):
    A_I = 0
    A_II = 1
    B_I = 2
    B_II = 3

    @property
    def party(self) -> str:
        return "A" if self < 2 else "B"


def _xblocks_min_eig(r, s, c1, c2, c3):
    # outer block couples |00>,|11>; inner block couples |01>,|10>
    a, d, b = 1 + r + s + c3, 1 - r - s + c3, c1 - c2
    outer = 0.5 * (a + d) - np.hypot(0.5 * (a - d), b)
    a, d, b = 1 + r - s - c3, 1 - r + s - c3, c1 + c2
    inner = 0.5 * (a + d) - np.hypot(0.5 * (a - d), b)
    return 0.25 * np.minimum(outer, inner)


@dataclass(frozen=True)
class BlochXParams:
    """Local z-polarisations ``r, s`` and diagonal correlations ``c1..c3``.

    Construction checks that every field lies in [-1, 1] and that the
    resulting X-state is positive semidefinite.
    """

    r: float
    s: float
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        vals = astuple(self)
        if not all(np.isfinite(v) for v in vals):
            raise BadParam(f"non-finite Bloch parameters {vals}")
        if any(abs(v) > 1 + 1e-12 for v in vals):
            raise BadParam(f"Bloch parameters must lie in [-1, 1], got {vals}")
        lo = float(_xblocks_min_eig(*vals))
        if lo < -PSD_TOL:
            raise NotPositive(f"X-state has negative eigenvalue {lo:.3e}")

    def as_array(self) -> np.ndarray:
        return np.array(astuple(self), dtype=float)


def xstate_matrix(r, s, c1, c2, c3) -> np.ndarray:
    """Vectorised X-state builder; broadcasts over array arguments."""
    r, s, c1, c2, c3 = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (r, s, c1, c2, c3)))
    m = np.zeros(r.shape + (4, 4), dtype=np.complex128)
    m[..., 0, 0] = 1 + r + s + c3
    m[..., 1, 1] = 1 + r - s - c3
    m[..., 2, 2] = 1 - r + s - c3
    m[..., 3, 3] = 1 - r - s + c3
    m[..., 0, 3] = m[..., 3, 0] = c1 - c2
    m[..., 1, 2] = m[..., 2, 1] = c1 + c2
    return 0.25 * m


def bloch_to_density(q: BlochXParams) -> np.ndarray:
    """4x4 density matrix of an X-state given by its Bloch parameters."""
    return xstate_matrix(q.r, q.s, q.c1, q.c2, q.c3)


def density_to_bloch(rho) -> BlochXParams:
    """Inverse of :func:`bloch_to_density`.

    Raises:
        NotXState: if any entry off the X pattern, or any imaginary part,
            exceeds ``XSTATE_TOL``.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise NotXState(f"expected a 4x4 matrix, got shape {rho.shape}")
    off = np.max(np.abs(rho[_OFF_X]))
    imag = np.max(np.abs(rho.imag))
    if off > XSTATE_TOL or imag > XSTATE_TOL:
        raise NotXState(f"off-X weight {off:.3e}, imaginary weight {imag:.3e}")
    d = rho.real.diagonal()
    return BlochXParams(
        r=d[0] + d[1] - d[2] - d[3],
        s=d[0] - d[1] + d[2] - d[3],
        c1=2 * (rho[1, 2].real + rho[0, 3].real),
        c2=2 * (rho[1, 2].real - rho[0, 3].real),
        c3=d[0] - d[1] - d[2] + d[3],
    )


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two operators."""
    return np.kron(np.asarray(a), np.asarray(b))


def partial_trace(rho, keep) -> np.ndarray:
    """Reduce a four-mode state to one A-mode and one B-mode.

    Args:
        rho: 16x16 state (or stack of them) in ``A_I, A_II, B_I, B_II`` order.
        keep: pair of :class:`QubitLabel`, one from each party.

    Returns:
        4x4 marginal ordered (A-mode, B-mode).
    """
    try:
        modes = sorted(QubitLabel(m) for m in keep)
    except (TypeError, ValueError) as exc:
        raise BadKeepSet(f"invalid keep set {keep!r}") from exc
    if len(modes) != 2 or [m.party for m in modes] != ["A", "B"]:
        raise BadKeepSet(f"keep set must be one A-mode and one B-mode, got {keep!r}")
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape[-2:] != (16, 16):
        raise BadKeepSet(f"expected 16x16 input, got shape {rho.shape}")
    batch = rho.shape[:-2]
    t = rho.reshape(batch + (2,) * 8)
    row = "abcd"
    col = "".join("ABCD"[i] if i in modes else row[i] for i in range(4))
    out = "".join(row[m] for m in modes) + "".join("ABCD"[m] for m in modes)
    return np.einsum(f"...{row}{col}->...{out}", t).reshape(batch + (4, 4))


class DensityDiagnostics(NamedTuple):
    """Distances from validity; arrays of the batch shape for stacked input."""

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float


def validate_density(rho) -> DensityDiagnostics:
    """Report how far ``rho`` (or each matrix of a stack) is from a valid state.

    Never raises.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    adj = np.conj(np.swapaxes(rho, -1, -2))
    herm = np.max(np.abs(rho - adj), axis=(-2, -1))
    tr = np.abs(np.trace(rho, axis1=-2, axis2=-1) - 1.0)
    w, _ = jacobi_eigh(0.5 * (rho + adj))
    if rho.ndim == 2:
        return DensityDiagnostics(float(herm), float(tr), float(w[0]))
    return DensityDiagnostics(herm, tr, w[..., 0])


def _first_bad(mask) -> str:
    if mask.ndim == 0:
        return ""
    return f" (matrix {tuple(int(i) for i in np.argwhere(mask)[0])} of stack {mask.shape})"


def check_density(rho) -> np.ndarray:
    """Return ``rho`` as a complex array, raising ``NotPositive`` if invalid.

    Accepts one matrix or a stack ``(..., n, n)`` with n in {2, 4, 16}; a stack
    is rejected if any member is invalid.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim < 2 or rho.shape[-1] != rho.shape[-2] or rho.shape[-1] not in (2, 4, 16):
        raise NotPositive(f"unsupported density-matrix shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise NotPositive("density matrix has non-finite entries")
    herm, tr, low = (np.asarray(x) for x in validate_density(rho))
    bad = herm > HERMITIAN_TOL
    if np.any(bad):
        raise NotPositive(f"not Hermitian (defect {np.max(herm):.3e}){_first_bad(bad)}")
    bad = tr > TRACE_TOL
    if np.any(bad):
        raise NotPositive(f"trace differs from 1 by {np.max(tr):.3e}{_first_bad(bad)}")
    bad = low < -PSD_TOL
    if np.any(bad):
        raise NotPositive(f"minimum eigenvalue {np.min(low):.3e}{_first_bad(bad)}")
    return rho
