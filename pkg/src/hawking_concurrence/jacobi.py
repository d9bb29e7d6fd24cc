"""Cyclic Jacobi routines for small dense complex matrices.

Both routines operate on stacks of matrices with shape ``(..., n, n)`` and
rotate every matrix in the stack at once, so a batch of a few thousand 4x4
states costs about as much Python overhead as a single one.
"""

from __future__ import annotations

import numpy as np

OFF_TOL = 1e-13
MAX_SWEEPS = 60


def _rotation(app, aqq, apq):
    """Return (c, s, phase) of the unitary that annihilates ``apq``.

    The rotation acts on columns ``p, q`` as::

        col_p <- c * col_p - s * phase * col_q
        col_q <- s * col_p + c * phase * col_q

    with ``phase = exp(-i arg apq)``. The angle is the small one (|theta| <= pi/4).
    """
    mag = np.abs(apq)
    active = mag > 0.0
    safe = np.where(active, mag, 1.0)
    phase = np.where(active, np.conj(apq) / safe, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        zeta = (aqq - app) / (2.0 * safe)
        t = np.sign(zeta) / (np.abs(zeta) + np.hypot(1.0, zeta))
    t = np.where(zeta == 0.0, 1.0, t)
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c, phase


def _off_norm(a):
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[..., mask]) ** 2, axis=-1))


def jacobi_eigh(a, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decomposition of Hermitian matrices by cyclic Jacobi sweeps.

    Args:
        a: Hermitian matrix or stack of them, shape ``(..., n, n)``.
        tol: stop once the Frobenius norm of the off-diagonal part is below this.
        max_sweeps: hard cap on sweeps; reaching it raises ``RuntimeError``.

    Returns:
        ``(w, v)`` with eigenvalues ascending and ``a @ v = v * w``.
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    if a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    n = a.shape[-1]
    a = 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))
    v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy()

    for _ in range(max_sweeps):
        if np.all(_off_norm(a) < tol):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                c, s, ph = _rotation(a[..., p, p].real, a[..., q, q].real, a[..., p, q])
                c, s, ph = c[..., None], s[..., None], ph[..., None]
                # columns: A <- A U
                ap, aq = a[..., :, p].copy(), a[..., :, q]
                a[..., :, p] = c * ap - s * ph * aq
                a[..., :, q] = s * ap + c * ph * aq
                # rows: A <- U^H A
                ap, aq = a[..., p, :].copy(), a[..., q, :]
                a[..., p, :] = c * ap - s * np.conj(ph) * aq
                a[..., q, :] = s * ap + c * np.conj(ph) * aq
                a[..., p, q] = 0.0
                a[..., q, p] = 0.0
                vp, vq = v[..., :, p].copy(), v[..., :, q]
                v[..., :, p] = c * vp - s * ph * vq
                v[..., :, q] = s * vp + c * ph * vq
    else:
        if not np.all(_off_norm(a) < tol):
            raise RuntimeError("Jacobi eigensolver did not converge")

    w = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[..., None, :], axis=-1)
    return w, v


def jacobi_singular_values(m, tol: float = 1e-14, max_sweeps: int = MAX_SWEEPS):
    """Singular values by one-sided (Hestenes) Jacobi, sorted descending.

    Columns are rotated until pairwise orthogonal; the singular values are then
    the column norms. Small singular values come out with absolute error of
    order ``eps * ||m||`` instead of ``sqrt(eps)`` as with ``sqrt(eig(m m^H))``.
    """
    m = np.array(m, dtype=np.complex128, copy=True)
    n = m.shape[-1]
    for _ in range(max_sweeps):
        worst = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                mp, mq = m[..., :, p].copy(), m[..., :, q].copy()
                alpha = np.sum(np.abs(mp) ** 2, axis=-1)
                beta = np.sum(np.abs(mq) ** 2, axis=-1)
                gamma = np.sum(np.conj(mp) * mq, axis=-1)
                scale = np.sqrt(alpha * beta)
                rel = np.where(scale > 0.0, np.abs(gamma) / np.where(scale > 0.0, scale, 1.0), 0.0)
                worst = max(worst, float(np.max(rel, initial=0.0)))
                gamma = np.where(rel > tol, gamma, 0.0)
                c, s, ph = _rotation(alpha, beta, gamma)
                c, s, ph = c[..., None], s[..., None], ph[..., None]
                m[..., :, p] = c * mp - s * ph * mq
                m[..., :, q] = s * mp + c * ph * mq
        if worst <= tol:
            break
    else:
        raise RuntimeError("one-sided Jacobi SVD did not converge")
    sv = np.sqrt(np.sum(np.abs(m) ** 2, axis=-2))
    return -np.sort(-sv, axis=-1)
