"""Numeric reference route: isotropic state -> dilation -> trace -> noise -> Wootters.

Nothing here uses the closed-form reduced states; the marginals come from an
explicit 16x16 dilation and partial trace, so agreement with
:mod:`hawking_concurrence.analytic` is a genuine cross-check.
"""

from __future__ import annotations

import numpy as np

from .channels import apply_one_sided, make_channel
from .concurrence import concurrence_values
from .hawking import HawkingFrame, Sector, check_probability, kruskal_isometry, reduce_sector
from .quantum_core import xstate_matrix


def dilated_isotropic(p, ra, rb) -> np.ndarray:
    """Stack of 16x16 dilated isotropic states; ``p, ra, rb`` broadcast."""
    p, ra, rb = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (p, ra, rb)))
    rho = xstate_matrix(0.0, 0.0, p, p, -p)
    va = np.stack([kruskal_isometry(r) for r in ra.ravel()]).reshape(ra.shape + (4, 2))
    vb = np.stack([kruskal_isometry(r) for r in rb.ravel()]).reshape(rb.shape + (4, 2))
    w = np.einsum("...ij,...kl->...ikjl", va, vb).reshape(p.shape + (16, 4))
    return w @ rho @ np.swapaxes(w, -1, -2)


def reduced_numeric(sector: Sector, p, ra, rb) -> np.ndarray:
    return reduce_sector(dilated_isotropic(p, ra, rb), sector)


def numeric_concurrence(channel, sector: Sector, p: float, frame: HawkingFrame, k=0.0):
    """Oracle concurrence for one (p, frame) and scalar or array ``k``."""
    check_probability("p", p)
    check_probability("k", k)
    rho = reduced_numeric(sector, float(p), frame.ra, frame.rb)
    k = np.asarray(k, dtype=float)
    if channel is None or channel == "none":
        out = np.broadcast_to(concurrence_values(rho), k.shape).copy()
    else:
        out = np.array([concurrence_values(apply_one_sided(rho, make_channel(channel, kk))) for kk in k.ravel()])
        out = out.reshape(k.shape)
    return float(out) if out.ndim == 0 else out


def numeric_grid(channel, sector: Sector, p, ra, rb, k) -> np.ndarray:
    """Oracle concurrence on flat, equally long parameter arrays.

    States are built once per distinct (p, ra, rb) and noise is applied per
    row; the Wootters step runs over the whole batch in one call.
    """
    p, ra, rb, k = np.broadcast_arrays(*(np.asarray(x, dtype=float).ravel() for x in (p, ra, rb, k)))
    check_probability("p", p)
    check_probability("k", k)
    keys = np.stack([p, ra, rb], axis=-1)
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    base = reduced_numeric(sector, uniq[:, 0], uniq[:, 1], uniq[:, 2])[inverse.ravel()]
    if channel is None or channel == "none":
        return concurrence_values(base)
    out = np.empty_like(base)
    for kk in np.unique(k):
        sel = k == kk
        out[sel] = apply_one_sided(base[sel], make_channel(channel, kk))
    return concurrence_values(out)
