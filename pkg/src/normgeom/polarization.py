"""Inner products recovered from norms, and Gram matrices built from them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from normgeom import spaces
from normgeom.errors import InvalidParameters, InvalidSpace
from normgeom.spaces import Field

RANK_TOL = 1e-9
RANK_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Polarization Gram matrix of the non-base points of a configuration.

    ``indices[i]`` is the configuration index of row ``i``; the base point is
    left out since its row and column vanish identically.
    """

    entries: np.ndarray
    base_index: int
    indices: tuple

    def rank(self, rtol=RANK_TOL):
        return numerical_rank(self.entries, rtol)

    def is_singular(self, rtol=RANK_TOL):
        return self.rank(rtol) < self.entries.shape[0]

    def to_json(self):
        return {"base_index": self.base_index, "indices": list(self.indices),
                "entries": self.entries.tolist()}


def numerical_rank(G, rtol=RANK_TOL):
    """Eigenvalues below ``rtol * max(largest eigenvalue, 1e-12)`` count as zero."""
    G = np.asarray(G, dtype=float)
    if G.size == 0:
        return 0
    ev = np.linalg.eigvalsh(0.5 * (G + G.T))
    cutoff = rtol * max(ev[-1], RANK_FLOOR)
    return int(np.sum(ev > cutoff))


def _polarize_rows(space, U, V, base):
    su = spaces.sqnorms(space, U - base)
    sv = spaces.sqnorms(space, V - base)
    sd = spaces.sqnorms(space, U - V)
    return 0.5 * (su + sv - sd)


def polarize_real(space, u, v, base=None):
    """``(||u-b||^2 + ||v-b||^2 - ||u-v||^2) / 2`` for base point ``b`` (default 0)."""
    u = spaces.as_vector(space, u)
    v = spaces.as_vector(space, v)
    b = np.zeros_like(u) if base is None else spaces.as_vector(space, base)
    return float(_polarize_rows(space, u[None], v[None], b)[0])


def gram_matrix(space, points, base_index=0):
    """Gram matrix of ``points`` relative to ``points[base_index]``.

    ``points`` may be a :class:`~normgeom.geometry.PointConfig` or an array of
    points (one per row) belonging to ``space``.
    """
    pts = getattr(points, "points", points)
    pts = spaces.as_points(space, pts)
    m = pts.shape[0]
    if not (0 <= base_index < m):
        raise InvalidParameters(f"base index {base_index} out of range for {m} points")
    idx = tuple(i for i in range(m) if i != base_index)
    Y = pts[list(idx)] - pts[base_index]
    k = len(idx)
    G = np.zeros((k, k))
    if k:
        sq = spaces.sqnorms(space, Y)
        iu, ju = np.triu_indices(k, 1)
        dd = spaces.sqnorms(space, Y[iu] - Y[ju])
        G[np.diag_indices(k)] = sq
        G[iu, ju] = 0.5 * (sq[iu] + sq[ju] - dd)
        G[ju, iu] = G[iu, ju]
    G.setflags(write=False)
    return GramMatrix(G, base_index, idx)


def gram_from_distances(D, base_index=0):
    """Base-point Gram matrix from a matrix of pairwise distances alone."""
    D = np.asarray(D, dtype=float)
    sq = D * D
    idx = [i for i in range(D.shape[0]) if i != base_index]
    d0 = sq[base_index, idx]
    return 0.5 * (d0[:, None] + d0[None, :] - sq[np.ix_(idx, idx)])


def polarize_complex(space, f, g):
    """Complex inner product ``<f,g>_R - i <if, g>_R`` from the realified norm."""
    if space.field is not Field.COMPLEX:
        raise InvalidSpace("complex polarization needs a complex space")
    f = spaces.as_vector(space, f)
    g = spaces.as_vector(space, g)
    return complex(polarize_complex_rows(space, f[None], g[None])[0])


def polarize_complex_rows(space, F, G):
    real, J = spaces.realify(space)
    zero = np.zeros(space.real_dim)
    re = _polarize_rows(real, F, G, zero)
    im = -_polarize_rows(real, F @ J.J.T, G, zero)
    return re + 1j * im


def parallelogram_residual(space, f, g):
    """Signed ``||f+g||^2 + ||f-g||^2 - 2(||f||^2 + ||g||^2)``."""
    f = spaces.as_vector(space, f)
    g = spaces.as_vector(space, g)
    n = spaces.sqnorms(space, np.stack([f + g, f - g, f, g]))
    return float(n[0] + n[1] - 2.0 * (n[2] + n[3]))
