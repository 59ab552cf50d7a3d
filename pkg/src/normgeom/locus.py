"""Equidistant loci in a plane, isosceles configurations whose flip is an
isometry, and a search for failures of strict convexity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from normgeom import _backend, spaces
from normgeom.errors import (DependentInputs, InvalidParameters,
                             LocusSearchExhausted, NotIsosceles)
from normgeom.extension import Correspondence, verify_isometry
from normgeom.geometry import PointConfig

LOCUS_TOL = 1e-10
MIN_SEPARATION = 1e-6
MAX_BISECTIONS = 200
RADII = (0.5, 1.0, 2.0, 4.0)
ISOSCELES_TOL = 1e-10
SC_DEFECT_TOL = 1e-9
SC_INDEPENDENCE = 1e-3


def phi(space, f_prime, g_prime, h):
    """``||h - f'|| - ||h - g'||``."""
    f = spaces.as_vector(space, f_prime)
    g = spaces.as_vector(space, g_prime)
    h = spaces.as_vector(space, h)
    real = spaces.real_view(space)
    n = spaces.norms(real, np.stack([h - f, h - g]))
    return float(n[0] - n[1])


@dataclass(frozen=True, eq=False)
class LocusPoint:
    h: np.ndarray
    phi_value: float
    segment: tuple = ()

    def to_json(self):
        return {"h": self.h.tolist(), "phi": self.phi_value}


def _plane(f, g):
    """Orthonormal (coordinate) basis of ``span{f, g}``, or None if dependent."""
    A = np.stack([f, g], axis=1)
    U, s, _ = np.linalg.svd(A, full_matrices=False)
    if s[0] == 0.0 or s[1] <= 1e-9 * s[0]:
        return None
    return U[:, 0], U[:, 1]


def _complement_direction(f):
    """First coordinate direction that is least aligned with ``f``."""
    e = np.zeros_like(f)
    e[int(np.argmin(np.abs(f)))] = 1.0
    return e


def _trace(space, f, g, b1, b2, count, rng, tol, max_segments, batch):
    real = spaces.real_view(space)
    mid = 0.5 * (f + g)
    span = float(spaces.norms(real, (f - g)[None])[0])
    found = []
    tried = 0
    while tried < max_segments:
        m = min(batch, max_segments - tried)
        tried += m
        th = rng.uniform(0.0, 2.0 * np.pi, (m, 2))
        rad = span * np.asarray(RADII)[rng.integers(0, len(RADII), (m, 2))]
        ends = []
        for k in range(2):
            w = np.cos(th[:, k:k + 1]) * b1 + np.sin(th[:, k:k + 1]) * b2
            w /= spaces.norms(real, w)[:, None]
            ends.append(mid + rad[:, k:k + 1] * w)
        p1, p2 = ends
        s1 = spaces.norms(real, p1 - f) - spaces.norms(real, p1 - g)
        s2 = spaces.norms(real, p2 - f) - spaces.norms(real, p2 - g)
        keep = s1 * s2 < 0
        if not keep.any():
            continue
        p1, p2 = p1[keep], p2[keep]
        V = p2 - p1
        k = p1.shape[0]
        t, _, ok = _backend.bisect_diff(p1 - f, V, p1 - g, V, np.zeros(k), np.ones(k),
                                        *real._kernel, MAX_BISECTIONS, 0.5 * tol)
        H = p1 + t[:, None] * V
        vals = spaces.norms(real, H - f) - spaces.norms(real, H - g)
        for i in np.flatnonzero(ok & (np.abs(vals) <= tol)):
            h = H[i]
            if spaces.norms(real, h[None])[0] < MIN_SEPARATION:
                continue
            if found and np.min(spaces.norms(real, np.stack([q.h for q in found]) - h)) \
                    < MIN_SEPARATION:
                continue
            found.append(LocusPoint(h.copy(), float(vals[i]), (p1[i].copy(), p2[i].copy())))
            if len(found) >= count:
                return found
    raise LocusSearchExhausted(
        f"found {len(found)} of {count} locus points after {tried} segments")


def trace_locus(space, f_prime, g_prime, count, seed=0, tol=LOCUS_TOL,
                max_segments=10_000):
    """Points ``h`` of ``span{f', g'}`` with ``|phi(h)| <= tol``.

    Segments join two seeded points on circles of radius ``r * ||f' - g'||``,
    ``r`` in ``RADII``, around the midpoint ``(f' + g') / 2``. Each segment
    whose endpoints straddle the locus is bisected. Points closer than
    ``MIN_SEPARATION`` to the origin or to an earlier point are dropped.
    """
    real = spaces.real_view(space)
    f = spaces.as_vector(space, f_prime)
    g = spaces.as_vector(space, g_prime)
    if count < 0:
        raise InvalidParameters("count must be >= 0")
    basis = _plane(f, g)
    if basis is None:
        raise DependentInputs("f' and g' are linearly dependent")
    if count == 0:
        return []
    rng = np.random.default_rng(seed)
    return _trace(real, f, g, *basis, count, rng, tol, max_segments, max(64, 4 * count))


@dataclass(frozen=True, eq=False)
class IsoscelesConfig:
    """The points ``0, f', g', h_1, ...``; swapping ``f'`` and ``g'`` is an isometry."""

    space: spaces.NormedSpace
    f_prime: np.ndarray
    g_prime: np.ndarray
    locus: tuple
    flip_defect: float
    known_extension: str | None = None

    @property
    def n(self):
        return 3 + len(self.locus)

    @property
    def points(self):
        rows = [np.zeros_like(self.f_prime), self.f_prime, self.g_prime]
        rows += [p.h for p in self.locus]
        return np.stack(rows)

    @property
    def pairing(self):
        return (0, 2, 1) + tuple(range(3, self.n))

    def correspondence(self):
        cfg = PointConfig(spaces.real_view(self.space), self.points)
        return Correspondence(cfg, cfg, self.pairing)

    def to_json(self):
        return {"n": self.n, "points": self.points.tolist(),
                "pairing": list(self.pairing),
                "phi": [p.phi_value for p in self.locus],
                "flip_defect": self.flip_defect,
                "known_extension": self.known_extension}


def build_isosceles_config(space, f_prime, g_prime, n, seed=0, tol=LOCUS_TOL):
    """``{0, f', g'}`` plus ``n - 3`` distinct nonzero points of the locus."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 3:
        raise InvalidParameters(f"n must be an integer >= 3, got {n!r}")
    real = spaces.real_view(space)
    f = spaces.as_vector(space, f_prime)
    g = spaces.as_vector(space, g_prime)
    nf, ng, nd = spaces.norms(real, np.stack([f, g, f - g]))
    if abs(nf - ng) > ISOSCELES_TOL * max(1.0, nf):
        raise NotIsosceles(f"||f'|| = {nf:.17g} but ||g'|| = {ng:.17g}")
    if nd == 0.0:
        raise NotIsosceles("f' and g' coincide")
    known = None
    basis = _plane(f, g)
    if basis is None:
        if np.max(np.abs(f + g)) > 1e-12 * max(1.0, nf):
            raise DependentInputs("f' and g' are dependent but g' != -f'")
        known = "negation"  # -id swaps f' and -f'
        basis = _plane(f, _complement_direction(f))
    locus = ()
    if n > 3:
        rng = np.random.default_rng(seed)
        locus = tuple(_trace(real, f, g, *basis, n - 3, rng, tol, 10_000, max(64, 4 * n)))
    pts = [np.zeros_like(f), f, g] + [p.h for p in locus]
    cfg = PointConfig(real, np.stack(pts))
    chk = verify_isometry(Correspondence(cfg, cfg, (0, 2, 1) + tuple(range(3, n))))
    if chk.max_defect > 10 * tol * max(1.0, nd):
        raise NotIsosceles(f"flip moves distances by {chk.max_defect:.3e}")
    return IsoscelesConfig(space, f, g, locus, chk.max_defect, known)


@dataclass(frozen=True, eq=False)
class ConvexityWitness:
    a: np.ndarray
    b: np.ndarray
    defect: float
    independence: float

    def to_json(self):
        return {"a": self.a.tolist(), "b": self.b.tolist(), "defect": self.defect,
                "independence": self.independence}


def _sigma_min(A, B):
    """Smallest singular value of each two-column matrix ``[a b]``."""
    aa = np.einsum("ij,ij->i", A, A)
    bb = np.einsum("ij,ij->i", B, B)
    ab = np.einsum("ij,ij->i", A, B)
    tr, det = aa + bb, np.maximum(aa * bb - ab * ab, 0.0)
    disc = np.sqrt(np.maximum(0.25 * tr * tr - det, 0.0))
    # smaller eigenvalue of [[aa, ab], [ab, bb]] as det / larger, no cancellation
    return np.sqrt(det / np.maximum(0.5 * tr + disc, 1e-300))


def strict_convexity_search(space, budget=10_000, seed=0, defect_tol=SC_DEFECT_TOL,
                            min_independence=SC_INDEPENDENCE):
    """Unit pairs ``a, b`` with ``||a + b|| = 2`` that are far from parallel.

    Candidates are all ordered pairs of the deterministic direction set, then
    seeded random unit pairs, ``budget`` in total. Among the pairs within
    ``defect_tol`` the most independent one (smallest singular value of
    ``[a b]``) wins; ties go to the earliest candidate. Returns ``None`` when
    no pair qualifies.
    """
    if budget < 1:
        raise InvalidParameters("budget must be >= 1")
    real = spaces.real_view(space)
    D = spaces.deterministic_unit_vectors(real)
    nd = D.shape[0]
    ndet = min(budget, nd * nd)
    ii, jj = np.divmod(np.arange(ndet), nd)
    A, B = [D[ii]], [D[jj]]
    if budget > ndet:
        rng = np.random.default_rng(seed)
        A.append(spaces.random_unit_vectors(real, budget - ndet, rng))
        B.append(spaces.random_unit_vectors(real, budget - ndet, rng))
    A, B = np.concatenate(A), np.concatenate(B)
    na, nb = spaces.norms(real, A), spaces.norms(real, B)
    defect = np.abs(spaces.norms(real, A + B) - na - nb)
    indep = _sigma_min(A, B)
    ok = (defect <= defect_tol) & (indep >= min_independence)
    if not ok.any():
        return None
    score = np.where(ok, indep, -np.inf)
    top = score.max()
    i = int(np.flatnonzero(score >= top - 1e-12 * top)[0])
    return ConvexityWitness(A[i].copy(), B[i].copy(), float(defect[i]), float(indep[i]))
