"""Distance geometry: distance and Cayley-Menger matrices, affine dependence,
and trilateration from anchors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from normgeom import spaces
from normgeom.errors import (DimensionMismatch, InconsistentDistances,
                             InvalidParameters, InvalidSpace, NonFiniteInput,
                             NotEuclideanRealizable)
from normgeom.polarization import RANK_TOL, gram_from_distances

CM_TOL = 1e-9
PSD_FLOOR = 1e-9
TRILATERATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PointConfig:
    """An ordered, labelled list of points of ``space`` (one per row)."""

    space: spaces.NormedSpace
    points: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        pts = spaces.as_points(self.space, self.points)
        if pts.shape[0] == 0:
            raise InvalidParameters("a point configuration needs at least one point")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != pts.shape[0]:
                raise InvalidParameters("one label per point required")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return self.points.shape[0]

    @classmethod
    def from_json(cls, obj, space=None):
        """``{"space": {...}, "points": [[...]], "labels": [...]}``.

        Without a ``space`` entry (and none passed in) the points are taken to
        live in Euclidean space of matching dimension.
        """
        if not isinstance(obj, dict) or "points" not in obj:
            raise InvalidParameters("point-set JSON needs a 'points' list")
        try:
            pts = np.array(obj["points"], dtype=float)
        except (TypeError, ValueError):
            raise InvalidParameters("points must be a list of numeric lists") from None
        if pts.ndim != 2:
            raise InvalidParameters("points must be a non-empty list of equal-length lists")
        if "space" in obj:
            space = spaces.NormedSpace.from_json(obj["space"])
        elif space is None:
            space = spaces.euclidean(pts.shape[1])
        return cls(space, pts, obj.get("labels"))

    def to_json(self):
        out = {"space": self.space.to_json(), "points": self.points.tolist()}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Pairwise distances ``d_ij`` of points ``x_0 .. x_n``."""

    d: np.ndarray

    def __post_init__(self):
        d = np.array(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] == 0:
            raise InvalidParameters("distance matrix must be square and non-empty")
        if not np.all(np.isfinite(d)):
            raise NonFiniteInput("distance matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(d))))
        if np.max(np.abs(d - d.T)) > 1e-12 * scale:
            raise InvalidParameters("distance matrix is not symmetric")
        if np.any(np.diag(d) != 0.0):
            raise InvalidParameters("distance matrix diagonal must be zero")
        if np.any(d < 0):
            raise InvalidParameters("distances must be nonnegative")
        # triangle inequality d_ij <= d_ik + d_kj on all triples
        worst = np.max(d[:, None, :] - d[:, :, None] - d[None, :, :].transpose(0, 2, 1))
        if worst > 1e-9 * scale:
            raise InvalidParameters(f"triangle inequality fails by {worst:.3e}")
        d = 0.5 * (d + d.T)
        d.setflags(write=False)
        object.__setattr__(self, "d", d)

    @property
    def size(self):
        return self.d.shape[0]

    @classmethod
    def from_json(cls, obj):
        """``{"n": n+1, "d": [[...]]}``."""
        if not isinstance(obj, dict) or "d" not in obj:
            raise InvalidParameters("distance-matrix JSON needs a 'd' entry")
        try:
            d = np.array(obj["d"], dtype=float)
        except (TypeError, ValueError):
            raise InvalidParameters("'d' must be a numeric matrix") from None
        if "n" in obj and (d.ndim != 2 or obj["n"] != d.shape[0]):
            raise InvalidParameters(f"'n' = {obj['n']} does not match the matrix size")
        return cls(d)

    def to_json(self):
        return {"n": self.size, "d": self.d.tolist()}


def distance_matrix(config):
    pts = config.points
    m = pts.shape[0]
    d = np.zeros((m, m))
    iu, ju = np.triu_indices(m, 1)
    if iu.size:
        d[iu, ju] = spaces.norms(config.space, pts[iu] - pts[ju])
        d[ju, iu] = d[iu, ju]
    return DistanceMatrix(d)


def cayley_menger(dm):
    """Bordered matrix: squared distances, a column and row of ones, zero corner."""
    m = dm.size
    cm = np.ones((m + 1, m + 1))
    cm[:m, :m] = dm.d ** 2
    cm[m, m] = 0.0
    return cm


def _scaled_cm(dm):
    s = float(np.max(dm.d))
    if s == 0.0:
        return cayley_menger(dm), 1.0
    return cayley_menger(DistanceMatrix(dm.d / s)), s


def cm_determinant(dm):
    """``det CM`` computed on distances divided by their maximum, mapped back.

    Scaling the squared-distance block by ``l = 1/s^2`` multiplies the
    determinant by ``l^(m-1)`` for ``m`` points.
    """
    cm, s = _scaled_cm(dm)
    return float(np.linalg.det(cm)) * s ** (2 * (dm.size - 1))


@dataclass(frozen=True)
class DependenceVerdict:
    dependent: bool
    det: float
    scaled_det: float
    scale: float
    min_gram_eigenvalue: float

    def __bool__(self):
        return self.dependent

    def to_json(self):
        return {"affinely_dependent": self.dependent, "det": self.det,
                "scaled_det": self.scaled_det, "scale": self.scale,
                "min_gram_eigenvalue": self.min_gram_eigenvalue}


def check_realizable(dm):
    """Smallest eigenvalue of the base-point Gram of ``dm``; raises when it is
    significantly negative (no Euclidean embedding exists)."""
    if dm.size == 1:
        return 0.0
    G = gram_from_distances(dm.d, 0)
    ev = np.linalg.eigvalsh(0.5 * (G + G.T))
    floor = PSD_FLOOR * max(float(np.max(dm.d)) ** 2, 1e-300)
    if ev[0] < -floor:
        raise NotEuclideanRealizable(
            f"base-point Gram has eigenvalue {ev[0]:.6g} < 0; no Euclidean embedding")
    return float(ev[0])


def is_affinely_dependent(dm, tol=CM_TOL):
    """Affine dependence of the (Euclidean-realizable) points behind ``dm``.

    Dependent iff ``|det CM| <= tol`` after normalising distances by their
    maximum. A single point is independent; coincident points are dependent.
    """
    mineig = check_realizable(dm)
    cm, s = _scaled_cm(dm)
    scaled = float(np.linalg.det(cm))
    det = scaled * s ** (2 * (dm.size - 1))
    if dm.size > 1 and s == 0.0:
        dependent = True
    else:
        dependent = abs(scaled) <= tol
    return DependenceVerdict(dependent, det, scaled, s, mineig)


@dataclass(frozen=True, eq=False)
class Trilateration:
    point: np.ndarray
    out_of_span_residual: float
    unique: bool
    system_residual: float
    rank: int

    def to_json(self):
        return {"point": self.point.tolist(),
                "out_of_span_residual": self.out_of_span_residual,
                "unique": self.unique, "system_residual": self.system_residual,
                "rank": self.rank}


def trilaterate(anchors, dists, tol=TRILATERATION_TOL, rank_tol=RANK_TOL):
    """Recover a point from its distances to ``anchors`` (first anchor at 0).

    The polarization identity turns distances into inner products
    ``<y, y_j> = (||y_j||^2 + d_0^2 - d_j^2) / 2``; the minimum-norm least
    squares solution lies in the span of the anchors. Whatever part of
    ``d_0^2`` it cannot account for, ``d_0^2 - ||y_hat||^2``, is the squared
    distance of ``y`` from that span: zero iff the point is pinned down.
    """
    space = anchors.space
    if space.field is not spaces.Field.REAL:
        raise InvalidSpace("trilateration works in real spaces")
    R = spaces.whitener(space)
    A = anchors.points
    d = np.asarray(dists, dtype=float).reshape(-1)
    if d.size != A.shape[0]:
        raise DimensionMismatch(f"{A.shape[0]} anchors but {d.size} distances")
    if not np.all(np.isfinite(d)):
        raise NonFiniteInput("distances must be finite")
    if np.any(d < 0):
        raise InvalidParameters("distances must be nonnegative")
    if np.any(A[0] != 0.0):
        raise InvalidParameters("the first anchor must be the origin")
    Aw = A[1:] @ R.T
    scale = max(1.0, float(d[0] ** 2), float(np.max(np.sum(Aw * Aw, axis=1), initial=0.0)))
    if Aw.shape[0] == 0:
        y_w = np.zeros(space.real_dim)
        sysres, rank = 0.0, 0
    else:
        b = 0.5 * (np.sum(Aw * Aw, axis=1) + d[0] ** 2 - d[1:] ** 2)
        y_w, _, rank, _ = np.linalg.lstsq(Aw, b, rcond=np.sqrt(rank_tol))
        sysres = float(np.max(np.abs(Aw @ y_w - b)))
        if sysres > tol * scale:
            raise InconsistentDistances(
                f"distance equations inconsistent: residual {sysres:.3e}")
    oos = float(d[0] ** 2 - y_w @ y_w)
    if oos < -tol * scale:
        raise InconsistentDistances(
            f"distances imply negative squared distance {oos:.3e} to the anchor span")
    oos = max(oos, 0.0)
    point = np.linalg.solve(R, y_w)
    return Trilateration(point, oos, oos <= tol * scale, sysres, int(rank))
