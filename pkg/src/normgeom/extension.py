"""Finite isometries between point sets: verification, extension to an
orthogonal map of the whole space, and certificates of non-extendability."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from normgeom import spaces
from normgeom.characterizations import (VIOLATION_THRESHOLD, ConditionId,
                                        search_violation)
from normgeom.errors import (DimensionMismatch, GramMismatch,
                             InvalidParameters, NotAnIsometry,
                             RankDeficiencyUnstable)
from normgeom.geometry import PointConfig, distance_matrix
from normgeom.polarization import RANK_TOL, gram_matrix

ISOMETRY_TOL = 1e-9
GRAM_TOL = 1e-9
PIVOT_TOL = 1e-9
COMPLEMENT_TOL = 1e-9
MAX_PIVOT_COND = 1e12
ORTHO_TOL = 1e-9
POINT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Correspondence:
    """A map ``T`` from ``source`` to ``target``: ``T(y_i) = y'_{pairing[i]}``."""

    source: PointConfig
    target: PointConfig
    pairing: tuple | None = None

    def __post_init__(self):
        m = len(self.source)
        if len(self.target) != m:
            raise DimensionMismatch(
                f"source has {m} points, target has {len(self.target)}")
        if self.source.space.real_dim != self.target.space.real_dim:
            raise DimensionMismatch("source and target live in different dimensions")
        pairing = tuple(range(m)) if self.pairing is None else tuple(int(i) for i in self.pairing)
        if sorted(pairing) != list(range(m)):
            raise InvalidParameters(f"pairing {list(pairing)} is not a bijection of 0..{m - 1}")
        object.__setattr__(self, "pairing", pairing)

    @property
    def space(self):
        return self.source.space

    @property
    def images(self):
        """Target points reordered so that row ``i`` is ``T(y_i)``."""
        return self.target.points[list(self.pairing)]


@dataclass(frozen=True)
class IsometryCheck:
    is_isometry: bool
    max_defect: float
    tolerance: float

    def __bool__(self):
        return self.is_isometry

    def to_json(self):
        return {"is_isometry": self.is_isometry, "max_defect": self.max_defect,
                "tolerance": self.tolerance}


def verify_isometry(corr, tol=ISOMETRY_TOL):
    """Compare all pairwise distances before and after ``T``.

    Passes iff the largest discrepancy is at most ``tol * (1 + max distance)``.
    """
    src = distance_matrix(corr.source).d
    img = distance_matrix(PointConfig(corr.space, corr.images)).d
    defect = float(np.max(np.abs(src - img)))
    bound = tol * (1.0 + float(max(src.max(), img.max())))
    return IsometryCheck(defect <= bound, defect, bound)


@dataclass(frozen=True, eq=False)
class OrthogonalExtension:
    """``x -> A (x + pre_translation) + post_translation`` with ``A = W^-1 Q W``.

    ``Q`` is orthogonal in whitened coordinates ``W x`` (``W`` is the identity
    for the plain Euclidean norm), so ``A`` is an isometry of the space.
    """

    Q: np.ndarray
    pre_translation: np.ndarray
    post_translation: np.ndarray
    whitener: np.ndarray
    pivots: tuple = ()
    max_defect: float = 0.0

    @property
    def matrix(self):
        W = self.whitener
        return np.linalg.solve(W, self.Q @ W)

    def apply(self, X):
        X = np.asarray(X, dtype=float)
        return (X + self.pre_translation) @ self.matrix.T + self.post_translation

    def orthogonality_defect(self):
        k = self.Q.shape[0]
        return float(np.max(np.abs(self.Q.T @ self.Q - np.eye(k))))

    def to_json(self):
        return {"Q": self.Q.tolist(), "matrix": self.matrix.tolist(),
                "pre_translation": self.pre_translation.tolist(),
                "post_translation": self.post_translation.tolist(),
                "pivots": list(self.pivots), "max_defect": self.max_defect,
                "orthogonality_defect": self.orthogonality_defect(),
                "det": float(np.linalg.det(self.Q))}


def _pivot_basis(Y, rtol=PIVOT_TOL):
    """Greedy pivoted Gram-Schmidt on the rows of ``Y``.

    At each step the row with the largest residual norm becomes the next
    pivot; rows whose residual falls to ``rtol`` times the largest row norm
    are dependent on the pivots. Returns pivot indices, the orthonormal basis
    ``U`` (columns) and the triangular factor with ``Y[piv].T = U @ R``.
    """
    m, k = Y.shape
    norms0 = np.linalg.norm(Y, axis=1)
    cut = rtol * float(np.max(norms0, initial=0.0))
    resid = Y.copy()
    alive = norms0 > cut
    piv, basis = [], []
    while alive.any() and len(piv) < k:
        rn = np.linalg.norm(resid, axis=1)
        alive &= rn > cut
        if not alive.any():
            break
        j = int(np.argmax(np.where(alive, rn, -1.0)))
        q = resid[j] / rn[j]
        for b in basis:  # second pass keeps the basis orthonormal to rounding
            q -= (q @ b) * b
        q /= np.linalg.norm(q)
        piv.append(j)
        basis.append(q)
        alive[j] = False
        resid -= np.outer(resid @ q, q)
    U = np.array(basis).T if basis else np.zeros((k, 0))
    R = U.T @ Y[piv].T if piv else np.zeros((0, 0))
    return piv, U, np.triu(R)


def _complement(U, k, tol=COMPLEMENT_TOL):
    """Orthonormal basis of the orthogonal complement of ``span(U)``, built from
    the standard basis vectors in index order."""
    basis = [U[:, i] for i in range(U.shape[1])]
    out = []
    for i in range(k):
        if len(basis) == k:
            break
        v = np.zeros(k)
        v[i] = 1.0
        for _ in range(2):
            for b in basis:
                v -= (v @ b) * b
        nv = np.linalg.norm(v)
        if nv < tol:
            continue
        v /= nv
        basis.append(v)
        out.append(v)
    return np.array(out).T if out else np.zeros((k, 0))


def extend_isometry(corr, check_tol=ISOMETRY_TOL):
    """Extend a finite isometry of an inner-product space to an orthogonal map.

    Both sides are moved so that the first source point and its image sit at
    the origin. A maximal independent subset of the translated source is
    chosen by pivoted Gram-Schmidt; the map sending those pivots to their
    images is completed by pairing deterministic orthonormal bases of the two
    orthogonal complements. Non-pivot points follow automatically because
    their coefficients against the pivots are fixed by inner products, which
    polarization reads off the distances.
    """
    space = corr.space
    if not space.is_euclidean:
        raise InvalidParameters(f"extension needs an inner-product norm, got {space.describe()}")
    chk = verify_isometry(corr, check_tol)
    if not chk:
        raise NotAnIsometry(
            f"pairwise distances differ by up to {chk.max_defect:.6g} "
            f"(tolerance {chk.tolerance:.3g})")
    real = spaces.real_view(space)
    W = spaces.whitener(real)
    Y = corr.source.points
    Yp = corr.images
    y0, t0 = Y[0].copy(), Yp[0].copy()
    X, Xp = Y - y0, Yp - t0

    G = gram_matrix(real, X).entries
    Gp = gram_matrix(real, Xp).entries
    scale = max(1.0, float(np.max(np.abs(G), initial=0.0)))
    mismatch = float(np.max(np.abs(G - Gp), initial=0.0))
    if mismatch > GRAM_TOL * scale:
        raise GramMismatch(f"Gram matrices differ by {mismatch:.3e} (scale {scale:.3g})")

    Z, Zp = X @ W.T, Xp @ W.T
    k = real.real_dim
    piv, U, R = _pivot_basis(Z)
    if piv:
        sv = np.linalg.svd(R, compute_uv=False)
        cond = sv[0] / sv[-1] if sv[-1] > 0 else np.inf
        if cond * cond > MAX_PIVOT_COND:
            raise RankDeficiencyUnstable(
                f"pivot Gram condition number {cond * cond:.3e} exceeds {MAX_PIVOT_COND:.0e}")
        Up = np.linalg.solve(R.T, Zp[piv]).T
    else:
        Up = np.zeros((k, 0))
    C, Cp = _complement(U, k), _complement(Up, k)
    if C.shape[1] != Cp.shape[1]:
        raise RankDeficiencyUnstable("source and target spans have different dimension")
    Q = Up @ U.T + Cp @ C.T

    ext = OrthogonalExtension(Q, -y0, t0, W, tuple(int(p) for p in piv))
    orth = ext.orthogonality_defect()
    if orth > ORTHO_TOL:
        raise RankDeficiencyUnstable(f"assembled map is not orthogonal (defect {orth:.3e})")
    defect = float(np.max(np.linalg.norm((Z @ Q.T - Zp), axis=1), initial=0.0))
    reach = 1.0 + float(np.max(np.linalg.norm(Z, axis=1), initial=0.0))
    if defect > POINT_TOL * reach:
        raise GramMismatch(f"extension misses a point by {defect:.3e}")
    return OrthogonalExtension(Q, -y0, t0, W, ext.pivots, defect)


@dataclass(frozen=True)
class ComplexLinearity:
    commutator: float
    anticommutator: float
    tol: float = 1e-9

    @property
    def complex_linear(self):
        return self.commutator <= self.tol

    @property
    def conjugate_linear(self):
        return self.anticommutator <= self.tol

    def __float__(self):
        return self.commutator

    def to_json(self):
        return {"commutator": self.commutator, "anticommutator": self.anticommutator,
                "complex_linear": self.complex_linear,
                "conjugate_linear": self.conjugate_linear}


def check_complex_linearity(ext, J):
    """``||AJ - JA||_max`` and ``||AJ + JA||_max`` for the linear part ``A``."""
    A = ext.matrix if isinstance(ext, OrthogonalExtension) else np.asarray(ext, dtype=float)
    Jm = J.J if isinstance(J, spaces.ComplexStructure) else np.asarray(J, dtype=float)
    if A.shape != Jm.shape:
        raise DimensionMismatch(f"map is {A.shape}, complex structure is {Jm.shape}")
    return ComplexLinearity(float(np.max(np.abs(A @ Jm - Jm @ A))),
                            float(np.max(np.abs(A @ Jm + Jm @ A))))


CHAIN = (
    "the flip fixes 0 and swaps f and g; ||f|| = ||g|| makes it an isometry of {0, f, g}",
    "an onto isometric extension fixing 0 is linear (Mazur-Ulam)",
    "a linear extension sends f + c g to g + c f, so ||f + c g|| = ||g + c f||",
    "the measured gap |(||f + c g|| - ||g + c f||)| is positive, so no such extension exists",
)


@dataclass(frozen=True, eq=False)
class FlipCertificate:
    space: spaces.NormedSpace
    gamma: float
    f: np.ndarray
    g: np.ndarray
    residual: float
    norm_gap: float
    flip_defect: float

    @property
    def triangle(self):
        return np.stack([np.zeros_like(self.f), self.f, self.g])

    @property
    def pairing(self):
        return (0, 2, 1)

    def to_json(self):
        return {"gamma": self.gamma, "f": self.f.tolist(), "g": self.g.tolist(),
                "triangle": self.triangle.tolist(), "pairing": list(self.pairing),
                "residual": self.residual, "norm_gap": self.norm_gap,
                "flip_defect": self.flip_defect, "chain": list(CHAIN)}


def certify_nonextendable_flip(space, gamma_prime=2.0, budget=10_000, seed=0,
                               threshold=VIOLATION_THRESHOLD):
    """Find an isosceles triangle ``{0, f, g}`` whose flip has no onto extension.

    Returns ``None`` for inner-product norms and whenever the seeded search
    finds no violation above ``threshold``.
    """
    cond = ConditionId("IP5", gamma=float(gamma_prime))
    if space.is_euclidean:
        return None
    w = search_violation(space, cond, budget, seed, threshold)
    if w is None:
        return None
    real = spaces.real_view(space)
    f, g = (np.asarray(v, dtype=float) for v in w.vectors)
    nf, ng = spaces.norms(real, np.stack([f, g]))
    corr = Correspondence(PointConfig(real, np.stack([0 * f, f, g])),
                          PointConfig(real, np.stack([0 * f, f, g])), (0, 2, 1))
    return FlipCertificate(space, float(gamma_prime), f, g, float(w.residual),
                           float(abs(nf - ng)), verify_isometry(corr).max_defect)
