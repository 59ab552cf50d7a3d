"""Finite-dimensional real and complex normed spaces.

Complex vectors are stored as interleaved real coordinates
``(Re z_1, Im z_1, Re z_2, Im z_2, ...)``, so a complex space of dimension
``k`` and its realification share storage of length ``2k``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from normgeom import _backend
from normgeom._pykernels import P_NORM, QUAD_NORM, SUP_NORM
from normgeom.errors import DimensionMismatch, InvalidSpace, NonFiniteInput

__all__ = [
    "Field", "NormKind", "NormedSpace", "ComplexStructure", "euclidean", "lp",
    "sup", "weighted", "quadratic", "norm", "norms", "sqnorms", "realify",
    "complex_structure", "as_vector", "as_points", "from_complex",
    "to_complex", "sample_unit_vectors", "deterministic_unit_vectors",
]


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


class NormKind(enum.Enum):
    P = "p"
    WEIGHTED_P = "weighted_p"
    SUP = "sup"
    QUADRATIC = "quadratic"


@dataclass(frozen=True, eq=False)
class NormedSpace:
    """An evaluable norm on ``R^dim`` or ``C^dim``.

    Build instances through :func:`lp`, :func:`sup`, :func:`weighted`,
    :func:`quadratic` or :meth:`from_json`; the constructor validates.

    ``paired`` marks a real space obtained by realifying a complex one: the
    moduli of coordinate pairs enter the norm instead of single coordinates.
    """

    field: Field
    dim: int
    kind: NormKind
    p: float | None = None
    weights: tuple | None = None
    Q: np.ndarray | None = None
    paired: bool = False
    _kernel: tuple = dc_field(default=(), repr=False)

    def __post_init__(self):
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 1:
            raise InvalidSpace(f"dim must be a positive integer, got {self.dim!r}")
        if self.paired and self.field is Field.COMPLEX:
            raise InvalidSpace("paired applies to realified (real) spaces only")
        nblocks = self.dim // 2 if self.paired else self.dim
        if self.paired and self.dim % 2:
            raise InvalidSpace("a realified space has even real dimension")
        kind = self.kind
        if kind in (NormKind.P, NormKind.WEIGHTED_P):
            if self.p is None or not (self.p >= 1.0):
                raise InvalidSpace(f"p must satisfy p >= 1, got {self.p!r}")
        if kind is NormKind.WEIGHTED_P:
            w = np.asarray(self.weights, dtype=float)
            if w.shape != (nblocks,):
                raise InvalidSpace(f"expected {nblocks} weights, got shape {w.shape}")
            if not np.all(np.isfinite(w)) or np.any(w <= 0):
                raise InvalidSpace("weights must be finite and strictly positive")
        if kind is NormKind.QUADRATIC:
            Q = np.asarray(self.Q, dtype=float)
            if Q.shape != (nblocks, nblocks):
                raise InvalidSpace(f"Q must be {nblocks}x{nblocks}, got {Q.shape}")
            if not np.all(np.isfinite(Q)):
                raise InvalidSpace("Q has non-finite entries")
            if np.max(np.abs(Q - Q.T)) > 1e-12 * max(1.0, np.max(np.abs(Q))):
                raise InvalidSpace("Q is not symmetric")
            ev = np.linalg.eigvalsh(Q)
            if ev[0] <= 1e-10 * ev[-1] or ev[-1] <= 0:
                raise InvalidSpace("Q is not positive definite")
            Q = 0.5 * (Q + Q.T)
            Q.setflags(write=False)
            object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "_kernel", self._kernel_params(nblocks))

    def _kernel_params(self, nblocks):
        block = 2 if (self.paired or self.field is Field.COMPLEX) else 1
        dummy = np.zeros((1, 1))
        if self.kind is NormKind.QUADRATIC:
            Qr = np.kron(self.Q, np.eye(block)) if block == 2 else self.Q
            R = np.ascontiguousarray(np.linalg.cholesky(Qr).T)
            return (QUAD_NORM, 0.0, np.ones(1), R, 1)
        if self.kind is NormKind.WEIGHTED_P:
            w = np.asarray(self.weights, dtype=float)
        else:
            w = np.ones(nblocks)
        if self.kind is NormKind.SUP or math.isinf(self.p):
            return (SUP_NORM, 0.0, w, dummy, block)
        return (P_NORM, float(self.p), w, dummy, block)

    @property
    def real_dim(self):
        return 2 * self.dim if self.field is Field.COMPLEX else self.dim

    @property
    def is_euclidean(self):
        """True for norms induced by an inner product by construction."""
        if self.kind is NormKind.QUADRATIC:
            return True
        if self.kind in (NormKind.P, NormKind.WEIGHTED_P) and self.p == 2.0:
            return True
        return False

    def describe(self):
        if self.kind is NormKind.QUADRATIC:
            return f"{self.field.value} quadratic dim={self.dim}"
        if self.kind is NormKind.SUP:
            return f"{self.field.value} sup dim={self.dim}"
        return f"{self.field.value} {self.kind.value} p={self.p} dim={self.dim}"

    # -- JSON -------------------------------------------------------------

    @classmethod
    def from_json(cls, obj):
        """Parse the space-specification JSON object.

        ``{"field": "real"|"complex", "dim": k, "norm": {...}}`` where the norm
        is one of ``{"kind": "p", "p": 1.5}``, ``{"kind": "sup"}``,
        ``{"kind": "weighted_p", "p": 2, "weights": [...]}``,
        ``{"kind": "quadratic", "Q": [[...]]}``. ``p`` may be ``"inf"``.
        """
        if not isinstance(obj, dict):
            raise InvalidSpace("space specification must be a JSON object")
        try:
            fld = Field(str(obj.get("field", "real")).lower())
        except ValueError:
            raise InvalidSpace(f"unknown field {obj.get('field')!r}") from None
        dim = obj.get("dim")
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise InvalidSpace(f"dim must be an integer, got {dim!r}")
        nspec = obj.get("norm")
        if not isinstance(nspec, dict) or "kind" not in nspec:
            raise InvalidSpace("missing norm specification with a 'kind'")
        kind = nspec["kind"]
        if kind == "p":
            p = _parse_p(nspec.get("p"))
            return sup(dim, fld) if math.isinf(p) else lp(p, dim, fld)
        if kind == "sup":
            return sup(dim, fld)
        if kind == "weighted_p":
            w = nspec.get("weights")
            if not isinstance(w, list) or len(w) != dim:
                raise InvalidSpace(f"weighted_p needs a list of {dim} weights")
            return weighted(_parse_p(nspec.get("p")), w, fld)
        if kind == "quadratic":
            Q = nspec.get("Q")
            try:
                Q = np.array(Q, dtype=float)
            except (TypeError, ValueError):
                raise InvalidSpace("Q must be a numeric matrix") from None
            if Q.ndim != 2 or Q.shape[0] != dim:
                raise InvalidSpace(f"Q must be {dim}x{dim}")
            return quadratic(Q, fld)
        raise InvalidSpace(f"unknown norm kind {kind!r}")

    def to_json(self):
        if self.paired:
            raise InvalidSpace("realified spaces are not serialisable; use the complex space")
        out = {"field": self.field.value, "dim": int(self.dim)}
        if self.kind is NormKind.QUADRATIC:
            out["norm"] = {"kind": "quadratic", "Q": self.Q.tolist()}
        elif self.kind is NormKind.SUP:
            out["norm"] = {"kind": "sup"}
        elif self.kind is NormKind.WEIGHTED_P:
            out["norm"] = {"kind": "weighted_p", "p": _dump_p(self.p),
                           "weights": [float(x) for x in self.weights]}
        else:
            out["norm"] = {"kind": "p", "p": _dump_p(self.p)}
        return out


def _parse_p(p):
    if isinstance(p, str) and p.lower() in ("inf", "infinity"):
        return math.inf
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise InvalidSpace(f"p must be a number or 'inf', got {p!r}")
    return float(p)


def _dump_p(p):
    return "inf" if math.isinf(p) else float(p)


def lp(p, dim, field=Field.REAL):
    """``l^p`` norm; ``p = inf`` yields the sup-norm kind."""
    if math.isinf(p):
        return sup(dim, field)
    return NormedSpace(Field(field), int(dim), NormKind.P, p=float(p))


def euclidean(dim, field=Field.REAL):
    return lp(2.0, dim, field)


def sup(dim, field=Field.REAL):
    return NormedSpace(Field(field), int(dim), NormKind.SUP)


def weighted(p, weights, field=Field.REAL):
    """Weighted ``(sum w_i |x_i|^p)^(1/p)``; for ``p = inf``, ``max w_i |x_i|``."""
    try:
        w = tuple(float(x) for x in weights)
    except TypeError:
        raise InvalidSpace("weights must be a list of numbers") from None
    return NormedSpace(Field(field), len(w), NormKind.WEIGHTED_P, p=float(p), weights=w)


def quadratic(Q, field=Field.REAL):
    """Norm ``sqrt(x^T Q x)``; complex spaces use ``sqrt(z^* Q z)`` with real ``Q``."""
    Q = np.array(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
        raise InvalidSpace("Q must be a square matrix")
    return NormedSpace(Field(field), Q.shape[0], NormKind.QUADRATIC, Q=Q)


# -- vectors ------------------------------------------------------------------

def from_complex(z):
    """Interleave a complex vector into ``(Re, Im)`` real coordinates."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(2 * z.size)
    out[0::2] = z.real
    out[1::2] = z.imag
    return out


def to_complex(x):
    x = np.asarray(x, dtype=float)
    return x[0::2] + 1j * x[1::2]


def as_vector(space, v):
    """Validate ``v`` as a vector of ``space`` and return a float64 array.

    Complex-valued input for a complex space is interleaved automatically.
    """
    arr = np.asarray(v)
    if np.iscomplexobj(arr):
        if space.field is not Field.COMPLEX:
            raise DimensionMismatch("complex coordinates given for a real space")
        arr = from_complex(arr)
    if arr.ndim > 1:
        raise DimensionMismatch("expected a one-dimensional vector")
    arr = np.array(arr, dtype=float).reshape(-1)
    if arr.size != space.real_dim:
        raise DimensionMismatch(
            f"vector has {arr.size} real coordinates, space needs {space.real_dim}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("vector has non-finite coordinates")
    return arr


def as_points(space, pts):
    """Validate a stack of points (one per row)."""
    arr = np.asarray(pts)
    if np.iscomplexobj(arr):
        if space.field is not Field.COMPLEX:
            raise DimensionMismatch("complex coordinates given for a real space")
        arr = np.stack([from_complex(row) for row in np.atleast_2d(arr)])
    arr = np.array(arr, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, space.real_dim)
    if arr.ndim != 2 or arr.shape[1] != space.real_dim:
        raise DimensionMismatch(
            f"points must have {space.real_dim} real coordinates, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("points have non-finite coordinates")
    return arr


def norms(space, X):
    """Norms of the rows of ``X`` (no validation; hot path)."""
    return _backend.norms(X, *space._kernel)


def sqnorms(space, X):
    """Squared norms of the rows of ``X``.

    Euclidean-type norms skip the square root so that integer data stays exact.
    """
    code, p, w, R, block = space._kernel
    X = np.asarray(X, dtype=float)
    if code == QUAD_NORM:
        Y = X @ R.T
        return np.einsum("ij,ij->i", Y, Y)
    if code == P_NORM and p == 2.0:
        S = X * X
        if block == 2:
            S = S[:, 0::2] + S[:, 1::2]
        return S @ w
    n = _backend.norms(X, *space._kernel)
    return n * n


def norm(space, v):
    v = as_vector(space, v)
    return float(_backend.norms(v[None, :], *space._kernel)[0])


def whitener(space):
    """Upper-triangular ``R`` with ``||x|| = ||R x||_2`` on real coordinates.

    Only inner-product norms (``p = 2``, weighted or not, and quadratic forms)
    have one; anything else raises :class:`InvalidSpace`.
    """
    if not space.is_euclidean:
        raise InvalidSpace(f"{space.describe()} is not an inner-product norm")
    code, _, w, R, block = space._kernel
    if code == QUAD_NORM:
        return np.array(R)
    return np.diag(np.sqrt(np.repeat(w, block)))


# -- complex structure ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ComplexStructure:
    """Multiplication by ``i`` on interleaved coordinates; ``J @ J = -I``."""

    J: np.ndarray

    @property
    def dim(self):
        return self.J.shape[0]

    def __call__(self, x):
        return self.J @ np.asarray(x, dtype=float)


def complex_structure(dim):
    """``J`` for ``C^dim``: block diagonal ``[[0, -1], [1, 0]]``."""
    J = np.kron(np.eye(dim), np.array([[0.0, -1.0], [1.0, 0.0]]))
    J.setflags(write=False)
    return ComplexStructure(J)


def realify(space):
    """Return the underlying real space (same storage) and its ``J``."""
    if space.field is not Field.COMPLEX:
        raise InvalidSpace("realify expects a complex space")
    real = NormedSpace(Field.REAL, 2 * space.dim, space.kind, p=space.p,
                       weights=space.weights,
                       Q=None if space.Q is None else np.kron(space.Q, np.eye(2)),
                       paired=space.kind is not NormKind.QUADRATIC)
    return real, complex_structure(space.dim)


def real_view(space):
    """``space`` itself if real, otherwise its realification."""
    return realify(space)[0] if space.field is Field.COMPLEX else space


# -- sampling ---------------------------------------------------------------------

def deterministic_unit_vectors(space):
    """The fixed direction set: ``+e_i``, ``-e_i``, then for each ``i < j`` the
    directions ``e_i + e_j, e_i - e_j, -e_i + e_j, -e_i - e_j``; all rescaled to
    unit norm. Coordinates are real (realified for complex spaces)."""
    n = space.real_dim
    eye = np.eye(n)
    rows = [eye, -eye]
    mids = []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                mids.append(si * eye[i] + sj * eye[j])
    if mids:
        rows.append(np.array(mids))
    D = np.concatenate(rows)
    return D / norms(space, D)[:, None]


def random_unit_vectors(space, count, rng):
    G = rng.standard_normal((count, space.real_dim))
    nrm = np.linalg.norm(G, axis=1)
    G = G[nrm > 0] / nrm[nrm > 0, None]
    while G.shape[0] < count:  # all-zero draws; practically never
        extra = rng.standard_normal((count - G.shape[0], space.real_dim))
        G = np.concatenate([G, extra[np.linalg.norm(extra, axis=1) > 0]])
    G = G[:count]
    return G / norms(space, G)[:, None]


def sample_unit_vectors(space, count, seed):
    """``count`` unit vectors: the deterministic direction set first, then
    seeded Gaussian directions rescaled onto the unit sphere of ``space``."""
    if count < 1:
        raise ValueError("count must be >= 1")
    D = deterministic_unit_vectors(space)[:count]
    if D.shape[0] == count:
        return list(D)
    rng = np.random.default_rng(seed)
    R = random_unit_vectors(space, count - D.shape[0], rng)
    return list(np.concatenate([D, R]))
