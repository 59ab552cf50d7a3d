"""Residual functionals for the classical characterizations of inner-product
norms, a seeded violator search, and a space classifier.

Every condition is evaluated as a nonnegative residual that vanishes for
inner-product norms. Conditions with a premise (equal norms, vectors summing
to zero, ...) check it first and raise :class:`HypothesisViolated` when it
fails by more than ``HYPOTHESIS_TOL`` (relative).

Tags
----
IP1  parallelogram law
IP2  ``||af+bg|| = ||bf+ag||`` when ``||f|| = ||g||``
IP3  parallelogram law for rhombi
IP4  symmetry of Birkhoff-James orthogonality
IP5  ``||f+cg|| = ||g+cf||`` when ``||f|| = ||g||`` (fixed ``c``)
IP6  ``||f+cg|| = ||f-cg||`` when ``||f+g|| = ||f-g||`` (fixed ``c``)
I2   equal medians of an isosceles triangle
I3   the four-vector variant of I2
I4   ``phi(f1, f2; g)`` independent of ``g``
I5   ``||a f + g/a|| >= ||f+g||`` when ``||f|| = ||g||``
I6   ``sum_{i<j} ||f_i-f_j||^2 = C sum ||f_i||^2`` when ``sum f_i = 0``
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from normgeom import _backend, spaces
from normgeom.errors import (DimensionMismatch, HypothesisViolated,
                             InvalidParameters, ZeroVector)
from normgeom.polarization import polarize_complex_rows
from normgeom.spaces import Field

TAGS = ("IP1", "IP2", "IP3", "IP4", "IP5", "IP6", "I2", "I3", "I4", "I5", "I6")

HYPOTHESIS_TOL = 1e-10
VIOLATION_THRESHOLD = 1e-6
# Birkhoff-James: a pair counts as orthogonal when its gap is below this
# fraction of the larger norm.
BJ_ORTH_TOL = 1e-8
BJ_GRID = 65
BJ_SPAN = 8.0
BJ_REFINE_TOL = 1e-10
BISECT_STEPS = 80
# Candidates whose residuals agree to this relative precision are ties; the
# earliest generated candidate wins.
TIE_RTOL = 1e-12

DEFAULT_IP2_PAIRS = ((1.0, 2.0), (1.0, 3.0), (2.0, 3.0))
DEFAULT_I5_ALPHAS = tuple(float(a) for a in np.logspace(-3.0, 3.0, 33, base=2.0))

_NVEC = {"IP1": 2, "IP2": 2, "IP3": 2, "IP4": 2, "IP5": 2, "IP6": 2,
         "I2": 3, "I3": 4, "I4": 4, "I5": 2}
_QUADRATIC = {"IP1", "IP3", "I4", "I6"}


@dataclass(frozen=True)
class ConditionId:
    """A condition tag plus the parameters it uses.

    ``gamma`` is the fixed constant of IP5/IP6, ``pairs`` the ``(a, b)`` grid of
    IP2, ``alphas`` the grid of I5, ``n`` the vector count of I6.
    """

    tag: str
    gamma: float = 2.0
    pairs: tuple = DEFAULT_IP2_PAIRS
    alphas: tuple = DEFAULT_I5_ALPHAS
    n: int = 4

    def __post_init__(self):
        if self.tag not in TAGS:
            raise InvalidParameters(f"unknown condition {self.tag!r}")
        if self.tag in ("IP5", "IP6"):
            g = self.gamma
            if not math.isfinite(g) or g in (0.0, 1.0, -1.0):
                raise InvalidParameters(f"{self.tag} constant must avoid 0 and +-1, got {g}")
        if self.tag == "I6" and (not isinstance(self.n, (int, np.integer)) or self.n < 3):
            raise InvalidParameters(f"I6 needs n >= 3, got {self.n}")
        if self.tag == "I5" and (not self.alphas or any(a == 0 or not math.isfinite(a)
                                                        for a in self.alphas)):
            raise InvalidParameters("I5 alphas must be finite and nonzero")
        if self.tag == "IP2" and not self.pairs:
            raise InvalidParameters("IP2 needs at least one (a, b) pair")

    @property
    def nvec(self):
        return self.n if self.tag == "I6" else _NVEC[self.tag]

    @property
    def scaling_degree(self):
        """Residual homogeneity degree under ``v -> c v``."""
        return 2 if self.tag in _QUADRATIC else 1

    def params(self):
        if self.tag in ("IP5", "IP6"):
            return {"gamma": self.gamma}
        if self.tag == "IP2":
            return {"pairs": [list(p) for p in self.pairs]}
        if self.tag == "I5":
            return {"alphas": list(self.alphas)}
        if self.tag == "I6":
            return {"n": int(self.n), "constant": int(self.n),
                    "printed_constant": 2 * int(self.n)}
        if self.tag == "IP4":
            return {"alpha_grid": BJ_GRID, "alpha_span": BJ_SPAN,
                    "refine_tol": BJ_REFINE_TOL}
        return {}


def default_conditions(gamma_prime=2.0, gamma=2.0, n=4):
    out = []
    for tag in TAGS:
        if tag == "IP5":
            out.append(ConditionId(tag, gamma=gamma_prime))
        elif tag == "IP6":
            out.append(ConditionId(tag, gamma=gamma))
        elif tag == "I6":
            out.append(ConditionId(tag, n=n))
        else:
            out.append(ConditionId(tag))
    return out


@dataclass(frozen=True, eq=False)
class Witness:
    """Vectors (and scalars) exhibiting a failure of ``condition``."""

    condition: ConditionId
    vectors: tuple
    scalars: tuple
    residual: float
    signed: float

    def reevaluate(self, space):
        return eval_condition(space, self.condition, self.vectors, self.scalars)

    def to_json(self):
        return {"condition": self.condition.tag, "params": self.condition.params(),
                "vectors": [np.asarray(v).tolist() for v in self.vectors],
                "scalars": [float(s) for s in self.scalars],
                "residual": float(self.residual), "signed": float(self.signed)}


# -- row-wise evaluation -------------------------------------------------------

def _n(space, X):
    return spaces.norms(space, X)


def _sq(space, X):
    return spaces.sqnorms(space, X)


def _rel_gap(a, b):
    return np.abs(a - b) / np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))


def _bj_gap_rows(space, F, G):
    nf = _n(space, F)
    mins, _ = _backend.bj_min(F, G, *space._kernel, BJ_GRID, BJ_SPAN, BJ_REFINE_TOL)
    gap = np.maximum(0.0, nf - mins)
    ng = _n(space, G)
    return np.where((nf > 0) & (ng > 0), gap, 0.0)


def _bj_argmin_rows(space, F, G):
    return _backend.bj_min(F, G, *space._kernel, BJ_GRID, BJ_SPAN, BJ_REFINE_TOL)


def _rows(space, cond, V, S):
    """Signed defect, residual and hypothesis defect for stacked witnesses.

    ``V`` is a list of ``(m, n)`` arrays, one per witness vector slot; ``S`` is
    an ``(m, k)`` array of witness scalars.
    """
    tag = cond.tag
    m = V[0].shape[0]
    zero = np.zeros(m)
    if tag == "IP1":
        f, g = V
        a, b, c, d = (_sq(space, X) for X in (f + g, f - g, f, g))
        signed = a + b - 2.0 * (c + d)
        return signed, np.abs(signed), zero
    if tag == "IP2":
        f, g = V
        al, be = S[:, 0:1], S[:, 1:2]
        signed = _n(space, al * f + be * g) - _n(space, be * f + al * g)
        return signed, np.abs(signed), _rel_gap(_n(space, f), _n(space, g))
    if tag == "IP3":
        f, g = V
        nf, ng = _n(space, f), _n(space, g)
        signed = _sq(space, f + g) + _sq(space, f - g) - 4.0 * nf * ng
        return signed, np.abs(signed), _rel_gap(nf, ng)
    if tag == "IP4":
        f, g = V
        nf, ng = _n(space, f), _n(space, g)
        g1 = _bj_gap_rows(space, f, g)
        g2 = _bj_gap_rows(space, g, f)
        scale = np.maximum(nf, ng)
        one_way = np.minimum(g1, g2) <= BJ_ORTH_TOL * np.maximum(scale, 1e-300)
        res = np.where(one_way, np.maximum(g1, g2), 0.0)
        return res, res, zero
    if tag == "IP5":
        f, g = V
        c = cond.gamma
        signed = _n(space, f + c * g) - _n(space, g + c * f)
        return signed, np.abs(signed), _rel_gap(_n(space, f), _n(space, g))
    if tag == "IP6":
        f, g = V
        c = cond.gamma
        signed = _n(space, f + c * g) - _n(space, f - c * g)
        return signed, np.abs(signed), _rel_gap(_n(space, f + g), _n(space, f - g))
    if tag == "I2":
        f, g, h = V
        nf, ng, nh = _n(space, f), _n(space, g), _n(space, h)
        signed = _n(space, f - h) - _n(space, g - h)
        sumdef = _n(space, f + g + h) / np.maximum(1.0, nf + ng + nh)
        return signed, np.abs(signed), np.maximum(_rel_gap(nf, ng), sumdef)
    if tag == "I3":
        f, g, h, k = V
        nf, ng, nh, nk = (_n(space, X) for X in V)
        s1 = _n(space, f - h) - _n(space, g - k)
        s2 = _n(space, g - h) - _n(space, f - k)
        signed = np.where(np.abs(s1) >= np.abs(s2), s1, s2)
        sumdef = _n(space, f + g + h + k) / np.maximum(1.0, nf + ng + nh + nk)
        hyp = np.maximum(np.maximum(_rel_gap(nf, ng), _rel_gap(nh, nk)), sumdef)
        return signed, np.abs(signed), hyp
    if tag == "I4":
        f1, f2, ga, gb = V
        signed = _phi_i4(space, f1, f2, ga) - _phi_i4(space, f1, f2, gb)
        return signed, np.abs(signed), zero
    if tag == "I5":
        f, g = V
        al = S[:, 0:1]
        signed = _n(space, f + g) - _n(space, al * f + g / al)
        return signed, np.maximum(0.0, signed), _rel_gap(_n(space, f), _n(space, g))
    if tag == "I6":
        n = len(V)
        sq = [_sq(space, X) for X in V]
        pair = np.zeros(m)
        for i in range(n):
            for j in range(i + 1, n):
                pair += _sq(space, V[i] - V[j])
        signed = pair - n * sum(sq)
        total = sum(V)
        sumdef = _n(space, total) / np.maximum(1.0, sum(np.sqrt(s) for s in sq))
        return signed, np.abs(signed), sumdef
    raise InvalidParameters(tag)  # pragma: no cover


def _phi_i4(space, f1, f2, g):
    s, d = f1 + f2, f1 - f2
    return (_sq(space, s + g) + _sq(space, s - g)
            - _sq(space, d - g) - _sq(space, d + g))


def _nscalars(cond):
    return {"IP2": 2, "I5": 1}.get(cond.tag, 0)


def eval_condition(space, cond, vectors, scalars=(), *, signed=False,
                   check_hypothesis=True):
    """Residual of ``cond`` on one witness.

    ``scalars`` are ``(a, b)`` for IP2 and ``(alpha,)`` for I5; other
    conditions take their constants from ``cond``. With ``signed=True`` the
    signed defect is returned instead of the residual.
    """
    space = spaces.real_view(space)
    if isinstance(cond, str):
        cond = ConditionId(cond)
    vecs = [spaces.as_vector(space, v) for v in vectors]
    if cond.tag == "I6":
        if len(vecs) < 3:
            raise InvalidParameters("I6 needs at least three vectors")
        if len(vecs) != cond.n:
            cond = ConditionId("I6", n=len(vecs))
    elif len(vecs) != cond.nvec:
        raise DimensionMismatch(f"{cond.tag} takes {cond.nvec} vectors, got {len(vecs)}")
    ns = _nscalars(cond)
    scal = tuple(float(s) for s in scalars)
    if len(scal) != ns:
        raise InvalidParameters(f"{cond.tag} takes {ns} scalars, got {len(scal)}")
    if cond.tag == "I5" and scal[0] == 0.0:
        raise InvalidParameters("I5 alpha must be nonzero")
    if not all(math.isfinite(s) for s in scal):
        raise InvalidParameters("witness scalars must be finite")
    S = np.array(scal, dtype=float).reshape(1, ns)
    sgn, res, hyp = _rows(space, cond, [v[None, :] for v in vecs], S)
    if check_hypothesis and hyp[0] > HYPOTHESIS_TOL:
        raise HypothesisViolated(
            f"{cond.tag} premise fails by {hyp[0]:.3e} (relative)")
    return float(sgn[0] if signed else res[0])


def hypothesis_defect(space, cond, vectors, scalars=()):
    space = spaces.real_view(space)
    vecs = [spaces.as_vector(space, v)[None, :] for v in vectors]
    S = np.array(scalars, dtype=float).reshape(1, len(scalars))
    return float(_rows(space, cond, vecs, S)[2][0])


def bj_orthogonality_gap(space, f, g, *, ngrid=BJ_GRID, span=BJ_SPAN, tol=BJ_REFINE_TOL):
    """``max(0, ||f|| - min_a ||f + a g||)``; zero means ``f`` is
    Birkhoff-James orthogonal to ``g``.

    The minimum is taken over a grid of ``ngrid`` points on
    ``[-span, span] * ||f|| / ||g||`` refined by golden-section search.
    """
    space = spaces.real_view(space)
    f = spaces.as_vector(space, f)
    g = spaces.as_vector(space, g)
    if not np.any(f) or not np.any(g):
        raise ZeroVector("Birkhoff-James gap needs nonzero vectors")
    mins, _ = _backend.bj_min(f[None], g[None], *space._kernel, ngrid, span, tol)
    return float(max(0.0, spaces.norms(space, f[None])[0] - mins[0]))


def bj_asymmetry(space, f, g):
    """Both directional gaps and the IP4 residual for the pair ``(f, g)``."""
    gfg = bj_orthogonality_gap(space, f, g)
    ggf = bj_orthogonality_gap(space, g, f)
    return {"gap_fg": gfg, "gap_gf": ggf,
            "asymmetry": eval_condition(space, ConditionId("IP4"), (f, g))}


# -- candidate generation ---------------------------------------------------------

def _unit_pairs(space, count, rng):
    """Ordered pairs of the deterministic direction set, then random pairs."""
    D = spaces.deterministic_unit_vectors(space)
    nd = D.shape[0]
    ndet = min(count, nd * nd)
    ii, jj = np.divmod(np.arange(ndet), nd)
    F = [D[ii]]
    G = [D[jj]]
    nrand = count - ndet
    if nrand:
        F.append(spaces.random_unit_vectors(space, nrand, rng))
        G.append(spaces.random_unit_vectors(space, nrand, rng))
    return np.concatenate(F), np.concatenate(G), ndet


def _radii(rng, m, ndet):
    r = np.ones(m)
    if m > ndet:
        r[ndet:] = rng.uniform(0.25, 4.0, m - ndet)
    return r


def isosceles_project(space, F, G0):
    """Move each ``G0_i`` along ``F_i`` until ``||F+G|| = ||F-G||``.

    ``t -> ||F + G0 + tF|| - ||F - G0 - tF||`` tends to ``+-2||F||`` as
    ``t -> +-inf``, so a bracket exists; it is found by doubling and then
    bisected. Returns ``(G, ok)``.
    """
    m = F.shape[0]
    U, W = F + G0, F - G0
    nf = _n(space, F)

    def h(t):
        return _n(space, U + t[:, None] * F) - _n(space, W - t[:, None] * F)

    T = np.full(m, 4.0)
    ok = nf > 0
    for _ in range(16):
        bad = ok & ~((h(-T) < 0) & (h(T) > 0))
        if not bad.any():
            break
        T = np.where(bad, 2.0 * T, T)
    bracketed = ok & (h(-T) < 0) & (h(T) > 0)
    tol = 1e-13 * np.maximum(1.0, nf + _n(space, G0))
    t, hv, _ = _backend.bisect_diff(U, F, W, -F, -T, T, *space._kernel, BISECT_STEPS, tol)
    G = G0 + t[:, None] * F
    gap = _rel_gap(_n(space, F + G), _n(space, F - G))
    return G, bracketed & (gap <= 0.1 * HYPOTHESIS_TOL)


def _candidates(space, cond, budget, rng):
    """Stacked witness candidates ``(V, S, valid)`` in generation order."""
    tag = cond.tag
    F, G, ndet = _unit_pairs(space, budget, rng)
    m = F.shape[0]
    valid = np.ones(m, dtype=bool)
    empty = np.zeros((m, 0))
    if tag == "IP1":
        return [F, _radii(rng, m, ndet)[:, None] * G], empty, valid
    if tag in ("IP2", "IP3", "IP5", "I5"):
        # homogeneous in (f, g) jointly: unit pairs suffice
        return [F, G], empty, valid
    if tag == "IP4":
        _, alpha = _bj_argmin_rows(space, F, G)
        Fp = F + alpha[:, None] * G
        valid = _n(space, Fp) >= 1e-6
        return [Fp, G], empty, valid
    if tag == "IP6":
        G0 = _radii(rng, m, ndet)[:, None] * G
        Gp, valid = isosceles_project(space, F, G0)
        return [F, Gp], empty, valid
    if tag == "I2":
        return [F, G, -F - G], empty, valid
    if tag == "I3":
        s = -(F + G)
        half = 0.5 * s
        U0 = _radii(rng, m, 0)[:, None] * spaces.random_unit_vectors(space, m, rng)
        degenerate = _n(space, s) <= 1e-12
        Up, ok = isosceles_project(space, np.where(degenerate[:, None], F, half), U0)
        Up = np.where(degenerate[:, None], U0, Up)
        valid = ok | degenerate
        return [F, G, half + Up, half - Up], empty, valid
    if tag == "I4":
        gb = F - G
        if m > ndet:
            gb[ndet:] = (_radii(rng, m - ndet, 0)[:, None]
                         * spaces.random_unit_vectors(space, m - ndet, rng))
        return [F, G, np.zeros_like(F), gb], empty, valid
    if tag == "I6":
        n = cond.n
        V = [F, G] + [np.zeros_like(F) for _ in range(n - 3)]
        if m > ndet:
            for i in range(n - 1):
                V[i] = V[i].copy()
                V[i][ndet:] = (_radii(rng, m - ndet, 0)[:, None]
                               * spaces.random_unit_vectors(space, m - ndet, rng))
        V.append(-sum(V))
        return V, empty, valid
    raise InvalidParameters(tag)  # pragma: no cover


def _grid_rows(space, cond, V, grid):
    """Evaluate a scalar-grid condition; keep the worst grid point per row."""
    best_res = None
    for point in grid:
        S = np.tile(np.atleast_1d(np.asarray(point, dtype=float)), (V[0].shape[0], 1))
        sgn, res, hyp = _rows(space, cond, V, S)
        if best_res is None:
            best_sgn, best_res, best_S = sgn, res, S
        else:
            better = res > best_res
            best_sgn = np.where(better, sgn, best_sgn)
            best_res = np.where(better, res, best_res)
            best_S = np.where(better[:, None], S, best_S)
    return best_sgn, best_res, hyp, best_S


def _pick(res, valid):
    """Index of the largest residual; near-ties go to the earliest candidate."""
    r = np.where(valid, res, -np.inf)
    top = r.max()
    if not np.isfinite(top):
        return None
    near = np.flatnonzero(r >= top - TIE_RTOL * max(1.0, abs(top)))
    return int(near[0])


@dataclass
class SearchOutcome:
    condition: ConditionId
    best: Witness | None
    max_residual: float
    samples_evaluated: int


def _rng_for(seed, cond):
    return np.random.default_rng([int(seed), TAGS.index(cond.tag)])


def search(space, cond, budget, seed):
    """Evaluate ``budget`` seeded candidates and return the worst one."""
    if budget < 1:
        raise InvalidParameters("budget must be >= 1")
    space = spaces.real_view(space)
    if isinstance(cond, str):
        cond = ConditionId(cond)
    rng = _rng_for(seed, cond)
    V, S, valid = _candidates(space, cond, budget, rng)
    if cond.tag == "IP2":
        sgn, res, hyp, S = _grid_rows(space, cond, V, cond.pairs)
    elif cond.tag == "I5":
        sgn, res, hyp, S = _grid_rows(space, cond, V, [(a,) for a in cond.alphas])
    else:
        sgn, res, hyp = _rows(space, cond, V, S)
    valid = valid & (hyp <= 0.5 * HYPOTHESIS_TOL) & np.isfinite(res)
    i = _pick(res, valid)
    evaluated = int(valid.sum())
    if i is None:
        return SearchOutcome(cond, None, 0.0, evaluated)
    vectors = tuple(np.array(X[i]) for X in V)
    scalars = tuple(float(s) for s in S[i])
    resid = eval_condition(space, cond, vectors, scalars)
    sgn_i = eval_condition(space, cond, vectors, scalars, signed=True)
    return SearchOutcome(cond, Witness(cond, vectors, scalars, resid, sgn_i),
                         resid, evaluated)


def search_violation(space, cond, budget, seed, threshold=VIOLATION_THRESHOLD):
    """Worst seeded witness for ``cond`` if its residual exceeds ``threshold``."""
    out = search(space, cond, budget, seed)
    if out.best is not None and out.best.residual > threshold:
        return out.best
    return None


# -- classification -------------------------------------------------------------------

@dataclass
class ConditionResult:
    condition: ConditionId
    max_residual: float
    witness: Witness | None
    samples_evaluated: int
    violated: bool
    informative_only: bool = False

    def to_json(self):
        return {"condition": self.condition.tag, "params": self.condition.params(),
                "max_residual": float(self.max_residual),
                "witness": None if self.witness is None else self.witness.to_json(),
                "samples_evaluated": int(self.samples_evaluated),
                "violated": bool(self.violated),
                "informative_only": bool(self.informative_only)}


@dataclass
class ComplexCheck:
    name: str
    max_residual: float
    witness: tuple | None
    violated: bool

    def to_json(self):
        return {"check": self.name, "max_residual": float(self.max_residual),
                "witness": None if self.witness is None
                else [np.asarray(v).tolist() for v in self.witness],
                "violated": bool(self.violated)}


@dataclass
class ClassificationReport:
    space: spaces.NormedSpace
    verdict: str
    results: list
    complex_checks: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def inner_product_like(self):
        return self.verdict == "inner-product-like"

    def result(self, tag):
        for r in self.results:
            if r.condition.tag == tag:
                return r
        raise KeyError(tag)

    def violated(self):
        return [r.condition.tag for r in self.results if r.violated]

    def to_json(self):
        return {"space": self.space.to_json(), "verdict": self.verdict,
                "conditions": [r.to_json() for r in self.results],
                "complex_checks": [c.to_json() for c in self.complex_checks],
                "config": self.config}


def _complex_checks(space, budget, seed, threshold):
    rng = np.random.default_rng([int(seed), len(TAGS)])
    real = spaces.real_view(space)
    F, G, _ = _unit_pairs(real, budget, rng)
    _, J = spaces.realify(space)
    fg = polarize_complex_rows(space, F, G)
    gf = polarize_complex_rows(space, G, F)
    jfg = polarize_complex_rows(space, F @ J.J.T, G)
    out = []
    for name, res in (("conjugate_symmetry", np.abs(fg - np.conj(gf))),
                      ("i_linearity", np.abs(jfg - 1j * fg))):
        i = _pick(res, np.isfinite(res))
        top = float(res[i])
        out.append(ComplexCheck(name, top, (F[i], G[i]) if top > threshold else None,
                                top > threshold))
    return out


def classify_space(space, budget=10_000, seed=0, threshold=VIOLATION_THRESHOLD,
                   conditions=None):
    """Run the violator search for every condition and give a verdict.

    Complex spaces are searched through their realification with real
    constants; the complex polarization is then checked for conjugate
    symmetry and ``i``-linearity. A single violation anywhere makes the
    verdict ``not-inner-product``.
    """
    conds = default_conditions() if conditions is None else list(conditions)
    real = spaces.real_view(space)
    results = []
    for cond in conds:
        out = search(real, cond, budget, seed)
        violated = out.max_residual > threshold
        results.append(ConditionResult(
            cond, out.max_residual, out.best if violated else None,
            out.samples_evaluated, violated,
            informative_only=(cond.tag == "IP4" and real.dim < 3)))
    checks = []
    if space.field is Field.COMPLEX:
        checks = _complex_checks(space, budget, seed, threshold)
    bad = any(r.violated for r in results) or any(c.violated for c in checks)
    config = {"budget": int(budget), "seed": int(seed),
              "violation_threshold": float(threshold),
              "hypothesis_tol": HYPOTHESIS_TOL}
    return ClassificationReport(space, "not-inner-product" if bad else "inner-product-like",
                                results, checks, config)
