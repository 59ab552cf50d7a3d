"""Pure numpy implementation of the batched hot loops.

Mirrors ``_kernels.pyx`` signature for signature; selected automatically when
the compiled extension is unavailable.

Norm parameters are passed as ``(code, p, w, R, block)``:

code
    0 weighted p-norm ``(sum w_i |x_i|^p)^(1/p)`` with finite ``p``;
    1 weighted sup-norm ``max w_i |x_i|``;
    2 quadratic form ``||R x||_2`` (``R`` upper Cholesky factor).
block
    1 for real coordinates, 2 when consecutive coordinate pairs are the real
    and imaginary parts of one complex coordinate (moduli are taken first).
"""

import math

import numpy as np

P_NORM = 0
SUP_NORM = 1
QUAD_NORM = 2

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def norms(X, code, p, w, R, block):
    X = np.ascontiguousarray(X, dtype=np.float64)
    if code == QUAD_NORM:
        return np.linalg.norm(X @ R.T, axis=1)
    if block == 2:
        A = np.hypot(X[:, 0::2], X[:, 1::2])
    else:
        A = np.abs(X)
    if code == SUP_NORM:
        return (A * w).max(axis=1)
    if p == 1.0:
        return A @ w
    m = A.max(axis=1)
    safe = np.where(m > 0.0, m, 1.0)
    S = ((A / safe[:, None]) ** p) @ w
    return np.where(m > 0.0, safe * S ** (1.0 / p), 0.0)


def golden_iterations(ngrid, span, tol):
    width = 2.0 * (2.0 * span / (ngrid - 1))
    if width <= tol:
        return 0
    return int(math.ceil(math.log(tol / width) / math.log(INVPHI)))


def bj_min(F, G, code, p, w, R, block, ngrid, span, tol):
    """Minimise ``alpha -> ||F_i + alpha G_i||`` row by row.

    Grid of ``ngrid`` points on ``[-span, span] * ||F_i|| / ||G_i||`` followed by
    golden-section refinement of the bracketing grid cell down to a width of
    ``tol`` (in the same relative units). Returns ``(minval, argmin)``.
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    G = np.ascontiguousarray(G, dtype=np.float64)
    m = F.shape[0]
    nf = norms(F, code, p, w, R, block)
    ng = norms(G, code, p, w, R, block)
    scale = np.where(ng > 0.0, nf / np.where(ng > 0.0, ng, 1.0), 1.0)
    scale = np.where(scale > 0.0, scale, 1.0)
    grid = np.linspace(-span, span, ngrid)
    vals = np.empty((ngrid, m))
    for k in range(ngrid):
        vals[k] = norms(F + (grid[k] * scale)[:, None] * G, code, p, w, R, block)
    kbest = np.argmin(vals, axis=0)
    best = vals[kbest, np.arange(m)]
    abest = grid[kbest]
    a = grid[np.maximum(kbest - 1, 0)]
    b = grid[np.minimum(kbest + 1, ngrid - 1)]

    def f(alpha):
        return norms(F + (alpha * scale)[:, None] * G, code, p, w, R, block)

    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc = f(c)
    fd = f(d)
    for _ in range(golden_iterations(ngrid, span, tol)):
        left = fc < fd
        a = np.where(left, a, c)
        b = np.where(left, d, b)
        newc = np.where(left, b - INVPHI * (b - a), d)
        newd = np.where(left, c, a + INVPHI * (b - a))
        newpt = np.where(left, newc, newd)
        fnew = f(newpt)
        fc, fd = np.where(left, fnew, fd), np.where(left, fc, fnew)
        c, d = newc, newd
    for cand, fcand in ((c, fc), (d, fd)):
        better = fcand < best
        best = np.where(better, fcand, best)
        abest = np.where(better, cand, abest)
    return best, abest * scale


def bisect_diff(U, V, W, Z, t0, t1, code, p, w, R, block, maxit, tol):
    """Root of ``h(t) = ||U_i + t V_i|| - ||W_i + t Z_i||`` on ``[t0_i, t1_i]``.

    Requires a sign change on each bracket. Stops a row once ``|h| <= tol_i``.
    Returns ``(t, h(t), converged)``.
    """
    U = np.ascontiguousarray(U, dtype=np.float64)
    V = np.ascontiguousarray(V, dtype=np.float64)
    W = np.ascontiguousarray(W, dtype=np.float64)
    Z = np.ascontiguousarray(Z, dtype=np.float64)
    lo = np.array(t0, dtype=np.float64)
    hi = np.array(t1, dtype=np.float64)
    tol = np.broadcast_to(np.asarray(tol, dtype=np.float64), lo.shape)

    def h(t):
        return (norms(U + t[:, None] * V, code, p, w, R, block)
                - norms(W + t[:, None] * Z, code, p, w, R, block))

    hlo = h(lo)
    t = 0.5 * (lo + hi)
    ht = h(t)
    done = np.abs(ht) <= tol
    for _ in range(maxit - 1):
        if done.all():
            break
        same = np.signbit(ht) == np.signbit(hlo)
        lo = np.where(done | ~same, lo, t)
        hlo = np.where(done | ~same, hlo, ht)
        hi = np.where(done | same, hi, t)
        tn = np.where(done, t, 0.5 * (lo + hi))
        hn = h(tn)
        t = tn
        ht = np.where(done, ht, hn)
        done = done | (np.abs(ht) <= tol)
    return t, ht, done
