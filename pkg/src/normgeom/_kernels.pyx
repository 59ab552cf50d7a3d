# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched kernels: norms, Birkhoff-James line minimisation, and
sign-change bisection. Same signatures and semantics as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, pow, ceil, log, hypot, copysign

cnp.import_array()

DEF P_NORM = 0
DEF SUP_NORM = 1
DEF QUAD_NORM = 2

cdef double INVPHI = (sqrt(5.0) - 1.0) / 2.0


cdef inline bint _signbit(double x) nogil:
    return copysign(1.0, x) < 0.0


cdef inline double _norm(const double* x, Py_ssize_t n, int code, double p,
                         const double* w, const double* R, int block) nogil:
    cdef Py_ssize_t i, j, nb
    cdef double a, m, s, acc
    if code == QUAD_NORM:
        s = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(i, n):
                acc += R[i * n + j] * x[j]
            s += acc * acc
        return sqrt(s)
    nb = n // block
    m = 0.0
    for i in range(nb):
        if block == 2:
            a = hypot(x[2 * i], x[2 * i + 1])
        else:
            a = fabs(x[i])
        if code == SUP_NORM:
            a = a * w[i]
        if a > m:
            m = a
    if code == SUP_NORM or m == 0.0:
        return m
    s = 0.0
    if p == 1.0:
        for i in range(nb):
            if block == 2:
                a = hypot(x[2 * i], x[2 * i + 1])
            else:
                a = fabs(x[i])
            s += w[i] * a
        return s
    if p == 2.0:
        for i in range(nb):
            if block == 2:
                a = hypot(x[2 * i], x[2 * i + 1]) / m
            else:
                a = x[i] / m
            s += w[i] * a * a
        return m * sqrt(s)
    for i in range(nb):
        if block == 2:
            a = hypot(x[2 * i], x[2 * i + 1])
        else:
            a = fabs(x[i])
        s += w[i] * pow(a / m, p)
    return m * pow(s, 1.0 / p)


cdef inline double _norm_comb(const double* u, double t, const double* v,
                              double* buf, Py_ssize_t n, int code, double p,
                              const double* w, const double* R, int block) nogil:
    cdef Py_ssize_t k
    for k in range(n):
        buf[k] = u[k] + t * v[k]
    return _norm(buf, n, code, p, w, R, block)


def _params(w, R):
    w = np.ascontiguousarray(w, dtype=np.float64)
    R = np.ascontiguousarray(R, dtype=np.float64)
    return w, R


def norms(X, int code, double p, w, R, int block):
    cdef double[:, ::1] Xv = np.ascontiguousarray(X, dtype=np.float64)
    w, R = _params(w, R)
    cdef double[::1] wv = w
    cdef double[:, ::1] Rv = R
    cdef Py_ssize_t m = Xv.shape[0], n = Xv.shape[1], i
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    if m == 0:
        return out
    with nogil:
        for i in range(m):
            ov[i] = _norm(&Xv[i, 0], n, code, p, &wv[0], &Rv[0, 0], block)
    return out


def golden_iterations(int ngrid, double span, double tol):
    cdef double width = 2.0 * (2.0 * span / (ngrid - 1))
    if width <= tol:
        return 0
    return int(ceil(log(tol / width) / log(INVPHI)))


def bj_min(F, G, int code, double p, w, R, int block, int ngrid, double span,
           double tol):
    cdef double[:, ::1] Fv = np.ascontiguousarray(F, dtype=np.float64)
    cdef double[:, ::1] Gv = np.ascontiguousarray(G, dtype=np.float64)
    w, R = _params(w, R)
    cdef double[::1] wv = w
    cdef double[:, ::1] Rv = R
    cdef Py_ssize_t m = Fv.shape[0], n = Fv.shape[1], i, k, kbest
    cdef int it, niter = golden_iterations(ngrid, span, tol)
    best_out = np.empty(m, dtype=np.float64)
    arg_out = np.empty(m, dtype=np.float64)
    cdef double[::1] bv = best_out
    cdef double[::1] av = arg_out
    grid_arr = np.linspace(-span, span, ngrid)
    cdef double[::1] grid = grid_arr
    buf_arr = np.empty(max(n, 1), dtype=np.float64)
    cdef double[::1] buf = buf_arr
    cdef double nf, ng, scale, val, best, abest, a, b, c, d, fc, fd
    if m == 0:
        return best_out, arg_out
    with nogil:
        for i in range(m):
            nf = _norm(&Fv[i, 0], n, code, p, &wv[0], &Rv[0, 0], block)
            ng = _norm(&Gv[i, 0], n, code, p, &wv[0], &Rv[0, 0], block)
            scale = nf / ng if ng > 0.0 else 1.0
            if scale <= 0.0:
                scale = 1.0
            best = 0.0
            kbest = 0
            for k in range(ngrid):
                val = _norm_comb(&Fv[i, 0], grid[k] * scale, &Gv[i, 0], &buf[0],
                                 n, code, p, &wv[0], &Rv[0, 0], block)
                if k == 0 or val < best:
                    best = val
                    kbest = k
            abest = grid[kbest]
            a = grid[kbest - 1] if kbest > 0 else grid[0]
            b = grid[kbest + 1] if kbest < ngrid - 1 else grid[ngrid - 1]
            c = b - INVPHI * (b - a)
            d = a + INVPHI * (b - a)
            fc = _norm_comb(&Fv[i, 0], c * scale, &Gv[i, 0], &buf[0], n, code, p,
                            &wv[0], &Rv[0, 0], block)
            fd = _norm_comb(&Fv[i, 0], d * scale, &Gv[i, 0], &buf[0], n, code, p,
                            &wv[0], &Rv[0, 0], block)
            for it in range(niter):
                if fc < fd:
                    b = d
                    d = c
                    fd = fc
                    c = b - INVPHI * (b - a)
                    fc = _norm_comb(&Fv[i, 0], c * scale, &Gv[i, 0], &buf[0], n,
                                    code, p, &wv[0], &Rv[0, 0], block)
                else:
                    a = c
                    c = d
                    fc = fd
                    d = a + INVPHI * (b - a)
                    fd = _norm_comb(&Fv[i, 0], d * scale, &Gv[i, 0], &buf[0], n,
                                    code, p, &wv[0], &Rv[0, 0], block)
            if fc < best:
                best = fc
                abest = c
            if fd < best:
                best = fd
                abest = d
            bv[i] = best
            av[i] = abest * scale
    return best_out, arg_out


def bisect_diff(U, V, W, Z, t0, t1, int code, double p, w, R, int block,
                int maxit, tol):
    cdef double[:, ::1] Uv = np.ascontiguousarray(U, dtype=np.float64)
    cdef double[:, ::1] Vv = np.ascontiguousarray(V, dtype=np.float64)
    cdef double[:, ::1] Wv = np.ascontiguousarray(W, dtype=np.float64)
    cdef double[:, ::1] Zv = np.ascontiguousarray(Z, dtype=np.float64)
    w, R = _params(w, R)
    cdef double[::1] wv = w
    cdef double[:, ::1] Rv = R
    cdef Py_ssize_t m = Uv.shape[0], n = Uv.shape[1], i
    cdef double[::1] lo_v = np.array(t0, dtype=np.float64)
    cdef double[::1] hi_v = np.array(t1, dtype=np.float64)
    cdef double[::1] tol_v = np.array(
        np.broadcast_to(np.asarray(tol, dtype=np.float64), (m,)))
    t_out = np.empty(m, dtype=np.float64)
    h_out = np.empty(m, dtype=np.float64)
    done_out = np.zeros(m, dtype=np.uint8)
    cdef double[::1] tv = t_out
    cdef double[::1] hv = h_out
    cdef unsigned char[::1] dv = done_out
    buf_arr = np.empty(max(n, 1), dtype=np.float64)
    cdef double[::1] buf = buf_arr
    cdef double lo, hi, hlo, t, ht
    cdef int it
    cdef bint done
    if m == 0:
        return t_out, h_out, done_out.view(bool)
    with nogil:
        for i in range(m):
            lo = lo_v[i]
            hi = hi_v[i]
            hlo = (_norm_comb(&Uv[i, 0], lo, &Vv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block)
                   - _norm_comb(&Wv[i, 0], lo, &Zv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block))
            t = 0.5 * (lo + hi)
            ht = (_norm_comb(&Uv[i, 0], t, &Vv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block)
                  - _norm_comb(&Wv[i, 0], t, &Zv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block))
            done = fabs(ht) <= tol_v[i]
            for it in range(maxit - 1):
                if done:
                    break
                if _signbit(ht) == _signbit(hlo):
                    lo = t
                    hlo = ht
                else:
                    hi = t
                t = 0.5 * (lo + hi)
                ht = (_norm_comb(&Uv[i, 0], t, &Vv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block)
                      - _norm_comb(&Wv[i, 0], t, &Zv[i, 0], &buf[0], n, code, p, &wv[0], &Rv[0, 0], block))
                done = fabs(ht) <= tol_v[i]
            tv[i] = t
            hv[i] = ht
            dv[i] = done
    return t_out, h_out, done_out.view(bool)

