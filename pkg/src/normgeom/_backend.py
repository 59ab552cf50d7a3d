"""Select the kernel implementation at import time.

The compiled ``_kernels`` extension is preferred; ``_pykernels`` is the numpy
fallback. Setting ``NORMGEOM_BACKEND=python`` forces the fallback.
"""

import os

from normgeom import _pykernels

try:
    from normgeom import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_IMPLS = {"python": _pykernels}
if _compiled is not None:
    _IMPLS["cython"] = _compiled

_active = _IMPLS.get(os.environ.get("NORMGEOM_BACKEND", ""),
                     _compiled if _compiled is not None else _pykernels)


def available():
    return sorted(_IMPLS)


def current():
    return "cython" if _active is _compiled else "python"


def set_backend(name):
    """Switch the active kernel implementation; returns the previous name."""
    global _active
    if name not in _IMPLS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available()}")
    prev = current()
    _active = _IMPLS[name]
    return prev


def get(name=None):
    return _active if name is None else _IMPLS[name]


def norms(X, code, p, w, R, block):
    return _active.norms(X, code, p, w, R, block)


def bj_min(F, G, code, p, w, R, block, ngrid, span, tol):
    return _active.bj_min(F, G, code, p, w, R, block, ngrid, span, tol)


def bisect_diff(U, V, W, Z, t0, t1, code, p, w, R, block, maxit, tol):
    return _active.bisect_diff(U, V, W, Z, t0, t1, code, p, w, R, block, maxit, tol)
