import numpy as np
import pytest

from normgeom import spaces
from normgeom.errors import (DependentInputs, InvalidParameters,
                             LocusSearchExhausted, NotIsosceles)
from normgeom.extension import verify_isometry
from normgeom.geometry import distance_matrix
from normgeom.locus import (build_isosceles_config, phi,
                            strict_convexity_search, trace_locus)

L1 = spaces.lp(1, 2)
E2 = spaces.euclidean(2)
FP, GP = np.array([1.0, 0.0]), np.array([-0.5, 0.5])


def test_phi_fixtures():
    for t in (-3.0, 0.0, 0.25, 7.0):
        assert phi(E2, [1, 0], [0, 1], [t, t]) == 0.0
    assert phi(L1, [1, 0], [0, 1], [0, 0]) == 0.0
    for sp in (E2, L1, spaces.sup(2)):
        nd = spaces.norm(sp, FP - GP)
        assert phi(sp, FP, GP, FP) == -nd
        assert phi(sp, FP, GP, GP) == nd


def test_trace_euclidean_diagonal():
    pts = trace_locus(E2, [1, 0], [0, 1], 3, seed=1)
    assert len(pts) == 3
    for p in pts:
        assert abs(p.h[0] - p.h[1]) <= 1e-9
        assert abs(p.phi_value) <= 1e-10


def test_trace_sup_and_l1():
    sup = spaces.sup(2)
    for p in trace_locus(sup, [1, 0], [0, 1], 4, seed=0):
        assert abs(phi(sup, [1, 0], [0, 1], p.h)) <= 1e-10
    assert phi(sup, [1, 0], [0, 1], [2, 2]) == 0.0
    for t in (-2.0, 0.5, 3.0):
        assert phi(L1, [1, 0], [0, 1], [t, t]) == 0.0


def test_locus_points_distinct_and_bracketed():
    pts = trace_locus(L1, FP, GP, 10, seed=3)
    H = np.array([p.h for p in pts])
    for p in pts:
        assert abs(phi(L1, FP, GP, p.h)) <= 1e-10
        assert spaces.norm(L1, p.h) >= 1e-6
        a, b = p.segment
        sa, sb = phi(L1, FP, GP, a), phi(L1, FP, GP, b)
        assert sa * sb < 0
        # h lies on the segment [a, b]
        t = np.dot(p.h - a, b - a) / np.dot(b - a, b - a)
        assert -1e-12 <= t <= 1 + 1e-12
        np.testing.assert_allclose(a + t * (b - a), p.h, atol=1e-12)
    gaps = np.linalg.norm(H[:, None] - H[None], axis=2) + np.eye(len(H))
    assert gaps.min() >= 1e-6


def test_trace_errors():
    with pytest.raises(DependentInputs):
        trace_locus(E2, [1, 0], [2, 0], 2)
    with pytest.raises(LocusSearchExhausted):
        trace_locus(E2, [1, 0], [0, 1], 10_000, max_segments=64)


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_isosceles_l1(n):
    cfg = build_isosceles_config(L1, FP, GP, n, seed=0)
    assert cfg.n == n and cfg.points.shape == (n, 2)
    chk = verify_isometry(cfg.correspondence())
    assert chk.is_isometry and chk.max_defect <= 1e-9
    D = distance_matrix(cfg.correspondence().source).d
    perm = list(cfg.pairing)
    np.testing.assert_allclose(D[np.ix_(perm, perm)], D, atol=1e-9)


def test_isosceles_euclidean_and_negation():
    cfg = build_isosceles_config(E2, [1, 0], [0, 1], 4)
    h = cfg.points[3]
    assert abs(h[0] - h[1]) <= 1e-9 and np.linalg.norm(h) > 1e-6
    neg = build_isosceles_config(L1, [1, 0], [-1, 0], 5)
    assert neg.known_extension == "negation" and neg.n == 5
    assert verify_isometry(neg.correspondence()).is_isometry


def test_isosceles_errors():
    with pytest.raises(NotIsosceles):
        build_isosceles_config(L1, [1, 0], [1, 1], 4)
    with pytest.raises(NotIsosceles):
        build_isosceles_config(L1, [1, 0], [1, 0], 4)
    with pytest.raises(InvalidParameters):
        build_isosceles_config(L1, FP, GP, 2)
    with pytest.raises(DependentInputs):
        trace_locus(E2, [0, 0], [0, 1], 1)


def test_strict_convexity_fixtures():
    w = strict_convexity_search(L1, 10_000, 0)
    np.testing.assert_array_equal(w.a, [1, 0])
    np.testing.assert_array_equal(w.b, [0, 1])
    assert w.defect == 0.0 and w.independence == pytest.approx(1.0)
    w = strict_convexity_search(spaces.sup(2), 10_000, 0)
    np.testing.assert_array_equal(w.a, [1, 1])
    np.testing.assert_array_equal(w.b, [1, -1])
    assert strict_convexity_search(spaces.euclidean(3), 10_000, 0) is None


def test_strict_convexity_deterministic_set_suffices():
    # 4 + 4 directions in dim 2: the 64 ordered pairs already contain the witnesses
    assert strict_convexity_search(L1, 64, 0) is not None
    assert strict_convexity_search(spaces.sup(2), 64, 0) is not None
