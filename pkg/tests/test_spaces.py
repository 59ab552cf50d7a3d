import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from normgeom import spaces
from normgeom.errors import DimensionMismatch, InvalidSpace, NonFiniteInput
from normgeom.spaces import Field, NormKind

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


def test_lp_norms_match_numpy():
    rng = np.random.default_rng(1)
    X = rng.standard_normal((50, 4))
    for p in (1, 1.5, 2, 3, 7.25):
        got = spaces.norms(spaces.lp(p, 4), X)
        np.testing.assert_allclose(got, np.linalg.norm(X, ord=p, axis=1), rtol=1e-13)
    np.testing.assert_allclose(spaces.norms(spaces.sup(4), X),
                               np.max(np.abs(X), axis=1), rtol=0)


def test_lp_inf_is_sup():
    s = spaces.lp(np.inf, 3)
    assert s.kind is NormKind.SUP
    assert spaces.norm(s, [1, -5, 2]) == 5.0


def test_weighted_and_quadratic():
    w = spaces.weighted(2, [1.0, 4.0])
    assert spaces.norm(w, [3, 2]) == pytest.approx(5.0)
    ws = spaces.weighted(np.inf, [1.0, 4.0])
    assert spaces.norm(ws, [3, 1]) == 4.0
    Q = np.array([[2.0, 1.0], [1.0, 3.0]])
    q = spaces.quadratic(Q)
    v = np.array([0.3, -1.2])
    assert spaces.norm(q, v) == pytest.approx(np.sqrt(v @ Q @ v), rel=1e-14)


def test_complex_lp_uses_moduli():
    s = spaces.lp(1, 2, Field.COMPLEX)
    z = np.array([3 + 4j, 1j])
    assert spaces.norm(s, z) == pytest.approx(6.0)
    assert spaces.norm(spaces.euclidean(2, Field.COMPLEX), z) == pytest.approx(np.sqrt(26))


def test_sqnorms_exact_on_integers():
    s = spaces.euclidean(3)
    assert spaces.sqnorms(s, np.array([[1.0, 2.0, 2.0]]))[0] == 9.0
    q = spaces.quadratic(np.diag([1.0, 2.0]))
    assert spaces.sqnorms(q, np.array([[1.0, 1.0]]))[0] == pytest.approx(3.0, abs=1e-15)


@pytest.mark.parametrize("bad", [
    lambda: spaces.lp(0.5, 2),
    lambda: spaces.weighted(2, [1.0, -1.0]),
    lambda: spaces.quadratic([[1.0, 2.0], [0.0, 1.0]]),
    lambda: spaces.quadratic([[1.0, 0.0], [0.0, -1.0]]),
    lambda: spaces.lp(2, 0),
])
def test_invalid_spaces(bad):
    with pytest.raises(InvalidSpace):
        bad()


def test_vector_validation():
    s = spaces.euclidean(2)
    with pytest.raises(DimensionMismatch):
        spaces.as_vector(s, [1, 2, 3])
    with pytest.raises(NonFiniteInput):
        spaces.as_vector(s, [1, np.nan])
    with pytest.raises(DimensionMismatch):
        spaces.as_vector(s, [1j, 0])


def test_json_round_trip():
    for s in (spaces.lp(1.5, 3), spaces.sup(2), spaces.weighted(3, [1, 2]),
              spaces.quadratic(np.diag([1.0, 2.0]), Field.COMPLEX)):
        t = spaces.NormedSpace.from_json(s.to_json())
        assert t.to_json() == s.to_json()
    t = spaces.NormedSpace.from_json({"field": "real", "dim": 2,
                                      "norm": {"kind": "p", "p": "inf"}})
    assert t.kind is NormKind.SUP
    with pytest.raises(InvalidSpace):
        spaces.NormedSpace.from_json({"field": "real", "dim": 2, "norm": {"kind": "lq"}})


def test_complex_structure():
    J = spaces.complex_structure(3).J
    np.testing.assert_array_equal(J @ J, -np.eye(6))
    z = np.array([1 + 2j, -1j, 0.5])
    np.testing.assert_allclose(spaces.to_complex(J @ spaces.from_complex(z)), 1j * z)


def test_realify_preserves_norm():
    rng = np.random.default_rng(3)
    for s in (spaces.lp(3, 2, Field.COMPLEX), spaces.sup(2, Field.COMPLEX),
              spaces.quadratic(np.diag([1.0, 5.0]), Field.COMPLEX)):
        real, _ = spaces.realify(s)
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        assert spaces.norm(real, spaces.from_complex(z)) == pytest.approx(spaces.norm(s, z))
    with pytest.raises(InvalidSpace):
        spaces.realify(spaces.euclidean(2))


def test_sampling_is_seeded_and_unit():
    s = spaces.lp(1.5, 3)
    a = np.array(spaces.sample_unit_vectors(s, 100, 7))
    b = np.array(spaces.sample_unit_vectors(s, 100, 7))
    np.testing.assert_array_equal(a, b)
    np.testing.assert_allclose(spaces.norms(s, a), 1.0, rtol=1e-14)
    # deterministic directions lead: +e_i, -e_i, then e_0 + e_1 ...
    np.testing.assert_array_equal(a[0], [1, 0, 0])
    np.testing.assert_array_equal(a[3], [-1, 0, 0])


def test_whitener():
    Q = np.array([[2.0, 0.5], [0.5, 1.0]])
    R = spaces.whitener(spaces.quadratic(Q))
    np.testing.assert_allclose(R.T @ R, Q, atol=1e-15)
    with pytest.raises(InvalidSpace):
        spaces.whitener(spaces.lp(1, 2))


@settings(max_examples=100, deadline=None)
@given(arrays(float, 3, elements=finite), arrays(float, 3, elements=finite),
       st.sampled_from([1.0, 1.5, 2.0, 3.0, np.inf]), st.floats(-50, 50))
def test_norm_axioms(x, y, p, c):
    s = spaces.lp(p, 3)
    nx, ny, nxy = spaces.norms(s, np.stack([x, y, x + y]))
    assert nxy <= nx + ny + 1e-12 * (nx + ny + 1)
    assert spaces.norm(s, c * x) == pytest.approx(abs(c) * nx, rel=1e-12, abs=1e-300)
