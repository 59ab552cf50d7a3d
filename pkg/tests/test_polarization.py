import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from normgeom import polarization as pol
from normgeom import spaces
from normgeom.errors import InvalidSpace
from normgeom.spaces import Field

finite = st.floats(-100, 100, allow_nan=False)


def test_real_polarization_is_dot_product():
    s = spaces.euclidean(3)
    assert pol.polarize_real(s, [1, 2, 3], [4, -5, 6]) == pytest.approx(12.0)
    assert pol.polarize_real(s, [1, 0, 0], [0, 1, 0]) == 0.0


def test_quadratic_polarization_recovers_form():
    Q = np.array([[3.0, 1.0, 0.0], [1.0, 2.0, 0.5], [0.0, 0.5, 1.0]])
    s = spaces.quadratic(Q)
    u, v = np.array([1.0, -2.0, 0.5]), np.array([0.3, 0.1, 4.0])
    assert pol.polarize_real(s, u, v) == pytest.approx(u @ Q @ v, rel=1e-13)


def test_base_point():
    s = spaces.euclidean(2)
    assert pol.polarize_real(s, [2, 1], [1, 2], base=[1, 1]) == pytest.approx(0.0, abs=1e-15)


def test_gram_matrix_excludes_base():
    s = spaces.euclidean(2)
    G = pol.gram_matrix(s, np.array([[1.0, 1.0], [2.0, 1.0], [1.0, 3.0]]))
    np.testing.assert_allclose(G.entries, [[1.0, 0.0], [0.0, 4.0]], atol=1e-15)
    assert G.indices == (1, 2)
    assert G.rank() == 2 and not G.is_singular()


def test_gram_singular_for_dependent_points():
    s = spaces.euclidean(3)
    pts = np.array([[0, 0, 0], [1, 2, 3], [2, 4, 6], [0, 1, 0]], dtype=float)
    G = pol.gram_matrix(s, pts)
    assert G.rank() == 2 and G.is_singular()


def test_gram_from_distances_matches_coordinates():
    rng = np.random.default_rng(0)
    X = rng.standard_normal((6, 4))
    D = np.linalg.norm(X[:, None] - X[None], axis=2)
    G = pol.gram_from_distances(D, 2)
    Y = np.delete(X, 2, axis=0) - X[2]
    np.testing.assert_allclose(G, Y @ Y.T, atol=1e-12)


def test_parallelogram_residual_signs():
    assert pol.parallelogram_residual(spaces.euclidean(2), [1, 0], [0, 1]) == 0.0
    assert pol.parallelogram_residual(spaces.lp(1, 2), [1, 0], [0, 1]) == pytest.approx(4.0)
    assert pol.parallelogram_residual(spaces.sup(2), [1, 0], [0, 1]) == pytest.approx(-2.0)


def test_complex_polarization_matches_hermitian_product():
    rng = np.random.default_rng(11)
    s = spaces.euclidean(3, Field.COMPLEX)
    for _ in range(50):
        f = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        g = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert pol.polarize_complex(s, f, g) == pytest.approx(np.sum(f * np.conj(g)),
                                                              abs=1e-12)
    with pytest.raises(InvalidSpace):
        pol.polarize_complex(spaces.euclidean(2), [1, 0], [0, 1])


@settings(max_examples=100, deadline=None)
@given(arrays(float, 4, elements=finite), arrays(float, 4, elements=finite))
def test_polarization_symmetric_and_matches_dot(u, v):
    s = spaces.euclidean(4)
    a = pol.polarize_real(s, u, v)
    assert a == pol.polarize_real(s, v, u)
    assert a == pytest.approx(u @ v, abs=1e-9 * (1 + u @ u + v @ v))
