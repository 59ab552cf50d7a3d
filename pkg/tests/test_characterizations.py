import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normgeom import characterizations as ch
from normgeom import spaces
from normgeom.characterizations import ConditionId, eval_condition
from normgeom.errors import (DimensionMismatch, HypothesisViolated,
                             InvalidParameters, ZeroVector)
from normgeom.spaces import Field

L1 = spaces.lp(1, 2)
F, G = np.array([1.0, 0.0]), np.array([-0.5, 0.5])


# -- hand-checked fixtures ------------------------------------------------------------

def test_ip5_l1_fixture():
    # ||(0, 1)||_1 = 1 against ||(3/2, 1/2)||_1 = 2
    assert eval_condition(L1, "IP5", (F, G)) == 1.0
    assert eval_condition(L1, "IP5", (F, G), signed=True) == -1.0


def test_i2_l1_fixture():
    assert eval_condition(L1, "I2", (F, G, -F - G)) == 1.0


def test_i4_l1_fixture():
    vecs = ([1, 0], [0, 1], [0, 0], [1, -1])
    assert eval_condition(L1, "I4", vecs) == 8.0


def test_i5_l1_fixture():
    r = eval_condition(L1, "I5", (F, G), (1 / np.sqrt(2),))
    assert r == pytest.approx(1 - 1 / np.sqrt(2), abs=1e-15)


def test_ip1_sup_fixture():
    assert eval_condition(spaces.sup(2), "IP1", ([1, 0], [0, 1])) == 2.0


def test_ip3_rhombus_l1():
    # e1, e2: 4 + 4 - 4; e1, (e1+e2)/2: ||(3/2, 1/2)||^2 + ||(1/2, -1/2)||^2 - 4 = 4 + 1 - 4
    assert eval_condition(L1, "IP3", ([1, 0], [0, 1])) == pytest.approx(4.0)
    assert eval_condition(L1, "IP3", ([1, 0], [0.5, 0.5])) == pytest.approx(1.0)


def test_i6_constant_is_n():
    E = spaces.euclidean(2)
    vecs = ([1, 0], [0, 1], [-1, -1])
    assert eval_condition(E, "I6", vecs) == 0.0
    p = ConditionId("I6", n=3).params()
    assert p["constant"] == 3 and p["printed_constant"] == 6


def test_bj_gap_l1():
    assert ch.bj_orthogonality_gap(L1, [1, 0], [1, 1]) == pytest.approx(0.0, abs=1e-12)
    assert ch.bj_orthogonality_gap(L1, [1, 1], [1, 0]) == pytest.approx(1.0, abs=1e-9)
    E = spaces.euclidean(2)
    assert ch.bj_orthogonality_gap(E, [1, 0], [0, 1]) == pytest.approx(0.0, abs=1e-12)
    assert ch.bj_orthogonality_gap(E, [1, 0], [1, 0]) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ZeroVector):
        ch.bj_orthogonality_gap(E, [0, 0], [1, 0])


def test_ip4_residual_flags_one_way_orthogonality():
    out = ch.bj_asymmetry(L1, [1, 0], [1, 1])
    assert out["asymmetry"] == pytest.approx(1.0, abs=1e-9)
    assert ch.bj_asymmetry(spaces.euclidean(3), [1, 0, 0], [0, 1, 0])["asymmetry"] == 0.0


# -- premises and parameters ----------------------------------------------------------

def test_hypothesis_checked():
    with pytest.raises(HypothesisViolated):
        eval_condition(L1, "IP5", ([1, 0], [1, 1]))
    with pytest.raises(HypothesisViolated):
        eval_condition(L1, "I2", ([1, 0], [0, 1], [0, 0]))
    with pytest.raises(HypothesisViolated):
        eval_condition(spaces.euclidean(2), "IP6", ([1, 0], [1, 1]))


@pytest.mark.parametrize("kw", [{"tag": "IP5", "gamma": 1.0}, {"tag": "IP6", "gamma": -1.0},
                                {"tag": "IP5", "gamma": 0.0}, {"tag": "I6", "n": 2},
                                {"tag": "IP7"}])
def test_invalid_conditions(kw):
    with pytest.raises(InvalidParameters):
        ConditionId(**kw)


def test_wrong_arity():
    with pytest.raises(DimensionMismatch):
        eval_condition(L1, "IP1", ([1, 0],))
    with pytest.raises(InvalidParameters):
        eval_condition(L1, "I5", (F, G))


def test_default_grids():
    assert ch.DEFAULT_IP2_PAIRS == ((1.0, 2.0), (1.0, 3.0), (2.0, 3.0))
    a = np.array(ch.DEFAULT_I5_ALPHAS)
    assert len(a) == 33 and a[0] == pytest.approx(1 / 8) and a[-1] == pytest.approx(8)
    np.testing.assert_allclose(np.diff(np.log(a)), np.log(64) / 32)


# -- search ---------------------------------------------------------------------------

@pytest.mark.parametrize("tag", ch.TAGS)
def test_euclidean_search_finds_nothing(tag):
    assert ch.search_violation(spaces.euclidean(4), ConditionId(tag), 1000, 0) is None


def test_search_reproduces_ip5_fixture():
    w = ch.search_violation(L1, ConditionId("IP5"), 10_000, 0)
    np.testing.assert_array_equal(w.vectors[0], F)
    np.testing.assert_array_equal(w.vectors[1], G)
    assert w.residual == 1.0


def test_search_ip1_sup_small_budget():
    w = ch.search_violation(spaces.sup(2), ConditionId("IP1"), 4, 0)
    assert w.residual >= 2.0


@pytest.mark.parametrize("space", [spaces.lp(1, 2), spaces.lp(3, 3), spaces.sup(3),
                                   spaces.lp(1.5, 2, Field.COMPLEX)],
                         ids=lambda s: s.describe())
def test_witnesses_are_sound(space):
    rep = ch.classify_space(space, budget=2000, seed=4)
    for r in rep.results:
        if r.witness is None:
            continue
        w = r.witness
        assert w.reevaluate(space) == pytest.approx(w.residual, abs=1e-12)
        assert ch.hypothesis_defect(space, w.condition, w.vectors, w.scalars) <= 1e-10


def test_search_deterministic():
    a = ch.search(spaces.lp(3, 2), ConditionId("IP6"), 500, 9)
    b = ch.search(spaces.lp(3, 2), ConditionId("IP6"), 500, 9)
    assert a.max_residual == b.max_residual
    for u, v in zip(a.best.vectors, b.best.vectors):
        np.testing.assert_array_equal(u, v)


def test_classify_l1():
    rep = ch.classify_space(L1, budget=5000, seed=0)
    assert rep.verdict == "not-inner-product"
    assert len(rep.violated()) >= 10
    assert "IP4" in rep.violated() and rep.result("IP4").informative_only


def test_classify_quadratic_diag():
    rep = ch.classify_space(spaces.quadratic(np.diag([1.0, 2.0, 3.0])), budget=3000)
    assert rep.verdict == "inner-product-like"
    assert max(r.max_residual for r in rep.results) <= 1e-9


def test_classify_complex():
    rep = ch.classify_space(spaces.euclidean(2, Field.COMPLEX), budget=1000)
    assert rep.verdict == "inner-product-like"
    assert {c.name for c in rep.complex_checks} == {"conjugate_symmetry", "i_linearity"}
    bad = ch.classify_space(spaces.lp(1, 2, Field.COMPLEX), budget=1000)
    assert bad.verdict == "not-inner-product"


def test_report_json_has_config():
    js = ch.classify_space(L1, budget=100).to_json()
    assert js["config"]["budget"] == 100 and len(js["conditions"]) == 11
    assert {"condition", "params", "max_residual", "witness",
            "samples_evaluated"} <= set(js["conditions"][0])


# -- scale covariance -----------------------------------------------------------------

_SCALE_CASES = {
    "IP1": (([1.0, 0.2], [0.3, -0.8]), ()),
    "IP2": ((F, G), (1.0, 2.0)),
    "IP3": ((F, G), ()),
    "IP5": ((F, G), ()),
    "I2": ((F, G, -F - G), ()),
    "I4": (([1, 0], [0, 1], [0, 0], [1, -1]), ()),
    "I5": ((F, G), (0.5,)),
    "I6": (([1.0, 0.0], [0.0, 2.0], [-0.5, 0.5], [-0.5, -2.5]), ()),
}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(_SCALE_CASES)), st.floats(0.01, 100))
def test_scale_covariance(tag, c):
    vecs, scal = _SCALE_CASES[tag]
    deg = ConditionId(tag).scaling_degree
    base = eval_condition(L1, tag, vecs, scal)
    scaled = eval_condition(L1, tag, [c * np.asarray(v, float) for v in vecs], scal)
    assert scaled == pytest.approx(c ** deg * base, rel=1e-10, abs=1e-300)
