import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from faceideal.catalog import random_ideal
from faceideal.ideal import (
    GeneratorOrder,
    MonomialIdeal,
    VariableUniverse,
    alexander_dual,
    check_linear_quotients,
    colon_generators_bruteforce,
    colon_monomial,
    ideal_from_names,
    minimize,
    prefix_colon,
    stanley_reisner_complex,
    stanley_reisner_faces_scan,
)

R2 = VariableUniverse.face_ring(2)


def mono(*names, uni=R2):
    return uni.monomial(names)


def test_minimize_examples():
    assert minimize(R2, [mono("x1", "y2"), mono("x1")]).render() == ["x1"]
    gens = [mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")]
    assert minimize(R2, gens).render() == ["x1*y2", "x2*y1", "y1*y2"]
    assert minimize(R2, [mono("x1", "x2")] * 2).render() == ["x1*x2"]


def test_minimize_rejects():
    with pytest.raises(ValueError):
        minimize(R2, [])
    with pytest.raises(ValueError):
        minimize(R2, [0, mono("x1")])
    with pytest.raises(ValueError):
        MonomialIdeal(R2, (mono("x1"), mono("x1", "y1")))


def test_colon_monomial_examples():
    assert colon_monomial(mono("y1", "y2"), mono("x1", "y2")) == mono("y1")
    assert colon_monomial(mono("x1"), mono("x1")) == 0
    assert colon_monomial(mono("x1", "y2"), mono("x2", "y1")) == mono("x1", "y2")


def test_prefix_colon_examples():
    ideal = minimize(R2, [mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")])
    order = GeneratorOrder((mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")))
    assert prefix_colon(ideal, order, 2).render() == ["y1"]
    big = minimize(R2, [mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1"), mono("x1", "x2")])
    order4 = GeneratorOrder((mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1"), mono("x1", "x2")))
    assert prefix_colon(big, order4, 4).render() == ["y1", "y2"]


def test_check_linear_quotients_examples():
    ideal = minimize(R2, [mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")])
    order = GeneratorOrder((mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")))
    cert = check_linear_quotients(ideal, order)
    assert cert.ok
    assert [(s.t, s.colon) for s in cert.steps] == [(2, (mono("y1"),)), (3, (mono("y2"),))]

    u4 = VariableUniverse(("x1", "x2", "x3", "x4"))
    two = ideal_from_names(u4.names, [["x1", "x2"], ["x3", "x4"]])
    for order in (two.generators, two.generators[::-1]):
        cert = check_linear_quotients(two, GeneratorOrder(order))
        assert cert.violation[0] == 2

    single = ideal_from_names(["x1"], [["x1"]])
    assert check_linear_quotients(single, GeneratorOrder(single.generators)).steps == ()


def test_order_must_be_permutation():
    ideal = minimize(R2, [mono("y1", "y2"), mono("x1", "y2")])
    with pytest.raises(ValueError):
        check_linear_quotients(ideal, GeneratorOrder((mono("y1", "y2"),)))


def test_alexander_dual_examples():
    ideal = minimize(R2, [mono("y1", "y2"), mono("x1", "y2"), mono("x2", "y1")])
    assert sorted(alexander_dual(ideal).render()) == sorted(["y1*y2", "x1*y1", "x2*y2"])
    one = ideal_from_names(["x1"], [["x1"]])
    assert alexander_dual(one).render() == ["x1"]
    assert alexander_dual(ideal_from_names(["x1", "x2"], [["x1", "x2"]])).render() == ["x1", "x2"]
    with pytest.raises(ValueError):
        alexander_dual(MonomialIdeal(R2, (0,)))


def test_stanley_reisner_examples():
    names = ["x1", "x2", "x3"]
    sr = stanley_reisner_complex(ideal_from_names(names[:2], [["x1", "x2"]]))
    assert sr.facet_names() == [["x1"], ["x2"]]
    sr = stanley_reisner_complex(ideal_from_names(names, [["x1", "x2"], ["x2", "x3"]]))
    assert sorted(sr.facet_names()) == [["x1", "x3"], ["x2"]]
    sr = stanley_reisner_complex(ideal_from_names(names, [["x1", "x2", "x3"]]))
    assert len(sr.facets) == 3 and sr.dim == 1


def _ideals(max_vars=10):
    return st.builds(
        lambda seed, n: random_ideal(np.random.default_rng(seed), n),
        st.integers(0, 10**6), st.integers(1, max_vars))


@settings(max_examples=150, deadline=None)
@given(_ideals())
def test_dual_involution(ideal):
    assert alexander_dual(alexander_dual(ideal)).generators == ideal.generators


@settings(max_examples=100, deadline=None)
@given(_ideals(8))
def test_dual_generators_are_minimal_transversals(ideal):
    n = ideal.universe.size
    hits = [s for s in range(1 << n) if all(s & g for g in ideal.generators)]
    hs = set(hits)
    minimal = {s for s in hits if not any((s & ~(1 << b)) in hs for b in range(n) if s >> b & 1)}
    assert set(alexander_dual(ideal).generators) == minimal


@settings(max_examples=100, deadline=None)
@given(_ideals(8))
def test_minimize_idempotent_and_order_free(ideal):
    gens = list(ideal.generators)
    assert minimize(ideal.universe, gens[::-1]).generators == ideal.generators
    assert minimize(ideal.universe, gens + gens).generators == ideal.generators


@settings(max_examples=100, deadline=None)
@given(_ideals(8), st.randoms(use_true_random=False))
def test_quotient_certificate_rechecked(ideal, rnd):
    order = list(ideal.generators)
    rnd.shuffle(order)
    cert = check_linear_quotients(ideal, GeneratorOrder(tuple(order)))
    for step in cert.steps:
        assert list(step.colon) == colon_generators_bruteforce(order[: step.t - 1], order[step.t - 1])
    if cert.ok:
        assert all(g.bit_count() == 1 for s in cert.steps for g in s.colon)


@settings(max_examples=60, deadline=None)
@given(_ideals(8))
def test_stanley_reisner_matches_scan(ideal):
    sr = stanley_reisner_complex(ideal)
    assert sorted(sr.face_list) == sorted(stanley_reisner_faces_scan(ideal))


def test_render_and_kinds():
    u = VariableUniverse(("x1", "y1", "x1^(2)", "z"))
    assert u.kinds == (("x", 1), ("y", 1), ("w", 1, 2), ("v", "z"))
    assert u.render(0) == "1"
    with pytest.raises(KeyError):
        u.index("q")
