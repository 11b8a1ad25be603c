import pytest
from hypothesis import given, settings

from faceideal.complex import f_vector
from faceideal.face_ideal import (
    betti_formula,
    collection_order,
    collection_violation_bruteforce,
    face_ideal,
    face_monomial,
    face_order,
    gamma_of,
    verify_duality_theorem,
    verify_face_quotients,
    whisker_complex,
    whisker_facet_ideal,
)
from faceideal.homology import hochster_betti
from faceideal.ideal import VariableUniverse, alexander_dual

from helpers import complexes, cx, m


def render_set(ideal):
    return sorted(ideal.render())


def test_face_monomial():
    R3 = VariableUniverse.face_ring(3)
    assert R3.render(face_monomial(m(1, 3), 3)) == "x1*x3*y2"


def test_face_ideal_examples():
    assert face_ideal(cx(2, ())).ideal.render() == ["y1*y2"]
    assert render_set(face_ideal(cx(2, (1,), (2,))).ideal) == ["x1*y2", "x2*y1", "y1*y2"]
    r = face_ideal(cx(2, (1,), (2,)))
    assert r.face_of[face_monomial(m(1), 2)] == m(1)


def test_whisker_complex_examples():
    w = whisker_complex(cx(2, (1, 2)))
    assert sorted(w.facet_names()) == [["x1", "x2"], ["x1", "y1"], ["x2", "y2"]]
    assert whisker_complex(cx(1, ())).facet_names() == [["x1", "y1"]]
    assert len(whisker_complex(cx(3, (1, 2), (2, 3))).facets) == 5


def test_gamma_examples():
    assert gamma_of(cx(2, (1,), (2,))).facet_names() == [["y1", "y2"]]
    assert gamma_of(cx(3, (1, 2), (2, 3))).facet_names() == [["y1", "y3"]]
    assert gamma_of(cx(2, ())).facet_names() == [["y1"], ["y2"]]
    with pytest.raises(ValueError, match="full simplex"):
        gamma_of(cx(2, (1, 2)))


def test_duality_examples():
    r = verify_duality_theorem(cx(2, (1,), (2,)))
    assert r.equal and render_set(r.dual) == ["x1*y1", "x2*y2", "y1*y2"]
    # J = (y1) is principal, so its dual is (y1); Γ = {y1} absorbs x1*y1
    r = verify_duality_theorem(cx(1, ()))
    assert r.equal and r.dual.render() == ["y1"]
    # Γ has the singleton facets {y1},{y2}; they swallow the whiskers
    r = verify_duality_theorem(cx(2, ()))
    assert r.equal and r.dual.render() == ["y1", "y2"]
    assert whisker_facet_ideal(gamma_of(cx(2, ()))).render() == ["y1", "y2"]


def test_duality_full_simplex_degenerate():
    r = verify_duality_theorem(cx(3, (1, 2, 3)))
    assert r.degenerate and r.equal
    assert r.dual.render() == ["x1*y1", "x2*y2", "x3*y3"]


@settings(max_examples=120, deadline=None)
@given(complexes(max_n=6))
def test_duality_property(c):
    assert verify_duality_theorem(c).equal


def test_betti_formula_examples():
    b = betti_formula(cx(2, (1,), (2,)))
    assert b.total == (3, 2) and b.projdim == 1
    assert b.graded == {(0, 2): 3, (1, 3): 2}
    b = betti_formula(cx(2, ()))
    assert b.total == (1,) and b.projdim == 0
    b = betti_formula(cx(3, (1, 2), (2, 3)))
    assert b.total == (6, 7, 2) and b.projdim == 2


@settings(max_examples=40, deadline=None)
@given(complexes(max_n=4))
def test_betti_formula_against_oracle(c):
    b = betti_formula(c)
    ideal = face_ideal(c).ideal
    assert b.total[0] == len(ideal.generators) == sum(f_vector(c))
    assert ideal.degrees() == {c.n}
    h = hochster_betti(ideal)
    assert h.total == b.total
    assert h.graded == b.graded


def test_face_order_examples():
    R2 = VariableUniverse.face_ring(2)
    order = face_order(cx(2, (1, 2)))
    assert [R2.render(u) for u in order] == ["y1*y2", "x1*y2", "x2*y1", "x1*x2"]
    assert len(face_order(cx(2, ()))) == 1


@settings(max_examples=80, deadline=None)
@given(complexes(max_n=6))
def test_face_quotients_property(c):
    r = verify_face_quotients(c)
    assert r.ok, r


def test_collection_order_examples():
    r = collection_order(2, [0, m(1), m(1, 2)])
    R2 = VariableUniverse.face_ring(2)
    assert r.ok and [R2.render(u) for u in r.order] == ["y1*y2", "x1*y2", "x1*x2"]
    r = collection_order(2, [m(1), m(2)])
    assert r.violation == ("i", m(1), m(2))
    assert collection_violation_bruteforce([m(1), m(2)])[0] == "i"


def test_collection_condition_ii_all_pairs():
    # ∅ ⊂ {1,2} with neither {1} nor {2} present violates (ii)
    r = collection_order(2, [0, m(1, 2)])
    assert r.violation[0] == "ii"
    with pytest.raises(ValueError):
        collection_order(2, [])


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=6))
def test_faces_satisfy_collection_conditions(c):
    assert collection_order(c.n, c.face_list).ok


def test_dual_is_independent_of_pipeline():
    c = cx(3, (1, 2), (2, 3))
    assert alexander_dual(face_ideal(c).ideal).generators == verify_duality_theorem(c).whisker.generators
