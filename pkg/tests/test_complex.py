import warnings

import pytest
from hypothesis import given, settings

from faceideal import _kernels
from faceideal._bits import submasks
from faceideal.complex import (
    SimplicialComplex,
    VertexUniverse,
    complement_complex,
    f_vector,
    faces,
    independence_complex,
    minimal_nonfaces,
    shelling_violation_bruteforce,
    skeleton,
    verify_shelling,
)

from helpers import complexes, cx, m


def test_faces_examples():
    assert set(faces(cx(2, (1, 2)))) == {0, m(1), m(2), m(1, 2)}
    assert faces(cx(2, ())) == (0,)
    assert faces(cx(3, (1, 2), (2, 3))) == (0, m(1), m(2), m(3), m(1, 2), m(2, 3))


def test_f_vector_examples():
    assert f_vector(cx(2, ())) == (1,)
    assert f_vector(cx(3, (1, 2), (2, 3))) == (1, 3, 2)
    assert f_vector(cx(2, (1, 2))) == (1, 2, 1)


def test_complement_complex_examples():
    assert complement_complex(cx(2, ())) == {m(1, 2)}
    assert complement_complex(cx(2, (1,), (2,))) == {m(1, 2), m(2), m(1)}
    assert complement_complex(cx(3, (1, 2))) == {m(1, 2, 3), m(2, 3), m(1, 3), m(3)}


def test_independence_complex_examples():
    assert independence_complex(cx(2, (1, 2))).facets == (m(1), m(2))
    assert set(independence_complex(cx(3, (1, 2), (2, 3))).facets) == {m(1, 3), m(2)}
    assert set(independence_complex(cx(3, (1, 2, 3))).facets) == {m(1, 2), m(1, 3), m(2, 3)}


def test_minimal_nonfaces_examples():
    assert minimal_nonfaces(cx(2, (1,), (2,))) == [m(1, 2)]
    assert minimal_nonfaces(cx(2, ())) == [m(1), m(2)]
    assert minimal_nonfaces(cx(3, (1, 2), (2, 3))) == [m(1, 3)]
    assert minimal_nonfaces(cx(2, (1, 2))) == []


def test_shelling_examples():
    tri = cx(3, (1, 2), (1, 3), (2, 3))
    assert verify_shelling(tri, [m(1, 2), m(1, 3), m(2, 3)]).accepted
    two = cx(4, (1, 2), (3, 4))
    assert verify_shelling(two, [m(1, 2), m(3, 4)]).violation == (2, 1)
    assert verify_shelling(two, [m(3, 4), m(1, 2)]).violation == (2, 1)


def test_shelling_point_after_edge():
    # {1,3} then {2}: the new facet is a point meeting nothing, and its only
    # codimension-one face is ∅, which the previous facet contains, so the
    # condition holds. The reverse order fails: {1,3} meets {2} in ∅ but has
    # no codimension-one face inside a previous facet.
    c = cx(3, (1, 3), (2,))
    assert verify_shelling(c, [m(1, 3), m(2)]).accepted
    assert verify_shelling(c, [m(2), m(1, 3)]).violation == (2, 1)


def test_shelling_rejects_non_permutation():
    c = cx(3, (1, 3), (2,))
    with pytest.raises(ValueError):
        verify_shelling(c, [m(1, 3)])


def test_skeleton_examples():
    assert set(skeleton(cx(3, (1, 2, 3)), 1).facets) == {m(1, 2), m(1, 3), m(2, 3)}
    assert skeleton(cx(2, (1, 2)), 0).facets == (m(1), m(2))
    assert len(skeleton(cx(4, (1, 2, 3, 4)), 2).facets) == 4


def test_void_rejected_and_normalization_warns():
    uni = VertexUniverse.standard(2)
    with pytest.raises(ValueError):
        SimplicialComplex(uni, ())
    with pytest.warns(UserWarning, match="dropped 1"):
        c = SimplicialComplex.from_facets(uni, [m(1, 2), m(1)])
    assert c.facets == (m(1, 2),)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        SimplicialComplex.from_facets(uni, [m(1, 2), m(1)], quiet=True)


def test_unknown_label():
    with pytest.raises(KeyError, match="unknown vertex"):
        SimplicialComplex.from_labels(VertexUniverse(("a", "b")), [["a", "c"]])


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_complex_properties(c):
    fs = set(faces(c))
    assert all(s in fs for f in fs for s in submasks(f))
    assert len(fs) == sum(f_vector(c))
    full = c.universe.full
    assert {full ^ f for f in complement_complex(c)} == fs
    mnf = minimal_nonfaces(c)
    assert not any(g in fs for g in mnf)
    for s in range(1 << c.n):
        assert (s in fs) == (not any(g & ~s == 0 for g in mnf))


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=6))
def test_independence_complex_exhaustive(g):
    if g.facets == (0,):
        with pytest.raises(ValueError, match="facet is empty"):
            independence_complex(g)
        return
    ind = independence_complex(g)
    edges = [f for f in g.facets]
    want = {s for s in range(1 << g.n) if not any(e & ~s == 0 for e in edges)}
    assert set(ind.face_list) == want


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=5))
def test_shelling_kernel_matches_literal_check(c):
    order = list(c.facets)
    r = verify_shelling(c, order)
    ref = shelling_violation_bruteforce(order)
    assert r.violation == ref


def test_kernel_backend_name():
    assert _kernels.BACKEND_NAME in ("numba", "numpy")
