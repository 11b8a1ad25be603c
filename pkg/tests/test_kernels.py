"""Both kernel backends against plain-Python references."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from faceideal import _kernels
from faceideal._bits import bits, canonical_sorted, submasks
from faceideal.catalog import _perm_tables, downsets
from faceideal.complex import shelling_violation_bruteforce
from faceideal.face_ideal import collection_violation_bruteforce
from faceideal.homology import _reduced_betti_python
from faceideal.hypergraph import minimal_transversals

from helpers import arr, hypergraphs


def _independent(edges, nbits):
    return [s for s in range(1 << nbits) if not any(e & ~s == 0 for e in edges)]


def _min_transversals(edges, nbits):
    hits = [s for s in range(1 << nbits) if all(s & e for e in edges)]
    hs = set(hits)
    return canonical_sorted(s for s in hits if not any((s ^ (1 << b)) in hs for b in bits(s)))


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_independent_sets(kernels, hg):
    nbits, edges = hg
    got = sorted(int(x) for x in kernels.independent_sets(arr(edges), nbits))
    assert got == _independent(edges, nbits)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_transversal_scan_and_mmcs(kernels, hg):
    nbits, edges = hg
    want = _min_transversals(edges, nbits)
    assert canonical_sorted(int(x) for x in kernels.minimal_transversals_scan(arr(edges), nbits)) == want
    assert minimal_transversals(edges) == want


def test_transversal_edge_cases():
    assert minimal_transversals([]) == [0]
    assert minimal_transversals([0b11, 0]) == []


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 255), min_size=1, max_size=8), st.integers(1, 255))
def test_colon_minimal(kernels, prefix, u):
    got = sorted(int(x) for x in kernels.colon_minimal(arr(prefix), np.int64(u)))
    cols = {g & ~u for g in prefix}
    if 0 in cols:
        assert got == [0]
    else:
        want = sorted(c for c in cols if not any(o != c and o & ~c == 0 for o in cols))
        assert got == want


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 63), min_size=1, max_size=7, unique=True))
def test_shelling_violation(kernels, facets):
    facets = [f for f in facets if not any(g != f and f & ~g == 0 for g in facets)]
    i, j = kernels.shelling_violation(arr(facets))
    ref = shelling_violation_bruteforce(facets)
    assert (None if i < 0 else (int(i) + 1, int(j) + 1)) == ref


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 31), min_size=1, max_size=10, unique=True))
def test_collection_violation(kernels, members):
    members = canonical_sorted(members)
    code, a, b = kernels.collection_violation(arr(members))
    ref = collection_violation_bruteforce(members)
    assert (code == 0) == (ref is None)
    if code:
        # the witness must itself violate the reported condition
        f, g = members[a], members[b]
        if code == 1:
            assert f & g not in members
        else:
            assert g & ~f == 0 and not any(f & ~(1 << i) in members for i in bits(f & ~g))


def test_clique_and_closed_sets(kernels):
    # path 1-2-3: cliques are the empty set, vertices, and the two edges
    adj = arr([0b010, 0b101, 0b010])
    got = sorted(int(x) for x in kernels.clique_sets(adj, 3))
    assert got == sorted([0, 1, 2, 4, 0b011, 0b110])
    # below masks of chain p1<p2<p3: down-closed sets are prefixes
    down = arr([0, 0b001, 0b011])
    assert sorted(int(x) for x in kernels.closed_sets(down, 3)) == [0, 1, 3, 7]


def _closure(facets):
    s = set()
    for f in facets:
        s.update(submasks(f))
    return sorted(s)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 63), min_size=1, max_size=6), st.sampled_from([0, 1]))
def test_reduced_betti(kernels, facets, strategy):
    faces = _closure(facets)
    out, ok = kernels.reduced_betti(arr(faces), strategy)
    assert ok
    assert [int(x) for x in out] == _reduced_betti_python(faces, strategy)


def test_exact_rank_strategies_agree(kernels):
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = rng.integers(-3, 4, size=(6, 7)).astype(np.int64)
        r0 = kernels.exact_rank(a.copy(), 0)
        r1 = kernels.exact_rank(a.copy(), 1)
        assert r0 == r1 == np.linalg.matrix_rank(a.astype(float))


def test_canonical_flags_backends_agree():
    ds = downsets(4)
    tables = _perm_tables(4)
    flags = [_kernels.numpy_backend.canonical_flags(ds, tables)]
    if _kernels.numba_backend is not None:
        flags.append(_kernels.numba_backend.canonical_flags(ds, tables))
    for f in flags:
        assert int(f.sum()) == 30
    assert all((f == flags[0]).all() for f in flags)


def test_scan_limit():
    with pytest.raises(ValueError, match="exceeds limit"):
        _kernels.independent_sets([1], _kernels.SCAN_LIMIT + 1)



def test_disable_flag_selects_numpy():
    code = ("import faceideal as f; from faceideal.face_ideal import verify_duality_theorem as v;"
            "from faceideal.catalog import complexes_up_to_isomorphism as c;"
            "print(f.BACKEND_NAME, all(v(x).equal for x in c(4)))")
    env = dict(os.environ, FACEIDEAL_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]
