"""Shared builders and hypothesis strategies for the tests."""

import numpy as np
from hypothesis import strategies as st

from faceideal.complex import SimplicialComplex, VertexUniverse


def cx(n, *facets):
    """Complex on x1..xn from facets given as 1-based vertex tuples."""
    masks = [sum(1 << (v - 1) for v in f) for f in facets]
    return SimplicialComplex.from_facets(VertexUniverse.standard(n), masks, quiet=True)


def m(*idx):
    """Mask from 1-based indices."""
    return sum(1 << (i - 1) for i in idx)


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=2 * n))
    return SimplicialComplex.from_facets(VertexUniverse.standard(n), facets, quiet=True)


@st.composite
def hypergraphs(draw, max_bits=10):
    nbits = draw(st.integers(1, max_bits))
    edges = draw(st.lists(st.integers(1, (1 << nbits) - 1), min_size=1, max_size=8))
    return nbits, edges


def arr(values):
    return np.asarray(list(values), dtype=np.int64)
