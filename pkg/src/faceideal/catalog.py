"""Exhaustive and random instance generators used by tests and acceptance runs.

A complex on [n] (n <= 6) is encoded as a down-set of the Boolean lattice:
bit S of a 2^n-bit word is set iff the subset with mask S is a face. The
void complex is the word 0 and {∅} is the word 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from . import _kernels
from ._bits import bits
from .complex import SimplicialComplex, VertexUniverse, maximal_masks
from .ideal import MonomialIdeal, VariableUniverse, minimize
from .poset import Poset

MAX_CATALOG_N = 6


@lru_cache(maxsize=None)
def downsets(n: int) -> np.ndarray:
    """All down-sets of subsets of [n] (including the void one), as uint64."""
    if not 0 <= n <= MAX_CATALOG_N:
        raise ValueError(f"down-set enumeration supports 0 <= n <= {MAX_CATALOG_N}")
    if n == 0:
        return np.array([0, 1], dtype=np.uint64)
    prev = downsets(n - 1)
    shift = np.uint64(1 << (n - 1))
    parts = []
    # a down-set of B_n is a pair L ⊆ A of down-sets of B_{n-1}:
    # A holds the faces without vertex n, L those with it (minus the vertex)
    for a in prev:
        lows = prev[(prev & ~a) == 0]
        parts.append(a | (lows << shift))
    return np.concatenate(parts)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> np.ndarray:
    perms = list(permutations(range(n)))
    nsub = 1 << n
    nbytes = max(1, nsub // 8)
    image = np.zeros((len(perms), nsub), dtype=np.int64)
    for p, perm in enumerate(perms):
        for s in range(nsub):
            t = 0
            for i in bits(s):
                t |= 1 << perm[i]
            image[p, s] = t
    tables = np.zeros((len(perms), nbytes, 256), dtype=np.uint64)
    for b in range(nbytes):
        for v in range(256):
            for t in range(8):
                s = 8 * b + t
                if v >> t & 1 and s < nsub:
                    tables[:, b, v] |= np.uint64(1) << image[:, s].astype(np.uint64)
    return tables


@lru_cache(maxsize=None)
def canonical_downsets(n: int) -> np.ndarray:
    """One down-set per isomorphism class (the orbit minimum), void included."""
    ds = downsets(n)
    if n <= 1:
        return ds
    return ds[_kernels.canonical_flags(ds, _perm_tables(n))]


def downset_facets(word: int, n: int) -> list[int]:
    faces = [s for s in range(1 << n) if word >> s & 1]
    return maximal_masks(faces)


def complexes_up_to_isomorphism(n: int) -> list[SimplicialComplex]:
    """Every nonvoid complex on the vertex set [n] up to relabelling.

    Vertices need not be used by any face, so every complex on fewer
    vertices shows up again with unused vertices.
    """
    uni = VertexUniverse.standard(n)
    out = []
    for w in canonical_downsets(n):
        w = int(w)
        if w:
            out.append(SimplicialComplex(uni, tuple(downset_facets(w, n))))
    return out


def _poset_key(above: tuple[int, ...], perms: np.ndarray) -> int:
    n = len(above)
    m = np.array([[above[i] >> j & 1 for j in range(n)] for i in range(n)], dtype=np.int64)
    if n == 0:
        return 0
    permuted = m[perms[:, :, None], perms[:, None, :]].reshape(len(perms), -1)
    weights = np.int64(1) << np.arange(n * n, dtype=np.int64)
    return int((permuted * weights).sum(axis=1).min())


@lru_cache(maxsize=None)
def _poset_reps(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    seen = {}
    new = n - 1
    for above in _poset_reps(n - 1):
        p = Poset(tuple(f"p{i}" for i in range(1, n)), above)
        # the new element is maximal and sits above a poset ideal of p
        for ideal in _kernels.closed_sets(p.below, n - 1):
            ext = tuple(a | (1 << new) if ideal >> i & 1 else a for i, a in enumerate(above)) + (0,)
            seen.setdefault(_poset_key(ext, perms), ext)
    return tuple(seen[k] for k in sorted(seen))


def posets_up_to_isomorphism(n: int) -> list[Poset]:
    if not 1 <= n <= MAX_CATALOG_N:
        raise ValueError(f"poset enumeration supports 1 <= n <= {MAX_CATALOG_N}")
    labels = tuple(f"p{i}" for i in range(1, n + 1))
    return [Poset(labels, above) for above in _poset_reps(n)]


def random_complex(rng: np.random.Generator, n: int, max_facets: int | None = None) -> SimplicialComplex:
    """A random nonvoid complex on [n] from a handful of random facets."""
    max_facets = max_facets or max(1, 2 * n)
    count = int(rng.integers(1, max_facets + 1))
    density = rng.uniform(0.2, 0.8)
    facets = []
    for _ in range(count):
        m = 0
        for i in range(n):
            if rng.random() < density:
                m |= 1 << i
        facets.append(m)
    return SimplicialComplex.from_facets(VertexUniverse.standard(n), facets, quiet=True)


def random_poset(rng: np.random.Generator, n: int, p: float | None = None) -> Poset:
    """Random order: a random DAG on a shuffled [n], transitively closed."""
    p = rng.uniform(0.1, 0.7) if p is None else p
    order = rng.permutation(n)
    labels = [f"p{i}" for i in range(1, n + 1)]
    rel = [(labels[order[i]], labels[order[j]])
           for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Poset.from_relations(labels, rel)


def random_ideal(rng: np.random.Generator, nvars: int, max_gens: int = 8) -> MonomialIdeal:
    """Random proper squarefree ideal on x1..x{nvars} with nonconstant generators."""
    uni = VariableUniverse(tuple(f"x{i}" for i in range(1, nvars + 1)))
    count = int(rng.integers(1, max_gens + 1))
    gens = []
    for _ in range(count):
        m = 0
        while m == 0:
            m = int(rng.integers(1, 1 << nvars))
        gens.append(m)
    return minimize(uni, gens)


__all__ = [
    "canonical_downsets",
    "complexes_up_to_isomorphism",
    "downset_facets",
    "downsets",
    "posets_up_to_isomorphism",
    "random_complex",
    "random_ideal",
    "random_poset",
]
