from itertools import permutations

import numpy as np

from faceideal.catalog import (
    canonical_downsets,
    complexes_up_to_isomorphism,
    downset_facets,
    downsets,
    posets_up_to_isomorphism,
    random_complex,
    random_ideal,
    random_poset,
)

# number of complexes on n unlabelled points, void included (OEIS A003182)
COMPLEX_COUNTS = [2, 3, 5, 10, 30, 210]
# dedekind numbers (down-sets of B_n, OEIS A000372)
DOWNSET_COUNTS = [2, 3, 6, 20, 168, 7581]
# unlabelled posets (OEIS A000112)
POSET_COUNTS = [1, 2, 5, 16, 63]


def test_downset_counts():
    assert [len(downsets(n)) for n in range(6)] == DOWNSET_COUNTS


def test_downsets_are_down_closed():
    for w in downsets(4):
        w = int(w)
        for s in range(16):
            if w >> s & 1:
                assert all(w >> (s & ~(1 << v)) & 1 for v in range(4))


def test_isomorphism_class_counts():
    assert [len(canonical_downsets(n)) for n in range(6)] == COMPLEX_COUNTS
    assert len(complexes_up_to_isomorphism(4)) == 29


def test_reps_are_orbit_minima():
    reps = [int(w) for w in canonical_downsets(5)]
    assert len(set(reps)) == len(reps)
    for w in reps[::7]:
        for perm in permutations(range(5)):
            image = 0
            for s in range(32):
                if w >> s & 1:
                    image |= 1 << sum(1 << perm[v] for v in range(5) if s >> v & 1)
            assert image >= w


def test_downset_facets():
    # faces ∅, {1}, {2}, {1,2} on n = 2
    assert downset_facets(0b1111, 2) == [0b11]
    assert downset_facets(0b1, 2) == [0]


def test_poset_counts():
    assert [len(posets_up_to_isomorphism(n)) for n in range(1, 6)] == POSET_COUNTS


def test_random_generators_deterministic():
    a = random_complex(np.random.default_rng(5), 6)
    b = random_complex(np.random.default_rng(5), 6)
    assert a == b
    P = random_poset(np.random.default_rng(5), 5)
    assert P == random_poset(np.random.default_rng(5), 5)
    I = random_ideal(np.random.default_rng(5), 7)
    assert not I.is_unit and all(g for g in I.generators)
