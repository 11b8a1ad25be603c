"""Simplicial complexes given by their facets.

Faces are integer masks over a :class:`VertexUniverse`. The universe is
declared separately from the faces: a complex on ``{x1, ..., xn}`` need not
contain every vertex.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import _kernels
from ._bits import MAX_BITS, bits, canonical_key, full_mask, submasks
from .hypergraph import minimal_transversals


@dataclass(frozen=True)
class VertexUniverse:
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"vertex labels must be distinct: {self.labels}")
        if len(self.labels) > MAX_BITS:
            raise ValueError(f"at most {MAX_BITS} vertices supported, got {len(self.labels)}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> VertexUniverse:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored as its facets, an antichain in canonical order.

    Use :meth:`from_facets` for arbitrary input; the constructor itself only
    accepts an already canonical facet list.
    """

    universe: VertexUniverse
    facets: tuple[int, ...]

    def __post_init__(self):
        facets = tuple(int(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise ValueError("the void complex (no faces at all) is not allowed; use [[]] for {∅}")
        full = self.universe.full
        for f in facets:
            if f < 0 or f & ~full:
                raise ValueError(f"facet {f:#x} has vertices outside the universe")
        if list(facets) != maximal_masks(facets):
            raise ValueError("facets must be a canonical antichain; use SimplicialComplex.from_facets")

    @classmethod
    def from_facets(cls, universe: VertexUniverse, facets: Iterable[int], *,
                    quiet: bool = False) -> SimplicialComplex:
        """Normalize ``facets`` (drop duplicates and nested sets) and build."""
        facets = [int(f) for f in facets]
        maximal = maximal_masks(facets)
        if not quiet and len(maximal) != len(facets):
            warnings.warn(
                f"dropped {len(facets) - len(maximal)} duplicate or non-maximal facet(s)",
                stacklevel=2,
            )
        return cls(universe, tuple(maximal))

    @classmethod
    def from_labels(cls, universe: VertexUniverse, facets: Iterable[Sequence[str]], *,
                    quiet: bool = False) -> SimplicialComplex:
        return cls.from_facets(universe, [universe.mask(f) for f in facets], quiet=quiet)

    @classmethod
    def simplex(cls, universe: VertexUniverse) -> SimplicialComplex:
        return cls(universe, (universe.full,))

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @cached_property
    def face_list(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for f in self.facets:
            seen.update(submasks(f))
        return tuple(sorted(seen, key=canonical_key))

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(self.face_list)

    def __contains__(self, face: int) -> bool:
        return face in self.face_set

    def is_simplex(self) -> bool:
        return self.facets == (self.universe.full,)

    def facet_names(self) -> list[list[str]]:
        return [self.universe.names(f) for f in self.facets]


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks`` in canonical order."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return sorted(kept, key=canonical_key)


def faces(cx: SimplicialComplex) -> tuple[int, ...]:
    """Every face, ∅ included, in canonical order."""
    return cx.face_list


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{dim}): number of faces of each cardinality."""
    counts = [0] * (cx.dim + 2)
    for f in cx.face_list:
        counts[f.bit_count()] += 1
    return tuple(counts)


def complement_complex(cx: SimplicialComplex) -> frozenset[int]:
    full = cx.universe.full
    return frozenset(full ^ f for f in cx.face_list)


def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    # a set is a nonface iff it meets the complement of every facet
    full = cx.universe.full
    comps = [full ^ f for f in cx.facets]
    if 0 in comps:
        return []
    return minimal_transversals(comps)


def independence_complex(facet_complex: SimplicialComplex) -> SimplicialComplex:
    """Complex of vertex sets containing no facet of ``facet_complex``.

    Its facets are the complements of the minimal transversals of the facets.
    """
    return independence_complex_of_family(facet_complex.universe, facet_complex.facets)


def independence_complex_of_family(universe: VertexUniverse, family: Iterable[int]) -> SimplicialComplex:
    family = list(family)
    if any(f == 0 for f in family):
        raise ValueError("a facet is empty, so no set is independent")
    full = universe.full
    covers = minimal_transversals(family)
    return SimplicialComplex.from_facets(universe, [full ^ c for c in covers], quiet=True)


def skeleton(cx: SimplicialComplex, d: int) -> SimplicialComplex:
    if not 0 <= d <= cx.dim:
        raise ValueError(f"skeleton dimension {d} outside 0..{cx.dim}")
    low = [f for f in cx.face_list if f.bit_count() <= d + 1]
    return SimplicialComplex.from_facets(cx.universe, low, quiet=True)


@dataclass(frozen=True)
class ShellingResult:
    accepted: bool
    violation: tuple[int, int] | None = None  # 1-based (i, j)


def verify_shelling(cx: SimplicialComplex, order: Sequence[int]) -> ShellingResult:
    """Check the shelling condition on a facet order.

    For every i > 1 and j < i there must be k < i with
    F_j ∩ F_i ⊆ F_k ∩ F_i and |F_k ∩ F_i| = |F_i| - 1.
    """
    order = [int(f) for f in order]
    if sorted(order) != sorted(cx.facets) or len(set(order)) != len(order):
        raise ValueError("order is not a permutation of the facets")
    i, j = _kernels.shelling_violation(order)
    if i < 0:
        return ShellingResult(True)
    return ShellingResult(False, (i + 1, j + 1))


def shelling_violation_bruteforce(order: Sequence[int]) -> tuple[int, int] | None:
    """Literal triple loop over (i, j, k); reference for the kernel."""
    for i in range(1, len(order)):
        fi = order[i]
        for j in range(i):
            meet = order[j] & fi
            if not any(meet & ~(order[k] & fi) == 0
                       and (order[k] & fi).bit_count() == fi.bit_count() - 1
                       for k in range(i)):
                return (i + 1, j + 1)
    return None

