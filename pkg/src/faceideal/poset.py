"""Finite posets, their chain and antichain ideals, and the related checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import _kernels
from ._bits import bits, canonical_key
from .complex import SimplicialComplex, VertexUniverse, maximal_masks
from .face_ideal import collection_ideal, face_ideal
from .homology import hochster_betti, linear_resolution_check
from .ideal import MonomialIdeal, VariableUniverse, alexander_dual, minimize
from .limits import require


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class Poset:
    """Elements p_1..p_n with the strict order stored as ``above[i]``, the
    mask of elements strictly greater than p_i (transitively closed)."""

    labels: tuple[str, ...]
    above: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "above", tuple(int(a) for a in self.above))
        n = len(self.labels)
        if n == 0:
            raise PosetError("a poset needs at least one element")
        if len(set(self.labels)) != n or len(self.above) != n:
            raise PosetError("labels must be distinct and match the relation")
        for i, up in enumerate(self.above):
            if up >> i & 1:
                raise PosetError(f"{self.labels[i]} < {self.labels[i]}: relation has a cycle")
            for j in bits(up):
                if self.above[j] & ~up:
                    raise PosetError("relation is not transitively closed")
                if self.above[j] >> i & 1:
                    raise PosetError(f"{self.labels[i]} and {self.labels[j]} are mutually below each other")

    @classmethod
    def from_relations(cls, labels: Sequence[str], relations: Iterable[tuple[str, str]]) -> Poset:
        """Build from pairs (a, b) meaning a < b; covers or full relations."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        above = [0] * n
        for a, b in relations:
            if a not in index or b not in index:
                bad = a if a not in index else b
                raise PosetError(f"unknown element {bad!r} in relation")
            above[index[a]] |= 1 << index[b]
        # transitive closure by repeated propagation (Warshall on bitsets)
        for k in range(n):
            for i in range(n):
                if above[i] >> k & 1:
                    above[i] |= above[k]
        for i in range(n):
            if above[i] >> i & 1:
                raise PosetError(f"relation has a cycle through {labels[i]!r}")
        return cls(labels, tuple(above))

    @classmethod
    def chain(cls, n: int) -> Poset:
        labels = [f"p{i}" for i in range(1, n + 1)]
        return cls.from_relations(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(tuple(f"p{i}" for i in range(1, n + 1)), (0,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def below(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, up in enumerate(self.above):
            for j in bits(up):
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def comparable(self) -> tuple[int, ...]:
        return tuple(a | b for a, b in zip(self.above, self.below))

    def less(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    def universe(self) -> VertexUniverse:
        return VertexUniverse(self.labels)

    def relations(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i in range(self.n) for j in bits(self.above[i])]


@dataclass(frozen=True)
class PosetFamily:
    kind: str  # "chains" | "antichains" | "poset_ideals"
    members: tuple[int, ...]


def _family(kind: str, masks: Iterable[int]) -> PosetFamily:
    return PosetFamily(kind, tuple(sorted(masks, key=canonical_key)))


def chains(P: Poset) -> PosetFamily:
    require(P.n, 20, "poset size")
    return _family("chains", _kernels.clique_sets(P.comparable, P.n))


def antichains(P: Poset) -> PosetFamily:
    require(P.n, 20, "poset size")
    full = (1 << P.n) - 1
    incomparable = [full & ~c & ~(1 << i) for i, c in enumerate(P.comparable)]
    return _family("antichains", _kernels.clique_sets(incomparable, P.n))


def poset_ideals(P: Poset) -> PosetFamily:
    require(P.n, 20, "poset size")
    return _family("poset_ideals", _kernels.closed_sets(P.below, P.n))


def chain_complex(P: Poset) -> SimplicialComplex:
    return SimplicialComplex.from_facets(P.universe(), maximal_masks(chains(P).members), quiet=True)


def antichain_complex(P: Poset) -> SimplicialComplex:
    return SimplicialComplex.from_facets(P.universe(), maximal_masks(antichains(P).members), quiet=True)


def chain_ideal(P: Poset) -> MonomialIdeal:
    require(P.n, 31, "poset size", hard=True)
    return face_ideal(chain_complex(P)).ideal


def antichain_ideal(P: Poset) -> MonomialIdeal:
    require(P.n, 31, "poset size", hard=True)
    return face_ideal(antichain_complex(P)).ideal


def poset_ideal_ideal(P: Poset) -> MonomialIdeal:
    """I(P): generated by u_α over the poset ideals α."""
    return collection_ideal(P.n, poset_ideals(P).members)


def comparability_graph(P: Poset) -> tuple[int, ...]:
    """Edges {i, j} with p_i, p_j comparable, as masks in canonical order."""
    edges = {(1 << i) | (1 << j) for i in range(P.n) for j in bits(P.above[i])}
    return tuple(sorted(edges, key=canonical_key))


def incomparability_graph(P: Poset) -> tuple[int, ...]:
    comp = set(comparability_graph(P))
    edges = [(1 << i) | (1 << j) for i in range(P.n) for j in range(i + 1, P.n)]
    return tuple(sorted((e for e in edges if e not in comp), key=canonical_key))


def whisker_graph_ideal(n: int, edges: Iterable[int]) -> MonomialIdeal:
    """Edge ideal of the whisker graph: edges on y1..yn plus x_i y_i."""
    gens = [e << n for e in edges] + [(1 << i) | (1 << (n + i)) for i in range(n)]
    return minimize(VariableUniverse.face_ring(n), gens)


@dataclass(frozen=True)
class IdealComparison:
    equal: bool
    dual: MonomialIdeal
    expected: MonomialIdeal
    degenerate: bool

    def as_dict(self) -> dict:
        return {"equal": self.equal, "degenerate": self.degenerate,
                "dual": self.dual.render(), "whisker_edge_ideal": self.expected.render()}


@dataclass(frozen=True)
class ChainTheoremReport:
    chain_part: IdealComparison  # dual of I_C vs whisker graph of incomparability graph
    antichain_part: IdealComparison  # dual of I_A vs whisker graph of comparability graph

    @property
    def ok(self) -> bool:
        return self.chain_part.equal and self.antichain_part.equal

    @property
    def degenerate(self) -> bool:
        return self.chain_part.degenerate or self.antichain_part.degenerate

    def as_dict(self) -> dict:
        return {"ok": self.ok, "a": self.chain_part.as_dict(), "b": self.antichain_part.as_dict()}


def verify_chain_theorem(P: Poset) -> ChainTheoremReport:
    """Both dualities; a part whose graph has no edges is flagged degenerate
    (its complex is the full simplex) but still compared."""
    require(P.n, 10, "poset size for the chain theorem")
    inc = incomparability_graph(P)
    comp = comparability_graph(P)
    dual_c = alexander_dual(chain_ideal(P))
    dual_a = alexander_dual(antichain_ideal(P))
    exp_c = whisker_graph_ideal(P.n, inc)
    exp_a = whisker_graph_ideal(P.n, comp)
    return ChainTheoremReport(
        IdealComparison(dual_c.generators == exp_c.generators, dual_c, exp_c, not inc),
        IdealComparison(dual_a.generators == exp_a.generators, dual_a, exp_a, not comp),
    )


def dilworth_number(P: Poset) -> int:
    """Largest antichain size (equal to the least number of covering chains)."""
    return max(m.bit_count() for m in antichains(P).members)


def rank(P: Poset) -> int:
    """Longest chain cardinality minus one."""
    return max(m.bit_count() for m in chains(P).members) - 1


def min_chain_partition(P: Poset) -> int:
    """Least number of chains partitioning P, by exhaustive search."""
    require(P.n, 12, "poset size for chain partition search")
    chain_masks = [m for m in chains(P).members if m]
    full = (1 << P.n) - 1

    def fits(k: int) -> bool:
        def go(remaining: int, left: int) -> bool:
            if remaining == 0:
                return True
            if left == 0:
                return False
            low = remaining & -remaining
            # the chain holding the lowest uncovered element
            for c in chain_masks:
                if c & low and c & ~remaining == 0 and go(remaining & ~c, left - 1):
                    return True
            return False

        return go(full, k)

    k = 1
    while not fits(k):
        k += 1
    return k


@dataclass(frozen=True)
class ProjdimReport:
    rank_plus_one: int
    dilworth: int
    projdim_chain: int
    projdim_antichain: int
    chain_linear: bool
    antichain_linear: bool

    @property
    def ok(self) -> bool:
        return (self.projdim_chain == self.rank_plus_one and self.projdim_antichain == self.dilworth
                and self.chain_linear and self.antichain_linear)

    def as_dict(self) -> dict:
        return {"ok": self.ok, **self.__dict__}


def verify_projdim_corollary(P: Poset) -> ProjdimReport:
    require(P.n, 5, "poset size for the projective dimension oracle")
    ic, ia = chain_ideal(P), antichain_ideal(P)
    tc, ta = hochster_betti(ic), hochster_betti(ia)
    return ProjdimReport(
        rank(P) + 1,
        dilworth_number(P),
        tc.projdim,
        ta.projdim,
        linear_resolution_check(ic, tc).linear,
        linear_resolution_check(ia, ta).linear,
    )

