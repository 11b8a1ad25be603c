"""Higher-dimensional whisker complexes W^{d}_{k}(Δ).

Block i consists of x_i and its whisker vertices x_i^(1..k_i); the whiskers
are all (d_i + 1)-subsets of the block. Bits: x_i is bit i-1, the whisker
vertices follow block by block after the n base vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from . import _kernels
from ._bits import canonical_sorted, mask_of
from .complex import (
    ShellingResult,
    SimplicialComplex,
    VertexUniverse,
    independence_complex_of_family,
    verify_shelling,
)
from .hypergraph import minimal_transversals, minimize_masks
from .ideal import (
    GeneratorOrder,
    MonomialIdeal,
    QuotientCertificate,
    VariableUniverse,
    check_linear_quotients,
)
from .limits import require

COVER_LIMIT = 10**6
SCAN_BITS = 22


class CharacterizationError(AssertionError):
    """The block characterization of minimal covers disagreed with brute force."""


@dataclass(frozen=True)
class WhiskerSpec:
    k: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        if len(self.k) != len(self.d):
            raise ValueError("k and d must have the same length")
        for i, (k, d) in enumerate(zip(self.k, self.d), start=1):
            if k < 1 or not 1 <= d <= k:
                raise ValueError(f"block {i}: need k >= 1 and 1 <= d <= k, got k={k}, d={d}")

    @classmethod
    def uniform(cls, n: int, k: int = 1, d: int = 1) -> WhiskerSpec:
        return cls((k,) * n, (d,) * n)


@dataclass(frozen=True)
class HDWhiskerComplex:
    base: SimplicialComplex
    spec: WhiskerSpec
    universe: VertexUniverse
    family: tuple[int, ...]  # base facets and whiskers, as a clutter
    complex: SimplicialComplex = field(compare=False)
    whisker_bits: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def n(self) -> int:
        return self.base.n

    def block(self, i: int) -> int:
        return (1 << i) | mask_of(self.whisker_bits[i])

    @property
    def base_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def cover_degree(self) -> int:
        return sum(k - d for k, d in zip(self.spec.k, self.spec.d)) + self.n


def build_hd_whisker(cx: SimplicialComplex, spec: WhiskerSpec) -> HDWhiskerComplex:
    n = cx.n
    if len(spec.k) != n:
        raise ValueError(f"spec has {len(spec.k)} blocks but the complex has {n} vertices")
    total = n + sum(spec.k)
    require(total, 62, "total vertex count n + sum(k)", hard=True)
    labels = [f"x{i}" for i in range(1, n + 1)]
    wbits = []
    pos = n
    for i, k in enumerate(spec.k, start=1):
        labels += [f"x{i}^({j})" for j in range(1, k + 1)]
        wbits.append(tuple(range(pos, pos + k)))
        pos += k
    fam = [f for f in cx.facets if f]
    for i, d in enumerate(spec.d):
        block = [i, *wbits[i]]
        fam += [mask_of(c) for c in combinations(block, d + 1)]
    uni = VertexUniverse(tuple(labels))
    return HDWhiskerComplex(
        base=cx,
        spec=spec,
        universe=uni,
        family=tuple(minimize_masks(fam)),
        complex=SimplicialComplex.from_facets(uni, fam, quiet=True),
        whisker_bits=tuple(wbits),
    )


def _base_covers(W: HDWhiskerComplex) -> list[int]:
    base_edges = [f for f in W.base.facets if f]
    return [s for s in range(1 << W.n) if all(s & e for e in base_edges)]


def characterized_covers(W: HDWhiskerComplex) -> list[int]:
    """Covers assembled block by block: a vertex cover S of the base, then in
    block i either x_i with k_i - d_i whisker vertices (i in S) or
    k_i - d_i + 1 whisker vertices (i not in S)."""
    out = []
    for s in _base_covers(W):
        choices = []
        for i in range(W.n):
            take = W.spec.k[i] - W.spec.d[i] + (0 if s >> i & 1 else 1)
            choices.append([mask_of(c) for c in combinations(W.whisker_bits[i], take)])
        count = 1
        for c in choices:
            count *= len(c)
        if len(out) + count > COVER_LIMIT:
            raise ValueError(f"more than {COVER_LIMIT} minimal covers")
        for pick in product(*choices):
            m = s
            for p in pick:
                m |= p
            out.append(m)
    return canonical_sorted(out)


def brute_force_covers(W: HDWhiskerComplex) -> list[int]:
    """Minimal transversals of the facet family, by full subset scan when
    small enough, otherwise by the branch-and-bound enumerator."""
    nbits = W.universe.n
    if nbits <= SCAN_BITS:
        return canonical_sorted(_kernels.minimal_transversals_scan(W.family, nbits))
    return minimal_transversals(W.family)


def minimal_covers(W: HDWhiskerComplex, *, cross_check: bool = True) -> list[int]:
    covers = characterized_covers(W)
    if cross_check:
        brute = brute_force_covers(W)
        if covers != brute:
            extra = sorted(set(covers) - set(brute))[:3]
            missing = sorted(set(brute) - set(covers))[:3]
            raise CharacterizationError(
                f"characterization disagrees with brute force: extra {[W.universe.names(m) for m in extra]}, "
                f"missing {[W.universe.names(m) for m in missing]}"
            )
    return covers


def _order_key(W: HDWhiskerComplex, cover: int) -> tuple:
    base = cover & W.base_mask
    base_vec = tuple(base >> i & 1 for i in range(W.n))
    whisker_vec = tuple(cover >> b & 1 for ws in W.whisker_bits for b in ws)
    return (base.bit_count(), base_vec, whisker_vec)


def cover_ideal_order(W: HDWhiskerComplex, covers: Sequence[int] | None = None
                      ) -> tuple[MonomialIdeal, GeneratorOrder]:
    """The cover ideal with its generators ordered largest first: base part
    by degree-lex (x_1 > ... > x_n), ties by lex on the whisker part with
    x_1^(1) > ... > x_1^(k_1) > x_2^(1) > ..."""
    covers = list(covers) if covers is not None else minimal_covers(W)
    ideal = MonomialIdeal(VariableUniverse(W.universe.labels), tuple(canonical_sorted(covers)))
    ordered = sorted(covers, key=lambda c: _order_key(W, c), reverse=True)
    return ideal, GeneratorOrder(tuple(ordered))


@dataclass(frozen=True)
class GeneralizedReport:
    degrees_ok: bool
    certificate: QuotientCertificate
    shelling_order: tuple[int, ...]
    shelling: ShellingResult | None
    bijection_ok: bool

    @property
    def ok(self) -> bool:
        return (self.degrees_ok and self.certificate.ok and self.bijection_ok
                and self.shelling is not None and self.shelling.accepted)

    def as_dict(self, universe: VertexUniverse | None = None) -> dict:
        def names(m):
            return universe.names(m) if universe else m

        return {
            "ok": self.ok,
            "degrees_ok": self.degrees_ok,
            "linear_quotients": self.certificate.ok,
            "quotient_violation": (None if self.certificate.ok else
                                   {"t": self.certificate.violation[0],
                                    "generator": names(self.certificate.violation[1])}),
            "facet_bijection": self.bijection_ok,
            "shelling_accepted": bool(self.shelling and self.shelling.accepted),
            "shelling_violation": self.shelling.violation if self.shelling else None,
            "shelling_order": [names(f) for f in self.shelling_order],
        }


def verify_generalized_theorem(W: HDWhiskerComplex) -> GeneralizedReport:
    """Linear quotients of the cover ideal under the ordering above, then the
    complementary facet order of the independence complex as a shelling."""
    covers = minimal_covers(W)
    ideal, order = cover_ideal_order(W, covers)
    degrees_ok = ideal.degrees() == {W.cover_degree}
    cert = check_linear_quotients(ideal, order)
    full = W.universe.full
    facets = tuple(full ^ c for c in order)
    indep = independence_complex_of_family(W.universe, W.family)
    bijection = sorted(indep.facets) == sorted(facets)
    shelling = verify_shelling(indep, facets) if bijection else None
    return GeneralizedReport(degrees_ok, cert, facets, shelling, bijection)


def independence_facets_scan(W: HDWhiskerComplex) -> list[int]:
    """Maximal independent sets by exhaustive scan (reference for tests)."""
    indep = _kernels.independent_sets(W.family, W.universe.n)
    s = set(indep)
    return canonical_sorted(m for m in indep
                            if not any((m | (1 << b)) in s for b in range(W.universe.n) if not m >> b & 1))


__all__ = [
    "CharacterizationError",
    "GeneralizedReport",
    "HDWhiskerComplex",
    "WhiskerSpec",
    "brute_force_covers",
    "build_hd_whisker",
    "characterized_covers",
    "cover_ideal_order",
    "independence_facets_scan",
    "minimal_covers",
    "verify_generalized_theorem",
]
