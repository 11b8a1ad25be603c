"""Face ideals, whisker complexes and the constructions built on them.

For a complex Δ on n vertices the face ideal lives in the ring with
variables x1..xn, y1..yn (bits 0..n-1 and n..2n-1). Vertex i of Δ maps to
x_{i+1} regardless of its label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from . import _kernels
from ._bits import bits, canonical_key
from .complex import (
    SimplicialComplex,
    VertexUniverse,
    f_vector,
    maximal_masks,
    minimal_nonfaces,
)
from .ideal import (
    GeneratorOrder,
    MonomialIdeal,
    QuotientCertificate,
    VariableUniverse,
    alexander_dual,
    check_linear_quotients,
    minimize,
)
from .limits import require


def face_monomial(face: int, n: int) -> int:
    """u_F = x_F * y_{[n] \\ F} as a mask over x1..xn, y1..yn."""
    full = (1 << n) - 1
    return face | ((full ^ face) << n)


def monomial_face(mono: int, n: int) -> int:
    return mono & ((1 << n) - 1)


@dataclass(frozen=True)
class FaceIdealResult:
    ideal: MonomialIdeal
    face_of: dict[int, int] = field(compare=False)

    @property
    def n(self) -> int:
        return self.ideal.universe.size // 2


def collection_ideal(n: int, collection: Iterable[int]) -> MonomialIdeal:
    """I_S generated by u_F for F in ``collection`` (subsets of [n])."""
    require(n, 31, "number of vertices", hard=True)
    gens = [face_monomial(f, n) for f in set(collection)]
    return MonomialIdeal(VariableUniverse.face_ring(n), tuple(sorted(gens, key=canonical_key)))


def face_ideal(cx: SimplicialComplex) -> FaceIdealResult:
    n = cx.n
    ideal = collection_ideal(n, cx.face_list)
    return FaceIdealResult(ideal, {face_monomial(f, n): f for f in cx.face_list})


def _side_shift(side: str, n: int) -> int:
    if side not in ("x", "y"):
        raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    return 0 if side == "x" else n


def whisker_family(cx: SimplicialComplex, side: str = "x") -> list[int]:
    """Nonempty facets of ``cx`` placed on one side, plus the whiskers {x_i, y_i}.

    This is the generating family of W(Δ); a singleton facet stays in the
    family even though the whisker through it swallows it as a face.
    """
    n = cx.n
    shift = _side_shift(side, n)
    fam = [f << shift for f in cx.facets if f]
    fam += [(1 << i) | (1 << (n + i)) for i in range(n)]
    return fam


def whisker_complex(cx: SimplicialComplex, side: str = "x") -> SimplicialComplex:
    """W(Δ) on x1..xn, y1..yn with Δ placed on the x side (or the y side)."""
    uni = VertexUniverse(VariableUniverse.face_ring(cx.n).names)
    return SimplicialComplex.from_facets(uni, whisker_family(cx, side), quiet=True)


def whisker_facet_ideal(cx: SimplicialComplex, side: str = "y") -> MonomialIdeal:
    """Facet ideal I(W(Γ)): generated by the facets of Γ and the whiskers."""
    return minimize(VariableUniverse.face_ring(cx.n), whisker_family(cx, side))


def gamma_of(cx: SimplicialComplex) -> SimplicialComplex:
    """Γ on y1..yn whose facets are the minimal nonfaces of Δ copied to y."""
    if cx.is_simplex():
        raise ValueError("Δ is the full simplex: it has no nonfaces, so Γ would be void")
    return SimplicialComplex(VertexUniverse.standard(cx.n, "y"), tuple(minimal_nonfaces(cx)))


@dataclass(frozen=True)
class DualityReport:
    equal: bool
    dual: MonomialIdeal
    whisker: MonomialIdeal
    degenerate: bool = False

    def as_dict(self) -> dict:
        return {
            "equal": self.equal,
            "degenerate": self.degenerate,
            "dual": self.dual.render(),
            "whisker_facet_ideal": self.whisker.render(),
        }


def verify_duality_theorem(cx: SimplicialComplex) -> DualityReport:
    """Compare the Alexander dual of J_Δ with I(W(Γ)) generator by generator.

    For the full simplex Γ does not exist; the right side is then just the
    whisker pairs (x_i y_i) and the report is flagged degenerate.
    """
    require(cx.n, 12, "number of vertices for duality verification")
    dual = alexander_dual(face_ideal(cx).ideal)
    n = cx.n
    if cx.is_simplex():
        pairs = [(1 << i) | (1 << (n + i)) for i in range(n)]
        rhs = minimize(VariableUniverse.face_ring(n), pairs)
        return DualityReport(dual.generators == rhs.generators, dual, rhs, degenerate=True)
    rhs = whisker_facet_ideal(gamma_of(cx), side="y")
    return DualityReport(dual.generators == rhs.generators, dual, rhs)


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers beta_0..beta_p of an ideal and graded entries
    keyed by (homological index, internal degree)."""

    total: tuple[int, ...]
    graded: dict[tuple[int, int], int] = field(compare=False)

    @property
    def projdim(self) -> int:
        return len(self.total) - 1

    def as_dict(self) -> dict:
        return {
            "graded": {f"{i},{j}": v for (i, j), v in sorted(self.graded.items())},
            "total": list(self.total),
            "projdim": self.projdim,
        }


def betti_formula(cx: SimplicialComplex) -> BettiTable:
    """beta_j(J_Δ) = sum_i C(i+1, j) f_i, placed in degree n + j."""
    fv = f_vector(cx)  # fv[s] counts faces of cardinality s
    d = len(fv) - 1
    total = tuple(sum(comb(s, j) * fv[s] for s in range(len(fv))) for j in range(d + 1))
    graded = {(j, cx.n + j): b for j, b in enumerate(total)}
    return BettiTable(total, graded)


def face_order(cx: SimplicialComplex) -> GeneratorOrder:
    """u_F by increasing |F|, ties lexicographic: smaller faces come first."""
    n = cx.n
    return GeneratorOrder(tuple(face_monomial(f, n) for f in cx.face_list))


def expected_colon(n: int, collection: Iterable[int], face: int) -> int:
    """Mask of { y_j : F \\ {x_j} in S } for F = ``face``."""
    members = set(collection)
    out = 0
    for j in bits(face):
        if face & ~(1 << j) in members:
            out |= 1 << (n + j)
    return out


@dataclass(frozen=True)
class FaceQuotientReport:
    certificate: QuotientCertificate
    mismatch: tuple[int, int, int, int] | None = None  # (t, face, colon mask, expected mask)

    @property
    def ok(self) -> bool:
        return self.certificate.ok and self.mismatch is None


def verify_face_quotients(cx: SimplicialComplex) -> FaceQuotientReport:
    """Linear quotients of J_Δ in face order, and at each step the colon
    variables must be exactly { y_j : F - {x_j} in Δ }."""
    n = cx.n
    ideal = face_ideal(cx).ideal
    cert = check_linear_quotients(ideal, face_order(cx))
    if not cert.ok:
        return FaceQuotientReport(cert)
    for step in cert.steps:
        face = cx.face_list[step.t - 1]
        got = 0
        for g in step.colon:
            got |= g
        want = expected_colon(n, cx.face_set, face)
        if got != want or len(step.colon) != want.bit_count():
            return FaceQuotientReport(cert, (step.t, face, got, want))
    return FaceQuotientReport(cert)


@dataclass(frozen=True)
class CollectionOrderResult:
    ideal: MonomialIdeal
    order: GeneratorOrder | None
    violation: tuple[str, int, int] | None = None  # (condition, F, G)

    @property
    def ok(self) -> bool:
        return self.violation is None


def collection_order(n: int, collection: Iterable[int]) -> CollectionOrderResult:
    """Check intersection closure (i) and one-step descent (ii) exhaustively.

    (ii) is checked for every nested pair G ⊂ F, not only for covers. On
    success the order on the u_F is cardinality-then-lex of F.
    """
    members = sorted(set(int(f) for f in collection), key=canonical_key)
    if not members:
        raise ValueError("the collection must be nonempty")
    ideal = collection_ideal(n, members)
    code, a, b = _kernels.collection_violation(members)
    if code == 1:
        return CollectionOrderResult(ideal, None, ("i", members[a], members[b]))
    if code == 2:
        return CollectionOrderResult(ideal, None, ("ii", members[a], members[b]))
    return CollectionOrderResult(ideal, GeneratorOrder(tuple(face_monomial(f, n) for f in members)))


def collection_violation_bruteforce(collection: Sequence[int]) -> tuple[str, int, int] | None:
    """Literal quantifier check of (i) and (ii); reference for the kernel."""
    members = set(collection)
    for f in members:
        for g in members:
            if f & g not in members:
                return ("i", f, g)
    for f in members:
        for g in members:
            if g != f and g & ~f == 0:
                if not any(f & ~(1 << i) in members for i in bits(f & ~g)):
                    return ("ii", f, g)
    return None


def is_complex_family(collection: Iterable[int]) -> bool:
    """True if the family is closed under taking subsets."""
    members = set(collection)
    return bool(members) and all(f & ~(1 << i) in members for f in members for i in bits(f))


def family_complex(universe: VertexUniverse, collection: Iterable[int]) -> SimplicialComplex:
    members = list(collection)
    if not is_complex_family(members):
        raise ValueError("family is not closed under subsets")
    return SimplicialComplex.from_facets(universe, maximal_masks(members), quiet=True)


__all__ = [
    "BettiTable",
    "CollectionOrderResult",
    "DualityReport",
    "FaceIdealResult",
    "FaceQuotientReport",
    "betti_formula",
    "collection_ideal",
    "collection_order",
    "expected_colon",
    "face_ideal",
    "face_monomial",
    "face_order",
    "gamma_of",
    "verify_duality_theorem",
    "verify_face_quotients",
    "whisker_complex",
    "whisker_facet_ideal",
    "whisker_family",
]
