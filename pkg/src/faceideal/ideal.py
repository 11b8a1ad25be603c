"""Squarefree monomial ideals over a named variable universe.

A monomial is the integer mask of its support. Ideals always store their
minimal generators in canonical order (degree, then lexicographic by variable
index); special generator orders live in separate :class:`GeneratorOrder`
objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import _kernels
from ._bits import MAX_BITS, bits, canonical_key, canonical_sorted, full_mask
from .complex import SimplicialComplex, VertexUniverse
from .hypergraph import minimal_transversals, minimize_masks

_X = re.compile(r"^x(\d+)$")
_Y = re.compile(r"^y(\d+)$")
_W = re.compile(r"^x(\d+)\^\((\d+)\)$")


def _kind(name: str) -> tuple:
    if m := _W.match(name):
        return ("w", int(m.group(1)), int(m.group(2)))
    if m := _X.match(name):
        return ("x", int(m.group(1)))
    if m := _Y.match(name):
        return ("y", int(m.group(1)))
    return ("v", name)


@dataclass(frozen=True)
class VariableUniverse:
    """Ordered, distinct variable names.

    Names of the form ``x3``, ``y3`` and ``x3^(2)`` are recognised as the
    structured kinds X(3), Y(3) and Whisker(3, 2).
    """

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be distinct: {self.names}")
        if len(self.names) > MAX_BITS:
            raise ValueError(f"at most {MAX_BITS} variables supported")

    @classmethod
    def face_ring(cls, n: int) -> VariableUniverse:
        """x1..xn followed by y1..yn."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return full_mask(self.size)

    @cached_property
    def kinds(self) -> tuple[tuple, ...]:
        return tuple(_kind(v) for v in self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            m |= 1 << self.index(v)
        return m

    def names_of(self, mono: int) -> list[str]:
        return [self.names[i] for i in bits(mono)]

    def render(self, mono: int) -> str:
        return "*".join(self.names_of(mono)) or "1"

    def as_vertices(self) -> VertexUniverse:
        return VertexUniverse(self.names)


@dataclass(frozen=True)
class MonomialIdeal:
    universe: VariableUniverse
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("the zero ideal has no generators")
        for g in gens:
            if g < 0 or g & ~self.universe.full:
                raise ValueError(f"generator {g:#x} uses variables outside the universe")
        if list(gens) != minimize_masks(gens):
            raise ValueError("generators must be a minimal system in canonical order; use minimize()")

    @property
    def is_unit(self) -> bool:
        return self.generators == (0,)

    def degrees(self) -> set[int]:
        return {g.bit_count() for g in self.generators}

    def render(self) -> list[str]:
        return [self.universe.render(g) for g in self.generators]

    def contains_monomial(self, mono: int) -> bool:
        return any(g & ~mono == 0 for g in self.generators)


@dataclass(frozen=True)
class GeneratorOrder:
    """An explicit permutation of an ideal's minimal generators."""

    monomials: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(int(m) for m in self.monomials))

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def validate(self, ideal: MonomialIdeal) -> None:
        if sorted(self.monomials) != sorted(ideal.generators):
            raise ValueError("order is not a permutation of the ideal's generators")


@dataclass(frozen=True)
class QuotientStep:
    t: int  # 1-based position
    colon: tuple[int, ...]  # minimal generators of the prefix colon ideal


@dataclass(frozen=True)
class QuotientCertificate:
    """Per-position colon ideals; ``violation`` is (t, offending generator)."""

    steps: tuple[QuotientStep, ...]
    violation: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def variables_at(self, t: int) -> int:
        """Union mask of the colon variables at 1-based position ``t``."""
        step = self.steps[t - 2]
        m = 0
        for g in step.colon:
            m |= g
        return m


def minimize(universe: VariableUniverse, gens: Sequence[int]) -> MonomialIdeal:
    gens = [int(g) for g in gens]
    if not gens:
        raise ValueError("cannot build an ideal from an empty generator list")
    if 0 in gens and any(g != 0 for g in gens):
        raise ValueError("the constant monomial 1 appears together with other generators")
    return MonomialIdeal(universe, tuple(minimize_masks(gens)))


def ideal_from_names(names: Sequence[str], gens: Iterable[Iterable[str]]) -> MonomialIdeal:
    uni = VariableUniverse(tuple(names))
    return minimize(uni, [uni.monomial(g) for g in gens])


def colon_monomial(u: int, v: int) -> int:
    """u / gcd(u, v) for squarefree u, v."""
    return u & ~v


def _proper(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise ValueError("the unit ideal (1) is not allowed here")


def prefix_colon(ideal: MonomialIdeal, order: GeneratorOrder, t: int) -> MonomialIdeal:
    """(u_1, ..., u_{t-1}) : u_t for 1-based 2 <= t <= m, minimally generated."""
    m = len(order)
    if not 2 <= t <= m:
        raise IndexError(f"position {t} outside 2..{m}")
    seq = order.monomials
    gens = _kernels.colon_minimal(seq[: t - 1], seq[t - 1])
    if gens == [0]:
        raise ValueError(f"a generator before position {t} divides the generator at {t}")
    return MonomialIdeal(ideal.universe, tuple(canonical_sorted(gens)))


def check_linear_quotients(ideal: MonomialIdeal, order: GeneratorOrder) -> QuotientCertificate:
    order.validate(ideal)
    steps = []
    for t in range(2, len(order) + 1):
        colon = prefix_colon(ideal, order, t).generators
        steps.append(QuotientStep(t, colon))
        bad = [g for g in colon if g.bit_count() != 1]
        if bad:
            return QuotientCertificate(tuple(steps), (t, bad[0]))
    return QuotientCertificate(tuple(steps))


def colon_generators_bruteforce(prefix: Sequence[int], u: int) -> list[int]:
    """Minimal generators of (prefix) : u by pairwise colons and a plain
    quadratic minimality filter; independent of the kernel path."""
    cols = {g & ~u for g in prefix}
    return sorted((c for c in cols if not any(o != c and o & ~c == 0 for o in cols)),
                  key=canonical_key)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Ideal of the minimal transversals of the generator supports."""
    _proper(ideal)
    return MonomialIdeal(ideal.universe, tuple(minimal_transversals(ideal.generators)))


def facet_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the facets of ``cx`` (its vertices become variables)."""
    uni = VariableUniverse(cx.universe.labels)
    return minimize(uni, cx.facets)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex Δ with I_Δ = ``ideal``.

    Faces are the supports containing no generator; its facets are the
    complements of the minimal transversals.
    """
    _proper(ideal)
    full = ideal.universe.full
    facets = [full ^ c for c in minimal_transversals(ideal.generators)]
    return SimplicialComplex.from_facets(ideal.universe.as_vertices(), facets, quiet=True)


def stanley_reisner_faces_scan(ideal: MonomialIdeal) -> list[int]:
    """All faces of the Stanley-Reisner complex by exhaustive subset scan."""
    _proper(ideal)
    return _kernels.independent_sets(ideal.generators, ideal.universe.size)
