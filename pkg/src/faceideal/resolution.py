"""The explicit linear resolution of S/J_Δ with basis e_{G,H}.

F_j has one basis element e_{G,H} for every G in Δ and H with complement
in Δ, G ∪ H = [n] and |G ∩ H| = j - 1; its multidegree is x_G y_H. For
j >= 2 the differential is

    d(e_{G,H}) = sum over i in G∩H of (-1)^sigma (x_i e_{G-i,H} - y_i e_{G,H-i})

with sigma the number of elements of G∩H below i, and d(e_{G,H}) = x_G y_H
on F_1. Basis elements exist up to j = dim Δ + 2, one past the displayed
range of the original statement; the ranks then match the Betti numbers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels
from ._bits import bits, canonical_key
from .complex import SimplicialComplex
from .face_ideal import betti_formula, face_ideal, face_monomial
from .ideal import VariableUniverse
from .limits import require

SignRule = Callable[[int, int], int]


def sigma(common: int, i: int) -> int:
    """Number of elements of ``common`` smaller than ``i``."""
    return (common & ((1 << i) - 1)).bit_count()


@dataclass(frozen=True)
class BasisElement:
    G: int
    H: int

    @property
    def index(self) -> int:
        """Homological index j = |G ∩ H| + 1."""
        return (self.G & self.H).bit_count() + 1

    @property
    def degree(self) -> int:
        return self.G.bit_count() + self.H.bit_count()

    def multidegree(self, n: int) -> int:
        return self.G | (self.H << n)


@dataclass(frozen=True)
class SignedEntry:
    sign: int
    var: int  # x_i is i, y_i is n + i
    row: int
    col: int


@dataclass(frozen=True)
class ResolutionComplex:
    n: int
    modules: tuple[tuple[BasisElement, ...], ...]  # modules[0] is F_1
    columns: tuple[tuple[tuple[tuple[int, int, int], ...], ...], ...]  # per j>=2: per col (sign, var, row)
    augmentation: tuple[int, ...]  # d_1 image of each F_1 basis element
    universe: VariableUniverse = field(compare=False)

    @property
    def top(self) -> int:
        return len(self.modules)

    @property
    def ranks(self) -> tuple[int, ...]:
        """(rank F_0, rank F_1, ..., rank F_top)."""
        return (1,) + tuple(len(m) for m in self.modules)

    def basis(self, j: int) -> tuple[BasisElement, ...]:
        return self.modules[j - 1]

    def differential(self, j: int) -> list[SignedEntry]:
        """Entries of d_j : F_j -> F_{j-1} for j >= 2."""
        if j < 2 or j > self.top:
            return []
        return [SignedEntry(s, v, r, c)
                for c, col in enumerate(self.columns[j - 2]) for (s, v, r) in col]


def _default_rule(common: int, i: int) -> int:
    return sigma(common, i)


def build_resolution(cx: SimplicialComplex, *, sign_rule: SignRule | None = None,
                     flip: tuple[int, int, int] | None = None) -> ResolutionComplex:
    """Construct F_0..F_{dim Δ + 2} with all differentials.

    ``sign_rule(common, i)`` replaces the exponent sigma and ``flip =
    (j, col, i)`` negates one coefficient; both exist for mutation tests.
    """
    require(cx.n, 12, "number of vertices for the resolution")
    n = cx.n
    rule = sign_rule or _default_rule
    full = (1 << n) - 1
    top = cx.dim + 2
    mods: list[list[BasisElement]] = [[] for _ in range(top)]
    for g in cx.face_list:
        rest = full ^ g
        sub = g
        while True:
            h = rest | sub
            mods[sub.bit_count()].append(BasisElement(g, h))
            if sub == 0:
                break
            sub = (sub - 1) & g
    for m in mods:
        m.sort(key=lambda e: (canonical_key(e.G), canonical_key(e.H)))
    modules = tuple(tuple(m) for m in mods)
    index = [{(e.G, e.H): k for k, e in enumerate(m)} for m in modules]

    columns = []
    for j in range(2, top + 1):
        lower = index[j - 2]
        cols = []
        for c, e in enumerate(modules[j - 1]):
            common = e.G & e.H
            col = []
            for i in bits(common):
                s = -1 if rule(common, i) % 2 else 1
                if flip == (j, c, i):
                    s = -s
                col.append((s, i, lower[(e.G ^ (1 << i), e.H)]))
                col.append((-s, n + i, lower[(e.G, e.H ^ (1 << i))]))
            cols.append(tuple(col))
        columns.append(tuple(cols))
    aug = tuple(e.multidegree(n) for e in modules[0])
    return ResolutionComplex(n, modules, tuple(columns), aug, VariableUniverse.face_ring(n))


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failure: dict | None = None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "failure": self.failure}


def check_complex(res: ResolutionComplex) -> CheckReport:
    """Symbolic d_{j-1} d_j = 0 for every j >= 2, exact integer coefficients.

    Composite entries are keyed by (target row, sorted variable multiset);
    the lowest failing column in the lowest j is reported.
    """
    for j in range(2, res.top + 1):
        cols = res.columns[j - 2]
        for c, col in enumerate(cols):
            acc: dict = defaultdict(int)
            if j == 2:
                for s, v, r in col:
                    key = tuple(sorted([v, *bits(res.augmentation[r])]))
                    acc[key] += s
            else:
                below = res.columns[j - 3]
                for s1, v1, r1 in col:
                    for s2, v2, r2 in below[r1]:
                        acc[(r2, min(v1, v2), max(v1, v2))] += s1 * s2
            for key, coeff in sorted(acc.items()):
                if coeff:
                    return CheckReport(False, {"j": j, "column": c, "term": list(key), "coefficient": coeff})
    return CheckReport(True)


def check_ranks_and_degrees(res: ResolutionComplex, cx: SimplicialComplex) -> CheckReport:
    """rank F_{j+1} = beta_j(J_Δ), F_j in the single degree n + j - 1,
    every differential entry a signed single variable, and the ranks
    alternate to zero (S/J_Δ has rank 0)."""
    n = res.n
    betti = betti_formula(cx).total
    ranks = res.ranks
    if list(ranks[1:]) != list(betti):
        return CheckReport(False, {"ranks": list(ranks), "betti": list(betti)})
    for j, mod in enumerate(res.modules, start=1):
        for e in mod:
            if e.degree != n + j - 1 or e.index != j:
                return CheckReport(False, {"j": j, "G": e.G, "H": e.H, "degree": e.degree})
    for j in range(2, res.top + 1):
        for c, col in enumerate(res.columns[j - 2]):
            for s, v, _ in col:
                if s not in (1, -1) or not 0 <= v < 2 * n:
                    return CheckReport(False, {"j": j, "column": c, "entry": [s, v]})
    if any(m == 0 for m in res.augmentation):
        return CheckReport(False, {"j": 1, "constant_entry": True})
    if sum((-1) ** j * r for j, r in enumerate(ranks)) != 0:
        return CheckReport(False, {"alternating_rank_sum": sum((-1) ** j * r for j, r in enumerate(ranks))})
    return CheckReport(True)


def check_augmentation(res: ResolutionComplex, cx: SimplicialComplex) -> CheckReport:
    image = set(res.augmentation)
    gens = set(face_ideal(cx).ideal.generators)
    if image != gens or len(res.augmentation) != len(gens):
        diff = sorted(image ^ gens)
        return CheckReport(False, {"symmetric_difference": [res.universe.render(m) for m in diff]})
    return CheckReport(True)


def check_euler_characteristic(res: ResolutionComplex) -> CheckReport:
    """Multigraded Euler characteristic against the K-polynomial of S/J_Δ.

    The coefficient of x^W in K(S/I_Γ) is (-1)^|W| times the signed face
    count of Γ restricted to W, for Γ the Stanley-Reisner complex of the
    augmentation image; it is obtained here by a subset-sum transform. Any
    acyclic complex of free modules over S/J must reproduce it.
    """
    nbits = 2 * res.n
    require(nbits, 20, "variables for the Euler characteristic check")
    size = 1 << nbits
    faces = np.asarray(_kernels.independent_sets(res.augmentation, nbits), dtype=np.int64)
    weights = np.zeros(size, np.int64)
    pc = _kernels.backend.popcounts(faces)
    weights[faces] = np.where(pc % 2 == 0, 1, -1)
    for b in range(nbits):
        view = weights.reshape(-1, 2, 1 << b)
        view[:, 1, :] += view[:, 0, :]
    allpc = _kernels.backend.popcounts(np.arange(size, dtype=np.int64))
    expected = np.where(allpc % 2 == 0, 1, -1) * weights

    got = np.zeros(size, np.int64)
    got[0] = 1
    for j, mod in enumerate(res.modules, start=1):
        sgn = -1 if j % 2 else 1
        for e in mod:
            got[e.multidegree(res.n)] += sgn
    bad = np.nonzero(got != expected)[0]
    if bad.size:
        w = int(bad[0])
        return CheckReport(False, {"multidegree": res.universe.render(w),
                                   "resolution": int(got[w]), "k_polynomial": int(expected[w])})
    return CheckReport(True)


def resolution_report(res: ResolutionComplex, cx: SimplicialComplex, *, matrices: bool = False) -> dict:
    degrees = {str(j): sorted({e.degree for e in mod}) for j, mod in enumerate(res.modules, start=1)}
    degrees["0"] = [0]
    out = {
        "ranks": list(res.ranks),
        "degrees": dict(sorted(degrees.items(), key=lambda kv: int(kv[0]))),
        "checks": {
            "complex": check_complex(res).as_dict(),
            "ranks_and_degrees": check_ranks_and_degrees(res, cx).as_dict(),
            "augmentation": check_augmentation(res, cx).as_dict(),
        },
    }
    if 2 * res.n <= 20:
        out["checks"]["euler_characteristic"] = check_euler_characteristic(res).as_dict()
    if matrices:
        names = res.universe.names
        out["matrices"] = {
            str(j): [{"row": e.row, "col": e.col, "sign": e.sign, "var": names[e.var]}
                     for e in res.differential(j)]
            for j in range(2, res.top + 1)
        }
        out["matrices"]["1"] = [{"row": 0, "col": c, "monomial": res.universe.render(m)}
                                for c, m in enumerate(res.augmentation)]
    return out


__all__ = [
    "BasisElement",
    "CheckReport",
    "ResolutionComplex",
    "SignedEntry",
    "build_resolution",
    "check_augmentation",
    "check_complex",
    "check_euler_characteristic",
    "check_ranks_and_degrees",
    "face_monomial",
    "resolution_report",
    "sigma",
]
