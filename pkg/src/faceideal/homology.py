"""Exact simplicial homology and Hochster-formula Betti numbers.

This is the independent ground truth for the Betti-number and
linear-resolution claims: it never looks at face ideals or resolutions, only
at the Stanley-Reisner complex of whatever ideal it is handed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from ._bits import bits
from .complex import SimplicialComplex
from .ideal import MonomialIdeal
from .limits import require


@dataclass(frozen=True)
class HomologyRanks:
    """Reduced Betti numbers; ``ranks[s]`` is the rank in dimension s - 1."""

    ranks: tuple[int, ...]

    def __getitem__(self, dim: int) -> int:
        idx = dim + 1
        return self.ranks[idx] if 0 <= idx < len(self.ranks) else 0


def _rank_python(rows: list[list[int]], ncols: int, strategy: int) -> int:
    """Fraction-free elimination with arbitrary-precision integers."""
    a = [r[:] for r in rows]
    nr = len(a)
    row = 0
    for step in range(ncols):
        if row == nr:
            break
        col = step if strategy == 0 else ncols - 1 - step
        cands = [i for i in range(row, nr) if a[i][col]]
        if not cands:
            continue
        piv = cands[0] if strategy == 0 else min(cands, key=lambda i: abs(a[i][col]))
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        for i in range(row + 1, nr):
            q = a[i][col]
            if q:
                a[i] = [p * x - q * y for x, y in zip(a[i], a[row])]
        row += 1
    return row


def _boundary_rows(prev: list[int], cur: list[int]) -> list[list[int]]:
    index = {f: r for r, f in enumerate(prev)}
    mat = [[0] * len(cur) for _ in prev]
    for c, f in enumerate(cur):
        for t, v in enumerate(bits(f)):
            mat[index[f ^ (1 << v)]][c] = -1 if t % 2 else 1
    return mat


def _reduced_betti_python(faces: list[int], strategy: int) -> list[int]:
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        prev = sorted(by_size.get(k - 1, []))
        cur = sorted(by_size.get(k, []))
        ranks[k] = _rank_python(_boundary_rows(prev, cur), len(cur), strategy)
    return [len(by_size.get(s, [])) - ranks[s] - ranks[s + 1] for s in range(top + 1)]


def reduced_betti_of_faces(faces, strategy: int = 0) -> list[int]:
    """Reduced Betti numbers of the complex with exactly these faces."""
    faces = [int(f) for f in faces]
    if not faces:
        raise ValueError("the void complex has no reduced homology here")
    out, ok = _kernels.reduced_betti(faces, strategy)
    if not ok:
        out = _reduced_betti_python(faces, strategy)
    return out


def reduced_homology(cx: SimplicialComplex, strategy: int = 0) -> HomologyRanks:
    """Reduced homology ranks over the rationals, dimensions -1..dim."""
    require(cx.n, 16, "number of vertices for homology")
    return HomologyRanks(tuple(reduced_betti_of_faces(cx.face_list, strategy)))


@dataclass(frozen=True)
class GradedBettiTable:
    graded: dict[tuple[int, int], int] = field(compare=True)

    @property
    def total(self) -> tuple[int, ...]:
        if not self.graded:
            return ()
        top = max(i for i, _ in self.graded)
        out = [0] * (top + 1)
        for (i, _), v in self.graded.items():
            out[i] += v
        return tuple(out)

    @property
    def projdim(self) -> int:
        return len(self.total) - 1

    def as_dict(self) -> dict:
        return {
            "graded": {f"{i},{j}": v for (i, j), v in sorted(self.graded.items())},
            "total": list(self.total),
            "projdim": self.projdim,
        }


def hochster_betti(ideal: MonomialIdeal, *, prune: bool = True, strategy: int = 0) -> GradedBettiTable:
    """beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(Δ_W), Δ = Stanley-Reisner complex.

    With ``prune`` only vertex sets W that are unions of the generator
    supports inside them are visited; for any other W some vertex of W lies
    in no minimal nonface of Δ_W, so Δ_W is a cone and contributes nothing.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    nvars = ideal.universe.size
    require(nvars, 12, "number of variables for Hochster's formula")
    faces = np.asarray(_kernels.independent_sets(ideal.generators, nvars), dtype=np.int64)
    gens = ideal.generators
    graded: dict[tuple[int, int], int] = {}
    for w in range(1, 1 << nvars):
        if prune:
            inside = 0
            for g in gens:
                if g & ~w == 0:
                    inside |= g
            if inside != w:
                continue
        sub = faces[(faces & ~np.int64(w)) == 0]
        betti = reduced_betti_of_faces(sub, strategy)
        size = w.bit_count()
        for s, b in enumerate(betti):
            i = size - s - 1
            if b and i >= 0:
                graded[(i, size)] = graded.get((i, size), 0) + b
    return GradedBettiTable(graded)


@dataclass(frozen=True)
class LinearityResult:
    linear: bool
    witness: tuple[int, int] | None = None  # first (i, j) off the linear strand


def linear_resolution_check(ideal: MonomialIdeal, table: GradedBettiTable | None = None) -> LinearityResult:
    degs = ideal.degrees()
    if len(degs) != 1:
        raise ValueError(f"generators have mixed degrees {sorted(degs)}")
    (q,) = degs
    table = table if table is not None else hochster_betti(ideal)
    for (i, j) in sorted(table.graded):
        if j != q + i:
            return LinearityResult(False, (i, j))
    return LinearityResult(True)
