"""Clutters and their minimal transversals.

Hyperedges are integer masks. ``minimal_transversals`` is the branch-and-bound
enumerator used on the main path; ``_kernels.minimal_transversals_scan`` is the
exhaustive oracle it is tested against.
"""

from __future__ import annotations

from typing import Iterable

from ._bits import bits, canonical_sorted


def minimize_masks(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and every mask that contains another one.

    Result is in canonical order (cardinality, then lexicographic).
    """
    ordered = canonical_sorted(masks)
    kept: list[int] = []
    for m in ordered:
        # canonical order puts every proper subset before its supersets
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """All inclusion-minimal sets meeting every edge, in canonical order.

    Branches on the uncovered edge with the fewest admissible vertices;
    a branch dies once some chosen vertex loses its last critical edge
    (an edge it alone covers), since adding vertices can never restore one.
    Vertices tried earlier in a branching step are excluded from later
    siblings, so every transversal is produced exactly once.

    An empty edge admits no transversal; an empty family has the single
    transversal 0.
    """
    edges = minimize_masks(edges)
    if not edges:
        return [0]
    if edges[0] == 0:
        return []
    out: list[int] = []

    def critical_ok(chosen: int) -> bool:
        for v in bits(chosen):
            vb = 1 << v
            if not any(e & chosen == vb for e in edges):
                return False
        return True

    def search(chosen: int, excluded: int) -> None:
        best = None
        best_cands = 0
        best_count = 1 << 30
        for e in edges:
            if e & chosen:
                continue
            cands = e & ~excluded
            c = cands.bit_count()
            if c == 0:
                return
            if c < best_count:
                best, best_cands, best_count = e, cands, c
        if best is None:
            out.append(chosen)
            return
        tried = 0
        for v in bits(best_cands):
            vb = 1 << v
            nxt = chosen | vb
            if critical_ok(nxt):
                search(nxt, excluded | tried)
            tried |= vb

    search(0, 0)
    return canonical_sorted(out)
