"""Exhaustive clique-minor detection at desk scale.

A K_t minor is t pairwise-disjoint connected vertex sets ("branch sets")
with an edge between every two of them. The search enumerates every
connected vertex subset as a bitmask once, then backtracks over families
of branch sets ordered by minimum vertex. Exponential by design; the cap
keeps it honest.
"""

from __future__ import annotations

from .caps import MINOR_VERTEX_CAP, enforce_cap
from .graphs import SimpleGraph


def _neighborhood_masks(g: SimpleGraph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _connected_subsets(g: SimpleGraph, nbr: list[int]) -> list[tuple[int, int, int]]:
    """All connected nonempty vertex subsets as (min_vertex, mask, open_neighborhood)."""
    out = []
    for mask in range(1, 1 << g.n):
        lowest = (mask & -mask).bit_length() - 1
        # flood fill from the lowest bit
        frontier = 1 << lowest
        reached = frontier
        while frontier:
            grow = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                grow |= nbr[v] & mask
            frontier = grow & ~reached
            reached |= frontier
        if reached != mask:
            continue
        hood = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            hood |= nbr[v]
        out.append((lowest, mask, hood & ~mask))
    out.sort()
    return out


def has_clique_minor(g: SimpleGraph, t: int) -> bool:
    """True iff g has a K_t minor. Exhaustive; capped at 15 vertices by default."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    enforce_cap(g.n, MINOR_VERTEX_CAP, "clique minor search")
    if t == 1:
        return g.n >= 1
    if t > g.n:
        return False

    nbr = _neighborhood_masks(g)
    subsets = _connected_subsets(g, nbr)

    def extend(chosen: list[tuple[int, int]], used: int, start: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        for i in range(start, len(subsets)):
            _, mask, hood = subsets[i]
            if mask & used:
                continue
            if any(not (hood & prev_mask) for prev_mask, _ in chosen):
                continue
            chosen.append((mask, hood))
            # Disjoint sets have distinct minimum vertices and subsets are
            # sorted by minimum, so resuming at i+1 visits each unordered
            # family exactly once.
            if extend(chosen, used | mask, i + 1, remaining - 1):
                return True
            chosen.pop()
        return False

    return extend([], 0, 0, t)
