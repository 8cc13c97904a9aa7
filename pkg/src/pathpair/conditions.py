"""Cheap necessary conditions for path-pairability.

These are filters and property oracles: a failing condition certifies a
graph is not path-pairable, while a passing one proves nothing (the cut
condition famously holds for the 4-cycle, which is not path-pairable).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .caps import CUT_CONDITION_VERTEX_CAP, enforce_cap
from .graphs import SimpleGraph, edge_cut


@dataclass(frozen=True)
class CutConditionReport:
    holds: bool
    violating_set: frozenset[int] | None
    cut_size: int | None

    def __post_init__(self):
        assert self.holds == (self.violating_set is None)


def cut_condition(g: SimpleGraph) -> CutConditionReport:
    """Check that every X with |X| <= n/2 has at least |X| leaving edges.

    Exhaustive sweep by subset size, so a violation is reported with a
    minimum-size set (ties broken lexicographically). Capped: the sweep
    is exponential by design.
    """
    enforce_cap(g.n, CUT_CONDITION_VERTEX_CAP, "cut condition sweep")
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    for size in range(1, g.n // 2 + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            cut = sum((nbr[v] & ~mask).bit_count() for v in combo)
            if cut < size:
                return CutConditionReport(False, frozenset(combo), cut)
    return CutConditionReport(True, None, None)


def faudree_consistency(n: int, delta: int) -> bool:
    """True iff n <= 2 * delta**delta, in exact integer arithmetic.

    Every path-pairable graph satisfies this bound, so a certified
    pairable graph violating it would expose a bug.
    """
    if n < 2:
        raise ValueError(f"vertex count must be >= 2, got {n}")
    if delta < 1:
        raise ValueError(f"max degree must be >= 1, got {delta}")
    return n <= 2 * delta**delta


def planar_degree_floor(n: int) -> int:
    """ceil(sqrt(n)): a reference floor for the max degree of certified
    path-pairable planar graphs, used in reports for context only."""
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    root = math.isqrt(n)
    return root if root * root == n else root + 1
