"""Exhaustive path-pairability decisions.

A graph on an even number of vertices is path-pairable iff every full
pairing of its vertices admits an edge-disjoint path system. The verifier
quantifies over pairings in lexicographic order of their canonical pair
lists, delegating each one to the exact solver, with optional
automorphism-orbit reduction and optional process parallelism. Verdicts
are independent of scheduling: the reported counterexample is always the
lexicographically first one the enumeration order can produce.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graphs import Pairing, SimpleGraph
from .solver import DEFAULT_BUDGET, SolveStatus, find_disjoint_paths


class OddVertexCountError(ValueError):
    """Path-pairability is defined for even vertex counts only."""


class PairabilityStatus(Enum):
    PAIRABLE = "pairable"
    NOT_PAIRABLE = "not-pairable"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class Verdict:
    status: PairabilityStatus
    counterexample: Pairing | None
    checked: int
    total: int

    @property
    def pairable(self) -> bool:
        return self.status is PairabilityStatus.PAIRABLE


def full_pairings(vertices: Iterable[int]) -> Iterator[Pairing]:
    """Every full pairing of the given vertices, lexicographically.

    For an odd number of vertices exactly one vertex stays unpaired.
    """
    vs = tuple(sorted(vertices))

    def rec(remaining: tuple[int, ...], acc: list[tuple[int, int]], skips: int):
        if not remaining:
            yield Pairing(tuple(acc))
            return
        s = remaining[0]
        rest = remaining[1:]
        for i, t in enumerate(rest):
            acc.append((s, t))
            yield from rec(rest[:i] + rest[i + 1 :], acc, skips)
            acc.pop()
        if skips:
            yield from rec(rest, acc, skips - 1)

    yield from rec(vs, [], len(vs) % 2)


def count_full_pairings(n: int) -> int:
    """(n-1)!! for even n; n * (n-2)!! for odd n (choice of unpaired vertex)."""
    if n <= 1:
        return 1
    def double_factorial(m: int) -> int:
        out = 1
        while m > 1:
            out *= m
            m -= 2
        return out
    if n % 2 == 0:
        return double_factorial(n - 1)
    return n * double_factorial(n - 2)


# ---------------------------------------------------------------------------
# Automorphisms and orbit reduction
# ---------------------------------------------------------------------------


def automorphisms(g: SimpleGraph) -> list[tuple[int, ...]]:
    """The full automorphism group as vertex permutations (brute force).

    Backtracking over images in vertex order, pruning on degree and on
    adjacency consistency with already-mapped vertices. Fine for the desk
    scale this package works at.
    """
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    adj = [set(ns) for ns in g.adjacency]
    image = [-1] * n
    taken = [False] * n
    found: list[tuple[int, ...]] = []

    def rec(v: int):
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if taken[w] or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj[v]) != (image[u] in adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                taken[w] = True
                rec(v + 1)
                taken[w] = False
                image[v] = -1

    rec(0)
    return found


def apply_automorphism(perm: Sequence[int], pairing: Pairing) -> Pairing:
    return Pairing.from_pairs((perm[u], perm[v]) for u, v in pairing.pairs)


def automorphism_orbits(g: SimpleGraph) -> list[list[Pairing]]:
    """Partition of all full pairings into automorphism orbits.

    Orbits are listed by their lexicographically smallest member, members
    sorted within each orbit. Verifying one representative per orbit
    decides the whole orbit.
    """
    autos = automorphisms(g)
    orbits: list[list[Pairing]] = []
    seen: set[Pairing] = set()
    for p in full_pairings(range(g.n)):
        if p in seen:
            continue
        orbit = {apply_automorphism(a, p) for a in autos}
        seen.update(orbit)
        orbits.append(sorted(orbit, key=lambda q: q.pairs))
    return orbits


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------


def _pairing_status(args: tuple[SimpleGraph, Pairing, int]) -> SolveStatus:
    g, pairing, budget = args
    return find_disjoint_paths(g, pairing, budget).status


def _scan(
    g: SimpleGraph,
    pairings: Iterable[Pairing],
    total: int,
    budget: int,
    jobs: int,
) -> Verdict:
    """Scan pairings in the given order; first infeasible one wins.

    A budget-exceeded solve does not abort the scan (a later infeasible
    pairing still disproves pairability) but taints a pairable outcome.
    """
    checked = 0
    budget_hit = False

    def finish(counterexample: Pairing | None) -> Verdict:
        if counterexample is not None:
            return Verdict(PairabilityStatus.NOT_PAIRABLE, counterexample, checked, total)
        if budget_hit:
            return Verdict(PairabilityStatus.BUDGET_EXCEEDED, None, checked, total)
        return Verdict(PairabilityStatus.PAIRABLE, None, checked, total)

    if jobs <= 1:
        for p in pairings:
            status = find_disjoint_paths(g, p, budget).status
            checked += 1
            if status is SolveStatus.INFEASIBLE:
                return finish(p)
            if status is SolveStatus.BUDGET_EXCEEDED:
                budget_hit = True
        return finish(None)

    items = list(pairings)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        statuses = pool.map(
            _pairing_status,
            ((g, p, budget) for p in items),
            chunksize=max(1, len(items) // (jobs * 4) or 1),
        )
        for p, status in zip(items, statuses):
            checked += 1
            if status is SolveStatus.INFEASIBLE:
                pool.shutdown(cancel_futures=True)
                return finish(p)
            if status is SolveStatus.BUDGET_EXCEEDED:
                budget_hit = True
    return finish(None)


def is_path_pairable(
    g: SimpleGraph,
    budget: int = DEFAULT_BUDGET,
    use_orbits: bool = False,
    jobs: int = 1,
) -> Verdict:
    """Decide path-pairability by checking every full pairing.

    Rejects odd vertex counts with OddVertexCountError. With
    `use_orbits`, only one representative per automorphism orbit is
    solved; the status is unchanged, though the reported counterexample
    is then an orbit representative.
    """
    if g.n % 2 != 0:
        raise OddVertexCountError(
            f"path-pairability needs an even vertex count, got n={g.n}"
        )
    if use_orbits:
        reps = [orbit[0] for orbit in automorphism_orbits(g)]
        return _scan(g, reps, len(reps), budget, jobs)
    total = count_full_pairings(g.n)
    return _scan(g, full_pairings(range(g.n)), total, budget, jobs)


def is_k_path_pairable(
    g: SimpleGraph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> Verdict:
    """Decide k-path-pairability: every choice of 2k distinct vertices,
    every pairing of them, must be realizable."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n < 2 * k:
        raise ValueError(f"need at least {2 * k} vertices, graph has {g.n}")

    def all_pairings() -> Iterator[Pairing]:
        for subset in combinations(range(g.n), 2 * k):
            yield from full_pairings(subset)

    from math import comb

    per_subset = count_full_pairings(2 * k)
    total = comb(g.n, 2 * k) * per_subset
    return _scan(g, all_pairings(), total, budget, jobs)
