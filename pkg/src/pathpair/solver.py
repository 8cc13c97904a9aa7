"""Exact decision procedure for edge-disjoint path systems on small graphs.

Depth-first search over path assignments with an edge-set bitmask for
disjointness, a fail-first pair ordering (fewest shortest paths in the
residual graph first), and sound residual pruning. No randomization:
identical inputs and budget always produce identical verdicts and
witnesses. The budget is counted in node expansions of the path
enumeration, never in wall time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graphs import (
    Edge,
    Pairing,
    PathSystem,
    SimpleGraph,
    canonical_edge,
    validate_path_system,
)

DEFAULT_BUDGET = 1_000_000


class SolveStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    system: PathSystem | None
    expansions: int

    @property
    def feasible(self) -> bool:
        return self.status is SolveStatus.FEASIBLE


class _OutOfBudget(Exception):
    pass


def _indexed_adjacency(g: SimpleGraph) -> list[list[tuple[int, int]]]:
    """adj[v] = sorted (neighbor, edge index) pairs; index into g.sorted_edges."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.sorted_edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    for entries in adj:
        entries.sort()
    return adj


def _shortest_path_count(
    adj: Sequence[Sequence[tuple[int, int]]], used: int, s: int, t: int, n: int
) -> int:
    """Number of shortest s-t paths in the residual graph; 0 if disconnected."""
    dist = [-1] * n
    count = [0] * n
    dist[s] = 0
    count[s] = 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            break
        for w, ei in adj[v]:
            if used >> ei & 1:
                continue
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                count[w] = count[v]
                queue.append(w)
            elif dist[w] == dist[v] + 1:
                count[w] += count[v]
    return count[t]


def _residual_prune_ok(
    adj: Sequence[Sequence[tuple[int, int]]],
    used: int,
    pending: Sequence[Edge],
    n: int,
) -> bool:
    """Sound rejection test: True unless the state is provably infeasible.

    Rejects when a pending pair is disconnected in the residual graph, or
    when a sampled cut (radius-0 or radius-1 ball around a terminal) has
    fewer residual edges than pending pairs it separates. Every separated
    pair needs its own crossing edge, so neither test ever rejects a
    feasible state.
    """
    if not pending:
        return True
    for s, t in pending:
        if _shortest_path_count(adj, used, s, t, n) == 0:
            return False

    for terminal in {v for pair in pending for v in pair}:
        ball = {terminal}
        for _ in range(2):  # radius 0, then radius 1
            cut = 0
            for v in ball:
                for w, ei in adj[v]:
                    if not (used >> ei & 1) and w not in ball:
                        cut += 1
            separated = sum(1 for s, t in pending if (s in ball) != (t in ball))
            if cut < separated:
                return False
            ball = ball | {
                w for v in ball for w, ei in adj[v] if not (used >> ei & 1)
            }
    return True


def residual_prune(
    g: SimpleGraph, used_edges: Iterable[Edge], pending: Iterable[tuple[int, int]]
) -> bool:
    """Public wrapper over the solver's pruning test.

    `used_edges` are edges already committed to earlier paths; `pending`
    are the pairs still to route. Returns False only for provably
    infeasible states.
    """
    adj = _indexed_adjacency(g)
    index = {e: i for i, e in enumerate(g.sorted_edges)}
    used = 0
    for e in used_edges:
        used |= 1 << index[canonical_edge(*e)]
    pend = [canonical_edge(u, v) for u, v in pending]
    return _residual_prune_ok(adj, used, pend, g.n)


def find_disjoint_paths(
    g: SimpleGraph, pairing: Pairing, budget: int = DEFAULT_BUDGET
) -> SolveResult:
    """Find an edge-disjoint path system realizing `pairing`, or certify
    that none exists.

    FEASIBLE comes with a validated PathSystem. INFEASIBLE means the
    search space was exhausted, so no realization exists. BUDGET_EXCEEDED
    means the node-expansion cap was hit first; no verdict.
    """
    for u, v in pairing.pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"terminal pair {(u, v)} out of range for n={g.n}")

    adj = _indexed_adjacency(g)
    pairs = pairing.pairs
    expansions = [0]

    def paths_between(s: int, t: int, used: int):
        """All simple s-t paths avoiding used edges, in lexicographic order."""
        trail: list[int] = [s]
        visited = [1 << s]

        def rec():
            v = trail[-1]
            for w, ei in adj[v]:
                if used >> ei & 1:
                    continue
                if visited[0] >> w & 1:
                    continue
                expansions[0] += 1
                if expansions[0] > budget:
                    raise _OutOfBudget
                if w == t:
                    yield tuple(trail) + (t,)
                    continue
                visited[0] |= 1 << w
                trail.append(w)
                yield from rec()
                trail.pop()
                visited[0] &= ~(1 << w)

        yield from rec()

    edge_index = {e: i for i, e in enumerate(g.sorted_edges)}

    def mask_of(path: tuple[int, ...]) -> int:
        mask = 0
        for a, b in zip(path, path[1:]):
            mask |= 1 << edge_index[canonical_edge(a, b)]
        return mask

    def search(used: int, assigned: dict[int, tuple[int, ...]]):
        if len(assigned) == len(pairs):
            return dict(assigned)
        pending_ix = [i for i in range(len(pairs)) if i not in assigned]
        pending = [pairs[i] for i in pending_ix]
        if not _residual_prune_ok(adj, used, pending, g.n):
            return None
        # Fail-first: route the most constrained pair next.
        best_ix, best_count = -1, None
        for i in pending_ix:
            s, t = pairs[i]
            cnt = _shortest_path_count(adj, used, s, t, g.n)
            if cnt == 0:
                return None
            if best_count is None or cnt < best_count:
                best_ix, best_count = i, cnt
        s, t = pairs[best_ix]
        for path in paths_between(s, t, used):
            assigned[best_ix] = path
            found = search(used | mask_of(path), assigned)
            if found is not None:
                return found
            del assigned[best_ix]
        return None

    try:
        found = search(0, {})
    except _OutOfBudget:
        return SolveResult(SolveStatus.BUDGET_EXCEEDED, None, expansions[0])

    if found is None:
        return SolveResult(SolveStatus.INFEASIBLE, None, expansions[0])
    system = PathSystem(tuple(found[i] for i in range(len(pairs))))
    validate_path_system(g, pairing, system)
    return SolveResult(SolveStatus.FEASIBLE, system, expansions[0])
