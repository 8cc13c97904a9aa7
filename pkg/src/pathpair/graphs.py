"""Core graph substrate: simple graphs, multigraphs, pairings, path systems.

All types are immutable after construction and hashable, so they can be
shared freely across threads and used as cache keys. Vertices are dense
integer ids 0..n-1; any human-readable labels live in side tables owned by
the construction that produced the graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Iterator

from .errors import CertificationError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@total_ordering
class _Unreachable:
    """Sentinel distance for multiedges in different components.

    Compares greater than every integer so `d > 1` naturally classifies
    unreachable pairs as "far". There is exactly one instance, UNREACHABLE.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("pathpair.UNREACHABLE")

    def __repr__(self):
        return "UNREACHABLE"


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple undirected graph on vertices 0..n-1.

    Edge pairs are stored once each with endpoints sorted, so two graphs
    compare equal iff they have the same vertex count and edge set.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed in a simple graph")
            if not (u < v):
                raise ValueError(f"edge {(u, v)} not in canonical (sorted) form")
            if v >= self.n:
                raise ValueError(f"edge {(u, v)} endpoint out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(canonical_edge(u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neigh: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges | {canonical_edge(u, v)})

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, renumbered so that sorted(vertices)[i] becomes i."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        keep = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return SimpleGraph(len(vs), keep)

    def connected_components(self) -> list[frozenset[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph with loops, multiedges carrying stable ids.

    Each multiedge is an (id, u, v) triple with u <= v. Ids are arbitrary
    but unique, and survive contraction and induced restriction unchanged,
    which lets reports refer to specific multiedges across derived graphs.
    """

    n: int
    multiedges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for eid, u, v in self.multiedges:
            if eid in seen:
                raise ValueError(f"duplicate multiedge id {eid}")
            seen.add(eid)
            if not (0 <= u <= v < self.n):
                raise ValueError(f"multiedge {eid} endpoints ({u}, {v}) out of range")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build with ids assigned by position: the i-th pair gets id i."""
        triples = tuple(
            (i, *canonical_edge(u, v)) for i, (u, v) in enumerate(pairs)
        )
        return cls(n, triples)

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "Multigraph":
        """Ids follow the canonical sorted edge order of g."""
        return cls(g.n, tuple((i, u, v) for i, (u, v) in enumerate(g.sorted_edges)))

    @property
    def multiedge_count(self) -> int:
        return len(self.multiedges)

    @cached_property
    def by_id(self) -> dict[int, Edge]:
        return {eid: (u, v) for eid, u, v in self.multiedges}

    def endpoints(self, eid: int) -> Edge:
        try:
            return self.by_id[eid]
        except KeyError:
            raise KeyError(f"no multiedge with id {eid}") from None

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Loop-aware neighbor lists (a loop makes a vertex its own neighbor)."""
        neigh: list[set[int]] = [set() for _ in range(self.n)]
        for _, u, v in self.multiedges:
            neigh[u].add(v)
            neigh[v].add(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    def underlying_simple(self) -> SimpleGraph:
        """Forget multiplicities and drop loops."""
        return SimpleGraph(
            self.n, frozenset((u, v) for _, u, v in self.multiedges if u != v)
        )

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Restriction to a vertex subset; sorted(vertices)[i] becomes i, ids kept."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        keep = tuple(
            (eid, index[u], index[v])
            for eid, u, v in self.multiedges
            if u in index and v in index
        )
        return Multigraph(len(vs), keep)

    def __repr__(self):
        return f"Multigraph(n={self.n}, multiedges={len(self.multiedges)})"


@dataclass(frozen=True)
class Pairing:
    """A set of disjoint terminal pairs: a partial matching on the vertex ids.

    Canonical form: each pair sorted, pairs sorted lexicographically. A
    *full* pairing covers every vertex when n is even, all but one when n
    is odd.
    """

    pairs: tuple[Edge, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.pairs:
            if u >= v:
                raise ValueError(f"pair {(u, v)} not in canonical (sorted, distinct) form")
            if u in seen or v in seen:
                raise ValueError(f"terminal reused in pairing: pair {(u, v)}")
            seen.update((u, v))
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("pairs not sorted lexicographically")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Pairing":
        canon = sorted(canonical_edge(u, v) for u, v in pairs)
        return cls(tuple(canon))

    @property
    def terminals(self) -> frozenset[int]:
        return frozenset(t for pair in self.pairs for t in pair)

    def is_full(self, n: int) -> bool:
        return len(self.terminals) == n - (n % 2)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.pairs)


@dataclass(frozen=True)
class PathSystem:
    """One path per pair, indexed identically to the pairing it realizes.

    The edge-disjointness certificate is `validate_path_system`, which
    every producer in this package runs before handing a system out.
    """

    paths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def edges_used(self) -> list[Edge]:
        out = []
        for path in self.paths:
            out.extend(path_edges(path))
        return out


def path_edges(path: tuple[int, ...]) -> list[Edge]:
    return [canonical_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]


def path_system_problems(
    g: SimpleGraph, pairing: Pairing, system: PathSystem
) -> list[str]:
    """All reasons why `system` fails to realize `pairing` in `g` (empty = valid).

    Checks, per path: endpoints match the pair, consecutive vertices are
    adjacent, no vertex repeats (paths are simple); across the system: no
    edge is used twice.
    """
    problems = []
    if len(system.paths) != len(pairing.pairs):
        problems.append(
            f"{len(system.paths)} paths for {len(pairing.pairs)} pairs"
        )
        return problems
    used: dict[Edge, int] = {}
    for i, (pair, path) in enumerate(zip(pairing.pairs, system.paths)):
        if len(path) < 2 and pair[0] != pair[1]:
            problems.append(f"path {i} too short: {path}")
            continue
        if {path[0], path[-1]} != set(pair):
            problems.append(f"path {i} endpoints {path[0]},{path[-1]} != pair {pair}")
        if len(set(path)) != len(path):
            problems.append(f"path {i} repeats a vertex: {path}")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                problems.append(f"path {i} uses non-edge ({a}, {b})")
        for e in path_edges(path):
            if e in used:
                problems.append(f"edge {e} used by paths {used[e]} and {i}")
            else:
                used[e] = i
    return problems


def validate_path_system(g: SimpleGraph, pairing: Pairing, system: PathSystem) -> None:
    problems = path_system_problems(g, pairing, system)
    if problems:
        raise CertificationError(
            "invalid path system: " + "; ".join(problems)
        )


# ---------------------------------------------------------------------------
# Counting operations
# ---------------------------------------------------------------------------


def max_degree(g: SimpleGraph) -> int:
    """Largest vertex degree; 0 for edgeless graphs."""
    if g.n == 0:
        return 0
    return max(len(ns) for ns in g.adjacency)


def _check_subset(g: SimpleGraph, x: Iterable[int]) -> frozenset[int]:
    xs = frozenset(x)
    for v in xs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return xs


def edge_cut(g: SimpleGraph, x: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in x."""
    xs = _check_subset(g, x)
    return sum(1 for u, v in g.edges if (u in xs) != (v in xs))


def induced_edge_count(g: SimpleGraph, x: Iterable[int]) -> int:
    """Number of edges with both endpoints in x."""
    xs = _check_subset(g, x)
    return sum(1 for u, v in g.edges if u in xs and v in xs)


# ---------------------------------------------------------------------------
# Multigraph distance and contraction
# ---------------------------------------------------------------------------


def _vertex_distances(mg: Multigraph, sources: Iterable[int]) -> list[int | None]:
    dist: list[int | None] = [None] * mg.n
    queue: deque[int] = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        for w in mg.adjacency[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def multiedge_distance(mg: Multigraph, e: int, f: int):
    """Shortest path length between the closest endpoints of two multiedges.

    0 means incident (a shared endpoint); UNREACHABLE means the multiedges
    live in different components. e and f must be distinct existing ids.
    """
    if e == f:
        raise ValueError("multiedge distance requires two distinct multiedges")
    eu, ev = mg.endpoints(e)
    fu, fv = mg.endpoints(f)
    dist = _vertex_distances(mg, (eu, ev))
    best = None
    for t in (fu, fv):
        d = dist[t]
        if d is not None and (best is None or d < best):
            best = d
    return UNREACHABLE if best is None else best


def contraction_vertex_map(mg: Multigraph, matching: Iterable[int]) -> dict[int, int]:
    """Old-vertex -> new-vertex map for contracting the given multiedge ids.

    Each matched pair collapses onto its smaller endpoint; survivors are
    then renumbered densely in increasing order of representative.
    """
    ids = list(matching)
    rep = list(range(mg.n))
    touched: set[int] = set()
    for eid in ids:
        u, v = mg.endpoints(eid)
        if u == v:
            raise ValueError(f"multiedge {eid} is a loop, cannot be in a matching")
        if u in touched or v in touched:
            raise ValueError(f"multiedge ids {ids} are not a matching (share vertex)")
        touched.update((u, v))
        rep[max(u, v)] = min(u, v)
    survivors = sorted(set(rep))
    dense = {r: i for i, r in enumerate(survivors)}
    return {v: dense[rep[v]] for v in range(mg.n)}


def contract_matching(mg: Multigraph, matching: Iterable[int]) -> Multigraph:
    """Contract a set of pairwise non-incident multiedges.

    The matched multiedges disappear; every other multiedge is kept with
    its id, endpoints remapped (parallel edges and loops are retained).
    """
    ids = set(matching)
    vmap = contraction_vertex_map(mg, ids)
    kept = tuple(
        (eid, *canonical_edge(vmap[u], vmap[v]))
        for eid, u, v in mg.multiedges
        if eid not in ids
    )
    return Multigraph(mg.n - len(ids), kept)
