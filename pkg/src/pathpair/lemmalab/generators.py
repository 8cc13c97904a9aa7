"""Seed-deterministic random inputs for the property suites.

The planar generator triangulates incrementally (Apollonian insertion
into a random face), sub-samples the triangulation, and spreads the
requested multiplicity over the surviving support. The same seed always
reproduces the same object, so failures quote a single integer.
"""

from __future__ import annotations

import random

from ..graphs import Multigraph, SimpleGraph, canonical_edge


def _random_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    edges = [(0, 1), (0, 2), (1, 2)]
    faces = [(0, 1, 2), (0, 1, 2)]  # both sides of the starting triangle
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.extend(((a, v), (b, v), (c, v)))
        faces.extend(((a, b, v), (a, c, v), (b, c, v)))
    return sorted(canonical_edge(u, v) for u, v in edges)


def random_planar_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """Planar multigraph: underlying support drawn from a random
    triangulation (so at most 3n-6 simple edges), multiplicities summing
    to m. Loop-free."""
    if m < 0:
        raise ValueError(f"multiedge count must be >= 0, got {m}")
    if m > 0 and n < 2:
        raise ValueError(f"cannot place {m} multiedges on {n} vertices")
    rng = random.Random(seed)
    available = _random_triangulation(n, rng)
    support_size = min(m, len(available))
    support = sorted(rng.sample(available, support_size)) if support_size else []
    multiplicity = [1] * support_size
    for _ in range(m - support_size):
        multiplicity[rng.randrange(support_size)] += 1
    pairs = []
    for edge, count in zip(support, multiplicity):
        pairs.extend([edge] * count)
    return Multigraph.from_pairs(n, pairs)


def random_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """Uniform loop-free multigraph: endpoints drawn independently."""
    if m > 0 and n < 2:
        raise ValueError(f"cannot place {m} multiedges on {n} vertices")
    rng = random.Random(seed)
    pairs = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        pairs.append(canonical_edge(u, v))
    return Multigraph.from_pairs(n, pairs)


def random_simple_graph(n: int, p: float, seed: int) -> SimpleGraph:
    """Erdos-Renyi G(n, p), seed-deterministic."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return SimpleGraph.from_edges(n, edges)


def random_bipartite_planar(
    n: int, seed: int
) -> tuple[SimpleGraph, frozenset[int], frozenset[int]]:
    """Random planar graph made bipartite: 2-color a triangulation's
    vertices and keep only the cut edges. Returns (graph, side_a, side_b)
    with side_b guaranteed nonempty (and side_a too, for n >= 2)."""
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    rng = random.Random(seed)
    tri = _random_triangulation(n, rng)
    color = [rng.randrange(2) for _ in range(n)]
    if all(c == 0 for c in color):
        color[n - 1] = 1
    if all(c == 1 for c in color):
        color[n - 1] = 0
    side_a = frozenset(v for v in range(n) if color[v] == 0)
    side_b = frozenset(v for v in range(n) if color[v] == 1)
    kept = [e for e in tri if (e[0] in side_a) != (e[1] in side_a)]
    return SimpleGraph.from_edges(n, kept), side_a, side_b


def random_dirac_graph(n: int, seed: int) -> SimpleGraph:
    """Even-order graph with minimum degree >= n/2: start from G(n, 0.5)
    and deterministically top up deficient vertices."""
    if n < 2 or n % 2:
        raise ValueError(f"need an even n >= 2, got {n}")
    rng = random.Random(seed)
    g = random_simple_graph(n, 0.5, rng.randrange(2**32))
    edges = set(g.edges)

    def degree(v: int) -> int:
        return sum(1 for e in edges if v in e)

    while True:
        deficient = [v for v in range(n) if degree(v) < n // 2]
        if not deficient:
            break
        v = deficient[0]
        candidates = sorted(
            w for w in range(n) if w != v and canonical_edge(v, w) not in edges
        )
        edges.add(canonical_edge(v, rng.choice(candidates)))
    return SimpleGraph(n, frozenset(edges))
