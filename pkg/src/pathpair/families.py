"""Generators for the graph families used throughout the workbench.

Vertex numbering is deterministic so the router's case analysis and the
golden tests stay stable: stars put the center at 0, the triangle-hub
construction packs its three classes into contiguous ranges and gives the
hubs the last three ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import SimpleGraph

ROLE_A = "A"
ROLE_B = "B"
ROLE_C = "C"
ROLE_X_AB = "xAB"
ROLE_X_BC = "xBC"
ROLE_X_CA = "xCA"


def star(m: int) -> SimpleGraph:
    """K_{1,m}: vertex 0 is the center, 1..m the leaves."""
    if m < 1:
        raise ValueError(f"star needs at least one leaf, got {m}")
    return SimpleGraph.from_edges(m + 1, ((0, i) for i in range(1, m + 1)))


def complete(t: int) -> SimpleGraph:
    if t < 1:
        raise ValueError(f"complete graph needs at least one vertex, got {t}")
    return SimpleGraph.from_edges(t, combinations(range(t), 2))


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    """K_{m,n}: side one is 0..m-1, side two is m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError(f"both sides must be nonempty, got {m}, {n}")
    return SimpleGraph.from_edges(
        m + n, ((i, m + j) for i in range(m) for j in range(n))
    )


def k_t_q(t: int, q: int) -> SimpleGraph:
    """K_t with q-1 leaves hung on each clique vertex.

    n = t*q vertices: the clique occupies 0..t-1 and clique vertex i owns
    leaves t + i*(q-1) .. t + (i+1)*(q-1) - 1. Max degree is t + q - 2.
    """
    if t < 1 or q < 1:
        raise ValueError(f"parameters must be >= 1, got t={t}, q={q}")
    edges = list(combinations(range(t), 2))
    for i in range(t):
        base = t + i * (q - 1)
        edges.extend((i, base + j) for j in range(q - 1))
    return SimpleGraph.from_edges(t * q, edges)


@dataclass(frozen=True)
class TriangleHubGraph:
    """Planar graph on n = 6k vertices whose max degree is exactly 2n/3.

    Three classes A, B, C of 2k-1 degree-two vertices, plus three mutually
    adjacent hubs: x_AB sees all of A and B, x_BC all of B and C, x_CA all
    of C and A. Every full pairing of the vertices is routable with
    edge-disjoint paths of length at most 2 (see pathpair.routing).
    """

    k: int
    graph: SimpleGraph
    class_a: frozenset[int]
    class_b: frozenset[int]
    class_c: frozenset[int]
    hub_ab: int
    hub_bc: int
    hub_ca: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def hubs(self) -> tuple[int, int, int]:
        return (self.hub_ab, self.hub_bc, self.hub_ca)

    def role_of(self, v: int) -> str:
        if v == self.hub_ab:
            return ROLE_X_AB
        if v == self.hub_bc:
            return ROLE_X_BC
        if v == self.hub_ca:
            return ROLE_X_CA
        if v in self.class_a:
            return ROLE_A
        if v in self.class_b:
            return ROLE_B
        if v in self.class_c:
            return ROLE_C
        raise ValueError(f"vertex {v} not in graph of size {self.n}")

    def roles(self) -> dict[int, str]:
        return {v: self.role_of(v) for v in range(self.n)}


def triangle_hub(k: int) -> TriangleHubGraph:
    """Build the 6k-vertex triangle-hub graph.

    Numbering: A = 0..2k-2, B = 2k-1..4k-3, C = 4k-2..6k-4, then
    x_AB = 6k-3, x_BC = 6k-2, x_CA = 6k-1.
    """
    if k < 1:
        raise ValueError(f"size parameter must be >= 1, got {k}")
    size = 2 * k - 1
    a = range(0, size)
    b = range(size, 2 * size)
    c = range(2 * size, 3 * size)
    x_ab, x_bc, x_ca = 6 * k - 3, 6 * k - 2, 6 * k - 1

    edges = [(x_ab, x_bc), (x_bc, x_ca), (x_ab, x_ca)]
    edges.extend((x_ab, v) for v in a)
    edges.extend((x_ab, v) for v in b)
    edges.extend((x_bc, v) for v in b)
    edges.extend((x_bc, v) for v in c)
    edges.extend((x_ca, v) for v in c)
    edges.extend((x_ca, v) for v in a)

    return TriangleHubGraph(
        k=k,
        graph=SimpleGraph.from_edges(6 * k, edges),
        class_a=frozenset(a),
        class_b=frozenset(b),
        class_c=frozenset(c),
        hub_ab=x_ab,
        hub_bc=x_bc,
        hub_ca=x_ca,
    )
