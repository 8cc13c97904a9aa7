"""Planarity testing with checkable certificates.

The test itself is networkx's left-right (edge-constraint) planarity
check, which produces a combinatorial embedding on success and a
Kuratowski subgraph on failure. Both certificates are re-verifiable here
without networkx: `embedding_is_valid` traces faces and checks the Euler
relation, and `kuratowski_kind` smooths the witness down to its branch
graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graphs import SimpleGraph, canonical_edge

Rotation = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlanarityReport:
    planar: bool
    rotation: Rotation | None
    kuratowski: SimpleGraph | None

    def __post_init__(self):
        assert self.planar == (self.rotation is not None)
        assert self.planar == (self.kuratowski is None)


def _to_networkx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: SimpleGraph) -> PlanarityReport:
    """Planarity verdict plus certificate.

    Planar: a rotation system (cyclic neighbor order per vertex) realizing
    an embedding. Non-planar: a subgraph that is a subdivision of K5 or
    K_{3,3}, with the host's vertex numbering.
    """
    ok, cert = nx.check_planarity(_to_networkx(g), counterexample=True)
    if ok:
        rotation = tuple(
            tuple(cert.neighbors_cw_order(v)) if cert.degree(v) else ()
            for v in range(g.n)
        )
        return PlanarityReport(True, rotation, None)
    witness = SimpleGraph(
        g.n, frozenset(canonical_edge(u, v) for u, v in cert.edges())
    )
    return PlanarityReport(False, None, witness)


def embedding_is_valid(g: SimpleGraph, rotation: Rotation) -> bool:
    """Check a rotation system genuinely embeds g in the plane.

    Validates that each vertex's cyclic order is a permutation of its
    neighbors, then traces face orbits of the dart permutation and checks
    V - E + F = 2 on every connected component (isolated vertices span one
    face on their own).
    """
    if len(rotation) != g.n:
        return False
    for v in range(g.n):
        if sorted(rotation[v]) != list(g.adjacency[v]):
            return False

    position = [
        {w: i for i, w in enumerate(rotation[v])} for v in range(g.n)
    ]

    def next_dart(u: int, v: int) -> tuple[int, int]:
        # Entering v along (u, v): leave along the neighbor after u in v's order.
        i = position[v][u]
        order = rotation[v]
        return v, order[(i + 1) % len(order)]

    seen: set[tuple[int, int]] = set()
    darts = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    faces_at_vertex: dict[int, set[int]] = {v: set() for v in range(g.n)}
    face_id = 0
    for start in darts:
        if start in seen:
            continue
        dart = start
        while True:
            seen.add(dart)
            faces_at_vertex[dart[0]].add(face_id)
            dart = next_dart(*dart)
            if dart == start:
                break
        face_id += 1

    for comp in g.connected_components():
        comp_edges = sum(1 for u, v in g.edges if u in comp)
        if comp_edges == 0:
            continue  # a lone vertex lies in a single face, V - E + F = 2 trivially
        comp_faces = set()
        for v in comp:
            comp_faces.update(faces_at_vertex[v])
        if len(comp) - comp_edges + len(comp_faces) != 2:
            return False
    return True


def kuratowski_kind(witness: SimpleGraph) -> str | None:
    """Classify a subdivision witness: "K5", "K3,3", or None if neither.

    Smooths away degree-2 vertices by walking each subdivided path between
    branch vertices, then inspects the branch graph.
    """
    degree = [witness.degree(v) for v in range(witness.n)]
    branch = [v for v in range(witness.n) if degree[v] >= 3]
    branch_set = set(branch)

    paths_seen: set[tuple[int, ...]] = set()
    branch_edges: set[tuple[int, int]] = set()
    for b in branch:
        for first in witness.neighbors(b):
            prev, cur = b, first
            walk = [b, cur]
            while cur not in branch_set:
                if degree[cur] != 2:
                    return None  # dangling path, not a subdivision
                a, c = witness.neighbors(cur)
                nxt = c if a == prev else a
                prev, cur = cur, nxt
                walk.append(cur)
            if cur == b:
                return None  # a cycle back to itself
            key = tuple(walk) if walk[0] < walk[-1] else tuple(reversed(walk))
            if key in paths_seen:
                continue
            paths_seen.add(key)
            e = canonical_edge(b, cur)
            if e in branch_edges:
                return None  # two internally disjoint paths between the same pair
            branch_edges.add(e)

    # Every witness edge must lie on some walked path.
    covered = set()
    for walk in paths_seen:
        covered.update(canonical_edge(a, b) for a, b in zip(walk, walk[1:]))
    if covered != witness.edges:
        return None

    if len(branch) == 5 and all(degree[b] == 4 for b in branch) and len(branch_edges) == 10:
        return "K5"
    if len(branch) == 6 and all(degree[b] == 3 for b in branch) and len(branch_edges) == 9:
        core = SimpleGraph.from_edges(
            witness.n, branch_edges
        ).induced(branch)
        if _is_bipartite_3_3(core):
            return "K3,3"
    return None


def _is_bipartite_3_3(core: SimpleGraph) -> bool:
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in core.neighbors(v):
            if w not in color:
                color[w] = 1 - color[v]
                stack.append(w)
            elif color[w] == color[v]:
                return False
    sides = sorted(list(color.values()).count(c) for c in (0, 1))
    return len(color) == 6 and sides == [3, 3]
