"""Degree partition refinement, bad-edge classification, hub multigraph.

These are the concrete steps used to squeeze a planar graph between "many
cut edges" and "fewer than 2n bipartite planar edges": split vertices by
a degree threshold, migrate vertices until nobody in the small-degree
side has more neighbors there than across, classify the edges that break
the degree-2-into-B* structure, and collapse the degree-2 vertices into a
multigraph on B*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import CertificationError
from ..graphs import Multigraph, SimpleGraph, canonical_edge, edge_cut


@dataclass(frozen=True)
class DegreePartitionState:
    """A snapshot of the migration process. Immutable; each step makes a new one."""

    graph: SimpleGraph
    threshold: int
    step: int
    side_a: frozenset[int]
    side_b: frozenset[int]
    cut_size: int

    def degrees_into(self, v: int) -> tuple[int, int]:
        """(neighbors in side_a, neighbors in side_b) of v."""
        in_a = sum(1 for w in self.graph.neighbors(v) if w in self.side_a)
        return in_a, self.graph.degree(v) - in_a

    def migratable(self) -> int | None:
        """Smallest side-A vertex with more A-neighbors than B-neighbors."""
        for v in sorted(self.side_a):
            in_a, in_b = self.degrees_into(v)
            if in_a > in_b:
                return v
        return None


def degree_partition(g: SimpleGraph, threshold: int) -> DegreePartitionState:
    """Initial split: side B holds every vertex of degree >= threshold."""
    if threshold < 1:
        raise ValueError(f"degree threshold must be >= 1, got {threshold}")
    side_b = frozenset(v for v in range(g.n) if g.degree(v) >= threshold)
    side_a = frozenset(range(g.n)) - side_b
    return DegreePartitionState(
        graph=g,
        threshold=threshold,
        step=0,
        side_a=side_a,
        side_b=side_b,
        cut_size=edge_cut(g, side_a),
    )


def refine_step(state: DegreePartitionState) -> DegreePartitionState | None:
    """Migrate one vertex from A to B, or None if the state is stable.

    Moving a vertex with more A-neighbors than B-neighbors raises the cut
    size by at least one, which is what bounds the number of steps.
    """
    v = state.migratable()
    if v is None:
        return None
    side_a = state.side_a - {v}
    side_b = state.side_b | {v}
    new_cut = edge_cut(state.graph, side_a)
    if new_cut < state.cut_size + 1:
        raise CertificationError(
            f"cut size failed to grow when migrating vertex {v}: "
            f"{state.cut_size} -> {new_cut}"
        )
    return DegreePartitionState(
        graph=state.graph,
        threshold=state.threshold,
        step=state.step + 1,
        side_a=side_a,
        side_b=side_b,
        cut_size=new_cut,
    )


def refine_partition(state: DegreePartitionState) -> DegreePartitionState:
    """Iterate migrations to the stable fixpoint.

    Terminates within e(G) steps: the cut grows by at least 1 per step
    and cannot exceed the edge count.
    """
    while True:
        nxt = refine_step(state)
        if nxt is None:
            return state
        state = nxt


# ---------------------------------------------------------------------------
# Bad edges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BadEdgeReport:
    """Classification of edges that obstruct the degree-2-into-B* structure.

    Type I: inside B*. Type II: inside A* with an endpoint whose B*-degree
    is not 2. Type III: inside A*, both endpoints of B*-degree 2 but with
    different B*-neighborhoods. Type IV: an A*-to-B* edge whose A*
    endpoint has B*-degree at least 3. The types are disjoint by
    definition; y is the set of A* vertices with exactly two B* neighbors.
    """

    a_star: frozenset[int]
    b_star: frozenset[int]
    y: frozenset[int]
    type_i: tuple[tuple[int, int], ...]
    type_ii: tuple[tuple[int, int], ...]
    type_iii: tuple[tuple[int, int], ...]
    type_iv: tuple[tuple[int, int], ...]
    not_bad: tuple[tuple[int, int], ...]

    @property
    def bad_count(self) -> int:
        return (
            len(self.type_i) + len(self.type_ii) + len(self.type_iii) + len(self.type_iv)
        )


def classify_bad_edges(
    g: SimpleGraph, a_star: Iterable[int], b_star: Iterable[int]
) -> BadEdgeReport:
    """Assign every edge of g to one bad type or to "not bad"."""
    a_set, b_set = frozenset(a_star), frozenset(b_star)
    if a_set & b_set or a_set | b_set != frozenset(range(g.n)):
        raise ValueError("a_star and b_star must partition the vertex set")

    def b_neighborhood(v: int) -> frozenset[int]:
        return frozenset(w for w in g.neighbors(v) if w in b_set)

    b_deg = {v: len(b_neighborhood(v)) for v in a_set}
    buckets: dict[str, list[tuple[int, int]]] = {
        "I": [], "II": [], "III": [], "IV": [], "ok": []
    }
    for u, v in g.sorted_edges:
        if u in b_set and v in b_set:
            buckets["I"].append((u, v))
        elif u in a_set and v in a_set:
            if b_deg[u] != 2 or b_deg[v] != 2:
                buckets["II"].append((u, v))
            elif b_neighborhood(u) != b_neighborhood(v):
                buckets["III"].append((u, v))
            else:
                buckets["ok"].append((u, v))
        else:
            a_end = u if u in a_set else v
            if b_deg[a_end] >= 3:
                buckets["IV"].append((u, v))
            else:
                buckets["ok"].append((u, v))

    return BadEdgeReport(
        a_star=a_set,
        b_star=b_set,
        y=frozenset(v for v in a_set if b_deg[v] == 2),
        type_i=tuple(buckets["I"]),
        type_ii=tuple(buckets["II"]),
        type_iii=tuple(buckets["III"]),
        type_iv=tuple(buckets["IV"]),
        not_bad=tuple(buckets["ok"]),
    )


def split_into_matchings(g: SimpleGraph) -> list[list[tuple[int, int]]]:
    """Partition the edges of a max-degree-2 graph into at most 3 matchings.

    Paths 2-color cleanly; an odd cycle needs a third color for its last
    edge. Used to certify that the matching decomposition the Type III
    bound relies on actually exists.
    """
    if any(g.degree(v) > 2 for v in range(g.n)):
        raise ValueError("graph must have maximum degree at most 2")
    colors: dict[tuple[int, int], int] = {}
    seen: set[int] = set()

    def walk(start: int, first_color: int):
        """Color the path/cycle through `start`, alternating from first_color."""
        prev, cur, color = None, start, first_color
        while True:
            seen.add(cur)
            nxt = None
            for w in g.neighbors(cur):
                e = canonical_edge(cur, w)
                if w != prev and e not in colors:
                    nxt = w
                    break
            if nxt is None:
                return
            e = canonical_edge(cur, nxt)
            if nxt == start:  # closing a cycle: avoid clashing with the first edge
                other = colors[canonical_edge(start, next(
                    w for w in g.neighbors(start)
                    if canonical_edge(start, w) in colors
                ))]
                colors[e] = 2 if color == other else color
                return
            colors[e] = color
            prev, cur, color = cur, nxt, 1 - color

    for v in range(g.n):
        if v in seen or g.degree(v) == 0:
            continue
        # Start walks at degree-1 endpoints first so paths get 2 colors.
        if g.degree(v) == 1:
            walk(v, 0)
    for v in range(g.n):
        if v not in seen and g.degree(v) > 0:
            walk(v, 0)

    out: list[list[tuple[int, int]]] = [[], [], []]
    for e, c in sorted(colors.items()):
        out[c].append(e)
    result = [m for m in out if m]
    for matching in result:
        covered = [v for e in matching for v in e]
        if len(covered) != len(set(covered)):
            raise CertificationError("edge coloring produced a non-matching class")
    if set(colors) != set(g.sorted_edges):
        raise CertificationError("edge coloring missed an edge")
    return result


# ---------------------------------------------------------------------------
# Hub multigraph
# ---------------------------------------------------------------------------


def hub_multigraph(
    g: SimpleGraph, y: Iterable[int], b_star: Iterable[int]
) -> Multigraph:
    """Collapse degree-2 vertices into a multigraph on b_star.

    Every vertex of y must have exactly two neighbors inside b_star; it
    contributes one multiedge joining them, carrying the y-vertex's id as
    the multiedge id. Vertices of the result are sorted(b_star)
    renumbered 0..|b_star|-1. Planar hosts give planar results, since
    each multiedge is a contracted 2-path of the host.
    """
    y_set, b_set = frozenset(y), frozenset(b_star)
    if y_set & b_set:
        raise ValueError("y and b_star must be disjoint")
    order = sorted(b_set)
    index = {v: i for i, v in enumerate(order)}
    triples = []
    for v in sorted(y_set):
        hubs = sorted(w for w in g.neighbors(v) if w in b_set)
        if len(hubs) != 2:
            raise ValueError(
                f"vertex {v} has {len(hubs)} neighbors in b_star, need exactly 2"
            )
        triples.append((v, index[hubs[0]], index[hubs[1]]))
    return Multigraph(len(order), tuple(triples))
