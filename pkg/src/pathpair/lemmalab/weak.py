"""Weak paths and the auxiliary pairing graph.

Relative to a partition (A, B), a *weak path* starts and ends in A, uses
no edge inside B, and crosses the cut at most twice. Such a path visits
at most one B vertex, so weak reachability from x is the A-component of
x plus every A-component hanging off a B vertex adjacent to it; that
structure gives linear-time reachability with explicit witness paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import CertificationError
from ..graphs import SimpleGraph


def _validate_partition(g: SimpleGraph, a: Iterable[int], b: Iterable[int]):
    a_set, b_set = frozenset(a), frozenset(b)
    if a_set & b_set or a_set | b_set != frozenset(range(g.n)):
        raise ValueError("a and b must partition the vertex set")
    return a_set, b_set


def is_weak_path(
    g: SimpleGraph, a: Iterable[int], b: Iterable[int], path: tuple[int, ...]
) -> bool:
    """Check the weak-path predicate for an explicit vertex sequence."""
    a_set, b_set = _validate_partition(g, a, b)
    if not path or len(set(path)) != len(path):
        return False
    if path[0] not in a_set or path[-1] not in a_set:
        return False
    cut_edges = 0
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            return False
        if u in b_set and v in b_set:
            return False
        if (u in b_set) != (v in b_set):
            cut_edges += 1
    return cut_edges <= 2


@dataclass(frozen=True)
class WeakReachability:
    """Weak reachability from one source, with witnesses.

    ball: the A-vertices within graph distance `radius` of the source
    (distances measured in the whole graph). reachable: the A-vertices
    joined to the source by a weak path; every member has a stored
    witness path. intersection: ball & reachable.
    """

    a: frozenset[int]
    b: frozenset[int]
    source: int
    radius: int
    ball: frozenset[int]
    reachable: frozenset[int]
    intersection: frozenset[int]
    witnesses: Mapping[int, tuple[int, ...]]


def _component_paths(
    g: SimpleGraph, a_set: frozenset[int], root: int
) -> dict[int, tuple[int, ...]]:
    """BFS tree paths from root within g[A]."""
    paths = {root: (root,)}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in a_set and w not in paths:
                paths[w] = paths[v] + (w,)
                queue.append(w)
    return paths


def weak_reachability(
    g: SimpleGraph, a: Iterable[int], b: Iterable[int], x: int, radius: int
) -> WeakReachability:
    """Compute the weak-reachable set, the distance ball, and witnesses.

    Witness construction: targets in x's own A-component get their BFS
    tree path; a target in another A-component gets x -> (entry vertex
    adjacent to some B vertex w) -> w -> (landing vertex) -> target,
    which uses exactly two cut edges and no B-internal ones.
    """
    a_set, b_set = _validate_partition(g, a, b)
    if x not in a_set:
        raise ValueError(f"source {x} must lie in side A")
    if radius < 0:
        raise ValueError("radius must be >= 0")

    home = _component_paths(g, a_set, x)
    witnesses: dict[int, tuple[int, ...]] = dict(home)

    for w in sorted(b_set):
        entries = sorted(v for v in g.neighbors(w) if v in home)
        if not entries:
            continue
        entry = entries[0]
        for landing in sorted(v for v in g.neighbors(w) if v in a_set):
            if landing in home:
                continue
            far = _component_paths(g, a_set, landing)
            for target, tail in far.items():
                if target not in witnesses:
                    witnesses[target] = home[entry] + (w,) + tail

    # Distance ball in the full graph, then restricted to A.
    dist = {x: 0}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for u in g.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    ball = frozenset(v for v in dist if v in a_set)

    reachable = frozenset(witnesses)
    for target, path in witnesses.items():
        if not is_weak_path(g, a_set, b_set, path):
            raise CertificationError(f"stored witness for {target} is not weak: {path}")

    return WeakReachability(
        a=a_set,
        b=b_set,
        source=x,
        radius=radius,
        ball=ball,
        reachable=reachable,
        intersection=ball & reachable,
        witnesses=witnesses,
    )


def auxiliary_graph_from_unreachable_sets(
    members: Iterable[int], near_sets: Mapping[int, frozenset[int]]
) -> SimpleGraph:
    """Join two members x != y whenever y is outside x's near set.

    The rule layer of the auxiliary pairing graph: callers supply the
    per-vertex sets (usually ball-and-reachable intersections) and get
    the graph on sorted(members) renumbered 0..m-1. Raises if the rule
    comes out asymmetric, which would mean the sets are inconsistent.
    """
    order = sorted(set(members))
    index = {v: i for i, v in enumerate(order)}
    edges = set()
    for xi, x in enumerate(order):
        for y in order[xi + 1 :]:
            xy = y not in near_sets[x]
            yx = x not in near_sets[y]
            if xy != yx:
                raise CertificationError(
                    f"asymmetric near sets: {y} in U[{x}] is {not xy}, "
                    f"{x} in U[{y}] is {not yx}"
                )
            if xy:
                edges.add((index[x], index[y]))
    return SimpleGraph(len(order), frozenset(edges))


def build_auxiliary_pairing_graph(
    g: SimpleGraph, a: Iterable[int], u: Iterable[int], radius: int
) -> SimpleGraph:
    """The pairing graph on u: adjacency means "far apart or weakly
    separated", so any matching in it pairs vertices whose connecting
    paths are forced to be long or to cross the cut often.

    Vertex i of the result is sorted(u)[i].
    """
    a_set = frozenset(a)
    u_set = frozenset(u)
    if not u_set <= a_set:
        raise ValueError("u must be a subset of a")
    b_set = frozenset(range(g.n)) - a_set
    near = {
        x: weak_reachability(g, a_set, b_set, x, radius).intersection for x in u_set
    }
    return auxiliary_graph_from_unreachable_sets(u_set, near)
