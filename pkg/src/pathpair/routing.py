"""Deterministic routing of full pairings on triangle-hub graphs.

Every terminal pair falls into exactly one of five cases, each routed by
a path of length 1 or 2 whose midpoint (if any) is a hub:

1. hub to hub: the direct triangle edge.
2. hub to a class it is adjacent to: the direct edge.
3. hub to the opposite class: two edges, following the fixed rotation
   x_AB -> x_BC -> x_CA -> x_AB around the hub triangle.
4. two vertices of the same class: through one of their two common hubs.
5. vertices of different classes: through their unique common hub.

The resulting paths are pairwise edge-disjoint for every full pairing.
Because this routine is the executable content of a proof, it re-checks
edge-disjointness of its own output and raises instead of ever returning
a bad system.
"""

from __future__ import annotations

from enum import Enum

from .errors import CertificationError
from .families import ROLE_X_AB, ROLE_X_BC, ROLE_X_CA, TriangleHubGraph
from .graphs import Pairing, PathSystem, path_system_problems


class RouteCase(Enum):
    HUB_HUB = 1
    HUB_ADJACENT_CLASS = 2
    HUB_OPPOSITE_CLASS = 3
    SAME_CLASS = 4
    DIFFERENT_CLASS = 5


# Tie-break for case 4: of the two hubs adjacent to a class, prefer the
# one whose role name sorts first (xAB < xBC < xCA). Any choice keeps the
# system edge-disjoint; fixing one makes outputs reproducible.
_CLASS_HUBS_LOW_FIRST = {
    "A": (ROLE_X_AB, ROLE_X_CA),
    "B": (ROLE_X_AB, ROLE_X_BC),
    "C": (ROLE_X_BC, ROLE_X_CA),
}

_COMMON_HUB = {
    frozenset(("A", "B")): ROLE_X_AB,
    frozenset(("B", "C")): ROLE_X_BC,
    frozenset(("A", "C")): ROLE_X_CA,
}

_ROTATION = {ROLE_X_AB: ROLE_X_BC, ROLE_X_BC: ROLE_X_CA, ROLE_X_CA: ROLE_X_AB}

_HUB_ROLES = (ROLE_X_AB, ROLE_X_BC, ROLE_X_CA)

_ADJACENT_CLASSES = {
    ROLE_X_AB: {"A", "B"},
    ROLE_X_BC: {"B", "C"},
    ROLE_X_CA: {"C", "A"},
}


def _hub_by_role(g: TriangleHubGraph, role: str) -> int:
    return {ROLE_X_AB: g.hub_ab, ROLE_X_BC: g.hub_bc, ROLE_X_CA: g.hub_ca}[role]


def classify_pair(g: TriangleHubGraph, u: int, v: int) -> RouteCase:
    """The unique routing case for a terminal pair (total on u != v)."""
    if u == v:
        raise ValueError("a terminal pair needs two distinct vertices")
    ru, rv = g.role_of(u), g.role_of(v)
    u_hub, v_hub = ru in _HUB_ROLES, rv in _HUB_ROLES
    if u_hub and v_hub:
        return RouteCase.HUB_HUB
    if u_hub or v_hub:
        hub_role, class_role = (ru, rv) if u_hub else (rv, ru)
        if class_role in _ADJACENT_CLASSES[hub_role]:
            return RouteCase.HUB_ADJACENT_CLASS
        return RouteCase.HUB_OPPOSITE_CLASS
    if ru == rv:
        return RouteCase.SAME_CLASS
    return RouteCase.DIFFERENT_CLASS


def _route_pair(g: TriangleHubGraph, u: int, v: int, case4_high: bool) -> tuple[int, ...]:
    case = classify_pair(g, u, v)
    ru, rv = g.role_of(u), g.role_of(v)
    if case is RouteCase.HUB_HUB:
        return (u, v)
    if case is RouteCase.HUB_ADJACENT_CLASS:
        return (u, v)
    if case is RouteCase.HUB_OPPOSITE_CLASS:
        hub, other = (u, v) if ru in _HUB_ROLES else (v, u)
        mid = _hub_by_role(g, _ROTATION[g.role_of(hub)])
        return (hub, mid, other)
    if case is RouteCase.SAME_CLASS:
        low, high = _CLASS_HUBS_LOW_FIRST[ru]
        mid = _hub_by_role(g, high if case4_high else low)
        return (u, mid, v)
    mid = _hub_by_role(g, _COMMON_HUB[frozenset((ru, rv))])
    return (u, mid, v)


def route(g: TriangleHubGraph, pairing: Pairing, case4_high: bool = False) -> PathSystem:
    """Route a full pairing, one path of length <= 2 per pair.

    `case4_high` flips the same-class tie-break to the other available
    hub; both settings yield edge-disjoint systems. Raises
    CertificationError if the output fails its own disjointness check,
    ValueError if the pairing is not full.
    """
    if not pairing.is_full(g.n):
        raise ValueError(
            f"pairing covers {len(pairing.terminals)} of {g.n} vertices, need a full pairing"
        )
    paths = tuple(_route_pair(g, u, v, case4_high) for u, v in pairing.pairs)
    system = PathSystem(paths)
    problems = path_system_problems(g.graph, pairing, system)
    if problems:
        raise CertificationError(
            "router produced an invalid path system: " + "; ".join(problems)
        )
    return system
