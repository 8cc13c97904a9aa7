"""Matching extraction with the guarantees the proof machinery leans on.

Maximum mode delegates to networkx's blossom implementation and asserts
the Dirac consequence: an even-order graph with minimum degree >= n/2 is
Hamiltonian, so its maximum matching must be perfect. Greedy mode scans
edges in canonical order and asserts the density bound: a maximal
matching in a graph of edge density d has at least d*n/10 edges (it in
fact has at least d*n/4, but d*n/10 is the contract).
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from ..errors import CertificationError
from ..graphs import SimpleGraph, canonical_edge


def edge_density(g: SimpleGraph) -> Fraction:
    """Edges over C(n, 2); zero for graphs too small to have edges."""
    if g.n < 2:
        return Fraction(0)
    return Fraction(g.edge_count, g.n * (g.n - 1) // 2)


def _greedy(g: SimpleGraph) -> list[tuple[int, int]]:
    taken: set[int] = set()
    out = []
    for u, v in g.sorted_edges:
        if u not in taken and v not in taken:
            out.append((u, v))
            taken.update((u, v))
    return out


def _maximum(g: SimpleGraph) -> list[tuple[int, int]]:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    matching = nx.max_weight_matching(h, maxcardinality=True)
    return sorted(canonical_edge(u, v) for u, v in matching)


def extract_matching(
    g: SimpleGraph, mode: str = "maximum"
) -> tuple[tuple[int, int], ...]:
    """A maximum matching, or a greedy maximal one, as sorted vertex pairs.

    mode="maximum": maximum cardinality; raises CertificationError if a
    Dirac graph (n even, min degree >= n/2) fails to get a perfect
    matching. mode="greedy": deterministic maximal matching; raises if
    it falls below density * n / 10.
    """
    if mode == "maximum":
        pairs = _maximum(g)
        if g.n >= 2 and g.n % 2 == 0:
            min_degree = min(g.degree(v) for v in range(g.n))
            if 2 * min_degree >= g.n and len(pairs) != g.n // 2:
                raise CertificationError(
                    f"Dirac graph on {g.n} vertices got a matching of size "
                    f"{len(pairs)}, expected perfect ({g.n // 2})"
                )
        return tuple(pairs)
    if mode == "greedy":
        pairs = _greedy(g)
        bound = edge_density(g) * g.n / 10
        if len(pairs) < bound:
            raise CertificationError(
                f"greedy matching of size {len(pairs)} under density bound {bound}"
            )
        return tuple(pairs)
    raise ValueError(f"unknown mode {mode!r}, expected 'maximum' or 'greedy'")
