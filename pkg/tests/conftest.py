"""Shared fixtures and independent oracles.

The oracles here deliberately mirror nothing from the package internals:
the naive path-assignment enumerator knows no pruning heuristics, and the
minor oracle works by recursive edge contraction instead of branch-set
search. Agreement between package and oracle is the point of the tests.
"""

from itertools import combinations, permutations

import pytest

from pathpair import Pairing, SimpleGraph, path_system_problems
from pathpair.graphs import canonical_edge, path_edges


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)


def grid(rows: int, cols: int) -> SimpleGraph:
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return SimpleGraph.from_edges(rows * cols, edges)


# ---------------------------------------------------------------------------
# Naive edge-disjoint paths oracle
# ---------------------------------------------------------------------------


def all_simple_paths(g: SimpleGraph, s: int, t: int) -> list[tuple[int, ...]]:
    out = []

    def rec(path, visited):
        for w in g.neighbors(path[-1]):
            if w == t:
                out.append(tuple(path) + (t,))
            elif w not in visited:
                visited.add(w)
                path.append(w)
                rec(path, visited)
                path.pop()
                visited.remove(w)

    rec([s], {s})
    return out


def naive_disjoint_paths(g: SimpleGraph, pairing: Pairing):
    """Assign simple paths to pairs in order, trying every combination.

    Returns a list of paths or None. Exhaustive by construction.
    """
    choices = [all_simple_paths(g, u, v) for u, v in pairing.pairs]

    def rec(i, used):
        if i == len(choices):
            return []
        for p in choices[i]:
            es = set(path_edges(p))
            if not (es & used):
                rest = rec(i + 1, used | es)
                if rest is not None:
                    return [p] + rest
        return None

    return rec(0, set())


# ---------------------------------------------------------------------------
# Contraction-based clique minor oracle
# ---------------------------------------------------------------------------


def contraction_has_clique_minor(g: SimpleGraph, t: int) -> bool:
    """K_t minor via the recursion: either a K_t subgraph exists, or some
    single edge contraction produces a graph with a K_t minor."""

    def has_clique(n, edges):
        es = set(edges)
        return any(
            all(canonical_edge(a, b) in es for a, b in combinations(sub, 2))
            for sub in combinations(range(n), t)
        )

    failed = set()

    def rec(n, edges):
        if n < t:
            return False
        key = (n, edges)
        if key in failed:
            return False
        if has_clique(n, edges):
            return True
        for u, v in sorted(edges):

            def relabel(w):
                w2 = u if w == v else w
                return w2 if w2 < v else w2 - 1

            merged = frozenset(
                canonical_edge(relabel(a), relabel(b))
                for a, b in edges
                if {a, b} != {u, v} and relabel(a) != relabel(b)
            )
            if rec(n - 1, merged):
                return True
        failed.add(key)
        return False

    return rec(g.n, frozenset(g.edges))


# ---------------------------------------------------------------------------
# Graphs up to isomorphism (desk scale)
# ---------------------------------------------------------------------------


def graph_classes(n: int, max_edges: int) -> list[SimpleGraph]:
    """One representative per isomorphism class of n-vertex graphs with at
    most max_edges edges, built by canonical single-edge extension."""
    pairs = list(combinations(range(n), 2))
    idx = {e: i for i, e in enumerate(pairs)}
    tables = [
        [idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        for perm in permutations(range(n))
    ]

    def canon(mask: int) -> int:
        best = mask
        for table in tables:
            out = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                out |= 1 << table[b.bit_length() - 1]
            if out < best:
                best = out
        return best

    masks = [0]
    level = {0}
    for _ in range(min(max_edges, len(pairs))):
        nxt = set()
        for mask in level:
            for i in range(len(pairs)):
                if not (mask >> i & 1):
                    nxt.add(canon(mask | (1 << i)))
        level = nxt
        masks.extend(sorted(nxt))

    return [
        SimpleGraph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        for mask in masks
    ]


def assert_valid_system(g, pairing, system):
    problems = path_system_problems(g, pairing, system)
    assert not problems, problems


@pytest.fixture
def c4():
    return cycle(4)
