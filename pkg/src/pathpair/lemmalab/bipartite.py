"""Degree distribution facts for bipartite planar graphs.

A bipartite planar graph on n vertices has fewer than 2n edges. Pushing
that bound around the side-A degree classes yields three inequalities
that hold for every bipartite planar (A, B) with B nonempty:

  * at least e(A, B) - n - 3|B| vertices of A have degree exactly 2,
  * the set A' of A-vertices of degree >= 3 satisfies |A'| < 2|B|,
  * e(A', B) < 6|B|.

`lemma5_check` computes everything, asserts all three, and returns the
numbers for external re-verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import CertificationError
from ..graphs import SimpleGraph
from ..planarity import is_planar


@dataclass(frozen=True)
class Lemma5Report:
    n: int
    size_a: int
    size_b: int
    e_ab: int
    degree_two_count: int
    a_prime: frozenset[int]
    e_a_prime_b: int
    degree_two_bound: int
    a_prime_bound: int
    e_a_prime_bound: int

    @property
    def all_hold(self) -> bool:
        return (
            self.degree_two_count >= self.degree_two_bound
            and len(self.a_prime) < self.a_prime_bound
            and self.e_a_prime_b < self.e_a_prime_bound
        )


def lemma5_check(
    g: SimpleGraph, a: Iterable[int], b: Iterable[int]
) -> Lemma5Report:
    """Verify the three degree-distribution inequalities on (g, A, B).

    Preconditions: A and B partition the vertices, every edge crosses
    between them, g is planar, and B is nonempty (each inequality is
    strict in |B|). Violations of the conclusions raise
    CertificationError since they are impossible for valid inputs.
    """
    a_set, b_set = frozenset(a), frozenset(b)
    if a_set & b_set or a_set | b_set != frozenset(range(g.n)):
        raise ValueError("A and B must partition the vertex set")
    if not b_set:
        raise ValueError("side B must be nonempty")
    for u, v in g.edges:
        if (u in a_set) == (v in a_set):
            raise ValueError(f"edge {(u, v)} does not cross between A and B")
    if not is_planar(g).planar:
        raise ValueError("graph is not planar")

    e_ab = g.edge_count
    degrees = {v: g.degree(v) for v in a_set}
    deg2 = sum(1 for d in degrees.values() if d == 2)
    a_prime = frozenset(v for v, d in degrees.items() if d >= 3)
    e_a_prime_b = sum(degrees[v] for v in a_prime)

    report = Lemma5Report(
        n=g.n,
        size_a=len(a_set),
        size_b=len(b_set),
        e_ab=e_ab,
        degree_two_count=deg2,
        a_prime=a_prime,
        e_a_prime_b=e_a_prime_b,
        degree_two_bound=e_ab - g.n - 3 * len(b_set),
        a_prime_bound=2 * len(b_set),
        e_a_prime_bound=6 * len(b_set),
    )
    if not report.all_hold:
        raise CertificationError(
            f"degree-distribution inequalities failed on a valid input: {report}"
        )
    return report
