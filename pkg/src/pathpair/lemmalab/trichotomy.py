"""Multiedge clustering trichotomy.

For a multigraph on M multiedges and admissible eps1 + eps2 <= 2^-k, at
least one of three things happens once M is large enough: some multiedge
is incident with at least eps1*M others, or at least eps2*C(M,2) pairs of
multiedges are at distance greater than 1, or there is a "good"
k-matching (k multiedges pairwise at distance exactly 1, whose
contraction produces a K_k on the merged vertices). Everything here is
exact: thresholds are rationals, never floats, because the k=2 base case
of the supporting inequality is an exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..caps import GOOD_MATCHING_MULTIEDGE_CAP, enforce_cap
from ..errors import CertificationError
from ..graphs import Multigraph, multiedge_distance

DEFAULT_TRICHOTOMY_FLOOR = 20


def fact1_sides(k: int) -> tuple[Fraction, Fraction]:
    """Exact values of 2^-k * (1 + 2^-(k+1)) / (1 - 2^-k)^2 and 2^-(k-1)."""
    if k < 2:
        raise ValueError(f"the inequality is stated for k >= 2, got {k}")
    two_k = Fraction(1, 2**k)
    lhs = two_k * (1 + two_k / 2) / (1 - two_k) ** 2
    rhs = 2 * two_k
    return lhs, rhs


def fact1_check(k: int) -> bool:
    """Exact-rational check of the induction-step inequality.

    Also evaluates the equivalent product form
    (2^(-k+2) - 1)(2^(-k-1) - 1) >= 0 and insists the two agree.
    """
    lhs, rhs = fact1_sides(k)
    holds = lhs <= rhs
    product_form = (Fraction(4, 2**k) - 1) * (Fraction(1, 2 ** (k + 1)) - 1) >= 0
    if holds != product_form:
        raise CertificationError(
            f"inequality and its product form disagree at k={k}: "
            f"{lhs} <= {rhs} is {holds}, product form says {product_form}"
        )
    return holds


def incidence_count(mg: Multigraph, e: int) -> int:
    """Number of multiedges other than e sharing an endpoint with e."""
    u, v = mg.endpoints(e)
    ends = {u, v}
    return sum(
        1 for eid, a, b in mg.multiedges if eid != e and (a in ends or b in ends)
    )


def _distance_table(mg: Multigraph) -> dict[tuple[int, int], object]:
    ids = sorted(mg.by_id)
    table: dict[tuple[int, int], object] = {}
    for i, e in enumerate(ids):
        for f in ids[i + 1 :]:
            table[(e, f)] = multiedge_distance(mg, e, f)
    return table


def far_pair_count(mg: Multigraph) -> int:
    """Unordered pairs of multiedges at distance greater than 1
    (unreachable pairs count as far)."""
    return sum(1 for d in _distance_table(mg).values() if d > 1)


def find_good_matching(mg: Multigraph, k: int) -> tuple[int, ...] | None:
    """A set of k multiedges pairwise at distance exactly 1, or None.

    Pairwise distance exactly 1 rules out shared endpoints, so the result
    is automatically a matching. Loops are never candidates. The search
    is exhaustive (a k-clique search in the distance-1 compatibility
    graph), with the lexicographically first witness returned; None means
    the whole space was covered.
    """
    if k < 1:
        raise ValueError(f"matching size must be >= 1, got {k}")
    enforce_cap(mg.multiedge_count, GOOD_MATCHING_MULTIEDGE_CAP, "good matching search")
    ids = sorted(eid for eid, u, v in mg.multiedges if u != v)
    if len(ids) < k:
        return None
    table = _distance_table(mg)
    index = {eid: i for i, eid in enumerate(ids)}
    compat = [0] * len(ids)
    for (e, f), d in table.items():
        if d == 1 and e in index and f in index:
            compat[index[e]] |= 1 << index[f]
            compat[index[f]] |= 1 << index[e]

    def grow(clique: list[int], candidates: int, start: int) -> tuple[int, ...] | None:
        if len(clique) == k:
            return tuple(ids[i] for i in clique)
        m = candidates >> start << start
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            rest = candidates & compat[i]
            if len(clique) + 1 + rest.bit_count() < k:
                continue
            clique.append(i)
            found = grow(clique, rest, i + 1)
            if found is not None:
                return found
            clique.pop()
        return None

    return grow([], (1 << len(ids)) - 1, 0)


@dataclass(frozen=True)
class TrichotomyReport:
    """Self-verifying evaluation of the three conditions.

    Every flag can be recomputed from the counts carried alongside it.
    Below the configured floor the verdict is advisory: the trichotomy is
    only promised for large multiedge counts.
    """

    m: int
    k: int
    eps1: Fraction
    eps2: Fraction
    max_incidence: int
    far_pairs: int
    good_matching: tuple[int, ...] | None
    incidence_condition: bool
    far_condition: bool
    matching_condition: bool
    floor: int
    advisory: bool

    @property
    def any_condition(self) -> bool:
        return self.incidence_condition or self.far_condition or self.matching_condition


def lemma3_trichotomy(
    mg: Multigraph,
    k: int,
    eps1: Fraction,
    eps2: Fraction,
    floor: int = DEFAULT_TRICHOTOMY_FLOOR,
) -> TrichotomyReport:
    """Evaluate all three conditions exactly and report which hold.

    Requires eps1, eps2 >= 0 with eps1 + eps2 <= 2^-k. The report never
    asserts that some condition must hold; that guarantee only kicks in
    for sufficiently many multiedges, which the floor approximates.
    """
    if k < 1:
        raise ValueError(f"matching target must be >= 1, got {k}")
    eps1, eps2 = Fraction(eps1), Fraction(eps2)
    if eps1 < 0 or eps2 < 0:
        raise ValueError("eps1 and eps2 must be nonnegative")
    if eps1 + eps2 > Fraction(1, 2**k):
        raise ValueError(
            f"eps1 + eps2 = {eps1 + eps2} exceeds 2^-{k} = {Fraction(1, 2**k)}"
        )
    m = mg.multiedge_count
    max_incidence = max(
        (incidence_count(mg, eid) for eid, _, _ in mg.multiedges), default=0
    )
    far = far_pair_count(mg)
    good = find_good_matching(mg, k) if m else None
    return TrichotomyReport(
        m=m,
        k=k,
        eps1=eps1,
        eps2=eps2,
        max_incidence=max_incidence,
        far_pairs=far,
        good_matching=good,
        incidence_condition=m > 0 and max_incidence >= eps1 * m,
        far_condition=far >= eps2 * comb(m, 2),
        matching_condition=good is not None,
        floor=floor,
        advisory=m < floor,
    )
