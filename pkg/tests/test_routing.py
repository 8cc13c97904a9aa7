import random

import pytest

from pathpair import (
    CertificationError,
    Pairing,
    RouteCase,
    SolveStatus,
    classify_pair,
    find_disjoint_paths,
    route,
    triangle_hub,
)
from pathpair.verifier import full_pairings

from conftest import assert_valid_system


def random_full_pairing(n, rng):
    vs = list(range(n))
    rng.shuffle(vs)
    return Pairing.from_pairs(zip(vs[0::2], vs[1::2]))


class TestClassification:
    def setup_method(self):
        self.hub = triangle_hub(2)  # A=0..2, B=3..5, C=6..8, hubs 9,10,11

    def test_hub_hub(self):
        assert classify_pair(self.hub, self.hub.hub_ab, self.hub.hub_bc) is RouteCase.HUB_HUB

    def test_hub_adjacent_class(self):
        a = min(self.hub.class_a)
        assert classify_pair(self.hub, self.hub.hub_ab, a) is RouteCase.HUB_ADJACENT_CLASS

    def test_hub_opposite_class(self):
        c = min(self.hub.class_c)
        assert classify_pair(self.hub, self.hub.hub_ab, c) is RouteCase.HUB_OPPOSITE_CLASS

    def test_same_class(self):
        a1, a2 = sorted(self.hub.class_a)[:2]
        assert classify_pair(self.hub, a1, a2) is RouteCase.SAME_CLASS

    def test_different_class(self):
        a, b = min(self.hub.class_a), min(self.hub.class_b)
        assert classify_pair(self.hub, a, b) is RouteCase.DIFFERENT_CLASS

    def test_every_pair_has_exactly_one_case(self):
        for u in range(self.hub.n):
            for v in range(u + 1, self.hub.n):
                assert classify_pair(self.hub, u, v) in RouteCase

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            classify_pair(self.hub, 0, 0)


class TestGoldenPaths:
    """Exact paths pinned by the rotation and tie-break rules, k=1:
    A={0}, B={1}, C={2}, x_AB=3, x_BC=4, x_CA=5."""

    def setup_method(self):
        self.hub = triangle_hub(1)

    def route_one(self, pairing):
        return route(self.hub, pairing)

    def test_rotation_case(self):
        # x_AB paired into C goes around the rotation via x_BC
        system = self.route_one(Pairing.from_pairs([(3, 2), (0, 1), (4, 5)]))
        by_pair = dict(zip(Pairing.from_pairs([(3, 2), (0, 1), (4, 5)]).pairs, system.paths))
        assert by_pair[(2, 3)] in ((3, 4, 2), (2, 4, 3))

    def test_same_class_tie_break_is_low_hub(self):
        hub2 = triangle_hub(2)
        a1, a2 = sorted(hub2.class_a)[:2]
        rest = sorted(set(range(hub2.n)) - {a1, a2})
        pairing = Pairing.from_pairs([(a1, a2)] + list(zip(rest[0::2], rest[1::2])))
        system = route(hub2, pairing)
        idx = pairing.pairs.index((a1, a2))
        assert system.paths[idx][1] == hub2.hub_ab  # xAB < xCA
        system_high = route(hub2, pairing, case4_high=True)
        assert system_high.paths[idx][1] == hub2.hub_ca

    def test_spec_walkthrough_pairings(self):
        # {(a, b), (c, x_AB), (x_BC, x_CA)}
        p1 = Pairing.from_pairs([(0, 1), (2, 3), (4, 5)])
        s1 = self.route_one(p1)
        assert_valid_system(self.hub.graph, p1, s1)
        # {(x_AB, x_BC), (x_CA, a), (b, c)}
        p2 = Pairing.from_pairs([(3, 4), (5, 0), (1, 2)])
        s2 = self.route_one(p2)
        assert_valid_system(self.hub.graph, p2, s2)
        by_pair = dict(zip(p2.pairs, s2.paths))
        assert by_pair[(3, 4)] == (3, 4)
        assert by_pair[(0, 5)] in ((0, 5), (5, 0))
        assert by_pair[(1, 2)][1] == 4  # common hub of B and C is x_BC


class TestExhaustiveRouting:
    def test_k1_all_pairings_both_tie_breaks(self):
        hub = triangle_hub(1)
        count = 0
        for pairing in full_pairings(range(hub.n)):
            for high in (False, True):
                system = route(hub, pairing, case4_high=high)
                assert_valid_system(hub.graph, pairing, system)
            count += 1
        assert count == 15

    def test_k1_solver_cross_check(self):
        # both the router and the exact solver succeed on every pairing
        hub = triangle_hub(1)
        for pairing in full_pairings(range(hub.n)):
            route(hub, pairing)
            assert find_disjoint_paths(hub.graph, pairing).status is SolveStatus.FEASIBLE

    def test_path_shapes(self):
        hub = triangle_hub(3)
        rng = random.Random(9)
        for _ in range(200):
            pairing = random_full_pairing(hub.n, rng)
            for path in route(hub, pairing).paths:
                assert len(path) in (2, 3)
                if len(path) == 3:
                    assert path[1] in hub.hubs


@pytest.mark.parametrize("k", range(1, 7))
def test_random_pairings_per_size(k):
    hub = triangle_hub(k)
    rng = random.Random(1000 + k)
    for _ in range(10_000):
        pairing = random_full_pairing(hub.n, rng)
        system = route(hub, pairing)
        assert len(system.paths) == 3 * k


def test_partial_pairing_rejected():
    hub = triangle_hub(1)
    with pytest.raises(ValueError, match="full pairing"):
        route(hub, Pairing.from_pairs([(0, 1)]))
