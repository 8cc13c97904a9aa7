import pytest

from pathpair import (
    complete,
    complete_bipartite,
    is_planar,
    k_t_q,
    max_degree,
    star,
    triangle_hub,
)


class TestStar:
    def test_star4(self):
        g = star(4)
        assert g.n == 5 and g.degree(0) == 4

    def test_star1_is_single_edge(self):
        g = star(1)
        assert g.n == 2 and g.sorted_edges == ((0, 1),)

    def test_star0_rejected(self):
        with pytest.raises(ValueError):
            star(0)


class TestCompleteFamilies:
    def test_k4_edges(self):
        assert complete(4).edge_count == 6

    def test_k33_edges(self):
        assert complete_bipartite(3, 3).edge_count == 9

    def test_k22_is_a_4_cycle(self):
        g = complete_bipartite(2, 2)
        assert g.n == 4 and g.edge_count == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_empty_side_rejected(self):
        with pytest.raises(ValueError):
            complete_bipartite(0, 3)


class TestLeafedClique:
    def test_shape_4_2(self):
        g = k_t_q(4, 2)
        assert g.n == 8 and max_degree(g) == 4

    def test_q1_is_complete(self):
        assert k_t_q(5, 1) == complete(5)

    def test_shape_3_3(self):
        g = k_t_q(3, 3)
        assert g.n == 9 and max_degree(g) == 4

    def test_formulas_over_grid(self):
        for t in range(1, 9):
            for q in range(1, 9):
                g = k_t_q(t, q)
                assert g.n == t * q
                assert max_degree(g) == t + q - 2


class TestTriangleHub:
    def test_rejected_below_one(self):
        with pytest.raises(ValueError):
            triangle_hub(0)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_invariants(self, k):
        hub = triangle_hub(k)
        g = hub.graph
        assert g.n == 6 * k
        assert len(hub.class_a) == len(hub.class_b) == len(hub.class_c) == 2 * k - 1

        # hubs form a triangle
        for h1 in hub.hubs:
            for h2 in hub.hubs:
                if h1 != h2:
                    assert g.has_edge(h1, h2)

        # exact hub neighborhoods, cyclically
        expected = {
            hub.hub_ab: hub.class_a | hub.class_b | {hub.hub_bc, hub.hub_ca},
            hub.hub_bc: hub.class_b | hub.class_c | {hub.hub_ab, hub.hub_ca},
            hub.hub_ca: hub.class_c | hub.class_a | {hub.hub_ab, hub.hub_bc},
        }
        for h, hood in expected.items():
            assert set(g.neighbors(h)) == hood
            assert g.degree(h) == 4 * k == (2 * g.n) // 3

        for v in hub.class_a | hub.class_b | hub.class_c:
            assert g.degree(v) == 2

        assert is_planar(g).planar

    def test_deterministic_numbering(self):
        hub = triangle_hub(3)
        assert max(hub.class_a) < min(hub.class_b) < max(hub.class_b) < min(hub.class_c)
        assert hub.hubs == (hub.n - 3, hub.n - 2, hub.n - 1)

    def test_roles_cover_all_vertices(self):
        hub = triangle_hub(2)
        roles = hub.roles()
        assert set(roles) == set(range(hub.n))
        assert sorted(roles.values()).count("A") == 3
