import pytest

from pathpair import (
    SimpleGraph,
    complete,
    complete_bipartite,
    embedding_is_valid,
    has_clique_minor,
    induced_edge_count,
    is_planar,
    kuratowski_kind,
    triangle_hub,
)
from pathpair.lemmalab import random_bipartite_planar, random_planar_multigraph

from conftest import cycle, petersen

from itertools import combinations


def test_k4_planar_with_valid_embedding():
    g = complete(4)
    report = is_planar(g)
    assert report.planar
    assert embedding_is_valid(g, report.rotation)


def test_k5_witness_is_k5_subdivision():
    report = is_planar(complete(5))
    assert not report.planar
    assert report.kuratowski.edges <= complete(5).edges
    assert kuratowski_kind(report.kuratowski) == "K5"


def test_k33_witness():
    report = is_planar(complete_bipartite(3, 3))
    assert not report.planar
    assert kuratowski_kind(report.kuratowski) == "K3,3"


def test_petersen_not_planar():
    report = is_planar(petersen())
    assert not report.planar
    assert kuratowski_kind(report.kuratowski) in ("K5", "K3,3")
    assert report.kuratowski.edges <= petersen().edges


def test_disconnected_and_isolated_vertices():
    g = SimpleGraph.from_edges(5, [(0, 1), (2, 3)])
    report = is_planar(g)
    assert report.planar
    assert embedding_is_valid(g, report.rotation)


def test_triangle_hub_embeddings_small():
    for k in range(1, 9):
        hub = triangle_hub(k)
        report = is_planar(hub.graph)
        assert report.planar
        assert embedding_is_valid(hub.graph, report.rotation)


def test_embedding_validator_rejects_a_bad_rotation():
    g = complete(4)
    report = is_planar(g)
    rotation = list(report.rotation)
    # K4 has essentially one embedding; an odd swap at one vertex breaks it.
    v = max(range(g.n), key=lambda w: len(rotation[w]))
    r = list(rotation[v])
    r[0], r[1] = r[1], r[0]
    rotation[v] = tuple(r)
    assert not embedding_is_valid(g, tuple(rotation))


def test_planar_implies_no_k5_minor():
    candidates = [
        complete(4),
        cycle(6),
        triangle_hub(1).graph,
        random_planar_multigraph(9, 18, seed=3).underlying_simple(),
        random_planar_multigraph(10, 21, seed=4).underlying_simple(),
    ]
    for g in candidates:
        assert is_planar(g).planar
        assert not has_clique_minor(g, 5)


def test_planar_induced_edge_bound():
    # any vertex subset of a planar graph spans at most 3|X| - 6 edges
    for seed in range(6):
        g = random_planar_multigraph(9, 20, seed=seed).underlying_simple()
        for size in range(3, g.n + 1):
            for x in combinations(range(g.n), size):
                assert induced_edge_count(g, x) <= 3 * size - 6


def test_bipartite_planar_edge_bound():
    for seed in range(25):
        g, _, _ = random_bipartite_planar(12, seed=seed)
        assert g.edge_count <= 2 * g.n - 4


def test_kuratowski_kind_rejects_non_subdivisions():
    assert kuratowski_kind(complete(4)) is None
    assert kuratowski_kind(cycle(5)) is None
