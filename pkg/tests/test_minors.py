import pytest

from pathpair import SimpleGraph, SizeCapExceeded, complete, has_clique_minor
from pathpair.caps import CAP_ENV_VAR
from pathpair.lemmalab import random_simple_graph

from conftest import contraction_has_clique_minor, cycle, petersen


def k5_minus_edge():
    edges = [e for e in complete(5).edges if e != (0, 1)]
    return SimpleGraph.from_edges(5, edges)


def test_k5_has_k5_minor():
    assert has_clique_minor(complete(5), 5)


def test_k5_minus_edge_has_no_k5_minor():
    assert not has_clique_minor(k5_minus_edge(), 5)


def test_petersen_has_k5_minor():
    g = petersen()
    assert contraction_has_clique_minor(g, 5)  # independent oracle
    assert has_clique_minor(g, 5)


def test_cycle_has_k3_but_not_k4_minor():
    g = cycle(6)
    assert has_clique_minor(g, 3)
    assert not has_clique_minor(g, 4)


def test_trivial_sizes():
    assert has_clique_minor(complete(1), 1)
    assert not has_clique_minor(complete(3), 4)
    with pytest.raises(ValueError):
        has_clique_minor(complete(3), 0)


def test_matches_contraction_oracle_on_random_graphs():
    for seed in range(40):
        g = random_simple_graph(6, 0.45, seed=seed)
        for t in (3, 4, 5):
            assert has_clique_minor(g, t) == contraction_has_clique_minor(g, t), (
                seed,
                t,
                g.sorted_edges,
            )


def test_cap_enforced_and_overridable(monkeypatch):
    g = SimpleGraph.from_edges(16, [(i, i + 1) for i in range(15)])
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    with pytest.raises(SizeCapExceeded):
        has_clique_minor(g, 3)
    monkeypatch.setenv(CAP_ENV_VAR, "20")
    assert has_clique_minor(g, 2)
    assert not has_clique_minor(g, 3)
