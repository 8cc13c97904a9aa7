import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathpair import (
    GraphFormatError,
    Multigraph,
    Pairing,
    SimpleGraph,
    emit_dot,
    emit_graph,
    emit_multigraph,
    emit_pairing,
    emit_roles,
    parse_graph,
    parse_multigraph,
    parse_pairing,
    parse_roles,
    triangle_hub,
)


def test_parse_path_on_three():
    g = parse_graph("n=3\n0 1\n1 2\n")
    assert g.n == 3 and g.sorted_edges == ((0, 1), (1, 2))


def test_emit_is_canonical():
    g = SimpleGraph.from_edges(3, [(2, 1), (1, 0)])
    assert emit_graph(g) == "n=3\n0 1\n1 2\n"


def test_round_trip_normalizes():
    messy = "# header comment\nn=4\n\n 3   1 \n0 2   # trailing\n"
    assert emit_graph(parse_graph(messy)) == "n=4\n0 2\n1 3\n"


@given(st.integers(min_value=0, max_value=9), st.data())
@settings(max_examples=80, deadline=None)
def test_round_trip_identity(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = SimpleGraph.from_edges(n, edges)
    assert parse_graph(emit_graph(g)) == g


def test_loop_rejected():
    with pytest.raises(GraphFormatError, match="loop"):
        parse_graph("n=2\n0 0\n")


def test_duplicate_rejected():
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_graph("n=2\n0 1\n1 0\n")


def test_out_of_range_rejected():
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_graph("n=2\n0 2\n")


def test_missing_header_rejected():
    with pytest.raises(GraphFormatError, match="header"):
        parse_graph("0 1\n")


def test_malformed_line_rejected():
    with pytest.raises(GraphFormatError, match="expected"):
        parse_graph("n=3\n0 1 2\n")


def test_role_lines_are_skipped_and_recoverable():
    hub = triangle_hub(1)
    text = emit_graph(hub.graph) + emit_roles(hub.roles())
    assert parse_graph(text) == hub.graph
    assert parse_roles(text) == hub.roles()


def test_multigraph_round_trip_with_loops_and_parallels():
    mg = Multigraph.from_pairs(3, [(0, 1), (0, 1), (2, 2), (1, 2)])
    text = emit_multigraph(mg)
    back = parse_multigraph(text)
    assert back.n == 3
    assert sorted((u, v) for _, u, v in back.multiedges) == sorted(
        (u, v) for _, u, v in mg.multiedges
    )


def test_pairing_round_trip():
    p = Pairing.from_pairs([(4, 1), (0, 2)])
    assert parse_pairing(emit_pairing(p)) == p


def test_pairing_rejects_reuse():
    with pytest.raises(GraphFormatError):
        parse_pairing("0 1\n1 2\n")


def test_dot_output_shape():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    dot = emit_dot(g, roles={0: "A"})
    assert dot.splitlines()[0] == "graph G {"
    assert '  0 [label="0:A"];' in dot
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot
    assert dot.rstrip().endswith("}")


def test_dot_deterministic():
    g = triangle_hub(2).graph
    assert emit_dot(g) == emit_dot(g)
