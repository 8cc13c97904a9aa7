"""Text formats: canonical edge lists, DOT export, pairing files.

Edge-list format: first line ``n=<count>``, then one ``u v`` pair per
line. ``#`` starts a comment (whole-line or trailing), blank lines are
ignored, and any run of whitespace separates tokens. ``role <vertex>
<name>`` lines may be interleaved; `parse_graph` skips them so the
annotated output of the generators round-trips.

Emission is bit-exact canonical: edges sorted lexicographically, one
space between tokens, one trailing newline.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Multigraph, Pairing, SimpleGraph, canonical_edge


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_header(lines: list[tuple[int, str]], what: str) -> tuple[int, int]:
    if not lines:
        raise GraphFormatError(f"empty {what} text, expected an n=<count> header")
    lineno, header = lines[0]
    if not header.startswith("n="):
        raise GraphFormatError(f"line {lineno}: expected n=<count> header, got {header!r}")
    try:
        n = int(header[2:].strip())
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad vertex count {header[2:]!r}") from None
    if n < 0:
        raise GraphFormatError(f"line {lineno}: vertex count must be >= 0")
    return n, lineno


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if stripped:
            out.append((i, stripped))
    return out


def _parse_endpoint_line(lineno: int, line: str, n: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1} in {line!r}")
    return u, v


def parse_graph(text: str) -> SimpleGraph:
    """Parse a simple graph; rejects loops, duplicate edges, bad ids."""
    lines = _content_lines(text)
    n, _ = _parse_header(lines, "graph")
    edges: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        if line.startswith("role "):
            continue
        u, v = _parse_endpoint_line(lineno, line, n)
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop {u} {v} not allowed")
        e = canonical_edge(u, v)
        if e in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(e)
    return SimpleGraph(n, frozenset(edges))


def emit_graph(g: SimpleGraph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    """Same format as simple graphs, but repeated lines mean parallel
    multiedges and ``u u`` lines mean loops. Ids follow line order."""
    lines = _content_lines(text)
    n, _ = _parse_header(lines, "multigraph")
    pairs = []
    for lineno, line in lines[1:]:
        if line.startswith("role "):
            continue
        pairs.append(_parse_endpoint_line(lineno, line, n))
    return Multigraph.from_pairs(n, pairs)


def emit_multigraph(mg: Multigraph) -> str:
    lines = [f"n={mg.n}"]
    lines.extend(f"{u} {v}" for _, u, v in sorted(mg.multiedges, key=lambda t: (t[1], t[2], t[0])))
    return "\n".join(lines) + "\n"


def parse_pairing(text: str) -> Pairing:
    """One ``u v`` pair per line; no header. Comments and blanks as usual."""
    pairs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer terminal in {line!r}") from None
    try:
        return Pairing.from_pairs(pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_pairing(p: Pairing) -> str:
    return "".join(f"{u} {v}\n" for u, v in p.pairs)


def parse_roles(text: str) -> dict[int, str]:
    """Collect ``role <vertex> <name>`` annotations from edge-list text."""
    roles: dict[int, str] = {}
    for lineno, line in _content_lines(text):
        if not line.startswith("role "):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'role <vertex> <name>'")
        try:
            v = int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in role line") from None
        roles[v] = parts[2]
    return roles


def emit_roles(roles: dict[int, str]) -> str:
    return "".join(f"role {v} {roles[v]}\n" for v in sorted(roles))


def emit_dot(g: SimpleGraph, roles: dict[int, str] | None = None) -> str:
    """GraphViz DOT form, canonical: vertices then edges, both sorted."""
    lines = ["graph G {"]
    for v in range(g.n):
        if roles and v in roles:
            lines.append(f'  {v} [label="{v}:{roles[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
