"""The ``.ecg`` text format.

::

    # comment lines start with '#'
    n m
    u v c        (m lines, 0 <= u, v < n, u != v, c >= 0)

Blank lines are ignored. ``serialize_ecg`` writes the canonical form: header,
then edges sorted by ``(u, v)`` with ``u < v``, no comments.
"""

from __future__ import annotations

from pathlib import Path

from rainbowpath.graph import EdgeColoredGraph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _ints(text: str, count: int, lineno: int, what: str) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers for {what}, got {text.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer field in {what}: {text.strip()!r}", lineno) from None


def parse_ecg(text: str) -> EdgeColoredGraph:
    lines = [
        (i, line)
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header line 'n m'")
    head_no, head = lines[0]
    n, m = _ints(head, 2, head_no, "header 'n m'")
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count in header", head_no)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else head_no)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    adj: dict[tuple[int, int], int] = {}
    edges = []
    for lineno, line in body:
        u, v, c = _ints(line, 3, lineno, "edge 'u v c'")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in edge {u} {v} {c}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if c < 0:
            raise ParseError(f"negative color {c}", lineno)
        key = (min(u, v), max(u, v))
        if key in adj:
            raise ParseError(f"duplicate edge {key[0]}-{key[1]} (first at line {adj[key]})", lineno)
        adj[key] = lineno
        edges.append((u, v, c))
    try:
        return build_graph(n, edges)
    except GraphError as exc:  # pragma: no cover - checks above mirror build_graph
        raise ParseError(str(exc)) from exc


def serialize_ecg(G: EdgeColoredGraph) -> str:
    out = [f"{G.n} {G.m}\n"]
    out.extend(f"{u} {v} {c}\n" for u, v, c in G.edges)
    return "".join(out)


def read_ecg(path: str | Path) -> EdgeColoredGraph:
    return parse_ecg(Path(path).read_text())


def write_ecg(G: EdgeColoredGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_ecg(G))
