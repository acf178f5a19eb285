"""Edge-colored simple graphs, color degrees and rainbow validity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""

    def __init__(self, message: str, edge: tuple | None = None):
        super().__init__(message)
        self.edge = edge


class Check(NamedTuple):
    """Outcome of a validity check; truthy iff ``ok``."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class EdgeColoredGraph:
    """Immutable simple undirected graph on vertices ``0..n-1`` with a color per edge.

    Colors are arbitrary non-negative integers. ``color_index`` re-indexes the
    colors actually used densely (ascending order) so that color sets can be
    stored as bitmasks.
    """

    __slots__ = ("_n", "_adj", "_colors", "_color_index", "_edges")

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for edge in edge_list:
            u, v, c = edge
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {edge}: endpoint out of range 0..{n - 1}", edge)
            if u == v:
                raise GraphError(f"edge {edge}: self-loop at vertex {u}", edge)
            if c < 0:
                raise GraphError(f"edge {edge}: negative color {c}", edge)
            if v in adj[u]:
                raise GraphError(f"edge {edge}: duplicate pair {min(u, v)}-{max(u, v)}", edge)
            adj[u][v] = c
            adj[v][u] = c
        self._n = n
        self._adj = tuple({w: a[w] for w in sorted(a)} for a in adj)
        self._edges = tuple(
            (u, v, a[v]) for u, a in enumerate(self._adj) for v in a if u < v
        )
        self._colors = frozenset(c for _, _, c in self._edges)
        self._color_index = {c: i for i, c in enumerate(sorted(self._colors))}

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Edges ``(u, v, color)`` with ``u < v``, sorted by ``(u, v)``."""
        return self._edges

    @property
    def colors(self) -> frozenset[int]:
        """The color universe C: exactly the colors present on edges."""
        return self._colors

    @property
    def color_index(self) -> dict[int, int]:
        return dict(self._color_index)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> dict[int, int]:
        """Mapping neighbor -> edge color, in ascending neighbor order."""
        self._check_vertex(v)
        return dict(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def color(self, u: int, v: int) -> int | None:
        """Color of edge ``u-v``, or None when the edge is absent."""
        if not 0 <= u < self._n:
            return None
        return self._adj[u].get(v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def color_neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._adj[v].values())

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self._n}, m={self.m}, colors={len(self._colors)})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, edge_list)


def color_degree(G: EdgeColoredGraph, v: int) -> int:
    return len(G.color_neighborhood(v))


def min_color_degree(G: EdgeColoredGraph) -> int:
    """Largest k such that every vertex has color degree at least k."""
    if G.n == 0:
        return 0
    return min(color_degree(G, v) for v in G.vertices())


def is_rainbow_path(G: EdgeColoredGraph, seq: Sequence[int]) -> Check:
    seq = list(seq)
    if not seq:
        return Check(False, "empty sequence")
    seen: set[int] = set()
    used: set[int] = set()
    for i, v in enumerate(seq):
        if not 0 <= v < G.n:
            return Check(False, f"vertex {v} out of range")
        if v in seen:
            return Check(False, f"repeated vertex {v}")
        seen.add(v)
        if i:
            c = G.color(seq[i - 1], v)
            if c is None:
                return Check(False, f"missing edge {seq[i - 1]}-{v}")
            if c in used:
                return Check(False, f"repeated color {c}")
            used.add(c)
    return Check(True)


def is_rainbow_cycle(G: EdgeColoredGraph, seq: Sequence[int]) -> Check:
    seq = list(seq)
    if len(seq) < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {len(seq)}")
    check = is_rainbow_path(G, seq)
    if not check:
        return check
    c = G.color(seq[-1], seq[0])
    if c is None:
        return Check(False, f"missing closing edge {seq[-1]}-{seq[0]}")
    if c in path_colors(G, seq):
        return Check(False, f"repeated color {c}")
    return Check(True)


def path_colors(G: EdgeColoredGraph, seq: Sequence[int]) -> list[int]:
    """Edge colors along ``seq`` in order (no validation beyond edge presence)."""
    out = []
    for a, b in zip(seq, seq[1:]):
        c = G.color(a, b)
        if c is None:
            raise GraphError(f"missing edge {a}-{b}", (a, b))
        out.append(c)
    return out


@dataclass(frozen=True)
class RainbowPath:
    """A validated rainbow path ``u_0..u_t``; ``colors`` is its color set U."""

    vertices: tuple[int, ...]
    colors: frozenset[int] = field(compare=False)

    @classmethod
    def of(cls, G: EdgeColoredGraph, seq: Sequence[int]) -> RainbowPath:
        check = is_rainbow_path(G, seq)
        if not check:
            raise ValueError(f"not a rainbow path {list(seq)}: {check.reason}")
        return cls(tuple(seq), frozenset(path_colors(G, seq)))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def missing_colors(self, G: EdgeColoredGraph) -> frozenset[int]:
        """U^c = C \\ U against the host graph."""
        return G.colors - self.colors

    def reversed(self) -> RainbowPath:
        return RainbowPath(self.vertices[::-1], self.colors)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class RainbowCycle:
    """A validated rainbow cycle ``u_0..u_t`` with implied closing edge ``u_t-u_0``."""

    vertices: tuple[int, ...]
    colors: frozenset[int] = field(compare=False)

    @classmethod
    def of(cls, G: EdgeColoredGraph, seq: Sequence[int]) -> RainbowCycle:
        check = is_rainbow_cycle(G, seq)
        if not check:
            raise ValueError(f"not a rainbow cycle {list(seq)}: {check.reason}")
        seq = tuple(seq)
        return cls(seq, frozenset(path_colors(G, seq + seq[:1])))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def outside(self, G: EdgeColoredGraph) -> list[int]:
        """V(G) minus the cycle vertices, ascending."""
        inside = set(self.vertices)
        return [v for v in G.vertices() if v not in inside]

    def rotated(self, r: int) -> tuple[int, ...]:
        return self.vertices[r:] + self.vertices[:r]

    def __len__(self) -> int:
        return len(self.vertices)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundReport:
    k: int
    t: int
    lemma1_bound: int
    theorem_bound: int
    saito_bound: int

    @property
    def meets_theorem(self) -> bool:
        return self.t >= self.theorem_bound


def bounds(k: int, t: int) -> BoundReport:
    """Lower bounds ceil((k+1)/2), ceil(3k/5) and the conjectured ceil(2k/3)."""
    return BoundReport(
        k=k,
        t=t,
        lemma1_bound=ceil_div(k + 1, 2),
        theorem_bound=ceil_div(3 * k, 5),
        saito_bound=ceil_div(2 * k, 3),
    )
