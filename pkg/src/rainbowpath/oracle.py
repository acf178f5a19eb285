"""Exact maximum rainbow path lengths and rainbow cycle search.

The search is a depth-first branch and bound over (endpoint, visited vertices,
used colors). A node is cut when its length plus the number of still-usable
colors (capped by the number of unvisited vertices) cannot beat the incumbent.
Neighbors are expanded in ascending vertex order, so the reported witness is
the lexicographically smallest optimal vertex sequence.

The hot loop runs in the compiled ``_ckernel`` extension when it is available
and the instance fits in 64-bit masks; otherwise the pure-Python
``_pykernel`` is used. Set ``RAINBOWPATH_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from rainbowpath import _pykernel
from rainbowpath.graph import EdgeColoredGraph, RainbowCycle, RainbowPath

try:
    if os.environ.get("RAINBOWPATH_PURE"):
        raise ImportError("pure-Python kernel forced by RAINBOWPATH_PURE")
    from rainbowpath import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

DEFAULT_MAX_N = 14
DEFAULT_NODE_BUDGET = 10**8


class OracleLimitError(RuntimeError):
    """The instance exceeds the configured size guard or node budget."""

    def __init__(self, message: str, *, n: int, limit: int, nodes: int = 0):
        super().__init__(message)
        self.n = n
        self.limit = limit
        self.nodes = nodes


@dataclass(frozen=True)
class OracleResult:
    t: int
    witness: RainbowPath
    nodes_explored: int


def _kernel_for(G: EdgeColoredGraph, backend: str | None):
    if backend == "python":
        return _pykernel
    fits = G.n <= 64 and len(G.colors) <= 64
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if not fits:
            raise ValueError("compiled kernel is limited to 64 vertices and 64 colors")
        return _ckernel
    if _ckernel is not None and fits:
        return _ckernel
    return _pykernel


def _adjacency(G: EdgeColoredGraph) -> tuple[list[list[int]], list[list[int]]]:
    index = G.color_index
    nbrs, cols = [], []
    for v in G.vertices():
        nb = G.neighbors(v)
        nbrs.append(list(nb))
        cols.append([index[c] for c in nb.values()])
    return nbrs, cols


def _guard(G: EdgeColoredGraph, max_n: int | None) -> None:
    if G.n < 1:
        raise ValueError("graph has no vertices")
    if max_n is not None and G.n > max_n:
        raise OracleLimitError(
            f"instance has n={G.n} vertices, above the oracle guard of {max_n}; "
            "raise max_n explicitly to search anyway",
            n=G.n,
            limit=max_n,
        )


def _longest(G, starts, max_n, node_budget, backend) -> OracleResult:
    _guard(G, max_n)
    nbrs, cols = _adjacency(G)
    kernel = _kernel_for(G, backend)
    t, witness, nodes, over = kernel.longest_path(nbrs, cols, list(starts), node_budget)
    if over:
        raise OracleLimitError(
            f"search exceeded the node budget of {node_budget} (n={G.n}, m={G.m})",
            n=G.n,
            limit=node_budget,
            nodes=nodes,
        )
    return OracleResult(t=t, witness=RainbowPath.of(G, witness), nodes_explored=nodes)


def max_rainbow_path(
    G: EdgeColoredGraph,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    node_budget: int = DEFAULT_NODE_BUDGET,
    backend: str | None = None,
) -> OracleResult:
    """Exact maximum rainbow path length t of ``G`` with a witness path."""
    return _longest(G, G.vertices(), max_n, node_budget, backend)


def max_rainbow_path_from(
    G: EdgeColoredGraph,
    x: int,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    node_budget: int = DEFAULT_NODE_BUDGET,
    backend: str | None = None,
) -> OracleResult:
    """Exact maximum length over rainbow paths whose first vertex is ``x``."""
    if not 0 <= x < G.n:
        raise IndexError(f"vertex {x} out of range 0..{G.n - 1}")
    return _longest(G, [x], max_n, node_budget, backend)


def find_rainbow_cycle_of_length(
    G: EdgeColoredGraph,
    length: int,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    node_budget: int = DEFAULT_NODE_BUDGET,
    backend: str | None = None,
) -> RainbowCycle | None:
    """A rainbow cycle on exactly ``length`` vertices, or None if none exists."""
    if length < 3:
        raise ValueError(f"cycle length must be at least 3, got {length}")
    _guard(G, max_n)
    if length > G.n:
        return None
    nbrs, cols = _adjacency(G)
    kernel = _kernel_for(G, backend)
    cycle, nodes, over = kernel.find_cycle(nbrs, cols, length, node_budget)
    if over:
        raise OracleLimitError(
            f"cycle search exceeded the node budget of {node_budget}",
            n=G.n,
            limit=node_budget,
            nodes=nodes,
        )
    if cycle is None:
        return None
    return RainbowCycle.of(G, cycle)
