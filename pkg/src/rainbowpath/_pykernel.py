"""Pure-Python branch-and-bound kernels for the exact oracle.

Both kernels take the graph as parallel adjacency lists: ``nbrs[v]`` holds the
neighbors of ``v`` in ascending order and ``cols[v]`` the dense color index of
each corresponding edge. Vertex and color sets are Python-int bitmasks, so there
is no size ceiling here (the compiled twin is limited to 64 of each).

Traversal order is ascending vertex index everywhere, which makes the first
optimum found the lexicographically smallest one. ``_ckernel`` must keep the
exact same order.
"""

from __future__ import annotations


class _Stop(Exception):
    pass


def _color_masks(nbrs, cols):
    masks = []
    for ns, cs in zip(nbrs, cols):
        m = 0
        for c in cs:
            m |= 1 << c
        masks.append(m)
    return masks


def longest_path(nbrs, cols, starts, budget):
    """Longest rainbow path starting at any vertex of ``starts``.

    Returns ``(length, witness, nodes, over_budget)``. ``length`` is -1 only
    when ``starts`` is empty.
    """
    n = len(nbrs)
    vcol = _color_masks(nbrs, cols)
    bits = [[1 << c for c in cs] for cs in cols]
    all_colors = 0
    for m in vcol:
        all_colors |= m
    ceiling = min(n - 1, all_colors.bit_count())
    full = (1 << n) - 1

    best_len = -1
    best_path: list[int] = []
    nodes = 0
    path: list[int] = []

    def dfs(v, visited, used, length):
        nonlocal best_len, best_path, nodes
        nodes += 1
        if nodes > budget:
            raise _Stop
        if length > best_len:
            best_len = length
            best_path = path[:]
            if best_len >= ceiling:
                return True
        unvisited = full & ~visited
        avail = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            avail |= vcol[low.bit_length() - 1]
            rest ^= low
        avail &= ~used
        bound = min(avail.bit_count(), unvisited.bit_count())
        if length + bound <= best_len:
            return False
        for w, cb in zip(nbrs[v], bits[v]):
            if (visited >> w) & 1 or used & cb:
                continue
            path.append(w)
            if dfs(w, visited | (1 << w), used | cb, length + 1):
                return True
            path.pop()
        return False

    try:
        for s in starts:
            path[:] = [s]
            if dfs(s, 1 << s, 0, 0):
                break
    except _Stop:
        return best_len, best_path, nodes, True
    return best_len, best_path, nodes, False


def find_cycle(nbrs, cols, size, budget):
    """First rainbow cycle on exactly ``size`` vertices, listed from its smallest vertex.

    Returns ``(cycle_or_None, nodes, over_budget)``.
    """
    n = len(nbrs)
    vcol = _color_masks(nbrs, cols)
    bits = [[1 << c for c in cs] for cs in cols]
    nodes = 0
    path: list[int] = []
    found: list[int] | None = None

    def dfs(s, v, visited, used, count):
        nonlocal nodes, found
        nodes += 1
        if nodes > budget:
            raise _Stop
        if count == size:
            for w, cb in zip(nbrs[v], bits[v]):
                if w == s:
                    if not used & cb:
                        found = path[:]
                        return True
                    break
            return False
        # remaining edges: size - count + 1 (including closing edge)
        allowed = ~visited & ~((1 << (s + 1)) - 1) & ((1 << n) - 1)
        if (allowed.bit_count() < size - count):
            return False
        avail = vcol[s]
        rest = allowed
        while rest:
            low = rest & -rest
            avail |= vcol[low.bit_length() - 1]
            rest ^= low
        if (avail & ~used).bit_count() < size - count + 1:
            return False
        for w, cb in zip(nbrs[v], bits[v]):
            if w <= s or (visited >> w) & 1 or used & cb:
                continue
            path.append(w)
            if dfs(s, w, visited | (1 << w), used | cb, count + 1):
                return True
            path.pop()
        return False

    try:
        for s in range(n - size + 1):
            path[:] = [s]
            if dfs(s, s, 1 << s, 0, 1):
                break
    except _Stop:
        return None, nodes, True
    return found, nodes, False
