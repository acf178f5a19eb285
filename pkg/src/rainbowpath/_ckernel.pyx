# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of ``_pykernel`` (same signatures, same traversal order).

Vertex and color sets are 64-bit masks: callers must fall back to the
pure-Python kernel when n > 64 or more than 64 colors are in use.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_BITS = 64


cdef struct Search:
    int n
    int *off
    int *nbr
    uint64_t *nbit
    uint64_t *vcol
    int *path
    int *best_path
    int best_len
    int ceiling
    int size
    int start
    int found
    int64_t nodes
    int64_t budget
    bint over


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef int _setup(Search *s, list nbrs, list cols) except -1:
    cdef int n = len(nbrs)
    cdef int total = 0, v, i, k
    for v in range(n):
        total += len(nbrs[v])
    s.n = n
    s.off = <int *> malloc((n + 1) * sizeof(int))
    s.nbr = <int *> malloc((total + 1) * sizeof(int))
    s.nbit = <uint64_t *> malloc((total + 1) * sizeof(uint64_t))
    s.vcol = <uint64_t *> malloc((n + 1) * sizeof(uint64_t))
    s.path = <int *> malloc((n + 1) * sizeof(int))
    s.best_path = <int *> malloc((n + 1) * sizeof(int))
    if not (s.off and s.nbr and s.nbit and s.vcol and s.path and s.best_path):
        _teardown(s)
        raise MemoryError()
    k = 0
    for v in range(n):
        s.off[v] = k
        s.vcol[v] = 0
        ns = nbrs[v]
        cs = cols[v]
        for i in range(len(ns)):
            s.nbr[k] = ns[i]
            s.nbit[k] = (<uint64_t> 1) << (<int> cs[i])
            s.vcol[v] |= s.nbit[k]
            k += 1
    s.off[n] = k
    s.nodes = 0
    s.over = False
    s.best_len = -1
    s.found = 0
    return 0


cdef void _teardown(Search *s) noexcept:
    free(s.off)
    free(s.nbr)
    free(s.nbit)
    free(s.vcol)
    free(s.path)
    free(s.best_path)


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t> 0xFFFFFFFFFFFFFFFF
    return ((<uint64_t> 1) << n) - 1


cdef uint64_t _colors_of(Search *s, uint64_t vs) noexcept nogil:
    cdef uint64_t avail = 0
    while vs:
        avail |= s.vcol[__builtin_ctzll(vs)]
        vs &= vs - 1
    return avail


cdef int _dfs_path(Search *s, int v, uint64_t visited, uint64_t used, int length) noexcept nogil:
    cdef int j, w, b
    cdef uint64_t unvisited, avail, cb
    s.nodes += 1
    if s.nodes > s.budget:
        s.over = True
        return 1
    if length > s.best_len:
        s.best_len = length
        for j in range(length + 1):
            s.best_path[j] = s.path[j]
        if s.best_len >= s.ceiling:
            return 1
    unvisited = _full(s.n) & ~visited
    avail = _colors_of(s, unvisited) & ~used
    b = popcount(avail)
    if popcount(unvisited) < b:
        b = popcount(unvisited)
    if length + b <= s.best_len:
        return 0
    for j in range(s.off[v], s.off[v + 1]):
        w = s.nbr[j]
        cb = s.nbit[j]
        if (visited >> w) & 1 or used & cb:
            continue
        s.path[length + 1] = w
        if _dfs_path(s, w, visited | ((<uint64_t> 1) << w), used | cb, length + 1):
            return 1
    return 0


def longest_path(list nbrs, list cols, starts, budget):
    cdef Search s
    cdef int x, stop
    cdef uint64_t all_colors
    s.off = NULL
    _setup(&s, nbrs, cols)
    try:
        s.budget = budget
        all_colors = _colors_of(&s, _full(s.n))
        s.ceiling = min(s.n - 1, popcount(all_colors))
        for x in starts:
            s.path[0] = x
            with nogil:
                stop = _dfs_path(&s, x, (<uint64_t> 1) << x, 0, 0)
            if stop:
                break
        witness = [s.best_path[j] for j in range(s.best_len + 1)]
        return s.best_len, witness, s.nodes, bool(s.over)
    finally:
        _teardown(&s)


cdef int _dfs_cycle(Search *s, int v, uint64_t visited, uint64_t used, int count) noexcept nogil:
    cdef int j, w
    cdef uint64_t allowed, avail, cb
    s.nodes += 1
    if s.nodes > s.budget:
        s.over = True
        return 1
    if count == s.size:
        for j in range(s.off[v], s.off[v + 1]):
            if s.nbr[j] == s.start:
                if not (used & s.nbit[j]):
                    s.found = 1
                    return 1
                break
        return 0
    allowed = _full(s.n) & ~visited & ~_full(s.start + 1)
    if popcount(allowed) < s.size - count:
        return 0
    avail = (s.vcol[s.start] | _colors_of(s, allowed)) & ~used
    if popcount(avail) < s.size - count + 1:
        return 0
    for j in range(s.off[v], s.off[v + 1]):
        w = s.nbr[j]
        cb = s.nbit[j]
        if w <= s.start or (visited >> w) & 1 or used & cb:
            continue
        s.path[count] = w
        if _dfs_cycle(s, w, visited | ((<uint64_t> 1) << w), used | cb, count + 1):
            return 1
    return 0


def find_cycle(list nbrs, list cols, int size, budget):
    cdef Search s
    cdef int x, stop
    s.off = NULL
    _setup(&s, nbrs, cols)
    try:
        s.budget = budget
        s.size = size
        for x in range(s.n - size + 1):
            s.start = x
            s.path[0] = x
            with nogil:
                stop = _dfs_cycle(&s, x, (<uint64_t> 1) << x, 0, 1)
            if stop:
                break
        if s.over:
            return None, s.nodes, True
        if s.found:
            return [s.path[j] for j in range(size)], s.nodes, False
        return None, s.nodes, False
    finally:
        _teardown(&s)
