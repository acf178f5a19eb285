import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowpath import generators, oracle
from rainbowpath.graph import build_graph, is_rainbow_cycle, is_rainbow_path
from rainbowpath.oracle import (
    OracleLimitError,
    find_rainbow_cycle_of_length,
    max_rainbow_path,
    max_rainbow_path_from,
)

from conftest import BACKENDS, colored_graphs, k4p, mono3, naive_max_t, naive_paths, rk4


def test_k4p_brute_force_over_all_vertex_sequences():
    # every 3-edge walk in K4 uses two disjoint edges, which share a color
    from itertools import permutations

    G = k4p()
    best = max(
        len(seq) - 1
        for r in range(1, 5)
        for seq in permutations(range(4), r)
        if is_rainbow_path(G, seq)
    )
    assert best == 2
    best_from_0 = max(
        len(seq) - 1
        for r in range(1, 5)
        for seq in permutations(range(4), r)
        if seq[0] == 0 and is_rainbow_path(G, seq)
    )
    assert best_from_0 == 2


@pytest.mark.parametrize("graph, t", [(mono3, 1), (rk4, 3), (k4p, 2)])
def test_max_rainbow_path_examples(graph, t, backend):
    res = max_rainbow_path(graph(), backend=backend)
    assert res.t == t
    assert res.witness.length == t
    assert is_rainbow_path(graph(), res.witness.vertices)


@pytest.mark.parametrize("graph, x, t", [(mono3, 0, 1), (rk4, 1, 3), (k4p, 0, 2)])
def test_max_rainbow_path_from_examples(graph, x, t, backend):
    res = max_rainbow_path_from(graph(), x, backend=backend)
    assert res.t == t and res.witness.start == x


def test_witness_is_lexicographically_smallest_optimum(backend):
    for inst in generators.gen_suite_instances("small-exhaustive", 0)[:60]:
        G = inst.graph
        res = max_rainbow_path(G, backend=backend)
        best = min(p for p in naive_paths(G) if len(p) - 1 == res.t)
        assert res.witness.vertices == best


def test_edgeless_graph_has_t_zero(backend):
    res = max_rainbow_path(build_graph(3, []), backend=backend)
    assert res.t == 0 and res.witness.vertices == (0,)


def test_find_cycle_examples(backend):
    cyc = find_rainbow_cycle_of_length(k4p(), 3, backend=backend)
    assert cyc is not None and len(cyc) == 3 and is_rainbow_cycle(k4p(), cyc.vertices)
    assert cyc.vertices == (0, 1, 2)  # first in ascending-index order; [0,1,3] is also valid
    assert find_rainbow_cycle_of_length(mono3(), 3, backend=backend) is None
    cyc = find_rainbow_cycle_of_length(rk4(), 4, backend=backend)
    assert cyc.vertices == (0, 1, 2, 3)
    assert find_rainbow_cycle_of_length(k4p(), 4, backend=backend) is None
    assert find_rainbow_cycle_of_length(k4p(), 5, backend=backend) is None
    with pytest.raises(ValueError):
        find_rainbow_cycle_of_length(k4p(), 2)


def test_size_guard_and_budget():
    G = generators.gen_proper_complete(16)
    with pytest.raises(OracleLimitError) as info:
        max_rainbow_path(G)
    assert info.value.limit == oracle.DEFAULT_MAX_N
    assert max_rainbow_path(G, max_n=None).t == 15
    sparse = generators.gen_gnp_colored(generators.GenSpec(n=20, p=0.2, num_colors=40, seed=0))
    with pytest.raises(OracleLimitError, match="node budget"):
        max_rainbow_path(sparse, max_n=None, node_budget=1000)
    with pytest.raises(IndexError):
        max_rainbow_path_from(k4p(), 7)


def test_backends_agree_on_suite():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    for inst in generators.gen_suite_instances("sweep-default", 3)[:300]:
        a = max_rainbow_path(inst.graph, backend="python")
        b = max_rainbow_path(inst.graph, backend="cython")
        assert (a.t, a.witness, a.nodes_explored) == (b.t, b.witness, b.nodes_explored)
        for L in (3, 4, 5):
            assert find_rainbow_cycle_of_length(inst.graph, L, backend="python") == find_rainbow_cycle_of_length(
                inst.graph, L, backend="cython"
            )


def test_cython_backend_refuses_oversized_masks():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    G = build_graph(70, [(i, i + 1, i) for i in range(69)])
    with pytest.raises(ValueError):
        max_rainbow_path(G, max_n=None, backend="cython")
    # auto dispatch falls back to the pure-Python kernel
    assert max_rainbow_path(G, max_n=None).t == 69


@settings(max_examples=150, deadline=None)
@given(colored_graphs(max_n=7))
def test_matches_naive_enumeration(G):
    for b in BACKENDS:
        res = max_rainbow_path(G, backend=b)
        assert res.t == naive_max_t(G)
        for x in G.vertices():
            assert max_rainbow_path_from(G, x, backend=b).t == naive_max_t(G, [x])


@settings(max_examples=100, deadline=None)
@given(colored_graphs(min_n=2, max_n=7))
def test_global_is_max_over_starts(G):
    t = max_rainbow_path(G).t
    per = [max_rainbow_path_from(G, x).t for x in G.vertices()]
    assert t == max(per)


@settings(max_examples=100, deadline=None)
@given(colored_graphs(min_n=3, max_n=7), st.integers(3, 7))
def test_cycles_are_exhaustive_and_open_into_paths(G, L):
    cyc = find_rainbow_cycle_of_length(G, L)
    expected = any(
        len(p) == L and G.has_edge(p[-1], p[0]) and is_rainbow_cycle(G, p) for p in naive_paths(G)
    )
    assert (cyc is not None) == expected
    if cyc is not None:
        v = cyc.vertices
        for r in range(L):
            opened = v[r:] + v[:r]
            assert is_rainbow_path(G, opened)
            assert len(opened) - 1 == L - 1


@settings(max_examples=100, deadline=None)
@given(colored_graphs(min_n=2, max_n=7), st.data())
def test_deleting_an_edge_never_increases_t(G, data):
    if not G.m:
        return
    i = data.draw(st.integers(0, G.m - 1))
    H = build_graph(G.n, [e for j, e in enumerate(G.edges) if j != i])
    assert max_rainbow_path(H).t <= max_rainbow_path(G).t


def test_deterministic_witness(backend):
    G = generators.gen_suite_instances("sweep-default", 0)[565].graph
    assert max_rainbow_path(G, backend=backend) == max_rainbow_path(G, backend=backend)
