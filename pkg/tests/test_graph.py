import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowpath.graph import (
    GraphError,
    RainbowCycle,
    RainbowPath,
    bounds,
    build_graph,
    color_degree,
    is_rainbow_cycle,
    is_rainbow_path,
    min_color_degree,
)

from conftest import colored_graphs


def test_build_examples(G_MONO3, G_K4P):
    assert G_MONO3.n == 3 and G_MONO3.m == 3 and G_MONO3.colors == {1}
    assert G_K4P.m == 6 and G_K4P.colors == {1, 2, 3}
    assert G_K4P.color(3, 0) == 3
    assert G_K4P.color(0, 0) is None


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (3, [(0, 0, 1)], "self-loop"),
        (3, [(0, 3, 1)], "out of range"),
        (3, [(0, 1, 1), (1, 0, 2)], "duplicate"),
        (3, [(0, 1, -1)], "negative color"),
    ],
)
def test_build_rejects(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment) as info:
        build_graph(n, edges)
    assert info.value.edge == edges[-1]


def test_color_index_is_dense_and_sorted():
    G = build_graph(3, [(0, 1, 70), (1, 2, 5)])
    assert G.color_index == {5: 0, 70: 1}


def test_color_degree(G_MONO3, G_K4P, G_RK4):
    assert color_degree(G_MONO3, 0) == 1
    assert color_degree(G_K4P, 0) == 3
    assert color_degree(G_RK4, 2) == 3
    with pytest.raises(IndexError):
        color_degree(G_K4P, 4)


def test_min_color_degree(G_MONO3, G_K4P):
    assert min_color_degree(G_K4P) == 3
    assert min_color_degree(G_MONO3) == 1
    assert min_color_degree(build_graph(3, [(0, 1, 1), (1, 2, 2)])) == 1
    assert min_color_degree(build_graph(3, [(0, 1, 1)])) == 0


def test_is_rainbow_path(G_K4P, G_MONO3):
    assert is_rainbow_path(G_K4P, [0, 1, 3])
    check = is_rainbow_path(G_K4P, [0, 1, 3, 2])
    assert not check and check.reason == "repeated color 1"
    assert is_rainbow_path(G_MONO3, [0, 1])
    assert is_rainbow_path(G_MONO3, [2])
    assert is_rainbow_path(G_K4P, [0, 1, 0]).reason == "repeated vertex 0"
    assert is_rainbow_path(G_MONO3, [0, 5]).reason == "vertex 5 out of range"
    assert not is_rainbow_path(G_K4P, [])


def test_missing_edge_reason():
    G = build_graph(3, [(0, 1, 1)])
    assert is_rainbow_path(G, [0, 1, 2]).reason == "missing edge 1-2"


def test_is_rainbow_cycle(G_K4P, G_MONO3, G_RK4):
    assert is_rainbow_cycle(G_K4P, [0, 1, 3])
    assert not is_rainbow_cycle(G_MONO3, [0, 1, 2])
    assert is_rainbow_cycle(G_RK4, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        is_rainbow_cycle(G_K4P, [0, 1])


def test_path_and_cycle_types(G_K4P):
    P = RainbowPath.of(G_K4P, [0, 1, 3])
    assert P.length == 2 and P.colors == {1, 2}
    assert P.missing_colors(G_K4P) == {3}
    assert RainbowPath.of(G_K4P, [2]).length == 0
    CL = RainbowCycle.of(G_K4P, [0, 1, 3])
    assert CL.colors == {1, 2, 3} and CL.outside(G_K4P) == [2]
    with pytest.raises(ValueError):
        RainbowPath.of(G_K4P, [0, 1, 3, 2])


@pytest.mark.parametrize(
    "k, expected",
    [(3, (2, 2, 2)), (5, (3, 3, 4)), (10, (6, 6, 7))],
)
def test_bounds_examples(k, expected):
    r = bounds(k, 0)
    assert (r.lemma1_bound, r.theorem_bound, r.saito_bound) == expected


def test_bound_ordering_up_to_a_million():
    for k in range(3, 10**6 + 1):
        r = bounds(k, 0)
        assert r.lemma1_bound <= r.theorem_bound <= r.saito_bound, k


@given(st.integers(0, 10**12))
def test_bounds_are_exact_ceilings(k):
    r = bounds(k, 0)
    assert r.lemma1_bound * 2 >= k + 1 > (r.lemma1_bound - 1) * 2
    assert r.theorem_bound * 5 >= 3 * k > (r.theorem_bound - 1) * 5
    assert r.saito_bound * 3 >= 2 * k > (r.saito_bound - 1) * 3


@given(colored_graphs())
def test_degree_chain(G):
    for v in G.vertices():
        assert 0 <= color_degree(G, v) <= G.degree(v) <= G.n - 1
    assert min_color_degree(G) <= len(G.colors)


@given(colored_graphs(), st.data())
def test_prefix_and_reversal(G, data):
    seq = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, max_size=G.n, unique=True))
    ok = bool(is_rainbow_path(G, seq))
    assert ok == bool(is_rainbow_path(G, seq[::-1]))
    if ok:
        for i in range(1, len(seq) + 1):
            assert is_rainbow_path(G, seq[:i])
    if len(seq) >= 3:
        c = bool(is_rainbow_cycle(G, seq))
        for r in range(len(seq)):
            rot = seq[r:] + seq[:r]
            assert bool(is_rainbow_cycle(G, rot)) == c
            assert bool(is_rainbow_cycle(G, rot[::-1])) == c
