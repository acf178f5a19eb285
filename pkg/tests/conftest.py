import pytest
from hypothesis import strategies as st

from rainbowpath import oracle
from rainbowpath.graph import build_graph

BACKENDS = ["python"] + (["cython"] if oracle._ckernel is not None else [])


def mono3():
    return build_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])


def k4p():
    return build_graph(4, [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)])


def rk4():
    return build_graph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)])


@pytest.fixture
def G_MONO3():
    return mono3()


@pytest.fixture
def G_K4P():
    return k4p()


@pytest.fixture
def G_RK4():
    return rk4()


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


# --- independent oracles ------------------------------------------------------
# Deliberately plain: dict lookups, no bitmasks, no bounds.


def edge_dict(G):
    d = {}
    for u, v, c in G.edges:
        d[(u, v)] = c
        d[(v, u)] = c
    return d


def naive_paths(G, starts=None):
    """Every rainbow vertex sequence of G (including single vertices)."""
    E = edge_dict(G)
    out = []

    def walk(seq, colors):
        out.append(tuple(seq))
        for w in range(G.n):
            c = E.get((seq[-1], w))
            if c is None or w in seq or c in colors:
                continue
            walk(seq + [w], colors | {c})

    for s in range(G.n) if starts is None else starts:
        walk([s], frozenset())
    return out


def naive_max_t(G, starts=None):
    return max(len(p) - 1 for p in naive_paths(G, starts))


def scan_rotation_sets(G, path):
    """Literal reading of the rotation bookkeeping definitions, by index scans."""
    u = list(path)
    t = len(u) - 1
    x, y = u[0], u[t]
    E = edge_dict(G)
    C = {c for _, _, c in G.edges}
    U = {E[(u[i], u[i + 1])] for i in range(t)}
    Uc = C - U

    T_x = set()
    for i in range(2, t):
        if (x, u[i]) in E and E[(x, u[i])] in Uc:
            T_x.add(u[i])
    T_y = set()
    for i in range(1, t - 1):
        if (y, u[i]) in E and E[(y, u[i])] in Uc:
            T_y.add(u[i])
    M_x = set()
    for j in range(t):
        if u[j + 1] in T_x:
            M_x.add(u[j])
    S_y = set()
    for v in u:
        if v in M_x or v == y or (t >= 1 and v == u[t - 1]):
            continue
        if (y, v) in E and E[(y, v)] in U:
            S_y.add(v)
    A, B, A1, A2 = set(), set(), set(), set()
    for i in range(t):
        if u[i] in M_x and u[i] in T_y:
            c = E[(u[i], u[i + 1])]
            ws = [w for w in range(G.n) if E.get((y, w)) == c]
            if ws:
                A.add(u[i])
                if any(w in M_x for w in ws):
                    A1.add(u[i])
                else:
                    A2.add(u[i])
            else:
                B.add(u[i])
    return dict(T_x=T_x, T_y=T_y, M_x=M_x, S_y=S_y, A=A, B=B, A1=A1, A2=A2)


# --- hypothesis strategies ----------------------------------------------------


@st.composite
def colored_graphs(draw, min_n=1, max_n=7, max_colors=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    colors = draw(st.lists(st.integers(0, max_colors - 1), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(u, v, c) for (u, v), k, c in zip(pairs, keep, colors) if k])


# --- acceptance reporting -----------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, text = marker.args
    detail = "; ".join(v for k, v in item.user_properties if k == "detail")
    _CRITERIA.append((number, "PASS" if rep.passed else "FAIL", text, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text, detail in sorted(_CRITERIA):
        line = f"[{status}] {number}. {text}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
