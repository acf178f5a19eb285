"""Proof-guided construction of long rainbow paths.

Three moves lengthen a rainbow path P = u_0 (= x) .. u_t (= y) with color set U:

* extension: attach an outside vertex to either end by an edge whose color is
  not in U (``greedy_extend``);
* rotation: turn a non-extendable path into a rainbow cycle on the same
  vertices, either by a fresh-colored x-y edge or by swapping the path edge
  u_i u_{i+1} for the two fresh-colored chords y u_i and x u_{i+1}
  (``rotate_to_cycle``);
* escape: leave a rainbow cycle through an outside neighbor z of some cycle
  vertex, drop the cycle edge that shares the color of that exit edge, and
  continue from z through the part of the graph that avoids every cycle color
  (``escape_cycle``).

``solve`` chains the moves until the path reaches ceil(3k/5) (k the minimum
color degree) or no move helps, in which case a ``StallCertificate`` records
what was tried.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from rainbowpath.ecg import serialize_ecg
from rainbowpath.graph import (
    BoundReport,
    EdgeColoredGraph,
    RainbowCycle,
    RainbowPath,
    bounds,
    build_graph,
    ceil_div,
    min_color_degree,
)


class NotMaximalError(ValueError):
    """The input path can still be extended, so the rotation premise fails."""


def _as_path(G: EdgeColoredGraph, P) -> RainbowPath:
    if isinstance(P, RainbowPath):
        return P
    return RainbowPath.of(G, P)


def _as_cycle(G: EdgeColoredGraph, CL) -> RainbowCycle:
    if isinstance(CL, RainbowCycle):
        return CL
    return RainbowCycle.of(G, CL)


def _best_extension(G, end, on_path, used, allowed=None):
    for z, c in G.neighbors(end).items():
        if z in on_path or c in used:
            continue
        if allowed is not None and z not in allowed:
            continue
        return z, c
    return None


def _extend(G, verts: list[int], used: set[int], *, front: bool, back: bool, allowed=None) -> None:
    on_path = set(verts)
    while True:
        if front:
            hit = _best_extension(G, verts[0], on_path, used, allowed)
            if hit is not None:
                verts.insert(0, hit[0])
                on_path.add(hit[0])
                used.add(hit[1])
                continue
        if back:
            hit = _best_extension(G, verts[-1], on_path, used, allowed)
            if hit is not None:
                verts.append(hit[0])
                on_path.add(hit[0])
                used.add(hit[1])
                continue
        return


def greedy_extend(G: EdgeColoredGraph, P) -> RainbowPath:
    """Grow ``P`` at both ends by fresh-colored edges until neither end can move.

    The front end is tried first; ties go to the smallest vertex index.
    """
    P = _as_path(G, P)
    verts = list(P.vertices)
    used = set(P.colors)
    _extend(G, verts, used, front=True, back=True)
    if len(verts) == len(P.vertices):
        return P
    return RainbowPath.of(G, verts)


def is_maximal(G: EdgeColoredGraph, P) -> bool:
    P = _as_path(G, P)
    on_path = set(P.vertices)
    return (
        _best_extension(G, P.start, on_path, P.colors) is None
        and _best_extension(G, P.end, on_path, P.colors) is None
    )


def _require_maximal(G, P) -> None:
    if not is_maximal(G, P):
        raise NotMaximalError(f"path {list(P.vertices)} is not maximal: greedy_extend would grow it")


@dataclass(frozen=True)
class RotationState:
    """Bookkeeping sets for a non-extendable path u_0 (= x) .. u_t (= y).

    All vertex sets are subsets of the path. ``partner`` maps each pivot in
    ``seen_pivots`` to the y-neighbor w whose edge y-w carries the color of the
    path edge leaving that pivot (the smallest such w inside ``x_fresh_pred``
    if any, else the smallest overall).
    """

    graph: EdgeColoredGraph
    path: RainbowPath
    path_colors: frozenset[int]
    free_colors: frozenset[int]
    # u_i, 2 <= i <= t-1, with color(x, u_i) free
    x_fresh: frozenset[int]
    # u_i, 1 <= i <= t-2, with color(y, u_i) free
    y_fresh: frozenset[int]
    # path predecessors of x_fresh
    x_fresh_pred: frozenset[int]
    # v on the path, not in x_fresh_pred, not y or u_{t-1}, with color(y, v) a path color
    y_used: frozenset[int]
    # x_fresh_pred & y_fresh, split by whether color(u_i, u_{i+1}) occurs at y
    seen_pivots: frozenset[int]
    unseen_pivots: frozenset[int]
    # seen_pivots split by whether the partner lies in x_fresh_pred
    seen_partner_in_pred: frozenset[int]
    seen_partner_outside: frozenset[int]
    partner: dict[int, int] = field(compare=False)

    @property
    def t(self) -> int:
        return self.path.length

    @property
    def pivots(self) -> frozenset[int]:
        return self.x_fresh_pred & self.y_fresh

    def as_dict(self) -> dict:
        names = (
            "x_fresh", "y_fresh", "x_fresh_pred", "y_used",
            "seen_pivots", "unseen_pivots", "seen_partner_in_pred", "seen_partner_outside",
        )
        out = {name: sorted(getattr(self, name)) for name in names}
        out["partner"] = {str(k): v for k, v in sorted(self.partner.items())}
        return out


def compute_rotation_sets(G: EdgeColoredGraph, P) -> RotationState:
    P = _as_path(G, P)
    _require_maximal(G, P)
    u = P.vertices
    t = P.length
    x, y = u[0], u[-1]
    U = P.colors
    free = G.colors - U
    index = {v: i for i, v in enumerate(u)}

    x_fresh = frozenset(u[i] for i in range(2, t) if G.color(x, u[i]) in free)
    y_fresh = frozenset(u[i] for i in range(1, t - 1) if G.color(y, u[i]) in free)
    x_fresh_pred = frozenset(u[index[v] - 1] for v in x_fresh)
    excluded = x_fresh_pred | {y, u[t - 1]} if t >= 1 else x_fresh_pred | {y}
    y_used = frozenset(v for v in u if v not in excluded and G.color(y, v) in U)

    y_nbrs = G.neighbors(y)
    seen, unseen, in_pred, outside = set(), set(), set(), set()
    partner: dict[int, int] = {}
    for v in sorted(x_fresh_pred & y_fresh, key=index.__getitem__):
        i = index[v]
        c = G.color(v, u[i + 1])
        ends = [w for w, cw in y_nbrs.items() if cw == c]
        if not ends:
            unseen.add(v)
            continue
        seen.add(v)
        inside = [w for w in ends if w in x_fresh_pred]
        if inside:
            in_pred.add(v)
            partner[v] = inside[0]
        else:
            outside.add(v)
            partner[v] = ends[0]

    return RotationState(
        graph=G,
        path=P,
        path_colors=U,
        free_colors=free,
        x_fresh=x_fresh,
        y_fresh=y_fresh,
        x_fresh_pred=x_fresh_pred,
        y_used=y_used,
        seen_pivots=frozenset(seen),
        unseen_pivots=frozenset(unseen),
        seen_partner_in_pred=frozenset(in_pred),
        seen_partner_outside=frozenset(outside),
        partner=partner,
    )


def rotate_to_cycle(G: EdgeColoredGraph, P) -> RainbowCycle | None:
    """A rainbow cycle on the vertices of ``P`` (t + 1 edges), or None."""
    P = _as_path(G, P)
    _require_maximal(G, P)
    t = P.length
    if t < 2:
        return None
    u = P.vertices
    x, y = u[0], u[-1]
    closing = G.color(x, y)
    if closing is not None and closing not in P.colors:
        return RainbowCycle.of(G, u)
    state = compute_rotation_sets(G, P)
    for i in range(1, t - 1):
        if u[i] not in state.pivots:
            continue
        if G.color(y, u[i]) != G.color(x, u[i + 1]):
            return RainbowCycle.of(G, u[: i + 1] + u[i + 1 :][::-1])
    return None


@dataclass(frozen=True)
class RestrictedSubgraph:
    """Induced subgraph on the non-cycle vertices, keeping only non-cycle colors.

    ``graph`` is re-indexed densely; ``host_vertices[j]`` is the host vertex of
    local vertex ``j``.
    """

    graph: EdgeColoredGraph
    host_vertices: tuple[int, ...]

    def to_host(self, j: int) -> int:
        return self.host_vertices[j]

    def from_host(self, v: int) -> int:
        return self.host_vertices.index(v)


def build_restricted_subgraph(G: EdgeColoredGraph, CL) -> RestrictedSubgraph:
    CL = _as_cycle(G, CL)
    keep = CL.outside(G)
    local = {v: j for j, v in enumerate(keep)}
    edges = [
        (local[a], local[b], c)
        for a, b, c in G.edges
        if a in local and b in local and c not in CL.colors
    ]
    return RestrictedSubgraph(build_graph(len(keep), edges), tuple(keep))


@dataclass(frozen=True)
class EscapeState:
    """Escape bookkeeping for the cycle read from ``cycle[0]`` as u_0."""

    cycle: tuple[int, ...]
    outside: tuple[int, ...]
    # per cycle vertex: its neighbors off the cycle
    exits: tuple[tuple[int, ...], ...]
    cycle_colors: frozenset[int]
    # colors of the first / last ceil(k/5) cycle edges around u_0
    head_window: frozenset[int]
    tail_window: frozenset[int]
    restricted: RestrictedSubgraph
    restricted_min_color_degree: int

    @property
    def window(self) -> frozenset[int]:
        return self.head_window | self.tail_window

    def as_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "outside": list(self.outside),
            "exits": [list(e) for e in self.exits],
            "cycle_colors": sorted(self.cycle_colors),
            "head_window": sorted(self.head_window),
            "tail_window": sorted(self.tail_window),
            "restricted_n": self.restricted.graph.n,
            "restricted_m": self.restricted.graph.m,
            "restricted_min_color_degree": self.restricted_min_color_degree,
        }


def _cycle_edge_colors(G, cyc: Sequence[int]) -> list[int]:
    return [G.color(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def compute_escape_state(G: EdgeColoredGraph, CL, k: int, rotation: int = 0) -> EscapeState:
    CL = _as_cycle(G, CL)
    cyc = CL.rotated(rotation)
    sub = build_restricted_subgraph(G, CL)
    outside = set(sub.host_vertices)
    ec = _cycle_edge_colors(G, cyc)
    width = ceil_div(k, 5)
    head = frozenset(ec[:width]) if width else frozenset()
    tail = frozenset(ec[len(ec) - width :]) if width else frozenset()
    sub_k = min_color_degree(sub.graph) if sub.graph.n else 0
    return EscapeState(
        cycle=cyc,
        outside=sub.host_vertices,
        exits=tuple(tuple(w for w in G.neighbors(v) if w in outside) for v in cyc),
        cycle_colors=CL.colors,
        head_window=head,
        tail_window=tail,
        restricted=sub,
        restricted_min_color_degree=sub_k,
    )


def _exit_walks(cyc: Sequence[int], ec: Sequence[int], c: int) -> list[list[int]]:
    """Cycle walks ending at cyc[0] that avoid the cycle edge colored ``c``.

    With no cycle edge of color ``c`` the whole cycle is walked (both ways).
    """
    L = len(cyc)
    if c not in ec:
        return [list(cyc[1:]) + [cyc[0]], list(cyc[:0:-1]) + [cyc[0]]]
    j = ec.index(c)  # removed edge cyc[j] - cyc[(j+1) % L]
    forward = list(cyc[j + 1 :]) + [cyc[0]] if j + 1 < L else [cyc[0]]
    backward = list(cyc[j::-1])
    return [forward, backward]


def escape_cycle(G: EdgeColoredGraph, CL, k: int) -> RainbowPath | None:
    """Leave the cycle through an outside vertex and keep going outside it.

    Every cycle vertex is tried as the exit vertex u_0, exits z ascending with
    those whose edge color lies in the ceil(k/5)-wide windows around u_0 first.
    Returns the first path longer than ``len(CL) - 1``, or None.
    """
    CL = _as_cycle(G, CL)
    t = len(CL) - 1
    sub = build_restricted_subgraph(G, CL)
    outside = frozenset(sub.host_vertices)
    if not outside:
        return None
    width = ceil_div(k, 5)
    for r in range(len(CL)):
        cyc = CL.rotated(r)
        ec = _cycle_edge_colors(G, cyc)
        window = set(ec[:width]) | set(ec[len(ec) - width :]) if width else set()
        exits = [(z, c) for z, c in G.neighbors(cyc[0]).items() if z in outside]
        exits.sort(key=lambda zc: (zc[1] not in window, zc[0]))
        for z, c in exits:
            for walk in _exit_walks(cyc, ec, c):
                verts = walk + [z]
                used = set(G.color(a, b) for a, b in zip(verts, verts[1:]))
                _extend(G, verts, used, front=False, back=True, allowed=outside)
                if len(verts) - 1 > t:
                    return RainbowPath.of(G, verts)
    return None


def verify_rotation_inequalities(state: RotationState, k: int, t: int) -> list[tuple[str, bool]]:
    """Evaluate each counting step of the rotation argument on ``state``.

    Under the premise t < ceil(3k/5) on a longest path with no rainbow cycle
    on t + 1 vertices every entry must hold; elsewhere the values are merely
    informative.
    """
    G = state.graph
    u = state.path.vertices
    x, y = u[0], u[-1]
    index = {v: i for i, v in enumerate(u)}
    pivots = state.pivots
    pred, yf, yu = state.x_fresh_pred, state.y_fresh, state.y_used
    a1, a2, b = state.seen_partner_in_pred, state.seen_partner_outside, state.unseen_pivots
    on_path = set(u)

    def lands_on_path(v):
        c = G.color(v, u[index[v] + 1])
        return all(w in on_path for w, cw in G.neighbors(y).items() if cw == c)

    return [
        ("premise t < ceil(3k/5)", t < bounds(k, t).theorem_bound),
        ("|pred| == |x_fresh|", len(pred) == len(state.x_fresh)),
        ("|x_fresh| >= k - t", len(state.x_fresh) >= k - t),
        ("pivots nonempty", bool(pivots)),
        ("pivot chord colors agree", all(G.color(y, v) == G.color(x, u[index[v] + 1]) for v in pivots)),
        ("|pred| + |y_fresh| + |y_used| - |pivots| <= t - 1", len(pred) + len(yf) + len(yu) - len(pivots) <= t - 1),
        ("|y_fresh| >= k - t + |unseen|", len(yf) >= k - t + len(b)),
        ("|pivots| == |in_pred| + |outside| + |unseen|", len(pivots) == len(a1) + len(a2) + len(b)),
        ("seen pivot colors land on path", all(lands_on_path(v) for v in state.seen_pivots)),
        ("|y_used| >= |outside|", len(yu) >= len(a2)),
        ("2|in_pred| <= |pred|", 2 * len(a1) <= len(pred)),
        ("5t >= 3k + 2", 5 * t >= 3 * k + 2),
    ]


@dataclass(frozen=True)
class TraceRecord:
    step: str
    len_before: int
    len_after: int

    def line(self) -> str:
        return f"{self.step},{self.len_before},{self.len_after}"


@dataclass
class StallCertificate:
    """Everything the solver tried before giving up below the target."""

    graph: EdgeColoredGraph
    path: RainbowPath
    target: int
    failed_step: str
    rotation_state: RotationState | None
    cycles: list[tuple[RainbowCycle, EscapeState]]
    paths_examined: int

    def replay(self) -> SolveResult:
        return solve(self.graph, target=self.target)

    def as_dict(self) -> dict:
        return {
            "ecg": serialize_ecg(self.graph),
            "path": list(self.path.vertices),
            "length": self.path.length,
            "target": self.target,
            "failed_step": self.failed_step,
            "rotation_state": self.rotation_state.as_dict() if self.rotation_state else None,
            "cycles": [
                {"cycle": list(c.vertices), "escape": e.as_dict()} for c, e in self.cycles
            ],
            "paths_examined": self.paths_examined,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


@dataclass
class SolveResult:
    path: RainbowPath
    report: BoundReport
    certificate: StallCertificate | None
    trace: list[TraceRecord]

    def __iter__(self):
        return iter((self.path, self.report, self.certificate))


POOL_LIMIT = 5000


def _cycle_openings(G, CL: RainbowCycle):
    L = len(CL)
    for r in range(L):
        cyc = CL.rotated(r)
        yield RainbowPath.of(G, cyc)
        yield RainbowPath.of(G, cyc[::-1])


def solve(
    G: EdgeColoredGraph, *, target: int | None = None, pool_limit: int = POOL_LIMIT
) -> SolveResult:
    """Best-effort rainbow path of length >= ceil(3k/5) built from the three moves.

    ``target`` overrides the goal length (for probing beyond the guaranteed
    bound); a certificate is attached whenever the goal is missed.
    """
    if G.n < 1:
        raise ValueError("graph has no vertices")
    k = min_color_degree(G)
    if target is None:
        target = bounds(k, 0).theorem_bound
    trace: list[TraceRecord] = []

    starts = [greedy_extend(G, [x]) for x in G.vertices()]
    best = max(starts, key=lambda p: p.length)
    trace.append(TraceRecord("extend", 0, best.length))
    pool = [p for p in starts if p.length == best.length]

    certificate = None
    while best.length < target:
        step, found = None, None
        seen = {p.vertices for p in pool}
        queue = deque()
        for p in pool:
            queue.append(p)
            rev = p.reversed()
            if rev.vertices not in seen:
                seen.add(rev.vertices)
                queue.append(rev)
        last_state, cycles = None, []
        while queue and found is None:
            P = queue.popleft()
            Q = greedy_extend(G, P)
            if Q.length > P.length:
                step, found = "extend", Q
                break
            last_state = compute_rotation_sets(G, P)
            CL = rotate_to_cycle(G, P)
            if CL is None:
                continue
            if len(cycles) < 16:
                cycles.append((CL, compute_escape_state(G, CL, k)))
            R = escape_cycle(G, CL, k)
            if R is not None:
                step, found = "escape", greedy_extend(G, R)
                break
            for opening in _cycle_openings(G, CL):
                Q = greedy_extend(G, opening)
                if Q.length > opening.length:
                    step, found = "rotate", Q
                    break
                if Q.vertices not in seen and len(seen) < pool_limit:
                    seen.add(Q.vertices)
                    queue.append(Q)
        if found is None:
            certificate = StallCertificate(
                graph=G,
                path=best,
                target=target,
                failed_step="rotate" if not cycles else "escape",
                rotation_state=last_state,
                cycles=cycles,
                paths_examined=len(seen),
            )
            break
        trace.append(TraceRecord(step, best.length, found.length))
        best = found
        pool = [best]

    return SolveResult(best, bounds(k, best.length), certificate, trace)


def format_trace(trace: Sequence[TraceRecord]) -> str:
    return "".join(rec.line() + "\n" for rec in trace)
