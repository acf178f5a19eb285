"""Seeded instance generators.

All randomness goes through numpy's PCG64 bit generator keyed by a
``SeedSequence``. The draw order is part of the on-disk contract (recorded
sweep CSVs name instances by seed), so changing it is a breaking change:

* ``gen_gnp_colored``: attempt ``a`` uses ``SeedSequence(seed, spawn_key=(a,))``.
  Unordered pairs are visited as ``(u, v)``, ``u < v``, lexicographically. Each
  pair draws one ``random()``; if it is below ``p`` a second draw
  ``integers(num_colors)`` picks the color.
* suite instance ``i`` of base seed ``b`` gets seed
  ``SeedSequence([b, i]).generate_state(1, uint64)[0]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rainbowpath.graph import EdgeColoredGraph, build_graph, min_color_degree

DEFAULT_RETRY_BUDGET = 10**4

PROFILES = ("small-exhaustive", "sweep-default", "proper-family")


class RetryBudgetExceeded(RuntimeError):
    def __init__(self, spec: GenSpec, attempts: int):
        super().__init__(
            f"no graph with min color degree >= {spec.min_k} after {attempts} attempts for {spec}"
        )
        self.spec = spec
        self.attempts = attempts


@dataclass(frozen=True)
class GenSpec:
    n: int
    p: float
    num_colors: int
    seed: int
    min_k: int | None = None
    retry_budget: int = DEFAULT_RETRY_BUDGET

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.num_colors < 1:
            raise ValueError(f"num_colors must be >= 1, got {self.num_colors}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


def _rng(seed: int, attempt: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(attempt,))))


def derive_seed(base_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([base_seed, index]).generate_state(1, np.uint64)[0])


def _gnp_once(spec: GenSpec, attempt: int) -> EdgeColoredGraph:
    rng = _rng(spec.seed, attempt)
    edges = []
    for u in range(spec.n):
        for v in range(u + 1, spec.n):
            if rng.random() < spec.p:
                edges.append((u, v, int(rng.integers(spec.num_colors))))
    return build_graph(spec.n, edges)


def gen_gnp_colored(spec: GenSpec) -> EdgeColoredGraph:
    """G(n, p) with uniform edge colors from ``0..num_colors-1``.

    With ``min_k`` set, rejection-samples until the minimum color degree
    reaches it.
    """
    if spec.min_k is None:
        return _gnp_once(spec, 0)
    for attempt in range(spec.retry_budget):
        G = _gnp_once(spec, attempt)
        if min_color_degree(G) >= spec.min_k:
            return G
    raise RetryBudgetExceeded(spec, spec.retry_budget)


def gen_proper_complete(n: int) -> EdgeColoredGraph:
    """K_n properly colored by the round-robin 1-factorization (colors 1..n-1)."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    hub = n - 1
    edges = []
    for r in range(n - 1):
        edges.append((r, hub, r + 1))
        for j in range(1, n // 2):
            edges.append(((r + j) % (n - 1), (r - j) % (n - 1), r + 1))
    return build_graph(n, edges)


def tight_k4() -> EdgeColoredGraph:
    """Properly 3-colored K4: k = 3 and t = 2 = ceil(3k/5)."""
    return build_graph(4, [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)])


@dataclass(frozen=True)
class Instance:
    instance_id: int
    seed: int
    graph: EdgeColoredGraph
    spec: GenSpec | None = None


def _small_exhaustive(base_seed: int) -> list[Instance]:
    # palette size tied to n (n - 2) so that the profile has exactly 800 members
    out = []
    for s in range(100):
        for n in range(5, 9):
            for p in (0.4, 0.7):
                spec = GenSpec(n=n, p=p, num_colors=n - 2, seed=derive_seed(base_seed, s))
                out.append(Instance(len(out), spec.seed, gen_gnp_colored(spec), spec))
    return out


_SWEEP_P = (0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


def _sweep_default(base_seed: int, count: int = 1000) -> list[Instance]:
    params = np.random.Generator(np.random.PCG64(np.random.SeedSequence(base_seed)))
    out = []
    for i in range(count):
        n = int(params.integers(5, 13))
        p = _SWEEP_P[int(params.integers(len(_SWEEP_P)))]
        num_colors = int(params.integers(2, 2 * n))
        spec = GenSpec(n=n, p=p, num_colors=num_colors, seed=derive_seed(base_seed, i))
        out.append(Instance(i, spec.seed, gen_gnp_colored(spec), spec))
    return out


def _proper_family(base_seed: int) -> list[Instance]:
    return [Instance(i, 0, gen_proper_complete(n)) for i, n in enumerate(range(4, 13, 2))]


def gen_suite_instances(profile: str, base_seed: int = 0) -> list[Instance]:
    if profile == "small-exhaustive":
        return _small_exhaustive(base_seed)
    if profile == "sweep-default":
        return _sweep_default(base_seed)
    if profile == "proper-family":
        return _proper_family(base_seed)
    raise ValueError(f"unknown profile {profile!r}; expected one of {', '.join(PROFILES)}")


def gen_suite(profile: str, base_seed: int = 0) -> list[EdgeColoredGraph]:
    return [inst.graph for inst in gen_suite_instances(profile, base_seed)]
