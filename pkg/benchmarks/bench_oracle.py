"""Compare the compiled and pure-Python oracle kernels.

    python benchmarks/bench_oracle.py [--repeat 3] [--quick]

Instances are chosen so that the branch and bound must prove optimality
(sparse graphs with many colors), which is where the inner loop dominates.
Both kernels must report the same length, witness and node count.
"""

import argparse
import time

from rainbowpath import generators, oracle

CASES = [
    ("sweep-default[565]", None, None),
    ("gnp n=20 p=0.20 c=40", 20, (0.20, 40, 0)),
    ("gnp n=22 p=0.20 c=44", 22, (0.20, 44, 1)),
    ("gnp n=24 p=0.18 c=48", 24, (0.18, 48, 2)),
    ("proper K16", 16, None),
]


def build(name, n, params):
    if name.startswith("sweep-default"):
        return generators.gen_suite_instances("sweep-default", 0)[565].graph
    if params is None:
        return generators.gen_proper_complete(n)
    p, colors, seed = params
    return generators.gen_gnp_colored(generators.GenSpec(n=n, p=p, num_colors=colors, seed=seed))


def best_time(G, backend, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        res = oracle.max_rainbow_path(G, max_n=None, backend=backend)
        times.append(time.perf_counter() - start)
    return min(times), res


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the two slowest instances")
    args = parser.parse_args()
    if oracle._ckernel is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    cases = CASES[:2] + CASES[4:] if args.quick else CASES
    print(f"{'instance':<24} {'t':>3} {'nodes':>10} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, n, params in cases:
        G = build(name, n, params)
        tc, rc = best_time(G, "cython", args.repeat)
        tp, rp = best_time(G, "python", args.repeat)
        assert (rc.t, rc.witness, rc.nodes_explored) == (rp.t, rp.witness, rp.nodes_explored), name
        speedup = tp / tc if tc > 0 else float("inf")
        print(f"{name:<24} {rc.t:>3} {rc.nodes_explored:>10} {tc:>10.4f} {tp:>10.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
