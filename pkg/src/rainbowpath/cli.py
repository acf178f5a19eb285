"""``rainbowpath`` command line: gen, solve, sweep, verify, export-dot.

Exit codes: 0 success, 1 bound violation / stall / invalid path, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from rainbowpath import oracle
from rainbowpath.constructive import format_trace, solve
from rainbowpath.dot import export_dot
from rainbowpath.ecg import ParseError, read_ecg, serialize_ecg, write_ecg
from rainbowpath.generators import PROFILES, GenSpec, RetryBudgetExceeded, gen_gnp_colored, gen_suite_instances
from rainbowpath.graph import bounds, is_rainbow_path, min_color_degree
from rainbowpath.sweep import archive_certificates, run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_vertices(tokens: list[str]) -> list[int]:
    try:
        return [int(tok) for item in tokens for tok in item.replace(",", " ").split()]
    except ValueError as exc:
        raise _Usage(f"bad vertex list: {exc}") from None


def cmd_gen(args) -> int:
    if args.profile:
        if not args.out:
            raise _Usage("gen --profile needs --out DIR")
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for inst in gen_suite_instances(args.profile, args.seed):
            write_ecg(inst.graph, outdir / f"{args.profile}_{inst.instance_id:05d}.ecg")
        return EXIT_OK
    if args.n is None:
        raise _Usage("gen needs either --profile or --n")
    spec = GenSpec(n=args.n, p=args.p, num_colors=args.colors, seed=args.seed, min_k=args.min_k)
    try:
        G = gen_gnp_colored(spec)
    except RetryBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _write(serialize_ecg(G), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    G = read_ecg(args.file)
    k = min_color_degree(G)
    status = EXIT_OK
    if args.exact:
        res = oracle.max_rainbow_path(G, max_n=args.max_n)
        path = res.witness
        extra = f"nodes: {res.nodes_explored}"
    else:
        result = solve(G)
        path = result.path
        extra = "stalled: yes" if result.certificate else "stalled: no"
        if args.trace:
            _write(format_trace(result.trace), args.trace)
        if result.certificate is not None:
            status = EXIT_VIOLATION
            if args.certificate:
                Path(args.certificate).write_text(result.certificate.to_json())
    report = bounds(k, path.length)
    print("path: " + " ".join(map(str, path.vertices)))
    print(f"length: {path.length}")
    print(f"k: {k}")
    print(
        f"bounds: lemma1={report.lemma1_bound} theorem={report.theorem_bound} saito={report.saito_bound}"
    )
    print(extra)
    return status


def cmd_sweep(args) -> int:
    result = run_sweep(
        args.profile, args.seed, exact=args.exact, per_vertex=args.per_vertex, jobs=args.jobs
    )
    _write(result.to_csv(), args.csv)
    if result.certificates:
        stall_dir = args.stall_dir or (f"{args.csv}.stalls" if args.csv and args.csv != "-" else "stalls")
        for path in archive_certificates(result, stall_dir):
            print(f"stall certificate: {path}", file=sys.stderr)
    print(result.summary(), file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_verify(args) -> int:
    G = read_ecg(args.file)
    seq = _parse_vertices(args.vertices)
    check = is_rainbow_path(G, seq)
    if check:
        print(f"rainbow path of length {len(seq) - 1}")
        return EXIT_OK
    print(f"not a rainbow path: {check.reason}")
    return EXIT_VIOLATION


def cmd_export_dot(args) -> int:
    G = read_ecg(args.file)
    path = _parse_vertices([args.path]) if args.path else None
    try:
        text = export_dot(G, path)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowpath", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance or a whole suite")
    p.add_argument("--profile", choices=PROFILES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--colors", type=int, default=3)
    p.add_argument("--min-k", type=int)
    p.add_argument("--out", help="output file (or directory with --profile); default stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="find a long rainbow path in an .ecg file")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true", help="use the exact oracle instead of the constructive solver")
    p.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N, help="oracle size guard")
    p.add_argument("--trace", help="write the solver trace (step,len_before,len_after) here")
    p.add_argument("--certificate", help="write a stall certificate (JSON) here if the solver stalls")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="verify the bounds over a generated suite")
    p.add_argument("--profile", choices=PROFILES, default="sweep-default")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--exact",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="run the exact oracle on every instance (default: only n <= 12)",
    )
    p.add_argument("--per-vertex", action="store_true", help="audit ceil((k+1)/2) from every vertex")
    p.add_argument("--csv", help="CSV output path; default stdout")
    p.add_argument("--stall-dir", help="directory for stall certificates")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check whether a vertex sequence is a rainbow path")
    p.add_argument("file")
    p.add_argument("vertices", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="write Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--path", help="vertex list to highlight, e.g. '0 1 3'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (_Usage, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
