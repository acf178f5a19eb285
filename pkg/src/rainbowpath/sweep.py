"""Bound-verification sweeps over generated suites, with deterministic CSV output."""

from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path

from rainbowpath import oracle
from rainbowpath.constructive import StallCertificate, solve
from rainbowpath.generators import Instance, gen_suite_instances
from rainbowpath.graph import bounds, is_rainbow_path, min_color_degree

log = logging.getLogger(__name__)

EXACT_AUTO_MAX_N = 12


@dataclass(frozen=True)
class SweepRow:
    instance_id: int
    seed: int
    n: int
    m: int
    num_colors: int
    k: int
    t_exact: int | None
    t_constructive: int
    bound_theorem: int
    bound_lemma1: int
    bound_saito: int
    slack_saito: int
    slack_kc: int
    stalled: bool
    oracle_nodes: int | None

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def cells(self) -> list[str]:
        out = []
        for value in astuple(self):
            if value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append(str(int(value)))
            else:
                out.append(str(value))
        return out


@dataclass
class InstanceOutcome:
    row: SweepRow
    violations: list[str]
    certificate: StallCertificate | None


def evaluate_instance(inst: Instance, exact: bool | None = None, per_vertex: bool = False) -> InstanceOutcome:
    """Solve one instance constructively and (optionally) exactly, and audit the bounds.

    ``exact=None`` runs the oracle only for n <= 12.
    """
    G = inst.graph
    k = min_color_degree(G)
    result = solve(G)
    report = bounds(k, result.path.length)
    violations = []
    if not is_rainbow_path(G, result.path.vertices):
        violations.append(f"constructive path {list(result.path.vertices)} is not rainbow")

    run_exact = G.n <= EXACT_AUTO_MAX_N if exact is None else exact
    t_exact = nodes = None
    if run_exact:
        res = oracle.max_rainbow_path(G, max_n=None)
        t_exact, nodes = res.t, res.nodes_explored
        if t_exact < result.path.length:
            violations.append(f"t_exact={t_exact} < t_constructive={result.path.length}")
        if t_exact < report.theorem_bound:
            violations.append(f"t_exact={t_exact} < ceil(3k/5)={report.theorem_bound} (k={k})")
    # with k = 0 the hypothesis is vacuous and isolated vertices have t = 0
    if per_vertex and k >= 1:
        for x in G.vertices():
            tx = oracle.max_rainbow_path_from(G, x, max_n=None).t
            if tx < report.lemma1_bound:
                violations.append(f"from vertex {x}: t={tx} < ceil((k+1)/2)={report.lemma1_bound}")

    t = t_exact if t_exact is not None else result.path.length
    row = SweepRow(
        instance_id=inst.instance_id,
        seed=inst.seed,
        n=G.n,
        m=G.m,
        num_colors=len(G.colors),
        k=k,
        t_exact=t_exact,
        t_constructive=result.path.length,
        bound_theorem=report.theorem_bound,
        bound_lemma1=report.lemma1_bound,
        bound_saito=report.saito_bound,
        slack_saito=t - report.saito_bound,
        slack_kc=t - k,
        stalled=result.certificate is not None,
        oracle_nodes=nodes,
    )
    return InstanceOutcome(row, violations, result.certificate)


def _evaluate(args):
    return evaluate_instance(*args)


@dataclass
class SweepResult:
    rows: list[SweepRow]
    violations: list[tuple[int, str]]
    certificates: list[tuple[int, StallCertificate]]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.certificates

    def min_slack_saito(self) -> int | None:
        return min((r.slack_saito for r in self.rows), default=None)

    def min_slack_kc(self) -> int | None:
        return min((r.slack_kc for r in self.rows), default=None)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SweepRow.header())
        for row in self.rows:
            writer.writerow(row.cells())
        return buf.getvalue()

    def summary(self) -> str:
        return (
            f"instances={len(self.rows)} violations={len(self.violations)} "
            f"stalls={len(self.certificates)} min_slack_saito={self.min_slack_saito()} "
            f"min_slack_kc={self.min_slack_kc()}"
        )


def run_sweep(
    profile: str,
    base_seed: int = 0,
    *,
    exact: bool | None = None,
    per_vertex: bool = False,
    jobs: int = 1,
    instances: list[Instance] | None = None,
) -> SweepResult:
    if instances is None:
        instances = gen_suite_instances(profile, base_seed)
    work = [(inst, exact, per_vertex) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate, work, chunksize=16))
    else:
        outcomes = [_evaluate(w) for w in work]
    result = SweepResult([], [], [])
    for out in outcomes:
        result.rows.append(out.row)
        for v in out.violations:
            log.error("instance %d: %s", out.row.instance_id, v)
            result.violations.append((out.row.instance_id, v))
        if out.certificate is not None:
            log.error("instance %d: solver stalled at length %d", out.row.instance_id, out.row.t_constructive)
            result.certificates.append((out.row.instance_id, out.certificate))
    return result


def archive_certificates(result: SweepResult, directory: str | Path) -> list[Path]:
    directory = Path(directory)
    written = []
    for instance_id, cert in result.certificates:
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / f"stall_{instance_id:05d}.json"
        path.write_text(cert.to_json())
        written.append(path)
    return written
