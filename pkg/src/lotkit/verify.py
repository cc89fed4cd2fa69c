"""Census and sampling harness behind ``lotkit verify``.

Every graph is pushed through the greedy and exact searches, the
decomposition and the certifier, and the results are checked against each
other. A failed check becomes a :class:`Finding`; findings can be dumped as
LOT files that reproduce them.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import click

from lotkit.certify import certify_aspherical, verify_certificate
from lotkit.complexity import exact_complexity, greedy_seed, submaximal_seed
from lotkit.decomposition import decompose, replay, uncovered_edges
from lotkit.display.lot_file import serialize_lot
from lotkit.extract import parse_lot_file, parse_presentation
from lotkit.errors import SizeTooLarge
from lotkit.gen import CENSUS_CAP, census_count, enumerate_lots, random_lot
from lotkit.graph import LogGraph
from lotkit.presentation import format_presentation, log_to_presentation, presentation_to_log
from lotkit.reachability import reachable_set, reaches_all

SAMPLE_SIZES = (6, 7)


@dataclass(frozen=True)
class Finding:
    check: str
    detail: str
    graph: LogGraph

    def __str__(self):
        return f"{self.check}: {self.detail}"


@dataclass(frozen=True)
class GraphOutcome:
    findings: tuple
    maximal: bool
    certified: bool


@dataclass
class BatchSummary:
    m: int
    source: str  # census | sample
    checked: int = 0
    maximal: int = 0
    certified: int = 0
    findings: List[Finding] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return len(self.findings)


def _check(graph: LogGraph) -> GraphOutcome:
    m = graph.m
    bound = (m + 1) // 2
    found = []

    def fail(check, detail):
        found.append(Finding(check, detail, graph))

    greedy = greedy_seed(graph)
    if greedy.value > bound:
        fail("greedy-bound", f"greedy seed has {greedy.value} > {bound} vertices")
    if any(b - a < 2 for a, b in zip(greedy.growth, greedy.growth[1:])):
        fail("greedy-growth", f"closure sizes {list(greedy.growth)} grow by less than 2")
    if not reaches_all(graph, [v.index for v in greedy.witness], shortcut=False):
        fail("greedy-witness", "greedy seed does not reach every vertex")

    exact = exact_complexity(graph)
    if exact.value > min(bound, greedy.value):
        fail("exact-bound", f"cp = {exact.value} exceeds min({bound}, greedy {greedy.value})")
    if not reaches_all(graph, [v.index for v in exact.witness], shortcut=False):
        fail("exact-witness", "exact witness does not reach every vertex")

    flipped = graph.reoriented(range(len(graph.edges)))
    if exact_complexity(flipped).value != exact.value:
        fail("orientation", "reversing every edge changes cp")
    previous = frozenset()
    for k in range(1, len(greedy.witness) + 1):
        prefix = greedy.witness[:k]
        shown = "{" + ", ".join(v.name for v in prefix) + "}"
        reached = reachable_set(graph, prefix)
        if not previous <= reached:
            fail("closure-monotone", f"closure of {shown} misses part of a smaller seed's closure")
        if reachable_set(graph, reached) != reached:
            fail("closure-idempotent", f"closing the closure of {shown} adds vertices")
        if reachable_set(flipped, prefix) != reached:
            fail("orientation", f"reversing every edge changes the closure of {shown}")
        previous = reached

    if parse_lot_file(serialize_lot(graph)) != graph:
        fail("lot-roundtrip", "LOT file text does not parse back to the same graph")
    text = format_presentation(log_to_presentation(graph))
    if presentation_to_log(parse_presentation(text)) != graph:
        fail("presentation-roundtrip", "presentation text does not parse back to the same graph")

    if m >= 2:
        everyone = set(graph.names)
        for name in graph.names:
            if {v.name for v in reachable_set(graph, everyone - {name})} != everyone:
                fail("all-but-one", f"every vertex but {name} is a closed set")

    decomposition = decompose(graph)
    maximal = decomposition is not None
    if maximal != (2 * exact.value == m + 1):
        fail("maximal-equivalence", f"decomposable={maximal} but cp = {exact.value}")
    covered = not uncovered_edges(graph)
    if maximal != (m % 2 == 1 and covered):
        fail("local-coverage", f"decomposable={maximal}, every edge covered={covered}")
    if maximal and not replay(decomposition).same_structure(graph):
        fail("decomposition-replay", "gluing the parts does not rebuild the graph")

    if m % 2 == 1 and m >= 3 and not covered:
        report = submaximal_seed(graph, uncovered_edges(graph)[0])
        if report.value > bound - 1:
            fail("submaximal-bound", f"case {report.case} seed has {report.value} > {bound - 1} vertices")
        if not reaches_all(graph, [v.index for v in report.witness], shortcut=False):
            fail("submaximal-witness", f"case {report.case} seed does not reach every vertex")

    certificate = certify_aspherical(graph, effort="exhaustive")
    if certificate is not None and not verify_certificate(graph, certificate):
        fail("certificate", f"{certificate.reason} certificate does not re-verify")
    return GraphOutcome(tuple(found), maximal, certificate is not None)


def check_graph(graph: LogGraph) -> List[Finding]:
    return list(_check(graph).findings)


def run_batch(graphs: Iterable[LogGraph], m: int, source: str, jobs: int = 1) -> BatchSummary:
    summary = BatchSummary(m, source)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check, graphs, chunksize=64))
    else:
        outcomes = (_check(g) for g in graphs)
    for outcome in outcomes:
        summary.checked += 1
        summary.maximal += outcome.maximal
        summary.certified += outcome.certified
        summary.findings.extend(outcome.findings)
    summary.findings.sort(key=lambda f: (f.check, serialize_lot(f.graph)))
    return summary


def sample(m: int, count: int, seed: int) -> Iterable[LogGraph]:
    rng = random.Random(seed * 1_000_003 + m)
    for _ in range(count):
        yield random_lot(m, rng.getrandbits(64))


def run_verify(
    max_m: int = CENSUS_CAP,
    samples: int = 0,
    seed: int = 0,
    jobs: int = 1,
    cap: int = CENSUS_CAP,
    force: bool = False,
    progress: bool = False,
) -> List[BatchSummary]:
    """Census every m in 3..max_m, then ``samples`` random LOTs at m = 6 and 7."""
    if max_m > cap and not force:
        raise SizeTooLarge(f"census up to m={max_m} exceeds the cap of {cap} (use force)")
    plan = [(m, "census") for m in range(3, max_m + 1)]
    if samples > 0:
        plan += [(m, "sample") for m in SAMPLE_SIZES]
    summaries = []
    for i, (m, source) in enumerate(plan, 1):
        if source == "census":
            graphs = enumerate_lots(m, cap=cap, force=force)
            total = census_count(m)
        else:
            graphs = sample(m, samples, seed)
            total = samples
        if progress:
            click.echo(click.style(f"[{i}/{len(plan)}] m={m} {source}: {total} graphs", fg="blue"), err=True)
        summaries.append(run_batch(graphs, m, source, jobs))
    return summaries


def summary_line(summaries: List[BatchSummary]) -> str:
    counts = "+".join(str(s.checked) for s in summaries) or "0"
    violations = sum(s.violations for s in summaries)
    return f"checked {counts} graphs, {violations} violations"


def dump_findings(findings: Iterable[Finding], directory: str) -> List[str]:
    """Write one LOT file per finding; returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for n, finding in enumerate(findings, 1):
        path = os.path.join(directory, f"violation-{n:03d}-{finding.check}.lot")
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"# {finding}\n")
            f.write(serialize_lot(finding.graph))
        paths.append(path)
    return paths


def first_findings(summaries: List[BatchSummary], limit: Optional[int] = None) -> List[Finding]:
    findings = [f for s in summaries for f in s.findings]
    return findings if limit is None else findings[:limit]
