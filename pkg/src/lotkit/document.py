"""AnalysisDocument: everything ``lotkit analyze`` knows about one input.

Documents serialize to plain dicts (schema ``lotkit.analysis/1``) so the CLI
can emit them as JSON; certificates also load back for re-verification.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from lotkit.certify import AmalgamEvidence, AsphericityCertificate, LabelAudit, certify_aspherical
from lotkit.complexity import EXACT_LIMIT, ComplexityReport, complexity_bounds, exact_complexity, greedy_seed
from lotkit.decomposition import Decomposition, RosebrockSubLot, decompose
from lotkit.display.lot_file import serialize_lot
from lotkit.errors import LotError, MalformedGraph, SizeTooLarge
from lotkit.graph import LabeledEdge, LogGraph, ValidationReport, Violation, validate

SCHEMA = "lotkit.analysis/1"


@dataclass
class AnalysisDocument:
    digest: str
    graph: LogGraph
    validation: ValidationReport
    bounds: Optional[Tuple[int, int]] = None
    greedy: Optional[ComplexityReport] = None
    exact: Optional[ComplexityReport] = None
    decomposition: Optional[Decomposition] = None
    certificate: Optional[AsphericityCertificate] = None
    timing: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def complexity(self) -> Optional[int]:
        if self.exact is not None:
            return self.exact.value
        if self.bounds is not None and self.bounds[0] == self.bounds[1]:
            return self.bounds[0]
        return None

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "input": {"sha256": self.digest, **graph_to_dict(self.graph)},
            "validation": {
                **self.validation.flags(),
                "violations": [
                    {"kind": v.kind, "edge": list(v.edge.as_names())} for v in self.validation.violations
                ],
            },
            "bounds": None if self.bounds is None else {"lower": self.bounds[0], "upper": self.bounds[1]},
            "greedy": report_to_dict(self.greedy),
            "exact": report_to_dict(self.exact),
            "decomposition": decomposition_to_dict(self.decomposition),
            "certificate": certificate_to_dict(self.certificate),
            "timing": {k: round(v, 6) for k, v in self.timing.items()},
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisDocument":
        """Load a document written by :meth:`to_dict`."""
        if data.get("schema") != SCHEMA:
            raise LotError(f"unsupported document schema {data.get('schema')!r}")
        graph = graph_from_dict(data["input"], strict=False)
        validation = data["validation"]
        bounds = data["bounds"]
        decomposition = data["decomposition"]
        certificate = data["certificate"]
        return cls(
            digest=data["input"]["sha256"],
            graph=graph,
            validation=ValidationReport(
                connected=validation["connected"],
                tree=validation["tree"],
                interior_reduced=validation["interior_reduced"],
                injective=validation["injective"],
                violations=tuple(
                    Violation(v["kind"], _edge(graph, v["edge"])) for v in validation["violations"]
                ),
            ),
            bounds=None if bounds is None else (bounds["lower"], bounds["upper"]),
            greedy=None if data["greedy"] is None else report_from_dict(data["greedy"], graph),
            exact=None if data["exact"] is None else report_from_dict(data["exact"], graph),
            decomposition=None if decomposition is None else decomposition_from_dict(decomposition, graph),
            certificate=None if certificate is None else certificate_from_dict(certificate, graph),
            timing=dict(data.get("timing", {})),
            notes=list(data.get("notes", [])),
        )


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def graph_to_dict(graph: LogGraph) -> dict:
    return {"vertices": list(graph.names), "edges": [list(t) for t in graph.edge_triples()]}


def graph_from_dict(data: dict, strict: bool = True) -> LogGraph:
    return LogGraph.from_names(data["vertices"], [tuple(t) for t in data["edges"]], strict)


def report_to_dict(report: Optional[ComplexityReport]) -> Optional[dict]:
    if report is None:
        return None
    return {
        "value": report.value,
        "witness": [v.name for v in report.witness],
        "method": report.method,
        "lower_bound": report.lower_bound,
        "subsets_examined": report.subsets_examined,
        "growth": list(report.growth),
        "case": report.case,
    }


def report_from_dict(data: dict, graph: LogGraph) -> ComplexityReport:
    return ComplexityReport(
        value=data["value"],
        witness=tuple(graph.vertex(n) for n in data["witness"]),
        method=data["method"],
        lower_bound=data["lower_bound"],
        subsets_examined=data.get("subsets_examined", 0),
        growth=tuple(data.get("growth", ())),
        case=data.get("case"),
    )


def decomposition_to_dict(decomposition: Optional[Decomposition]) -> Optional[dict]:
    if decomposition is None:
        return None
    return {
        "s": decomposition.s,
        "parts": [
            {"vertices": list(p.names), "edges": [list(p.e1.as_names()), list(p.e2.as_names())]}
            for p in decomposition.parts
        ],
        "identifications": [[i, v.name] for i, v in decomposition.identifications],
        "anchor": None if decomposition.anchor is None else decomposition.anchor.name,
    }


def _edge(graph, triple):
    s, t, l = triple
    return LabeledEdge(graph.vertex(s), graph.vertex(t), graph.vertex(l))


def decomposition_from_dict(data: dict, graph: LogGraph) -> Decomposition:
    parts = []
    for part in data["parts"]:
        a, b, c = (graph.vertex(n) for n in part["vertices"])
        e1, e2 = (_edge(graph, t) for t in part["edges"])
        parts.append(RosebrockSubLot(a, b, c, e1, e2))
    anchor = data.get("anchor")
    return Decomposition(
        tuple(parts),
        tuple((i, graph.vertex(n)) for i, n in data["identifications"]),
        anchor=None if anchor is None else graph.vertex(anchor),
    )


def certificate_to_dict(certificate: Optional[AsphericityCertificate]) -> Optional[dict]:
    if certificate is None:
        return None
    evidence = certificate.evidence
    if isinstance(evidence, Decomposition):
        payload = decomposition_to_dict(evidence)
    elif isinstance(evidence, LabelAudit):
        payload = {"labels": [v.name for v in evidence.labels]}
    elif isinstance(evidence, ComplexityReport):
        payload = report_to_dict(evidence)
    else:
        payload = {
            "vertex": evidence.vertex.name,
            "left": graph_to_dict(evidence.left),
            "right": graph_to_dict(evidence.right),
            "left_certificate": certificate_to_dict(evidence.left_certificate),
            "right_certificate": certificate_to_dict(evidence.right_certificate),
        }
    return {"reason": certificate.reason, "evidence": payload}


def certificate_from_dict(data: dict, graph: LogGraph) -> AsphericityCertificate:
    """Rebuild a certificate against ``graph``; names it does not know raise."""
    reason, payload = data["reason"], data["evidence"]
    if reason == "maximal_complexity":
        evidence = decomposition_from_dict(payload, graph)
    elif reason == "injective_labeling":
        evidence = LabelAudit(tuple(graph.vertex(n) for n in payload["labels"]))
    elif reason == "complexity_two":
        evidence = report_from_dict(payload, graph)
    elif reason == "amalgam_of_aspherical":
        left = graph_from_dict(payload["left"])
        right = graph_from_dict(payload["right"])
        evidence = AmalgamEvidence(
            graph.vertex(payload["vertex"]),
            left,
            right,
            certificate_from_dict(payload["left_certificate"], left),
            certificate_from_dict(payload["right_certificate"], right),
        )
    else:
        raise MalformedGraph(f"unknown certificate reason {reason!r}")
    return AsphericityCertificate(reason, evidence)


def _timed(timing, key, fn, *args, **kwargs):
    started = time.perf_counter()
    try:
        return fn(*args, **kwargs)
    finally:
        timing[key] = time.perf_counter() - started


def analyze(
    graph: LogGraph,
    text: Optional[str] = None,
    exact: bool = False,
    exact_limit: int = EXACT_LIMIT,
    workers: int = 1,
) -> AnalysisDocument:
    """Run every cheap analysis, plus the exact search and exhaustive
    certification when ``exact`` is set. Stages whose preconditions fail are
    left empty."""
    timing: Dict[str, float] = {}
    document = AnalysisDocument(
        digest=digest(serialize_lot(graph) if text is None else text),
        graph=graph,
        validation=_timed(timing, "validate", validate, graph),
        timing=timing,
    )
    if not document.validation.simple or not graph.is_connected:
        return document
    document.bounds = _timed(timing, "bounds", complexity_bounds, graph)
    if graph.is_interior_reduced:
        document.greedy = _timed(timing, "greedy", greedy_seed, graph)
    if exact:
        try:
            document.exact = _timed(
                timing, "exact", exact_complexity, graph, max_vertices=exact_limit, workers=workers
            )
        except SizeTooLarge as e:
            document.notes.append(f"exact search skipped: {e}")
    if graph.is_tree and graph.is_interior_reduced:
        document.decomposition = _timed(timing, "decompose", decompose, graph)
        try:
            document.certificate = _timed(
                timing, "certify", certify_aspherical, graph, effort="exhaustive" if exact else "cheap"
            )
        except LotError as e:
            document.notes.append(f"certification skipped: {e}")
    return document
