"""Asphericity certificates built from sufficient conditions.

A certificate is never a claim of non-asphericity: ``None`` from
:func:`certify_aspherical` only means no condition applied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from lotkit.complexity import ComplexityReport, exact_complexity
from lotkit.decomposition import Decomposition, compose, decompose, is_rosebrock, replay
from lotkit.errors import BudgetExceeded, LotError, NotInteriorReduced, NotTree, SizeTooLarge
from lotkit.graph import LogGraph, VertexId
from lotkit.reachability import closure, reaches_all
from lotkit.reachability import replay as replay_closure

REASONS = ("maximal_complexity", "injective_labeling", "complexity_two", "amalgam_of_aspherical")
EFFORTS = ("cheap", "exhaustive")


@dataclass(frozen=True)
class LabelAudit:
    labels: Tuple[VertexId, ...]  # edge labels in edge order


@dataclass(frozen=True)
class AmalgamEvidence:
    vertex: VertexId
    left: LogGraph
    right: LogGraph
    left_certificate: "AsphericityCertificate"
    right_certificate: "AsphericityCertificate"


Evidence = Union[Decomposition, LabelAudit, ComplexityReport, AmalgamEvidence]


@dataclass(frozen=True)
class AsphericityCertificate:
    reason: str
    evidence: Evidence

    def __str__(self):
        return self.reason.replace("_", " ")


def _require_lot(graph):
    if not graph.is_tree:
        raise NotTree("certificates are only issued for LOTs")
    if not graph.is_interior_reduced:
        raise NotInteriorReduced("some edge is labeled by one of its own endpoints")


def _complexity_two(graph):
    if graph.m < 2:
        return None
    try:
        report = exact_complexity(graph, budget=2)
    except (BudgetExceeded, SizeTooLarge):
        return None
    return report if report.value == 2 else None


def amalgam_splits(graph: LogGraph):
    """Yield (vertex, left names, right names) for every label-closed split.

    The branches at a cut vertex v are grouped so that every edge label of a
    group lies in the group or is v; the first group goes left, the rest right.
    """
    for v in range(graph.m):
        if len(graph.adjacency[v]) < 2:
            continue
        branch = [None] * graph.m
        for count, pos in enumerate(graph.adjacency[v]):
            s, t, _ = graph.ends[pos]
            start = t if s == v else s
            stack = [start]
            branch[start] = count
            while stack:
                x = stack.pop()
                for p in graph.adjacency[x]:
                    a, b, _ = graph.ends[p]
                    y = b if a == x else a
                    if y != v and branch[y] is None:
                        branch[y] = count
                        stack.append(y)
        parent = list(range(len(graph.adjacency[v])))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for s, t, l in graph.ends:
            home = branch[s] if s != v else branch[t]
            if l != v and branch[l] != home:
                parent[find(branch[l])] = find(home)
        first = find(0)
        if all(find(i) == first for i in range(len(parent))):
            continue
        left = [graph.vertices[v].name]
        right = [graph.vertices[v].name]
        for x in range(graph.m):
            if x == v:
                continue
            (left if find(branch[x]) == first else right).append(graph.vertices[x].name)
        yield graph.vertices[v], left, right


def _amalgam(graph):
    for vertex, left_names, right_names in amalgam_splits(graph):
        left = graph.subgraph(left_names)
        right = graph.subgraph(right_names)
        left_cert = certify_aspherical(left, effort="exhaustive")
        if left_cert is None:
            continue
        right_cert = certify_aspherical(right, effort="exhaustive")
        if right_cert is None:
            continue
        return AmalgamEvidence(vertex, left, right, left_cert, right_cert)
    return None


def certify_aspherical(graph: LogGraph, effort: str = "cheap") -> Optional[AsphericityCertificate]:
    """First sufficient condition that holds, cheapest first.

    ``cheap`` tries a Rosebrock decomposition and an injective labeling;
    ``exhaustive`` adds the exact complexity-two search and amalgam splitting
    at cut vertices, certifying each side recursively.
    """
    if effort not in EFFORTS:
        raise ValueError(f"unknown effort {effort!r}")
    _require_lot(graph)

    decomposition = decompose(graph)
    if decomposition is not None:
        return AsphericityCertificate("maximal_complexity", decomposition)
    if graph.is_injective:
        return AsphericityCertificate(
            "injective_labeling", LabelAudit(tuple(e.label for e in graph.edges))
        )
    if effort == "cheap":
        return None
    report = _complexity_two(graph)
    if report is not None:
        return AsphericityCertificate("complexity_two", report)
    evidence = _amalgam(graph)
    if evidence is not None:
        return AsphericityCertificate("amalgam_of_aspherical", evidence)
    return None


def _check_complexity_two(graph, report):
    if report.value != 2 or len(set(report.witness)) != 2:
        return False
    result = closure(graph, report.witness)
    if not result.complete or not replay_closure(graph, result):
        return False
    return not any(reaches_all(graph, [x], shortcut=False) for x in range(graph.m))


def _check_amalgam(graph, evidence):
    v = evidence.vertex.name
    left, right = evidence.left, evidence.right
    if set(left.names) & set(right.names) != {v}:
        return False
    fresh = v + "_glued"
    while fresh in set(left.names) | set(right.names):
        fresh += "_"
    try:
        glued = compose(left, v, right.renamed({v: fresh}), fresh)
    except LotError:
        return False
    if not glued.same_structure(graph):
        return False
    return verify_certificate(left, evidence.left_certificate) and verify_certificate(
        right, evidence.right_certificate
    )


def verify_certificate(graph: LogGraph, certificate: AsphericityCertificate) -> bool:
    """Re-check a certificate from its evidence alone."""
    if not graph.is_tree or not graph.is_interior_reduced:
        return False
    reason, evidence = certificate.reason, certificate.evidence
    try:
        if reason == "maximal_complexity" and isinstance(evidence, Decomposition):
            if not all(is_rosebrock(part.to_graph()) for part in evidence.parts):
                return False
            return replay(evidence).same_structure(graph)
        if reason == "injective_labeling" and isinstance(evidence, LabelAudit):
            labels = tuple(e.label for e in graph.edges)
            return evidence.labels == labels and len(set(labels)) == len(labels)
        if reason == "complexity_two" and isinstance(evidence, ComplexityReport):
            return _check_complexity_two(graph, evidence)
        if reason == "amalgam_of_aspherical" and isinstance(evidence, AmalgamEvidence):
            return _check_amalgam(graph, evidence)
    except LotError:
        return False
    return False
