"""Labeled oriented graphs (LOGs).

A LOG is an oriented simple graph together with a labeling of its edges by
its own vertices. A LOG whose underlying graph is a tree is a LOT. Graphs are
immutable; every derived structure (undirected adjacency, label buckets,
structural flags) is computed once on first use.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from lotkit.errors import (
    Disconnected,
    DuplicateEdge,
    MalformedGraph,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
)

NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VertexId:
    name: str
    # internal only; identity is the name
    index: int = field(compare=False)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class LabeledEdge:
    source: VertexId
    target: VertexId
    label: VertexId

    @property
    def endpoints(self) -> FrozenSet[VertexId]:
        return frozenset((self.source, self.target))

    def other(self, vertex: VertexId) -> VertexId:
        if vertex == self.source:
            return self.target
        if vertex == self.target:
            return self.source
        raise UnknownVertex(f"{vertex} is not an endpoint of {self}")

    def as_names(self) -> Tuple[str, str, str]:
        return (self.source.name, self.target.name, self.label.name)

    def reversed(self) -> "LabeledEdge":
        return LabeledEdge(self.target, self.source, self.label)

    def __str__(self):
        return f"{self.source}->{self.target}:{self.label}"


@dataclass(frozen=True)
class Violation:
    kind: str  # self-loop | parallel-edge | label-is-endpoint
    edge: LabeledEdge

    def __str__(self):
        return f"{self.kind}: {self.edge}"


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    tree: bool
    interior_reduced: bool
    injective: bool
    violations: Tuple[Violation, ...] = ()

    @property
    def simple(self) -> bool:
        return not any(v.kind in ("self-loop", "parallel-edge") for v in self.violations)

    def flags(self) -> Dict[str, bool]:
        return {
            "connected": self.connected,
            "tree": self.tree,
            "interior_reduced": self.interior_reduced,
            "injective": self.injective,
        }


VertexRef = Union[str, VertexId]


@dataclass(frozen=True)
class LogGraph:
    vertices: Tuple[VertexId, ...]
    edges: Tuple[LabeledEdge, ...] = ()

    @classmethod
    def from_names(
        cls,
        vertices: Iterable[str],
        edges: Iterable[Tuple[str, str, str]] = (),
        strict: bool = True,
    ) -> "LogGraph":
        """Build a graph from vertex names and (source, target, label) triples.

        With ``strict`` (the default) self-loops and parallel edges raise;
        otherwise they are kept so that :func:`validate` can report them.
        """
        index = {}
        ordered = []
        for name in vertices:
            if not isinstance(name, str) or not NAME_PATTERN.match(name):
                raise MalformedGraph(f"invalid vertex name {name!r}")
            if name in index:
                raise MalformedGraph(f"vertex {name} declared twice")
            vertex = VertexId(name, len(ordered))
            index[name] = vertex
            ordered.append(vertex)
        if not ordered:
            raise MalformedGraph("a graph needs at least one vertex")

        built = []
        seen_pairs = set()
        for triple in edges:
            source, target, label = triple
            for name in (source, target, label):
                if name not in index:
                    raise MalformedGraph(
                        f"edge {source}->{target}:{label} references unknown vertex {name!r}"
                    )
            edge = LabeledEdge(index[source], index[target], index[label])
            if strict:
                if source == target:
                    raise SelfLoop(f"self-loop {edge}")
                pair = frozenset((source, target))
                if pair in seen_pairs:
                    raise DuplicateEdge(f"second edge between {source} and {target}: {edge}")
                seen_pairs.add(pair)
            built.append(edge)
        return cls(tuple(ordered), tuple(built))

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    @cached_property
    def _by_name(self) -> Dict[str, VertexId]:
        return {v.name: v for v in self.vertices}

    @cached_property
    def ends(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple((e.source.index, e.target.index, e.label.index) for e in self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge positions incident to each vertex, orientation ignored."""
        incident: List[List[int]] = [[] for _ in self.vertices]
        for pos, (s, t, _) in enumerate(self.ends):
            incident[s].append(pos)
            if t != s:
                incident[t].append(pos)
        return tuple(tuple(x) for x in incident)

    @cached_property
    def label_buckets(self) -> Tuple[Tuple[int, ...], ...]:
        buckets: List[List[int]] = [[] for _ in self.vertices]
        for pos, (_, _, l) in enumerate(self.ends):
            buckets[l].append(pos)
        return tuple(tuple(x) for x in buckets)

    @cached_property
    def _pairs(self) -> Dict[FrozenSet[int], int]:
        pairs: Dict[FrozenSet[int], int] = {}
        for pos, (s, t, _) in enumerate(self.ends):
            pairs.setdefault(frozenset((s, t)), pos)
        return pairs

    def vertex(self, ref: VertexRef) -> VertexId:
        name = ref.name if isinstance(ref, VertexId) else ref
        try:
            return self._by_name[name]
        except (KeyError, TypeError):
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def indices(self, refs: Iterable[VertexRef]) -> List[int]:
        return [self.vertex(r).index for r in refs]

    def edge_position(self, edge: Union[LabeledEdge, Tuple[str, str, str]]) -> int:
        if not isinstance(edge, LabeledEdge):
            source, target, label = edge
            try:
                edge = LabeledEdge(self.vertex(source), self.vertex(target), self.vertex(label))
            except UnknownVertex:
                raise UnknownEdge(f"no edge {source}->{target}:{label}") from None
        try:
            return self.edges.index(edge)
        except ValueError:
            raise UnknownEdge(f"no edge {edge}") from None

    def find_edge(self, u: VertexRef, v: VertexRef) -> Optional[LabeledEdge]:
        pos = self._pairs.get(frozenset((self.vertex(u).index, self.vertex(v).index)))
        return None if pos is None else self.edges[pos]

    def neighbors(self, ref: VertexRef) -> List[VertexId]:
        vertex = self.vertex(ref)
        return [self.edges[pos].other(vertex) for pos in self.adjacency[vertex.index]]

    def degree(self, ref: VertexRef) -> int:
        return len(self.adjacency[self.vertex(ref).index])

    def components(self) -> List[List[int]]:
        seen = [False] * self.m
        found = []
        for start in range(self.m):
            if seen[start]:
                continue
            seen[start] = True
            component = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for pos in self.adjacency[x]:
                    s, t, _ = self.ends[pos]
                    y = t if s == x else s
                    if not seen[y]:
                        seen[y] = True
                        component.append(y)
                        stack.append(y)
            found.append(sorted(component))
        return found

    @cached_property
    def is_connected(self) -> bool:
        return len(self.components()) == 1

    @cached_property
    def is_tree(self) -> bool:
        return self.is_connected and len(self.edges) == self.m - 1

    @cached_property
    def is_interior_reduced(self) -> bool:
        return all(l != s and l != t for s, t, l in self.ends)

    @cached_property
    def is_injective(self) -> bool:
        labels = [l for _, _, l in self.ends]
        return len(labels) == len(set(labels))

    @property
    def label_image(self) -> FrozenSet[VertexId]:
        return frozenset(e.label for e in self.edges)

    def edge_triples(self) -> List[Tuple[str, str, str]]:
        return [e.as_names() for e in self.edges]

    def reoriented(self, positions: Iterable[int]) -> "LogGraph":
        flip = set(positions)
        return LogGraph(
            self.vertices,
            tuple(e.reversed() if pos in flip else e for pos, e in enumerate(self.edges)),
        )

    def with_edge(self, source: str, target: str, label: str, strict: bool = True) -> "LogGraph":
        return LogGraph.from_names(self.names, self.edge_triples() + [(source, target, label)], strict)

    def with_edges_in_order(self, order: Iterable[int]) -> "LogGraph":
        return LogGraph(self.vertices, tuple(self.edges[pos] for pos in order))

    def renamed(self, mapping: Mapping[str, str]) -> "LogGraph":
        def rename(name):
            return mapping.get(name, name)

        return LogGraph.from_names(
            [rename(n) for n in self.names],
            [tuple(rename(x) for x in triple) for triple in self.edge_triples()],
        )

    def subgraph(self, names: Iterable[str]) -> "LogGraph":
        """Induced sub-LOG; labels must stay inside the chosen vertex set."""
        keep = set(names)
        order = [n for n in self.names if n in keep]
        triples = [t for t in self.edge_triples() if t[0] in keep and t[1] in keep]
        return LogGraph.from_names(order, triples)

    def same_structure(self, other: "LogGraph") -> bool:
        """Equality up to vertex and edge order."""
        return set(self.names) == set(other.names) and sorted(self.edge_triples()) == sorted(
            other.edge_triples()
        )

    def __str__(self):
        edges = ", ".join(str(e) for e in self.edges)
        return f"LOG({' '.join(self.names)}; {edges})"


def validate(graph: LogGraph) -> ValidationReport:
    known = set(graph.vertices)
    violations = []
    seen_pairs = set()
    for edge in graph.edges:
        for vertex in (edge.source, edge.target, edge.label):
            if vertex not in known or graph.vertices[vertex.index] != vertex:
                raise MalformedGraph(f"edge {edge} references unknown vertex {vertex.name!r}")
        if edge.source == edge.target:
            violations.append(Violation("self-loop", edge))
        else:
            pair = edge.endpoints
            if pair in seen_pairs:
                violations.append(Violation("parallel-edge", edge))
            seen_pairs.add(pair)
        if edge.label in (edge.source, edge.target):
            violations.append(Violation("label-is-endpoint", edge))
    return ValidationReport(
        connected=graph.is_connected,
        tree=graph.is_tree,
        interior_reduced=graph.is_interior_reduced,
        injective=graph.is_injective,
        violations=tuple(violations),
    )


def spanning_tree(graph: LogGraph) -> LogGraph:
    """Keep edges in input order, dropping every edge that would close a cycle."""
    if not graph.is_connected:
        raise Disconnected(f"graph has {len(graph.components())} components")
    parent = list(range(graph.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for edge, (s, t, _) in zip(graph.edges, graph.ends):
        rs, rt = find(s), find(t)
        if rs == rt:
            continue
        parent[rs] = rt
        kept.append(edge)
    return LogGraph(graph.vertices, tuple(kept))
