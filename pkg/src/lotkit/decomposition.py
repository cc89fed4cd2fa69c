"""Rosebrock LOTs, the gluing operator and decomposition into Rosebrock parts.

The Rosebrock LOT is the path a - b - c whose edge {a, b} is labeled c and
whose edge {b, c} is labeled a. Gluing two LOTs with disjoint names at one
vertex each is written Γ1 ⊔ Γ2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from lotkit.errors import NameClash, NotInteriorReduced, NotTree
from lotkit.graph import LabeledEdge, LogGraph, VertexId, VertexRef


@dataclass(frozen=True)
class RosebrockSubLot:
    a: VertexId
    b: VertexId
    c: VertexId
    e1: LabeledEdge  # joins a and b, labeled c
    e2: LabeledEdge  # joins b and c, labeled a

    @property
    def vertices(self) -> Tuple[VertexId, VertexId, VertexId]:
        return (self.a, self.b, self.c)

    @property
    def names(self) -> Tuple[str, str, str]:
        return (self.a.name, self.b.name, self.c.name)

    def to_graph(self) -> LogGraph:
        return LogGraph.from_names(self.names, [self.e1.as_names(), self.e2.as_names()])

    def __str__(self):
        return f"({self.a} -{self.c}- {self.b} -{self.a}- {self.c})"


@dataclass(frozen=True)
class Decomposition:
    parts: Tuple[RosebrockSubLot, ...]
    # (part index, vertex shared with the parts before it), for every part after the first
    identifications: Tuple[Tuple[int, VertexId], ...]
    anchor: Optional[VertexId] = None  # the lone vertex when there are no parts

    @property
    def s(self) -> int:
        return len(self.parts)


def _pattern(first: LabeledEdge, second: LabeledEdge) -> Optional[RosebrockSubLot]:
    shared = first.endpoints & second.endpoints
    if first == second or len(shared) != 1:
        return None
    (b,) = shared
    a, c = first.other(b), second.other(b)
    if a == c or first.label != c or second.label != a:
        return None
    if a.index > c.index:
        a, c, first, second = c, a, second, first
    return RosebrockSubLot(a, b, c, first, second)


def is_rosebrock(graph: LogGraph) -> bool:
    if graph.m != 3 or len(graph.edges) != 2:
        return False
    return _pattern(*graph.edges) is not None


def rosebrock_cover(graph: LogGraph, edge) -> Optional[RosebrockSubLot]:
    """A Rosebrock sub-LOT of ``graph`` containing ``edge``, or None.

    The edge may play the {a, b} role or the {b, c} role, with either of its
    endpoints as the middle vertex b; the lowest-index match wins.
    """
    edge = graph.edges[graph.edge_position(edge)]
    found = []
    for middle in (edge.source, edge.target):
        far = edge.other(middle)
        if edge.label in (middle, far):
            continue
        partner = graph.find_edge(middle, edge.label)
        if partner is None:
            continue
        for first, second in ((edge, partner), (partner, edge)):
            part = _pattern(first, second)
            if part is not None and part not in found:
                found.append(part)
    if not found:
        return None
    return min(found, key=lambda p: (p.b.index, p.a.index, p.c.index))


def uncovered_edges(graph: LogGraph) -> List[LabeledEdge]:
    return [e for e in graph.edges if rosebrock_cover(graph, e) is None]


def compose(g1: LogGraph, v1: VertexRef, g2: LogGraph, v2: VertexRef) -> LogGraph:
    """Glue g2 onto g1 by renaming v2 to v1 everywhere in g2."""
    keep = g1.vertex(v1).name
    drop = g2.vertex(v2).name
    clash = sorted(set(g1.names) & set(g2.names))
    if clash:
        raise NameClash(f"both graphs use the names {', '.join(clash)}")

    def rename(name):
        return keep if name == drop else name

    names = list(g1.names) + [n for n in g2.names if n != drop]
    triples = g1.edge_triples() + [tuple(rename(x) for x in t) for t in g2.edge_triples()]
    return LogGraph.from_names(names, triples)


def _fresh(name, taken):
    k = 1
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def replay(decomposition: Decomposition) -> LogGraph:
    """Rebuild the decomposed LOT by gluing its parts in order."""
    if not decomposition.parts:
        return LogGraph.from_names([decomposition.anchor.name])
    glued = decomposition.parts[0].to_graph()
    for (i, shared), part in zip(decomposition.identifications, decomposition.parts[1:]):
        fresh = _fresh(shared.name, set(glued.names) | set(part.names))
        piece = part.to_graph().renamed({shared.name: fresh})
        glued = compose(glued, shared.name, piece, fresh)
    return glued


def _side(graph, alive, start, allowed):
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for pos in graph.adjacency[x]:
            if pos not in alive:
                continue
            s, t, _ = graph.ends[pos]
            y = t if s == x else s
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _order(parts):
    ordered = [parts[0]]
    covered = set(parts[0].vertices)
    pending = list(parts[1:])
    identifications = []
    while pending:
        for i, part in enumerate(pending):
            common = covered & set(part.vertices)
            if common:
                (shared,) = common
                identifications.append((len(ordered), shared))
                ordered.append(part)
                covered.update(part.vertices)
                del pending[i]
                break
    return tuple(ordered), tuple(identifications)


def decompose(graph: LogGraph) -> Optional[Decomposition]:
    """The unique decomposition into Rosebrock LOTs, or None.

    Peel the lowest-index leaf a with edge (a, b) labeled c, demand the edge
    (b, c) labeled a, remove both edges and recurse on the subtrees of b and c.
    """
    if not graph.is_tree:
        raise NotTree("decomposition needs a tree")
    if not graph.is_interior_reduced:
        raise NotInteriorReduced("some edge is labeled by one of its own endpoints")
    if graph.m % 2 == 0:
        return None
    if graph.m == 1:
        return Decomposition((), (), anchor=graph.vertices[0])

    alive = set(range(len(graph.edges)))
    pending = [set(range(graph.m))]
    parts = []
    while pending:
        component = pending.pop(0)
        if len(component) == 1:
            continue
        degree = {x: 0 for x in component}
        for pos in alive:
            s, t, _ = graph.ends[pos]
            if s in component:
                degree[s] += 1
                degree[t] += 1
        a = min(x for x in component if degree[x] == 1)
        (e1,) = [pos for pos in graph.adjacency[a] if pos in alive]
        s, t, c = graph.ends[e1]
        b = t if s == a else s
        if c not in component:
            return None
        partner = graph.find_edge(graph.vertices[b], graph.vertices[c])
        e2 = graph.edges.index(partner) if partner is not None else None
        if e2 is None or e2 not in alive or partner.label.index != a:
            return None
        parts.append(_pattern(graph.edges[e1], partner))
        alive -= {e1, e2}
        rest = component - {a}
        side_b = _side(graph, alive, b, rest)
        pending.append(side_b)
        pending.append(rest - side_b)
    ordered, identifications = _order(parts)
    return Decomposition(ordered, identifications)


def is_maximal_complexity(graph: LogGraph) -> bool:
    """cp(Γ) = (m+1)/2 exactly when Γ decomposes into Rosebrock LOTs."""
    return decompose(graph) is not None
