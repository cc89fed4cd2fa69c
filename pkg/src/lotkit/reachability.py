"""Reachable-vertex closure T_S of a seed set S.

A vertex becomes reachable when it shares an edge with a reachable vertex and
the label of that edge is reachable. Orientation plays no role.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from lotkit.graph import LabeledEdge, LogGraph, VertexId, VertexRef


@dataclass(frozen=True)
class TraceStep:
    vertex: VertexId
    edge: LabeledEdge
    label: VertexId

    def __str__(self):
        return f"{self.vertex} via {self.edge}"


@dataclass(frozen=True)
class ReachabilityResult:
    seed: FrozenSet[VertexId]
    closure: FrozenSet[VertexId]
    trace: Tuple[TraceStep, ...]
    complete: bool

    @property
    def seed_names(self) -> FrozenSet[str]:
        return frozenset(v.name for v in self.seed)

    @property
    def closure_names(self) -> FrozenSet[str]:
        return frozenset(v.name for v in self.closure)


class Propagator:
    """Worklist state of one closure computation.

    Seeds can be added one at a time; each addition propagates to the new
    fixed point and reports how many vertices it made reachable. Edges are
    revisited only when one of their endpoints or their label turns reachable.
    """

    def __init__(self, graph: LogGraph, record: bool = True, stop_at: Optional[int] = None):
        self.graph = graph
        self.reached = [False] * graph.m
        self.count = 0
        self.record = record
        self.stop_at = stop_at
        self.steps: List[Tuple[int, int]] = []  # (vertex, edge position)

    def _mark(self, x, queue):
        self.reached[x] = True
        self.count += 1
        queue.append(x)

    def add(self, x: int) -> int:
        if self.reached[x]:
            return 0
        before = self.count
        queue: deque = deque()
        self._mark(x, queue)
        self._drain(queue)
        return self.count - before

    def seed_all(self, indices: Iterable[int]) -> int:
        """Mark every seed first, then propagate once; seeds never enter the trace."""
        before = self.count
        queue: deque = deque()
        for x in indices:
            if not self.reached[x]:
                self._mark(x, queue)
        self._drain(queue)
        return self.count - before

    def _drain(self, queue):
        ends = self.graph.ends
        adjacency = self.graph.adjacency
        buckets = self.graph.label_buckets
        reached = self.reached
        while queue:
            if self.stop_at is not None and self.count >= self.stop_at:
                break
            v = queue.popleft()
            for pos in adjacency[v] + buckets[v]:
                s, t, l = ends[pos]
                if not reached[l]:
                    continue
                if reached[s] and not reached[t]:
                    new = t
                elif reached[t] and not reached[s]:
                    new = s
                else:
                    continue
                self._mark(new, queue)
                if self.record:
                    self.steps.append((new, pos))

    @property
    def complete(self) -> bool:
        return self.count == self.graph.m


def shortcut_applies(graph: LogGraph) -> bool:
    # a connected interior-reduced graph missing one vertex always picks it up
    return graph.m >= 2 and graph.is_connected and graph.is_interior_reduced


def closure(graph: LogGraph, seed: Iterable[VertexRef]) -> ReachabilityResult:
    seed_ids = [graph.vertex(x) for x in seed]
    state = Propagator(graph)
    state.seed_all(v.index for v in seed_ids)
    vertices = graph.vertices
    trace = tuple(
        TraceStep(vertices[x], graph.edges[pos], graph.edges[pos].label) for x, pos in state.steps
    )
    reached = frozenset(v for v, r in zip(vertices, state.reached) if r)
    return ReachabilityResult(frozenset(seed_ids), reached, trace, state.complete)


def reachable_set(graph: LogGraph, seed: Iterable[VertexRef]) -> FrozenSet[VertexId]:
    """Closure without a trace."""
    state = Propagator(graph, record=False)
    state.seed_all(graph.indices(seed))
    return frozenset(v for v, r in zip(graph.vertices, state.reached) if r)


def reaches_all(graph: LogGraph, seed_indices: Iterable[int], shortcut: Optional[bool] = None) -> bool:
    if shortcut is None:
        shortcut = shortcut_applies(graph)
    target = graph.m - 1 if shortcut else graph.m
    state = Propagator(graph, record=False, stop_at=target)
    for x in seed_indices:
        state.add(x)
        if state.count >= target:
            return True
    return state.count >= target


def is_reachable_from(graph: LogGraph, seed: Iterable[VertexRef]) -> bool:
    return reaches_all(graph, graph.indices(seed))


def replay(graph: LogGraph, result: ReachabilityResult) -> bool:
    """Re-derive a closure from its trace; False if any step is unjustified."""
    known = set(graph.vertex(v) for v in result.seed)
    for step in result.trace:
        edge = step.edge
        if step.vertex in known or step.vertex not in edge.endpoints:
            return False
        if edge not in graph.edges or step.label != edge.label:
            return False
        if edge.other(step.vertex) not in known or edge.label not in known:
            return False
        known.add(step.vertex)
    return known == set(result.closure) and result.complete == (len(known) == graph.m)
