"""Complexity cp(Γ): the least size of a seed set from which Γ is reachable."""
from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice, repeat
from typing import FrozenSet, Optional, Tuple

from lotkit.decomposition import rosebrock_cover
from lotkit.errors import (
    BudgetExceeded,
    Disconnected,
    EdgeIsCovered,
    EvenVertexCount,
    NotInteriorReduced,
    NotTree,
    SizeTooLarge,
)
from lotkit.graph import LogGraph, VertexId, VertexRef
from lotkit.reachability import Propagator, shortcut_applies, reaches_all

EXACT_LIMIT = 20

METHODS = ("exact", "greedy", "trivial-bound")


@dataclass(frozen=True)
class ComplexityReport:
    value: int
    witness: Tuple[VertexId, ...]
    method: str
    lower_bound: int
    subsets_examined: int = 0
    # closure size after each chosen seed (greedy constructions)
    growth: Tuple[int, ...] = ()
    case: Optional[str] = None

    @property
    def witness_names(self) -> FrozenSet[str]:
        return frozenset(v.name for v in self.witness)


def _require_connected(graph):
    if not graph.is_connected:
        raise Disconnected(f"graph has {len(graph.components())} components")


def _require_reduced(graph):
    _require_connected(graph)
    if not graph.is_interior_reduced:
        raise NotInteriorReduced("some edge is labeled by one of its own endpoints")


def trivial_lower(graph: LogGraph) -> int:
    return 2 if graph.is_interior_reduced and graph.m >= 2 else 1


def _boundary_label(graph, state):
    best = None
    for s, t, l in graph.ends:
        # at a fixed point the label of a boundary edge is never reachable
        if state.reached[s] != state.reached[t] and (best is None or l < best):
            best = l
    return best


def _extend(graph, state, chosen, growth):
    while not state.complete:
        pick = _boundary_label(graph, state)
        if pick is None:
            raise Disconnected("no edge leaves the reachable set")
        chosen.append(pick)
        state.add(pick)
        growth.append(state.count)


def _greedy_report(graph, chosen, growth, case=None):
    return ComplexityReport(
        value=len(chosen),
        witness=tuple(graph.vertices[x] for x in chosen),
        method="greedy",
        lower_bound=trivial_lower(graph),
        growth=tuple(growth),
        case=case,
    )


def greedy_seed(graph: LogGraph, start: Optional[VertexRef] = None) -> ComplexityReport:
    """Grow a seed one boundary label at a time.

    Every chosen label is unreachable before it is chosen and brings the far
    endpoint of its boundary edge along, so each step after the first adds at
    least two vertices and the seed never exceeds floor((m+1)/2).
    """
    _require_reduced(graph)
    first = 0 if start is None else graph.vertex(start).index
    state = Propagator(graph, record=False)
    state.add(first)
    chosen, growth = [first], [state.count]
    _extend(graph, state, chosen, growth)
    return _greedy_report(graph, chosen, growth)


def trivial_seed(graph: LogGraph) -> ComplexityReport:
    _require_connected(graph)
    image = sorted(v.index for v in graph.label_image)
    if 1 + len(image) < graph.m:
        extra = next(x for x in range(graph.m) if x not in set(image))
        chosen = sorted(image + [extra])
    else:
        chosen = list(range(graph.m))
    return ComplexityReport(
        value=len(chosen),
        witness=tuple(graph.vertices[x] for x in chosen),
        method="trivial-bound",
        lower_bound=trivial_lower(graph),
    )


def complexity_bounds(graph: LogGraph) -> Tuple[int, int]:
    _require_connected(graph)
    upper = min(graph.m, 1 + len(graph.label_image))
    if graph.is_interior_reduced:
        upper = min(upper, (graph.m + 1) // 2, greedy_seed(graph).value)
    return trivial_lower(graph), upper


def _scan(graph, k, start, stop, shortcut):
    examined = 0
    for combo in islice(combinations(range(graph.m), k), start, stop):
        examined += 1
        if reaches_all(graph, combo, shortcut):
            return combo, examined
    return None, examined


def _search(graph, k, shortcut, workers):
    total = math.comb(graph.m, k)
    if workers <= 1 or total < 64:
        return _scan(graph, k, 0, total, shortcut)
    size = -(-total // (workers * 4))
    starts = list(range(0, total, size))
    stops = [min(s + size, total) for s in starts]
    found, examined = None, 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps chunk order, so the first hit is the lexicographically least
        for combo, n in pool.map(_scan, repeat(graph), repeat(k), starts, stops, repeat(shortcut)):
            examined += n
            if found is None and combo is not None:
                found = combo
    return found, examined


def exact_complexity(
    graph: LogGraph,
    budget: Optional[int] = None,
    max_vertices: int = EXACT_LIMIT,
    workers: int = 1,
) -> ComplexityReport:
    """Smallest seed size, by enumerating k-subsets for k = 1, 2, ...

    The greedy (or trivial) witness caps k. The witness returned is the
    lexicographically least k-subset in vertex-index order.
    """
    _require_connected(graph)
    if graph.m > max_vertices:
        raise SizeTooLarge(f"exact search refused for m={graph.m} > {max_vertices}")
    lower = trivial_lower(graph)
    fallback = greedy_seed(graph) if graph.is_interior_reduced else trivial_seed(graph)
    cap = fallback.value
    limit = cap if budget is None else min(cap, budget)
    shortcut = shortcut_applies(graph)
    examined = 0
    for k in range(1, limit + 1):
        combo, n = _search(graph, k, shortcut, workers)
        examined += n
        if combo is not None:
            return ComplexityReport(
                value=k,
                witness=tuple(graph.vertices[x] for x in combo),
                method="exact",
                lower_bound=k,
                subsets_examined=examined,
            )
    raise BudgetExceeded(
        f"no seed of size <= {limit} reaches the graph",
        lower=max(lower, limit + 1),
        upper=cap,
        witness=fallback.witness,
    )


def _tree_path(graph, start, goal):
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for pos in graph.adjacency[x]:
            s, t, _ = graph.ends[pos]
            y = t if s == x else s
            if y not in parent:
                parent[y] = (x, pos)
                queue.append(y)
    vertices, edges = [goal], []
    while parent[vertices[-1]] is not None:
        x, pos = parent[vertices[-1]]
        vertices.append(x)
        edges.append(pos)
    return vertices[::-1], edges[::-1]


def _walk_path(graph, state, chosen, growth, path, path_edges, goal):
    while not state.reached[goal]:
        i = next(i for i in range(1, len(path)) if not state.reached[path[i]])
        pick = graph.ends[path_edges[i - 1]][2]
        chosen.append(pick)
        state.add(pick)
        growth.append(state.count)


def submaximal_seed(graph: LogGraph, uncovered_edge) -> ComplexityReport:
    """Seed of size <= (m-1)/2 around an edge no Rosebrock sub-LOT covers.

    Let e = (x, y) with label z, where x is the endpoint nearer to z.
    Case 1: z is adjacent to x via an edge labeled w; seed z, w.
    Case 2.3: the last edge of the path z..x is labeled y; seed z, y.
    Case 2.1 / 2.2: seed z, then the labels along the path z..x until x is
    reached (2.2 when some earlier path edge is labeled x or y).
    Each case reaches at least twice as many vertices as it chose; the
    ordinary greedy finishes from there.
    """
    if not graph.is_tree:
        raise NotTree("submaximal seed needs a tree")
    if not graph.is_interior_reduced:
        raise NotInteriorReduced("some edge is labeled by one of its own endpoints")
    if graph.m % 2 == 0:
        raise EvenVertexCount(f"m={graph.m} is even; the greedy bound is already m/2")
    pos = graph.edge_position(uncovered_edge)
    edge = graph.edges[pos]
    cover = rosebrock_cover(graph, edge)
    if cover is not None:
        raise EdgeIsCovered(f"{edge} lies in the Rosebrock sub-LOT {cover}")

    z = edge.label.index
    source, target = edge.source.index, edge.target.index
    state = Propagator(graph, record=False)
    state.add(z)
    chosen, growth = [z], [state.count]

    adjacent = [v for v in (source, target) if graph.find_edge(graph.vertices[z], graph.vertices[v])]
    if adjacent:
        case = "1"
        near = adjacent[0]
        w = graph.find_edge(graph.vertices[z], graph.vertices[near]).label.index
        chosen.append(w)
        state.add(w)
        growth.append(state.count)
    else:
        to_source = _tree_path(graph, z, source)
        to_target = _tree_path(graph, z, target)
        path, path_edges = min(to_source, to_target, key=lambda p: len(p[0]))
        near = path[-1]
        far = target if near == source else source
        labels = [graph.ends[p][2] for p in path_edges]
        if labels[-1] == far:
            case = "2.3"
            chosen.append(far)
            state.add(far)
            growth.append(state.count)
        else:
            case = "2.2" if any(l in (near, far) for l in labels[:-1]) else "2.1"
            _walk_path(graph, state, chosen, growth, path, path_edges, near)
    _extend(graph, state, chosen, growth)
    return _greedy_report(graph, chosen, growth, case=case)
