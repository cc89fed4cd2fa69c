"""Fixture generators: Rosebrock chains, random LOTs and small-m censuses.

Trees come from Prüfer sequences: a sequence of length m-2 over range(m)
decodes to exactly one labeled tree on m vertices.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator, List, Optional, Sequence, Tuple

from lotkit.decomposition import compose
from lotkit.errors import InvalidSize, SizeTooLarge
from lotkit.graph import LogGraph

CENSUS_CAP = 5

ATTACHMENTS = ("chain", "star", "random")
MODES = ("chain", "random", "census")

_GLUE = "_glue"


def vertex_names(n: int) -> List[str]:
    """a, b, ..., z, aa, ab, ... in spreadsheet-column order."""
    names = []
    for i in range(n):
        name = ""
        i += 1
        while i:
            i, r = divmod(i - 1, 26)
            name = chr(ord("a") + r) + name
        names.append(name)
    return names


def census_count(m: int) -> int:
    if m == 1:
        return 1
    if m < 3:
        return 0
    return m ** (m - 2) * (m - 2) ** (m - 1)


def prufer_to_edges(sequence: Sequence[int], m: int) -> List[Tuple[int, int]]:
    """Decode a Prüfer sequence; each edge is oriented from smaller to larger index."""
    degree = [1] * m
    for x in sequence:
        degree[x] += 1
    leaves = [x for x in range(m) if degree[x] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _rosebrock(a, b, c):
    return LogGraph.from_names([a, b, c], [(a, b, c), (b, c, a)])


def rosebrock_chain(s: int, attachment: str = "chain", rng_seed: Optional[int] = None) -> LogGraph:
    """Glue s Rosebrock LOTs together, m = 2s + 1.

    Each new part is glued by its ``a`` vertex onto a vertex of the graph so
    far: the newest vertex (chain), the first vertex (star) or a seeded random
    choice.
    """
    if s < 1:
        raise InvalidSize(f"a chain needs at least one part, got {s}")
    if attachment not in ATTACHMENTS:
        raise ValueError(f"unknown attachment {attachment!r}")
    rng = random.Random(rng_seed)
    names = vertex_names(2 * s + 1)
    graph = _rosebrock(*names[:3])
    created = names[:3]
    for k in range(1, s):
        p, q = names[2 * k + 1], names[2 * k + 2]
        if attachment == "chain":
            anchor = created[-1]
        elif attachment == "star":
            anchor = created[0]
        else:
            anchor = rng.choice(created)
        graph = compose(graph, anchor, _rosebrock(_GLUE, p, q), _GLUE)
        created += [p, q]
    return graph


def _build(names, edges, labels):
    return LogGraph.from_names(
        names, [(names[u], names[v], names[l]) for (u, v), l in zip(edges, labels)]
    )


def random_lot(m: int, rng_seed: Optional[int] = None) -> LogGraph:
    """Uniform random labeled tree with random orientations and off-edge labels."""
    if m == 1:
        return LogGraph.from_names(vertex_names(1))
    if m < 3:
        raise InvalidSize(f"no interior-reduced LOT has {m} vertices")
    rng = random.Random(rng_seed)
    sequence = [rng.randrange(m) for _ in range(m - 2)]
    edges = []
    labels = []
    for u, v in prufer_to_edges(sequence, m):
        if rng.random() < 0.5:
            u, v = v, u
        edges.append((u, v))
        labels.append(rng.choice([x for x in range(m) if x != u and x != v]))
    return _build(vertex_names(m), edges, labels)


def enumerate_lots(
    m: int,
    cap: int = CENSUS_CAP,
    force: bool = False,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[LogGraph]:
    """Every interior-reduced LOT on m named vertices, each once.

    Trees follow lexicographic Prüfer order and, within a tree, labelings
    follow lexicographic order. ``start``/``stop`` select a range of Prüfer
    indices so a census can be split across workers.
    """
    if m < 1:
        raise InvalidSize(f"vertex count must be positive, got {m}")
    if m > cap and not force:
        raise SizeTooLarge(
            f"census of m={m} has {census_count(m)} graphs; cap is {cap} (use force)"
        )
    names = vertex_names(m)
    if m == 1:
        if start == 0 and (stop is None or stop > 0):
            yield LogGraph.from_names(names)
        return
    if m == 2:
        return
    for sequence in islice(product(range(m), repeat=m - 2), start, stop):
        edges = prufer_to_edges(sequence, m)
        choices = [[x for x in range(m) if x != u and x != v] for u, v in edges]
        for labels in product(*choices):
            yield _build(names, edges, labels)


@dataclass(frozen=True)
class GenSpec:
    mode: str
    m: Optional[int] = None
    rng_seed: Optional[int] = None
    parts: int = 1
    attachment: str = "chain"
    cap: int = CENSUS_CAP
    force: bool = False

    @property
    def vertex_count(self) -> int:
        return 2 * self.parts + 1 if self.mode == "chain" else self.m

    def generate(self) -> Iterator[LogGraph]:
        if self.mode == "chain":
            yield rosebrock_chain(self.parts, self.attachment, self.rng_seed)
        elif self.mode == "random":
            yield random_lot(self.m, self.rng_seed)
        elif self.mode == "census":
            yield from enumerate_lots(self.m, cap=self.cap, force=self.force)
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
