"""Conjugation-form group presentations and their LOGs.

A relation ``k i k^-1 = j`` becomes the edge ``i -> j`` labeled ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Tuple

from lotkit.errors import DuplicateEdge, MalformedGraph, NonConjugationRelation, UnknownGenerator
from lotkit.graph import LogGraph


class Relation(NamedTuple):
    conjugator: str
    left: str
    right: str

    def __str__(self):
        k, i, j = self
        return f"{k} {i} {k}^-1 = {j}"


@dataclass(frozen=True)
class LotPresentation:
    generators: Tuple[str, ...]
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self):
        known = set(self.generators)
        if len(known) != len(self.generators):
            raise MalformedGraph("generator listed twice")
        for relation in self.relations:
            for name in relation:
                if name not in known:
                    raise UnknownGenerator(f"relation '{relation}' uses unknown generator {name!r}")
            if relation.left == relation.right:
                raise NonConjugationRelation(
                    f"relation '{relation}' conjugates a generator to itself"
                )

    def __str__(self):
        return format_presentation(self)


def format_presentation(p: LotPresentation) -> str:
    gens = ",".join(p.generators)
    if not p.relations:
        return f"< {gens} | >"
    rels = ", ".join(str(r) for r in p.relations)
    return f"< {gens} | {rels} >"


def presentation_to_log(p: LotPresentation) -> LogGraph:
    pairs = {}
    for relation in p.relations:
        pair = frozenset((relation.left, relation.right))
        if pair in pairs:
            raise DuplicateEdge(
                f"relations '{pairs[pair]}' and '{relation}' both join "
                f"{relation.left} and {relation.right}"
            )
        pairs[pair] = relation
    return LogGraph.from_names(
        p.generators, [(r.left, r.right, r.conjugator) for r in p.relations]
    )


def log_to_presentation(g: LogGraph) -> LotPresentation:
    return LotPresentation(
        g.names,
        tuple(Relation(e.label.name, e.source.name, e.target.name) for e in g.edges),
    )
