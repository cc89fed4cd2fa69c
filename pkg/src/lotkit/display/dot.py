from typing import Iterable, Optional

from lotkit.graph import LogGraph, VertexRef

__all__ = ["export_dot"]


def _quote(name):
    return f'"{name}"'


def export_dot(graph: LogGraph, highlight: Optional[Iterable[VertexRef]] = None, name: str = "lot") -> str:
    marked = {graph.vertex(v).name for v in highlight or ()}
    lines = [f"digraph {name} {{"]
    for vertex in graph.names:
        if vertex in marked:
            lines.append(f"  {_quote(vertex)} [shape=doublecircle];")
        else:
            lines.append(f"  {_quote(vertex)};")
    for s, t, l in graph.edge_triples():
        lines.append(f"  {_quote(s)} -> {_quote(t)} [label={_quote(l)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
