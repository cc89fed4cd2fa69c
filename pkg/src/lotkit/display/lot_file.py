from lotkit.graph import LogGraph

__all__ = ["serialize_lot"]


def serialize_lot(graph: LogGraph) -> str:
    """Canonical LOT file text: one 'vertices:' line, then one 'edge' line per edge."""
    lines = ["vertices: " + " ".join(graph.names)]
    lines.extend(f"edge {s} {t} {l}" for s, t, l in graph.edge_triples())
    return "\n".join(lines) + "\n"
