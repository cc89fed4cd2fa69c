import re

from lotkit.errors import ParseError
from lotkit.extract.presentation import parse_presentation
from lotkit.graph import NAME_PATTERN, LogGraph
from lotkit.presentation import presentation_to_log

__all__ = ["parse_lot_file", "detect_format", "parse_graph"]

VERTICES_LINE = re.compile(r"vertices:(.*)\Z")
EDGE_LINE = re.compile(r"edge(\s.*)?\Z")


def _names(text, line_number, offset):
    names = []
    for m in re.finditer(r"\S+", text):
        if not NAME_PATTERN.match(m.group()):
            raise ParseError(
                f"invalid vertex name {m.group()!r}", line_number, offset + m.start() + 1, "an identifier"
            )
        names.append(m.group())
    return names


def parse_lot_file(text, strict=True):
    vertices = None
    declared = set()
    triples = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        m = VERTICES_LINE.match(stripped)
        if m:
            if vertices is not None:
                raise ParseError("second 'vertices:' line", line_number, indent + 1)
            vertices = _names(m.group(1), line_number, indent + len("vertices:"))
            if not vertices:
                raise ParseError("empty vertex list", line_number, len(line) + 1, "at least one vertex name")
            for name in vertices:
                if name in declared:
                    raise ParseError(f"vertex {name!r} declared twice", line_number)
                declared.add(name)
            continue
        m = EDGE_LINE.match(stripped)
        if m:
            if vertices is None:
                raise ParseError("edge before 'vertices:' line", line_number, indent + 1, "'vertices:'")
            names = _names(m.group(1) or "", line_number, indent + len("edge"))
            if len(names) != 3:
                raise ParseError(
                    f"edge line has {len(names)} names", line_number, indent + 1, "'edge <src> <dst> <label>'"
                )
            for name in names:
                if name not in declared:
                    raise ParseError(f"unknown vertex {name!r}", line_number, None, "a declared vertex")
            triples.append(tuple(names))
            continue
        raise ParseError(
            f"unrecognised line {stripped!r}", line_number, indent + 1, "'vertices:', 'edge' or a comment"
        )
    if vertices is None:
        raise ParseError("missing 'vertices:' line", None, None, "'vertices: <name>+'")
    return LogGraph.from_names(vertices, triples, strict=strict)


def detect_format(text):
    return "presentation" if text.lstrip().startswith("<") else "lot"


def parse_graph(text, strict=True):
    """Parse either input format; a leading '<' marks a presentation."""
    if detect_format(text) == "presentation":
        return presentation_to_log(parse_presentation(text))
    return parse_lot_file(text, strict=strict)
