import pytest

from lotkit.display import export_dot, serialize_lot
from lotkit.errors import DuplicateEdge, NonConjugationRelation, ParseError, UnknownGenerator
from lotkit.extract import detect_format, parse_graph, parse_lot_file, parse_presentation
from lotkit.graph import validate
from lotkit.presentation import LotPresentation, Relation, format_presentation, log_to_presentation, presentation_to_log

from .conftest import STAR4_LOT, STAR4_PRESENTATION, ROSEBROCK_LOT


def test_parse_star4_presentation():
    p = parse_presentation(STAR4_PRESENTATION)
    assert p.generators == ("a", "b", "c", "d")
    assert p.relations == (Relation("c", "a", "d"), Relation("c", "d", "b"), Relation("a", "d", "c"))


def test_parse_presentation_without_relations():
    p = parse_presentation("< a | >")
    assert p.generators == ("a",) and p.relations == ()
    assert presentation_to_log(p).m == 1


def test_label_equal_to_endpoint_parses_and_fails_validation():
    p = parse_presentation("< a,b | a b a^-1 = a >")
    assert len(p.relations) == 1
    assert not validate(presentation_to_log(p)).interior_reduced


def test_unknown_generator_is_positioned():
    with pytest.raises(UnknownGenerator) as info:
        parse_presentation("< a,b | a b a^-1 = c >")
    assert (info.value.line, info.value.column) == (1, 20)
    assert "line 1, column 20" in str(info.value)


@pytest.mark.parametrize(
    "text",
    [
        "< a,b | a b b^-1 = a >",
        "< a,b,c | a b = c >",
        "< a,b,c | a b a^-1 = b >",
    ],
)
def test_non_conjugation_relations_are_rejected(text):
    with pytest.raises(NonConjugationRelation):
        parse_presentation(text)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("a,b | >", 1, 1),
        ("< a,b,c \n| a b a^-1 = c", 2, 15),
        ("< a,b,c | a b a^-1 = c > x", 1, 26),
        ("< a;b | >", 1, 4),
        ("< | >", 1, 3),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert info.value.expected


def test_presentation_to_log_star4(star4):
    assert presentation_to_log(parse_presentation(STAR4_PRESENTATION)) == star4


def test_rosebrock_presentation_gives_rosebrock_lot(rosebrock_lot):
    g = presentation_to_log(parse_presentation("< a,b,c | c a c^-1 = b, a b a^-1 = c >"))
    assert g.same_structure(rosebrock_lot)


def test_parallel_relations_are_duplicate_edges():
    p = LotPresentation(("a", "b", "c"), (Relation("c", "a", "b"), Relation("c", "b", "a")))
    with pytest.raises(DuplicateEdge):
        presentation_to_log(p)


def test_log_to_presentation(star4, single):
    assert format_presentation(log_to_presentation(star4)) == STAR4_PRESENTATION
    assert format_presentation(log_to_presentation(single)) == "< a | >"
    assert presentation_to_log(log_to_presentation(star4)) == star4


def test_lot_file_roundtrip(star4, rosebrock_lot):
    assert parse_lot_file(ROSEBROCK_LOT) == rosebrock_lot
    assert serialize_lot(rosebrock_lot) == ROSEBROCK_LOT
    assert serialize_lot(parse_lot_file(STAR4_LOT)) == STAR4_LOT
    assert parse_lot_file("vertices: a").m == 1


def test_lot_file_comments_and_blank_lines(rosebrock_lot):
    text = "# the Rosebrock LOT\n\nvertices: a b c   # three\n  edge a b c\nedge b c a\n"
    assert parse_lot_file(text) == rosebrock_lot


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices: a b\nedg a b c\n", 2),
        ("edge a b c\nvertices: a b c\n", 1),
        ("vertices: a b c\nedge a b\n", 2),
        ("vertices: a b c\nedge a b z\n", 2),
        ("vertices: a b\nvertices: c\n", 2),
        ("vertices: a 2b\n", 1),
        ("vertices:\n", 1),
    ],
)
def test_lot_file_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_lot_file(text)
    assert info.value.line == line


def test_missing_vertices_line():
    with pytest.raises(ParseError):
        parse_lot_file("# nothing here\n")


def test_format_detection(star4):
    assert detect_format("  " + STAR4_PRESENTATION) == "presentation"
    assert detect_format(STAR4_LOT) == "lot"
    assert parse_graph(STAR4_PRESENTATION) == parse_graph(STAR4_LOT) == star4


def test_dot_export(six_tree, rosebrock_lot):
    dot = export_dot(rosebrock_lot)
    assert dot.count("->") == 2
    assert '"a" -> "b" [label="c"];' in dot
    assert "doublecircle" not in dot
    highlighted = export_dot(six_tree, ["x1", "x4", "x6"])
    assert highlighted.count("doublecircle") == 3
    assert '"x4" [shape=doublecircle];' in highlighted
    assert export_dot(six_tree, ["x1", "x4", "x6"]) == highlighted
