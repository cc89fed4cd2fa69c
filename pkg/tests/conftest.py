import pytest

from lotkit.graph import LogGraph

STAR4_LOT = "vertices: a b c d\nedge a d c\nedge d b c\nedge d c a\n"
STAR4_PRESENTATION = "< a,b,c,d | c a c^-1 = d, c d c^-1 = b, a d a^-1 = c >"
ROSEBROCK_LOT = "vertices: a b c\nedge a b c\nedge b c a\n"


@pytest.fixture
def star4():
    return LogGraph.from_names("abcd", [("a", "d", "c"), ("d", "b", "c"), ("d", "c", "a")])


@pytest.fixture
def six_tree():
    return LogGraph.from_names(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        [
            ("x1", "x3", "x4"),
            ("x3", "x6", "x2"),
            ("x2", "x6", "x1"),
            ("x5", "x6", "x4"),
            ("x6", "x4", "x5"),
        ],
    )


@pytest.fixture
def rosebrock_lot():
    return LogGraph.from_names("abc", [("a", "b", "c"), ("b", "c", "a")])


@pytest.fixture
def path5():
    return LogGraph.from_names(
        ["x1", "x2", "x3", "x4", "x5"],
        [("x1", "x2", "x3"), ("x2", "x3", "x5"), ("x3", "x4", "x1"), ("x4", "x5", "x2")],
    )


@pytest.fixture
def double_rosebrock():
    return LogGraph.from_names(
        "abcef", [("a", "b", "c"), ("b", "c", "a"), ("a", "e", "f"), ("e", "f", "a")]
    )


@pytest.fixture
def single():
    return LogGraph.from_names(["a"])


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write
