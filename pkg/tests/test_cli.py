import json
import os

from click.testing import CliRunner

from lotkit import lotkit, verify
from lotkit.complexity import ComplexityReport
from lotkit.decomposition import is_maximal_complexity
from lotkit.extract import parse_lot_file

from .conftest import STAR4_LOT, STAR4_PRESENTATION, ROSEBROCK_LOT

SIX_TREE_LOT = """vertices: x1 x2 x3 x4 x5 x6
edge x1 x3 x4
edge x3 x6 x2
edge x2 x6 x1
edge x5 x6 x4
edge x6 x4 x5
"""


def run(*args, env=None):
    return CliRunner().invoke(lotkit, list(args), env=env)


def test_analyze_star4_exact_json(write):
    result = run("analyze", write("star4.lot", STAR4_LOT), "--exact", "--json")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["exact"]["value"] == 2
    assert data["certificate"]["reason"] == "complexity_two"


def test_analyze_rosebrock_lot_skips_exact_search(write):
    result = run("analyze", write("rosebrock_lot.lot", ROSEBROCK_LOT), "--json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["exact"] is None
    assert data["certificate"]["reason"] == "maximal_complexity"


def test_analyze_human_report(write):
    result = run("analyze", write("rosebrock_lot.lot", ROSEBROCK_LOT))
    assert result.exit_code == 0
    assert "Complexity" in result.output
    assert "maximal complexity" in result.output


def test_analyze_presentation_input(write):
    result = run("analyze", write("star4.txt", STAR4_PRESENTATION), "--json")
    assert result.exit_code == 0
    assert json.loads(result.output)["input"]["vertices"] == ["a", "b", "c", "d"]


def test_analyze_parse_error_exits_1(write):
    result = run("analyze", write("broken.lot", "vertices: a b\nedg a b c\n"))
    assert result.exit_code == 1
    assert "line 2" in result.output


def test_analyze_undecodable_file_exits_1(tmp_path):
    path = tmp_path / "bad.lot"
    path.write_bytes(b"vertices: a b\xff\n")
    result = run("analyze", str(path))
    assert result.exit_code == 1
    assert "byte 13" in result.output
    assert "Traceback" not in result.output
    assert not isinstance(result.exception, UnicodeDecodeError)


def test_analyze_invalid_graph_exits_2(write):
    parallel = write("parallel.lot", "vertices: a b c\nedge a b c\nedge b a c\n")
    result = run("analyze", parallel)
    assert result.exit_code == 2
    assert "parallel-edge" in result.output
    disconnected = write("apart.lot", "vertices: a b c d\nedge a b c\n")
    assert run("analyze", disconnected).exit_code == 2
    duplicate = write("dup.txt", "< a,b,c | c a c^-1 = b, c b c^-1 = a >")
    assert run("analyze", duplicate).exit_code == 2


def test_analyze_writes_dot(write, tmp_path):
    out = tmp_path / "six_tree.dot"
    result = run("analyze", write("six_tree.lot", SIX_TREE_LOT), "--exact", "--dot", str(out))
    assert result.exit_code == 0
    assert out.read_text().count("doublecircle") == 3


def test_exact_limit_from_environment(write):
    result = run("analyze", write("star4.lot", STAR4_LOT), "--exact", "--json", env={"LOTKIT_EXACT_LIMIT": "3"})
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["exact"] is None
    assert "exact search skipped" in data["notes"][0]


def test_generate_chain_to_stdout():
    result = run("generate", "--mode", "chain", "--parts", "3")
    assert result.exit_code == 0
    g = parse_lot_file(result.output)
    assert g.m == 7 and is_maximal_complexity(g)


def test_generate_random_is_deterministic(tmp_path):
    first = run("generate", "--vertices", "6", "--seed", "42", "--mode", "random")
    second = run("generate", "--vertices", "6", "--seed", "42", "--mode", "random")
    assert first.exit_code == 0 and first.output == second.output
    result = run("generate", "--vertices", "6", "--seed", "42", "--out", str(tmp_path))
    assert (tmp_path / "random-m6-seed42.lot").read_text() == first.output


def test_generate_census_with_manifest(tmp_path):
    out = tmp_path / "census"
    result = run("generate", "--vertices", "4", "--mode", "census", "--out", str(out))
    assert result.exit_code == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["count"] == manifest["expected"] == 128
    assert len([n for n in os.listdir(out) if n.endswith(".lot")]) == 128


def test_generate_census_cap(tmp_path):
    result = run("generate", "--vertices", "3", "--mode", "census", "--out", str(tmp_path), env={"LOTKIT_MAX_M": "2"})
    assert result.exit_code == 2
    assert "cap" in result.output
    forced = run("generate", "--vertices", "3", "--mode", "census", "--out", str(tmp_path), "--force", env={"LOTKIT_MAX_M": "2"})
    assert forced.exit_code == 0


def test_generate_usage_errors():
    assert run("generate", "--mode", "random").exit_code == 2
    assert run("generate", "--mode", "census", "--vertices", "3").exit_code == 2
    assert run("generate", "--vertices", "2").exit_code == 2


def test_verify_small_census():
    result = run("verify", "--max-m", "3", "--samples", "0")
    assert result.exit_code == 0
    assert "checked 3 graphs, 0 violations" in result.output


def test_verify_over_cap():
    assert run("verify", "--max-m", "6").exit_code == 2


def test_verify_dumps_violations(monkeypatch, tmp_path):
    def lazy_greedy(graph, start=None):
        witness = tuple(graph.vertices)
        return ComplexityReport(len(witness), witness, "greedy", 1, growth=(graph.m,))

    monkeypatch.setattr(verify, "greedy_seed", lazy_greedy)
    dump = tmp_path / "dump"
    result = run("verify", "--max-m", "3", "--dump", str(dump))
    assert result.exit_code == 1
    assert "checked 3 graphs, 3 violations" in result.output
    assert len(os.listdir(dump)) == 3


def test_closure_command(write):
    result = run("closure", write("six_tree.lot", SIX_TREE_LOT), "x1", "x4")
    assert result.exit_code == 0
    assert "x1, x3, x4" in result.output
    assert "x3 via x1->x3:x4" in result.output
    assert run("closure", write("six_treeb.lot", SIX_TREE_LOT), "x9").exit_code == 2


def test_convert(write, tmp_path):
    result = run("convert", write("star4.lot", STAR4_LOT), "--to", "presentation")
    assert result.output.strip() == STAR4_PRESENTATION
    back = run("convert", write("star4.txt", STAR4_PRESENTATION))
    assert back.output == STAR4_LOT
    out = tmp_path / "star4.dot"
    run("convert", write("star4b.lot", STAR4_LOT), "--to", "dot", "--out", str(out))
    assert out.read_text().startswith("digraph lot {")
