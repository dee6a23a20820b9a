import io
import json
import subprocess
import sys

import pytest

from congreedy.cli import cmd_run
from congreedy.graph import format_dimacs
from congreedy.generators import cycle


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cmd_run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv, stdin=""):
    code, out, err = run(argv, stdin)
    assert code == 0, err
    return json.loads(out)


def test_classify_fish():
    r = run_json(["classify", "--fixture", "fish"])
    assert {k: r[k] for k in ("chi", "chi_c", "gamma_c", "verdict")} == {"chi": 3, "chi_c": 3, "gamma_c": 4, "verdict": "bad"}


def test_classify_ugly_cubic():
    r = run_json(["classify", "--fixture", "ugly-cubic"])
    assert (r["verdict"], r["chi"], r["chi_c"]) == ("ugly", 3, 4)
    assert r["witness_good_ordering"] is None


def test_grundy_of_generated_graph():
    code, graph, _ = run(["gen", "knn-minus-matching", "5"])
    assert code == 0
    assert run_json(["grundy", "-"], stdin=graph)["gamma"] == 5
    assert run_json(["grundy"], stdin=graph)["gamma"] == 5


def test_shell_pipeline():
    gen = subprocess.run([sys.executable, "-m", "congreedy", "gen", "knn-minus-matching", "5"], capture_output=True, text=True, check=True)
    out = subprocess.run([sys.executable, "-m", "congreedy", "grundy", "-"], input=gen.stdout, capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["gamma"] == 5


def test_graph_file_and_edge_format(tmp_path):
    path = tmp_path / "c5.col"
    path.write_text(format_dimacs(cycle(5)))
    assert run_json(["chi", str(path)])["chi"] == 3
    assert run_json(["omega", "--format", "edges", "-"], stdin="0 1\n1 2\n0 2\n2 3\n")["omega"] == 3


@pytest.mark.parametrize(
    "argv, key, value",
    [
        (["chi", "--fixture", "fish"], "chi", 3),
        (["omega", "--fixture", "fish"], "omega", 3),
        (["gamma-c", "--fixture", "gem"], "gamma_c", 4),
        (["chi-c", "--fixture", "fish"], "chi_c", 3),
        (["great", "--fixture", "fish"], "great", False),
        (["recognize", "k4-minor-free", "--fixture", "fish"], "result", True),
        (["recognize", "cactus", "--fixture", "fish"], "result", False),
    ],
)
def test_oracle_commands(argv, key, value):
    assert run_json(argv)[key] == value


@pytest.mark.parametrize("pipeline", ["k4mf", "comparability", "perfect"])
def test_ordering_pipelines(pipeline):
    r = run_json(["ordering", pipeline, "--fixture", "fish"])
    assert r["connected"] and r["good"] and r["colours"] == r["chi"] == 3


def test_perfect_start_vertex_by_label():
    r = run_json(["ordering", "perfect", "--fixture", "fish", "--start", "v5", "--trusted-perfect"])
    assert r["ordering"][0] == 4 and r["good"]


def test_verify_ordering_examples():
    r = run_json(["verify-ordering", "v1 v2 v3 v4 v5 v6", "--fixture", "fish"])
    assert (r["connected"], r["colours"], r["good"]) == (True, 4, False)
    r = run_json(["verify-ordering", "v3,v4,v6,v5,v1,v2", "--fixture", "fish"])
    assert (r["connected"], r["colours"], r["good"]) == (True, 3, True)
    r = run_json(["verify-ordering", "[0, 2, 1]", "--format", "edges"], stdin="0 1\n1 2\n")
    assert r["connected"] is False


def test_exit_codes():
    assert run(["verify-ordering", "0 0 1", "--format", "edges"], stdin="0 1\n1 2\n")[0] == 1
    assert run(["ordering", "comparability", "--format", "edges"], stdin="0 1\n1 2\n2 3\n3 4\n4 0\n")[0] == 1
    assert run(["classify", "--fixture", "ugly-cubic", "--budget-nodes", "10"])[0] == 2
    assert run(["chi"], stdin="p edge 2 1\ne 1 1\n")[0] == 3
    assert run(["chi", "/nonexistent/file.col"])[0] == 3
    assert run(["frobnicate"])[0] == 3
    assert run(["chi", "--no-such-flag"])[0] == 3
    assert run([])[0] == 3
    code, _, err = run(["classify", "--fixture", "ugly-line"])
    assert code == 1 and "--expensive" in err


def test_table_output():
    code, out, _ = run(["chi", "--fixture", "fish", "--table"])
    assert code == 0 and out.splitlines()[0].split() == ["chi", "3"]


def test_fixture_and_gen_output_round_trip():
    code, text, _ = run(["fixture", "gem"])
    assert code == 0 and "p edge 5 7" in text
    assert run_json(["classify"], stdin=text)["verdict"] == "bad"
    info = run_json(["fixture", "ugly-cubic", "--info"])
    assert info["n"] == 18 and info["expected"]["verdict"] == "ugly"
    code, text, _ = run(["gen", "knn-minus-matching", "3", "--format", "edges"])
    assert code == 0 and len(text.splitlines()) == 6


def test_output_is_byte_stable():
    first = run(["classify", "--fixture", "gem", "--gamma"])
    assert all(run(["classify", "--fixture", "gem", "--gamma"]) == first for _ in range(3))
