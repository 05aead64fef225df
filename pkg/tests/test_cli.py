import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import proper_set_systems
from twistpoly import documents as docs
from twistpoly import harness
from twistpoly.cli import run
from twistpoly.gf2 import matrix_from_index
from twistpoly.ribbon import random_ribbon_graph
from twistpoly.widthpoly import PolyReport

PAIR = {"ground": ["1", "2"], "feasible": [[], ["1", "2"]]}
TWISTED_LOOP = {"vertices": [["h1", "h2"]], "edges": [{"ends": ["h1", "h2"], "twisted": True}]}
NONBINARY = {"ground": ["1", "2", "3"], "feasible": [[], ["1", "2"], ["1", "3"], ["2", "3"], ["1", "2", "3"]]}
SIX = {"ground": ["1", "2", "3", "4", "5", "6"], "feasible": [["1", "2"], ["3", "4", "5"], ["3", "4", "5", "6"]]}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="doc.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dm_poly_example(capsys, write):
    code, out, _ = call(capsys, "dm", "poly", "--input", write(PAIR))
    assert code == 0
    assert out == '{"coefficients":{"0":2,"2":2},"category":"even_polynomial"}\n'


def test_rg_poly_example(capsys, write):
    code, out, _ = call(capsys, "rg", "poly", "--input", write(TWISTED_LOOP))
    assert code == 0
    assert out == '{"coefficients":{"1":2},"category":"odd_polynomial"}\n'


def test_verify_example(capsys):
    code, out, err = call(capsys, "verify", "theorem5", "--n", "4")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["instances_checked"] == 1024
    assert "elapsed" not in report
    assert "theorem5: pass" in err


def test_dm_subcommands(capsys, write):
    path = write(NONBINARY)
    code, out, _ = call(capsys, "dm", "classify", "-i", path)
    got = json.loads(out)
    assert code == 0 and got["category"] == "mixed" and got["binary"] is False
    assert got["coefficients"] == {"2": 6, "3": 2}
    code, out, _ = call(capsys, "dm", "check-axioms", "-i", path)
    assert json.loads(out) == {"proper": True, "normal": True, "is_delta_matroid": True, "even": False}
    code, out, _ = call(capsys, "dm", "is-binary", "-i", path)
    assert json.loads(out) == {"is_binary": False}
    code, out, _ = call(capsys, "dm", "width", "-i", path)
    assert json.loads(out) == {"r_min": 0, "r_max": 3, "width": 3, "twist_widths": [2, 3], "w_M": 3}
    code, out, _ = call(capsys, "dm", "types", "-i", path)
    assert json.loads(out)["types"] == {"1": "ut", "2": "ut", "3": "ut"}


def test_types_on_six_system(capsys, write):
    code, out, _ = call(capsys, "dm", "types", "-i", write(SIX))
    types = json.loads(out)["types"]
    assert code == 0
    assert [types[e][0] for e in ("2", "3", "6")] == ["p", "t", "u"]
    code, out, _ = call(capsys, "dm", "check-axioms", "-i", write(SIX))
    got = json.loads(out)
    assert got["is_delta_matroid"] is False and "exchange_violation" in got


def test_matrix_commands_round_trip(capsys, write):
    matrix = {"labels": ["a", "b"], "rows": [[0, 1], [1, 0]]}
    code, out, _ = call(capsys, "dm", "from-matrix", "-i", write(matrix))
    assert code == 0 and json.loads(out) == {"ground": ["a", "b"], "feasible": [[], ["a", "b"]]}
    code, out2, _ = call(capsys, "dm", "to-matrix", "-i", write(json.loads(out), "dm.json"))
    assert code == 0 and json.loads(out2) == matrix


def test_to_matrix_warns_on_nonbinary(capsys, write):
    code, _, err = call(capsys, "dm", "to-matrix", "-i", write(NONBINARY))
    assert code == 0 and "warning" in err


def test_rg_commands(capsys, write):
    path = write(TWISTED_LOOP)
    code, out, _ = call(capsys, "rg", "counts", "-i", path)
    assert json.loads(out) == {"v": 1, "e": 1, "c": 1, "f": 1, "chi": 1, "euler_genus": 1, "orientable": False}
    code, out, _ = call(capsys, "rg", "delta-matroid", "-i", path)
    assert json.loads(out) == {"ground": ["e1"], "feasible": [[], ["e1"]]}


def test_rg_random_is_reproducible(capsys):
    argv = ("rg", "random", "--vertices", "2", "--edges", "3", "--seed", "42")
    _, a, _ = call(capsys, *argv)
    _, b, _ = call(capsys, *argv)
    assert a == b
    G = docs.parse_ribbon_graph(json.loads(a))
    assert G == random_ribbon_graph(2, 3, 0.5, 42)
    code, _, err = call(capsys, "rg", "random", "--vertices", "0")
    assert code == 2 and err.startswith("error:")


def test_pretty_changes_whitespace_only(capsys, write):
    path = write(NONBINARY)
    for argv in (("dm", "classify", "-i", path), ("verify", "remark_types")):
        _, compact, _ = call(capsys, *argv)
        _, pretty, _ = call(capsys, *argv, "--pretty")
        assert compact != pretty
        assert json.loads(compact) == json.loads(pretty)
        assert "".join(pretty.split()) == "".join(compact.split())


def test_byte_identical_reruns(capsys):
    argv = ("verify", "ribbon_routes", "--samples", "30", "--seed", "9")
    _, a, _ = call(capsys, *argv)
    _, b, _ = call(capsys, *argv)
    assert a == b


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(PAIR)))
    code, out, _ = call(capsys, "dm", "poly", "--input", "-")
    assert code == 0 and json.loads(out)["coefficients"] == {"0": 2, "2": 2}


@pytest.mark.parametrize(
    "argv, doc",
    [
        (("dm", "poly"), '{"ground": ["1"], "feasible": [[]'),
        (("dm", "poly"), {"ground": ["1"]}),
        (("dm", "poly"), {"ground": ["1"], "feasible": [["2"]]}),
        (("dm", "poly"), {"ground": ["1", "1"], "feasible": [[]]}),
        (("dm", "from-matrix"), {"labels": ["1", "2"], "rows": [[0, 1], [0, 0]]}),
        (("dm", "from-matrix"), {"labels": ["1"], "rows": [[2]]}),
        (("rg", "poly"), {"vertices": [["h1", "h2"]], "edges": [{"ends": ["h1", "h1"]}]}),
        (("rg", "poly"), {"vertices": [["h1", "h2"]], "edges": [{"ends": ["h1", "h2"], "twisted": "yes"}]}),
        (("dm", "poly"), {"ground": [f"x{i}" for i in range(25)], "feasible": [[]]}),
    ],
)
def test_input_errors_exit_2(capsys, write, argv, doc):
    code, out, err = call(capsys, *argv, "-i", write(doc))
    assert code == 2 and out == "" and err.startswith("error:")


def test_error_names_offending_field(capsys, write):
    doc = {"vertices": [["h1", "h2"]], "edges": [{"ends": ["h1", "h2"], "twisted": 1}]}
    _, _, err = call(capsys, "rg", "poly", "-i", write(doc))
    assert "$.edges[0].twisted" in err


def test_missing_input_and_file(capsys, tmp_path):
    assert call(capsys, "dm", "poly")[0] == 2
    assert call(capsys, "dm", "poly", "-i", str(tmp_path / "nope.json"))[0] == 2
    assert call(capsys, "dm", "bogus")[0] == 2
    assert call(capsys, "verify", "nope")[0] == 2
    assert call(capsys, "verify", "sandwich", "--n", "9")[0] == 2


def test_hypothesis_violation_exits_1(capsys, write):
    code, out, err = call(capsys, "dm", "is-binary", "-i", write(SIX))
    assert code == 1 and out == "" and "error:" in err
    code, _, _ = call(capsys, "dm", "to-matrix", "-i", write({"ground": ["1"], "feasible": [["1"]]}))
    assert code == 1


def test_failing_check_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(harness, "check_theorem5", lambda D, verify_hypotheses=True: PolyReport("mixed", (), False, True, False))
    code, out, err = call(capsys, "verify", "theorem5", "--n", "2")
    report = json.loads(out)
    assert code == 1 and not report["passed"] and report["violation_count"] == 8
    assert "FAIL" in err


def test_verify_list_and_timing(capsys):
    code, out, _ = call(capsys, "verify", "list")
    listing = json.loads(out)
    assert code == 0 and {"theorem5", "ribbon_routes", "remark_nonbinary"} <= set(listing)
    code, out, _ = call(capsys, "verify", "remark_nonbinary", "--timing")
    assert "elapsed" in json.loads(out)


def test_help_exits_0(capsys):
    assert call(capsys, "--help")[0] == 0


@settings(max_examples=50, deadline=None)
@given(proper_set_systems(max_n=5))
def test_set_system_document_round_trip(D):
    assert docs.parse_set_system(json.loads(json.dumps(docs.render_set_system(D)))) == D


def test_matrix_and_ribbon_document_round_trip():
    for n in (1, 3, 5):
        for index in (0, 1, 2 ** (n * (n + 1) // 2) - 1):
            C = matrix_from_index(n, index)
            assert docs.parse_matrix(json.loads(json.dumps(docs.render_matrix(C)))) == C
    for seed in range(30):
        G = random_ribbon_graph(3, seed % 7, 0.5, seed)
        assert docs.parse_ribbon_graph(json.loads(json.dumps(docs.render_ribbon_graph(G)))) == G


def test_module_entry_point(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PAIR))
    proc = subprocess.run([sys.executable, "-m", "twistpoly", "dm", "poly", "--input", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == '{"coefficients":{"0":2,"2":2},"category":"even_polynomial"}\n'
