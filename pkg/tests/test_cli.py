import json
import pathlib
import subprocess
import sys
from importlib import resources

import pytest

from hypverify.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_check_golden(capsys):
    code, out, err = run(capsys, "check", "--n", "2", "--b", "3", "--c", "1")
    assert code == 2
    assert out == (
        "LHS: 1/3 - 1/2*x + 1/5*x^2\n"
        "RHS: 1/30 - 1/30*x + 1/100*x^2\n"
        "Match: false\n"
        "Difference: 3/10 - 7/15*x + 19/100*x^2\n"
    )
    assert err == ""


def test_check_n0(capsys):
    code, out, _ = run(capsys, "check", "--n", "0", "--b", "3", "--c", "1")
    assert code == 0
    assert "Match: true" in out


def test_check_domain_error(capsys):
    code, out, err = run(capsys, "check", "--n", "2", "--b", "1", "--c", "3")
    assert code == 1
    assert out == ""
    assert "c must not exceed b" in err


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--n", "2", "--b", "3", "--c", "1", "--json")
    assert code == 2
    assert json.loads(out) == {
        "n": 2, "b": 3, "c": 1,
        "lhs": ["1/3", "-1/2", "1/5"], "rhs": ["1/30", "-1/30", "1/100"],
        "difference": ["3/10", "-7/15", "19/100"], "equal": False,
    }


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["check", "--n", "2"], ["check", "--n", "two", "--b", "3", "--c", "1"],
    ["search", "--n-max", "-1", "--b-max", "2"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_search_empty(capsys):
    code, out, _ = run(capsys, "search", "--n-max", "0", "--b-max", "4")
    assert code == 0
    assert out == "0 counterexamples\n"


def test_search_small(capsys):
    code, out, _ = run(capsys, "search", "--n-max", "2", "--b-max", "3")
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "(1, 1, 1): 1/2 - 1/6*x"
    assert "(2, 3, 1): 3/10 - 7/15*x + 19/100*x^2" in lines


def test_search_json_same_order(capsys):
    _, text, _ = run(capsys, "search", "--n-max", "2", "--b-max", "3")
    code, out, _ = run(capsys, "search", "--n-max", "2", "--b-max", "3", "--json")
    assert code == 2
    data = json.loads(out)
    triples = [f"({d['n']}, {d['b']}, {d['c']})" for d in data]
    assert triples == [line.split(":")[0] for line in text.splitlines()[:-1]]


def test_search_golden(capsys):
    _, out, _ = run(capsys, "search", "--n-max", "4", "--b-max", "4")
    assert out == (GOLDEN / "search_n4_b4.txt").read_text()
    _, out, _ = run(capsys, "search", "--n-max", "4", "--b-max", "4", "--json")
    assert json.loads(out) == json.loads((GOLDEN / "search_n4_b4.json").read_text())


def test_frisch(capsys):
    code, out, _ = run(capsys, "frisch", "--n-max", "8", "--b-max", "8")
    assert (code, out) == (0, "all 324 cases hold\n")
    code, out, _ = run(capsys, "frisch", "--n-max", "0", "--b-max", "1")
    assert (code, out) == (0, "all 1 case hold\n")
    code, _, err = run(capsys, "frisch", "--n-max", "2", "--b-max", "0")
    assert code == 1 and "--b-max" in err
    code, out, _ = run(capsys, "frisch", "--n-max", "1", "--b-max", "1", "--json")
    assert json.loads(out) == {"cases": 2, "failures": [], "holds": True}


def test_integral(capsys):
    code, out, _ = run(capsys, "integral", "--n", "2", "--b", "3", "--c", "1")
    assert code == 0
    assert out.splitlines()[-1] == "Match: true"

    code, out, _ = run(capsys, "integral", "--n", "1", "--b", "2", "--c", "1", "--truncated")
    assert code == 2
    assert out.splitlines() == [
        "Truncated: 1/2 - 1/4*x",
        "True sum: 1/2 - 1/3*x",
        "Claimed: 1/6 - 1/9*x",
        "Matches true sum: false",
        "Matches claimed form: false",
    ]

    code, out, _ = run(capsys, "integral", "--n", "0", "--b", "2", "--c", "1", "--truncated")
    assert code == 0
    assert "Truncated: 1/2\nTrue sum: 1/2\n" in out

    code, out, _ = run(capsys, "integral", "--n", "1", "--b", "2", "--c", "1", "--truncated", "--json")
    d = json.loads(out)
    assert d["truncated"] == ["1/2", "-1/4"] and d["matches_sum"] is False


def test_run_prop_bundled_name(capsys):
    code, out, _ = run(capsys, "run", "prop6_1.hvd")
    assert code == 2
    assert out.splitlines()[-1] == "prop6.1: 0 of 40 bindings hold, 40 fail"


def test_run_frisch_file(capsys, tmp_path):
    path = tmp_path / "frisch.hvd"
    path.write_text((resources.files("hypverify.identities") / "frisch.hvd").read_text())
    code, out, _ = run(capsys, "run", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "frisch: 50 of 50 bindings hold, 0 fail"


def test_run_missing(capsys, tmp_path):
    code, out, err = run(capsys, "run", str(tmp_path / "missing.hvd"))
    assert code == 1 and "missing.hvd" in err
    code, _, _ = run(capsys, "run", "missing.hvd")
    assert code == 1


def test_run_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.hvd"
    path.write_text('identity "t" {\n  params n in 0..2;\n  lhs = x @ 2;\n  rhs = x;\n}\n')
    code, out, err = run(capsys, "run", str(path))
    assert code == 1
    assert "line 3, column 11" in err


def test_run_eval_error(capsys, tmp_path):
    path = tmp_path / "bad.hvd"
    path.write_text('identity "t" { params n in 0..2; lhs = x^(n - 1); rhs = x; }')
    code, _, err = run(capsys, "run", str(path))
    assert code == 1 and "n=0" in err


def test_run_json(capsys):
    code, out, _ = run(capsys, "run", "prop6_1.hvd", "--json")
    assert code == 2
    (block,) = json.loads(out)
    assert block["identity"] == "prop6.1"
    assert len(block["reports"]) == 40
    assert block["reports"][0]["n"] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypverify", "check", "--n", "0", "--b", "2", "--c", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "Match: true" in proc.stdout
