import json
import subprocess
import sys

import pytest

from flagdeg.cli import _jsonable, main, render_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--e", "1,2,3")
    assert code == 0 and json.loads(out) == 5


def test_components(capsys):
    code, out, _ = run(capsys, "components", "--n", "3", "--e", "1,2,3")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 5
    assert all({"arcs", "r", "N_A"} <= set(r) for r in rows)


def test_classify_generic_point(capsys):
    r = {"n": 3, "N": 4, "r": [[1, 2, 3], [1, 3, 2], [2, 3, 3]]}
    code, out, _ = run(capsys, "classify", "--n", "3", "--e", "1,2,3", "--r", json.dumps(r))
    assert code == 0 and json.loads(out)["label"] == "flat-irreducible"


def test_same_seed_same_bytes(capsys):
    argv = ["--seed", "7", "grdim", "--rep", json.dumps({"n": 2, "m": [[1, 2, 1], [1, 1, 1], [2, 2, 1]]}), "--e", "1,2"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_global_options_after_subcommand(capsys):
    a = run(capsys, "--output", "table", "count", "--n", "2", "--e", "1,2")
    b = run(capsys, "count", "--n", "2", "--e", "1,2", "--output", "table")
    assert a == b and a[0] == 0


def test_table_output(capsys):
    code, out, _ = run(capsys, "--output", "table", "components", "--n", "2", "--e", "1,2")
    lines = out.splitlines()
    assert code == 0 and lines[0].split() == ["N_A", "arcs", "r"]
    assert set(lines[1].replace(" ", "")) == {"-"}


def test_render_table_shapes():
    assert render_table({"b": 1, "a": [1, 2]}).splitlines()[2].split() == ["a", "[1,2]"]
    assert render_table(3) == "3"


def test_jsonable_large_and_fractional():
    from fractions import Fraction

    assert _jsonable([2**70, Fraction(3, 4), Fraction(4, 2)]) == [str(2**70), "3/4", 2]


def test_module(capsys):
    code, out, _ = run(capsys, "module", "--n", "2", "--mu", "1,1", "--lambda", '{"entries": [[2, 2, 1, 3]]}')
    data = json.loads(out)
    assert code == 0 and data["dim"] == 8 and len(data["essential"]) == 8


def test_straighten(capsys):
    spec = json.dumps({"N": 4, "I": [[], []]})
    code, out, _ = run(capsys, "straighten", "--spec", spec, "--monomial", "[[1,3],[2,4]]")
    assert code == 0
    assert json.loads(out)["terms"] == [[[[1, 2], [3, 4]], 1], [[[1, 4], [2, 3]], 1]]
    code, _, _ = run(capsys, "straighten", "--spec", json.dumps({"N": 4, "I": [[], [], []]}), "--monomial", "[[1,3]]")
    assert code == 2


def test_genfn_check(capsys):
    code, out, _ = run(capsys, "genfn", "--n", "2", "--trunc", "3", "--check")
    assert code == 0 and "check" in json.loads(out)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3", "--e", "a,b"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "classify", "--n", "2", "--e", "1,2", "--r", json.dumps({"n": 3, "N": 4, "r": []}))
    assert code == 2 and "error" in err


def test_guard_and_override(capsys):
    code, _, _ = run(capsys, "module", "--n", "2", "--mu", "2,2")
    assert code == 2
    code, out, _ = run(capsys, "--guard-override", "module", "--n", "1", "--mu", "4")
    assert code == 0 and json.loads(out)["dim"] == 5


def test_verify_failure_exits_one(capsys):
    code, out, err = run(capsys, "verify", "--only", "5")
    assert code == 1 and not json.loads(out)["passed"]
    assert "[FAIL] criterion 5" in err


def test_verify_passing_subset(capsys):
    code, out, err = run(capsys, "verify", "--only", "4,6")
    assert code == 0 and json.loads(out)["passed"]
    assert err.count("[PASS]") == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "flagdeg.cli", "count", "--n", "2", "--e", "1,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == 2
