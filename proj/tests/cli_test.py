"""End-to-end checks of the ditlogic command-line tool.

Run as `python -m pytest tests/cli_test.py` with DITLOGIC_CLI pointing at the
binary (ctest sets it).
"""

import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("DITLOGIC_CLI", "ditlogic")


def run(*args, stdin=None):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout) if proc.stdout.strip() else None


def value(doc, name):
    return doc["outputs"][name]["value"]


def all_residuals_small(doc, tol=1e-9):
    for name, rec in doc["residuals"].items():
        if "exact" in rec:
            assert rec["exact"] == "0", name
        else:
            assert abs(rec["value"]) < tol, name


def test_entropy_partition_uniform():
    code, doc = run("entropy", "0,1|2")
    assert code == 0
    assert doc["outputs"]["h"]["exact"] == "4/9"
    assert value(doc, "H") == pytest.approx(0.9182958340544893, abs=1e-12)
    assert value(doc, "dits") == 4
    all_residuals_small(doc)


def test_entropy_discrete_and_point_mass():
    _, doc = run("entropy", "0|1|2|3")
    assert value(doc, "h") == 0.75
    assert value(doc, "H") == 2.0
    _, doc = run("entropy", "1")
    assert value(doc, "h") == 0.0
    assert value(doc, "H") == 0.0


def test_entropy_units_and_stdin():
    _, bits = run("entropy", "-", stdin="0.5,0.25,0.25\n")
    _, nats = run("entropy", "0.5,0.25,0.25", "--base", "e")
    assert bits["outputs"]["H"]["unit"] == "bits"
    assert nats["outputs"]["H"]["unit"] == "nats"
    assert nats["outputs"]["H"]["value"] == pytest.approx(1.5 * math.log(2))


def test_every_quantity_names_a_unit():
    for args in (["entropy", "0,1|2"], ["joint", "0.2,0.3;0.1,0.4"], ["compare", "0.2,0.8", "0.5,0.5"],
                 ["stirling", "3,4"], ["sample", "pairs", "0.5,0.5", "--trials", "100"]):
        _, doc = run(*args)
        for section in ("outputs", "residuals"):
            for rec in doc[section].values():
                assert rec["unit"]


def test_joint_examples():
    _, doc = run("joint", "1/4,1/4;1/4,1/4")
    assert value(doc, "I_xy") == pytest.approx(0.0, abs=1e-15)
    assert doc["outputs"]["m_xy"]["exact"] == "1/4"
    assert doc["outputs"]["independence_residual"]["exact"] == "0"
    all_residuals_small(doc)

    _, doc = run("joint", "0.5,0;0,0.5")
    assert value(doc, "I_xy") == pytest.approx(1.0)
    assert value(doc, "m_xy") == 0.5
    assert value(doc, "h_x_given_y") == 0.0
    assert value(doc, "H_x_given_y") == 0.0

    _, doc = run("joint", "1,0;0,0")
    assert all(rec["value"] == 0 for rec in doc["outputs"].values())


def test_joint_file_input(tmp_path):
    path = tmp_path / "joint.csv"
    path.write_text("0.1,0.2,0.1\n0.3,0.1,0.2\n")
    code, doc = run("joint", str(path))
    assert code == 0
    all_residuals_small(doc)


def test_ops_examples():
    assert value(run("ops", "join", "0,1|2,3", "0,2|1,3")[1], "result") == "0|1|2|3"
    assert value(run("ops", "meet", "0,1|2,3", "0,2|1,3")[1], "result") == "0,1,2,3"
    _, doc = run("ops", "implies", "0,1|2,3", "0,1,2|3")
    assert value(doc, "result") == "0|1|2,3"
    assert value(doc, "is_top") is False
    assert value(run("ops", "implies", "0,1|2,3", "0,1|2,3")[1], "is_top") is True


def test_compare_examples():
    _, doc = run("compare", "1/2,1/2", "1/4,3/4")
    assert doc["outputs"]["d"]["exact"] == "1/16"
    assert value(doc, "D_pq") == pytest.approx(0.20751874963942185, abs=1e-12)
    assert value(doc, "D_s") == pytest.approx(0.1981203125901445, abs=1e-12)
    all_residuals_small(doc)

    _, doc = run("compare", "1,0", "0,1")
    assert value(doc, "d") == 1.0
    assert value(doc, "h_cross") == 1.0
    assert value(doc, "D_pq") == "+inf"

    _, doc = run("compare", "0.3,0.7", "0.3,0.7")
    for name in ("d", "D_pq", "D_qp", "D_s"):
        assert value(doc, name) == 0.0


def test_verify():
    code, doc = run("verify", "--max-n", "4")
    assert code == 0
    assert value(doc, "pairs_checked_at_max_n") == 225
    code, doc = run("verify", "--max-n", "5")
    assert code == 0
    assert value(doc, "pairs_checked_at_max_n") == 2704
    code, doc = run("verify", "--max-n", "7")
    assert code == 1
    assert doc["error"]["kind"] == "limit_exceeded"


def test_lattice():
    assert value(run("lattice", "3")[1], "partitions") == 5
    _, doc = run("lattice", "1")
    assert value(doc, "partitions") == 1
    assert value(doc, "edges") == []
    assert value(run("lattice", "5")[1], "partitions") == 52
    _, doc = run("lattice", "4", "--dot")
    assert value(doc, "dot").startswith("digraph")
    assert run("lattice", "13")[0] == 1


def test_sample():
    _, doc = run("sample", "pairs", "0.5,0.5", "--trials", "1000000", "--seed", "42")
    assert abs(value(doc, "estimate") - 0.5) < 0.002
    assert value(doc, "target") == 0.5
    assert value(doc, "seed") == 42
    _, doc = run("sample", "typical", "1/3,1/3,1/3", "--length", "1000", "--samples", "10")
    assert value(doc, "estimate") == math.log2(3)
    _, doc = run("sample", "seqavg", "1,0")
    assert value(doc, "estimate") == 0.0
    first = run("sample", "pairs", "0.2,0.8", "--trials", "1000", "--seed", "9")[1]
    again = run("sample", "pairs", "0.2,0.8", "--trials", "1000", "--seed", "9")[1]
    assert value(first, "estimate") == value(again, "estimate")


def test_stirling():
    _, doc = run("stirling", "6,6")
    assert value(doc, "exact") == pytest.approx(math.log(924) / 12, abs=1e-12)
    assert doc["outputs"]["exact"]["unit"] == "nats"
    _, doc = run("stirling", "1")
    assert all(value(doc, k) == 0 for k in ("exact", "approx2", "error2"))
    _, doc = run("stirling", "250,250,250,250")
    assert value(doc, "error3") < value(doc, "error2")


@pytest.mark.parametrize("args,kind", [
    (["entropy", "0,x|1"], "parse"),
    (["entropy", "0,1||2"], "empty_block"),
    (["entropy", "0,1|2", "--weights", "0.5,0.5"], "size_mismatch"),
    (["entropy", "0.5,0.6"], "normalization"),
    (["joint", "0.5,-0.5;0.5,0.5"], "negative_entry"),
    (["ops", "join", "0|1", "0|1|2"], "universe_mismatch"),
    (["compare", "0.5,0.5", "1,0,0"], "size_mismatch"),
    (["stirling", "3,0"], "domain"),
])
def test_input_errors(args, kind):
    code, doc = run(*args)
    assert code == 1
    assert doc["error"]["kind"] == kind


def test_parse_error_position():
    _, doc = run("entropy", "0,x|1")
    assert doc["error"]["position"] == 2


def test_bad_flags_exit_one():
    assert subprocess.run([CLI, "sample", "walk", "0.5,0.5"], capture_output=True).returncode == 1
    assert subprocess.run([CLI, "--base", "10", "entropy", "1"], capture_output=True).returncode == 1
