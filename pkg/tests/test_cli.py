import json

import pytest

from rankcrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_partition_number(capsys):
    code, out, _ = run(capsys, "compute", "p", "--n", "50")
    assert code == 0 and out.split()[-1] == "204226"


def test_compute_crank_moment_csv(capsys):
    code, out, _ = run(capsys, "compute", "moment", "--j", "2", "--n-max", "6", "--output", "csv")
    assert code == 0
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["2", "8", "18", "40", "70", "132"]


def test_compute_counts_json(capsys):
    code, out, _ = run(capsys, "compute", "N", "--n", "4", "--m", "0", "--output", "json")
    assert code == 0 and json.loads(out)["rows"] == [["0", "4", "1"]]
    code, out, _ = run(capsys, "compute", "M", "--n", "1", "--output", "json")
    assert json.loads(out)["rows"] == [["-1", "1"], ["0", "-1"], ["1", "1"]]


def test_compute_other_tables(capsys):
    assert run(capsys, "compute", "eisenstein", "--k", "4", "--order", "2")[1].split()[-1] == "2160"
    assert run(capsys, "compute", "phi", "--j", "3", "--order", "2")[1].split()[-1] == "9"
    assert run(capsys, "compute", "eta", "--r", "24", "--order", "2")[1].split()[-1] == "252"


@pytest.mark.parametrize("target", ["dims", "master", "thm6.2", "oracle"])
def test_verify_targets_pass(capsys, target):
    code, out, _ = run(capsys, "verify", target, "--order", "20", "--n-max", "60")
    assert code == 0 and "checks passed" in out


def test_verify_json_is_deterministic(capsys):
    a = run(capsys, "verify", "thm5.1", "--output", "json", "--n-max", "30")[1]
    b = run(capsys, "verify", "thm5.1", "--output", "json", "--n-max", "30")[1]
    assert a == b and json.loads(a)["status"] == "pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from rankcrank import checks, relations
    bad = relations.CheckReport("x", "broken")
    bad.fail(n=1, lhs=1, rhs=0)
    monkeypatch.setattr(checks, "run_target", lambda name, order, n_max: [bad])
    code, out, _ = run(capsys, "verify", "dims")
    assert code == 1 and out.startswith("FAIL")


def test_discover_relation_and_pointwise(capsys):
    code, out, _ = run(capsys, "discover", "--target", "T2", "--basis", "C2", "--order", "20", "--output", "json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "relation"
    assert d["relation"]["coefficients"] == ["-2/1", "-6/1", "8/1"]
    assert d["pointwise"]["symbol"] == "N4"


def test_discover_expectation_mismatch(capsys):
    code, out, _ = run(capsys, "discover", "--target", "T6", "--basis", "C6", "--order", "60", "--expect-relation")
    assert code == 3 and "independent" in out


def test_discover_mod_p_dependency(capsys):
    code, out, _ = run(capsys, "discover", "--basis", "C3", "--modulus", "11", "--order", "40")
    assert code == 0 and "dependent" in out and "9*C2" in out


@pytest.mark.parametrize("argv", [
    ["discover", "--basis", "C3", "--modulus", "12"],
    ["discover", "--basis", "Q7"],
    ["discover", "--target", "T3", "--basis", "C3", "--order", "5"],
    ["compute", "moment", "--j", "3"],
    ["compute", "N"],
    ["compute", "p", "--order", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_out_file(capsys, tmp_path):
    path = tmp_path / "p.csv"
    code, out, _ = run(capsys, "compute", "p", "--n-max", "5", "--output", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[-1] == "5,7"


def test_worker_pool_matches_serial(capsys, monkeypatch):
    serial = run(capsys, "verify", "all", "--order", "20", "--n-max", "40", "--output", "json")
    monkeypatch.setenv("RANKCRANK_THREADS", "3")
    pooled = run(capsys, "verify", "all", "--order", "20", "--n-max", "40", "--output", "json")
    assert serial == pooled and serial[0] == 0
