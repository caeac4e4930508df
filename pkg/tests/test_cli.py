import json

import pytest
from click.testing import CliRunner

from src.app import cli
from src.checks.report import JSONL_FIELDS, judged
from src.checks.sweep import REGISTRY, CheckSpec

REMARK = "3 0\n0 1 4\n1 3 7\n4 7 12\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def config(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"logging": {"level": "WARNING", "alerts_file": None}}))
    return str(path)


@pytest.fixture
def invoke(runner, config):
    def run(*args, **kwargs):
        return runner.invoke(cli, ["--config", config, *args], **kwargs)

    return run


def records(result):
    return [json.loads(line) for line in result.stdout.splitlines()]


def test_build_quadform(invoke):
    result = invoke("build", "quadform", "--p", "3", "--c", "1", "--d", "1", "--range", "full0", "--exact")
    assert result.exit_code == 0
    assert result.stdout == REMARK


def test_build_primeind(invoke):
    result = invoke("build", "primeind", "--n", "2")
    assert result.stdout == "2 0\n1 1\n1 0\n"


def test_build_cauchy(invoke):
    result = invoke("build", "cauchy", "--kind", "invdiff", "--p", "3", "--mod", "9", "--diag", "zero")
    assert result.exit_code == 0
    assert result.stdout == "2 9\n0 8\n1 0\n"


def test_build_skew_odd_is_rejected(invoke):
    result = invoke("build", "checkerboard", "--n", "5", "--variant", "skew")
    assert result.exit_code == 2


def test_det_of_remark_matrix(invoke, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(REMARK)
    result = invoke("det", str(path))
    assert result.exit_code == 0
    assert result.stdout == "-4\n"
    assert "engine: bareiss" in result.stderr


def test_det_from_stdin(invoke):
    result = invoke("det", "-", input=REMARK)
    assert result.stdout == "-4\n"


def test_per_of_ones(invoke, tmp_path):
    path = tmp_path / "ones.txt"
    path.write_text("3 0\n1 1 1\n1 1 1\n1 1 1\n")
    result = invoke("per", str(path))
    assert result.exit_code == 0
    assert result.stdout == "6\n"


def test_det_engines_agree(invoke, tmp_path):
    path = tmp_path / "r.txt"
    path.write_text(invoke("build", "random", "--n", "6", "--seed", "3", "--mod", "101").stdout)
    field = invoke("det", str(path), "--engine", "field")
    bareiss = invoke("det", str(path), "--engine", "bareiss")
    assert field.exit_code == bareiss.exit_code == 0
    assert field.stdout == bareiss.stdout


def test_det_reduces_on_request(invoke, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(REMARK)
    result = invoke("det", str(path), "--mod", "7")
    assert result.stdout == "3\n"


@pytest.mark.parametrize("text", ["2 5\n1 2\n", "2 0\n1 x\n3 4\n", ""])
def test_bad_matrix_exits_2(invoke, text):
    result = invoke("det", "-", input=text)
    assert result.exit_code == 2


def test_mod_zero_on_modular_matrix(invoke):
    result = invoke("det", "-", "--mod", "0", input="2 9\n0 8\n1 0\n")
    assert result.exit_code == 2


def test_even_modulus_exits_2(invoke):
    assert invoke("det", "-", "--mod", "2", input=REMARK).exit_code == 2
    assert invoke("det", "-", input="1 2\n1\n").exit_code == 2


def test_check_eq15(invoke):
    result = invoke("check", "eq15", "--p", "5", "--c", "1", "--d", "2")
    assert result.exit_code == 0
    [record] = records(result)
    assert list(record) == list(JSONL_FIELDS)
    assert record["check_id"] == "eq15"
    assert record["params"] == {"p": 5, "c": 1, "d": 2}
    assert record["verdict"] == "pass"


def test_check_not_applicable_index(invoke):
    result = invoke("check", "conj", "--id", "5", "--p", "9")
    assert result.exit_code == 0
    assert [r["verdict"] for r in records(result)] == ["not-applicable", "not-applicable"]


def test_check_needs_index(invoke):
    assert invoke("check", "eq15").exit_code == 2
    assert invoke("check", "conj", "--p", "5").exit_code == 2
    assert invoke("check", "dp-theorem", "--p", "7", "--variant", "bogus").exit_code == 2


def test_sweep_dp_theorem(invoke):
    result = invoke("sweep", "dp-theorem", "--variant", "two_two", "--pmax", "43", "--no-elapsed")
    assert result.exit_code == 0
    verdicts = {r["params"]["p"]: r["verdict"] for r in records(result)}
    assert verdicts[7] == verdicts[43] == "pass"
    assert verdicts[13] == verdicts[3] == "not-applicable"
    assert "[STATS]" in result.stderr


def test_sweep_conjecture(invoke):
    result = invoke("sweep", "conj", "--id", "5", "--pmax", "13")
    assert result.exit_code == 0
    rows = records(result)
    assert len(rows) == 10
    assert [r["check_id"] for r in rows[:2]] == ["conj5.per", "conj5.det"]
    assert all(r["verdict"] == "pass" for r in rows)


def test_sweep_several_checks(invoke):
    result = invoke("sweep", "wolstenholme", "power-sums", "--pmax", "7")
    assert result.exit_code == 0
    ids = [r["check_id"] for r in records(result)]
    assert ids == ["wolstenholme"] * 3 + ["power-sums"] * 3


def test_check_several_ids(invoke):
    result = invoke("check", "wolstenholme", "power-sums", "--p", "11")
    assert [r["verdict"] for r in records(result)] == ["pass", "pass"]


def test_no_elapsed_is_byte_stable(invoke):
    args = ("sweep", "eq15", "--pmax", "11", "--c", "0:2", "--d", "1:2", "--no-elapsed")
    first = invoke(*args)
    second = invoke(*args)
    assert first.stdout == second.stdout
    assert all(r["elapsed_ms"] == 0 for r in records(first))


def test_csv_and_tty_formats(invoke):
    csv_out = invoke("check", "wolstenholme", "--p", "7", "--format", "csv").stdout.splitlines()
    assert csv_out[0] == "check_id,params,computed,expected,verdict,elapsed_ms,detail"
    assert csv_out[1].startswith("wolstenholme,")
    tty_out = invoke("check", "wolstenholme", "--p", "7", "--format", "tty").stdout
    assert tty_out.startswith("PASS")
    assert "p=7" in tty_out


def test_failure_exits_1_and_writes_alert(runner, tmp_path, monkeypatch):
    alerts = tmp_path / "logs" / "alerts.json"
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"logging": {"level": "WARNING", "alerts_file": str(alerts)}}))

    def broken(p: int):
        return judged("wolstenholme", {"p": p}, 1, 0, False)

    monkeypatch.setitem(REGISTRY, "wolstenholme", CheckSpec("wolstenholme", broken))
    result = runner.invoke(cli, ["--config", str(config), "sweep", "wolstenholme", "--pmax", "7"])
    assert result.exit_code == 1
    assert len(records(result)) == 3
    lines = alerts.read_text().splitlines()
    assert [json.loads(line)["params"]["p"] for line in lines] == [3, 5, 7]


def test_bad_config_exits_2(runner, tmp_path):
    config = tmp_path / "config.json"
    config.write_text("{not json")
    result = runner.invoke(cli, ["--config", str(config), "build", "primeind", "--n", "2"])
    assert result.exit_code == 2
