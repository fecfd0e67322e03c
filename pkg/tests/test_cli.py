import json
from pathlib import Path

import pytest
from click.testing import CliRunner

import src.fusion.cli as cli_module
import src.fusion.sweep_runner as sweep_runner
from src.fusion.cli import cli
from src.fusion.errors import InvariantViolation
from src.fusion.reporting import use_color

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, *args):
    return runner.invoke(cli, ["-q", *args], obj={})


def _json_out(runner, tmp_path, *args):
    out = tmp_path / "payload.json"
    result = _invoke(runner, *args, "--format", "json", "--out", str(out))
    assert result.exit_code == 0, result.output
    return json.loads(out.read_text(encoding="utf-8"))


def test_decompose_g2_json(runner, tmp_path):
    payload = _json_out(runner, tmp_path, "decompose", "--type", "G2", "--lambda", "1,0", "--mu", "1,0")
    assert len(payload["entries"]) == 4
    assert {"nu": [0, 0], "poly": [0, 0, 1]} in payload["entries"]
    golden = json.loads((FIXTURES / "worked_decompositions.json").read_text(encoding="utf-8"))
    assert payload == golden[2]


def test_decompose_trivial(runner, tmp_path):
    payload = _json_out(runner, tmp_path, "decompose", "--type", "A2", "--lambda", "0,0", "--mu", "0,0")
    assert payload["entries"] == [{"nu": [0, 0], "poly": [1]}]


def test_decompose_json_is_deterministic(runner):
    args = ["decompose", "--type", "C2", "--lambda", "2,1", "--mu", "1,1", "--format", "json"]
    first = _invoke(runner, *args)
    second = _invoke(runner, *args)
    assert first.exit_code == 0
    assert first.output == second.output


def test_decompose_csv(runner):
    result = _invoke(runner, "decompose", "--type", "C2", "--lambda", "1,0", "--mu", "1,0", "--format", "csv")
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "type,lambda1,lambda2,mu1,mu2,nu1,nu2,degree,multiplicity",
        "C2,1,0,1,0,2,0,0,1",
        "C2,1,0,1,0,0,1,1,1",
        "C2,1,0,1,0,0,0,1,1",
    ]


def test_decompose_text(runner):
    result = _invoke(runner, "decompose", "--type", "A2", "--lambda", "1,1", "--mu", "1,1")
    assert result.exit_code == 0
    assert "A2: V(1, 1) x V(1, 1)" in result.output
    assert "q + q^2" in result.output


def test_g2_gate_exits_2(runner):
    result = _invoke(runner, "decompose", "--type", "G2", "--lambda", "1,1", "--mu", "0,1")
    assert result.exit_code == 2
    assert "min{m2,n2}=0" in result.output


@pytest.mark.parametrize("weight", ["-1,0", "1", "a,b", "1,2,3"])
def test_bad_weights_exit_2(runner, weight):
    result = _invoke(runner, "decompose", "--type", "A2", "--lambda", weight, "--mu", "0,0")
    assert result.exit_code == 2


def test_invariant_failure_exits_1(runner, monkeypatch):
    def broken(*args):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli_module, "graded_decompose", broken)
    result = _invoke(runner, "decompose", "--type", "A2", "--lambda", "1,0", "--mu", "0,1")
    assert result.exit_code == 1
    assert "forced" in result.output


def test_oracle_reports_t_count(runner, tmp_path):
    payload = _json_out(runner, tmp_path, "oracle", "--type", "A2", "--lambda", "1,0", "--mu", "1,0")
    assert payload["entries"] == [{"nu": [2, 0], "multiplicity": 1}, {"nu": [0, 1], "multiplicity": 1}]
    assert payload["t_count"] == 2


def test_count_g2(runner):
    result = _invoke(runner, "count", "--type", "G2", "--lambda", "1,0", "--mu", "1,0", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["s_count"] == payload["t_count"] == payload["klimyk_total"] == 4
    assert payload["dim_product"] == 49
    assert payload["tableau_count"] == 4


def test_count_writes_out_file_with_index_disagreements(runner, tmp_path):
    payload = _json_out(runner, tmp_path, "count", "--type", "G2", "--lambda", "0,0", "--mu", "1,0")
    assert payload["tableau_count"] == 1
    assert payload["textbook_index_disagreements"] == 2
    a2 = _json_out(runner, tmp_path, "count", "--type", "A2", "--lambda", "1,0", "--mu", "0,1")
    assert a2["tableau_count"] is None
    assert a2["textbook_index_disagreements"] is None


def test_verify_single_pair(runner):
    result = _invoke(runner, "verify", "--type", "C2", "--max", "0", "--jobs", "1")
    assert result.exit_code == 0
    assert "1 pair, all checks pass" in result.output


def test_verify_negative_bound_is_usage_error(runner):
    result = _invoke(runner, "verify", "--type", "A2", "--max", "-1")
    assert result.exit_code == 2


def test_verify_failure_exits_1(runner, monkeypatch):
    monkeypatch.setattr(sweep_runner, "_pair_checks", lambda tag, lam, mu: [sweep_runner._check("forced", False)])
    result = _invoke(runner, "verify", "--type", "A2", "--max", "0", "--jobs", "1")
    assert result.exit_code == 1
    assert "first failure" in result.output


def test_schur_single(runner):
    result = _invoke(
        runner, "schur", "--type", "A2", "--lambda1", "2,0", "--lambda2", "0,0", "--mu1", "1,0", "--mu2", "1,0"
    )
    assert result.exit_code == 0
    assert "verdict: true" in result.output


def test_schur_hypothesis_violation_exits_2(runner):
    result = _invoke(
        runner, "schur", "--type", "A2", "--lambda1", "1,0", "--lambda2", "1,0", "--mu1", "2,0", "--mu2", "0,0"
    )
    assert result.exit_code == 2
    assert "positive root" in result.output


def test_schur_needs_weights_or_bound(runner):
    assert _invoke(runner, "schur", "--type", "C2").exit_code == 2
    assert _invoke(runner, "schur", "--type", "C2", "--lambda1", "1,0").exit_code == 2


def test_schur_sweep_csv(runner):
    result = _invoke(runner, "schur", "--type", "A2", "--max", "1", "--jobs", "1", "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("type,lambda1_1,lambda1_2")
    assert len(lines) > 21


def test_no_color_convention(monkeypatch):
    class Terminal:
        def isatty(self):
            return True

    monkeypatch.delenv("NO_COLOR", raising=False)
    assert use_color(Terminal())
    monkeypatch.setenv("NO_COLOR", "1")
    assert not use_color(Terminal())
