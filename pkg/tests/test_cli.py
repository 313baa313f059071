"""Tests for the command-line interface."""

import asyncio
import json
from pathlib import Path
from typing import Any

import pytest

from src.cli import main as cli
from src.domain.entities.search import SearchRecord, VerdictStatus
from src.infrastructure.repositories.record_repository import JsonlRecordRepository


@pytest.fixture(autouse=True)
def keep_test_logging(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(cli, "configure_logging", lambda level=None: None)


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> dict[str, Any]:
    assert cli.main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


def test_analyze(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "or2.txt"
    path.write_text("n=2\n0111\n")
    output = run_json(capsys, "analyze", str(path))
    assert output["n"] == 2
    assert output["sensitivity"] == {"value": 2, "witness": "00", "sensitive_indices": [1, 2]}
    assert output["block_sensitivity"] == 2


def test_analyze_malformed_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("n=2\n011\n")
    assert cli.main(["analyze", str(path)]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_analyze_missing_file(tmp_path: Path) -> None:
    assert cli.main(["analyze", str(tmp_path / "absent.txt")]) == 2


def test_family_check(capsys: pytest.CaptureFixture[str]) -> None:
    output = run_json(capsys, "family", "--paired-k", "1")
    assert output["family"] == "paired-sections(k=1)"
    assert (output["sensitivity"], output["bs_at_zero"], output["block_sensitivity"]) == (3, 6, 6)
    assert output["matches"] is True


def test_family_check_by_documented_flag(capsys: pytest.CaptureFixture[str]) -> None:
    output = run_json(capsys, "family", "--virza-k", "1", "--check")
    assert output["family"] == "paired-sections(k=1)"
    assert (output["sensitivity"], output["bs_at_zero"]) == (3, 6)
    assert output["matches"] is True


def test_family_emit_table(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["family", "--rubinstein-m", "2", "--emit-table"]) == 0
    text = capsys.readouterr().out
    header, bits = text.splitlines()
    assert header == "n=4"
    assert len(bits) == 16
    assert bits[3] == "1"


def test_family_rejects_odd_m(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["family", "--rubinstein-m", "3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_family_requires_a_member() -> None:
    with pytest.raises(SystemExit):
        cli.main(["family"])


def test_encode(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "cnf"
    output = run_json(capsys, "encode", "--n", "6", "--s", "3", "--bs", "3", "--out", str(out))
    names = sorted(p.name for p in out.iterdir())
    assert names == ["n6_s3_bs3_p2-2-2.cnf", "n6_s3_bs3_p3-2-1.cnf", "n6_s3_bs3_p4-1-1.cnf"]
    assert [i["partition"] for i in output["instances"]] == [[4, 1, 1], [3, 2, 1], [2, 2, 2]]
    first = (out / "n6_s3_bs3_p4-1-1.cnf").read_text()
    assert first.startswith("c meta n=6 s=3 bs=3 partition=4,1,1 bitorder=lsb-x1\n")


def test_encode_single_partition(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["encode", "--n", "4", "--s", "2", "--bs", "3", "--partition", "2,1,1"]
    output = run_json(capsys, *argv, "--out", str(tmp_path))
    [instance] = output["instances"]
    assert instance["partition"] == [2, 1, 1]
    assert instance["path"] == str(tmp_path / "n4_s2_bs3_p2-1-1.cnf")
    assert instance["var_count"] == 16 * 11


def test_search_with_external_solver(
    tmp_path: Path, solver_cmd: str, capsys: pytest.CaptureFixture[str]
) -> None:
    records = tmp_path / "records.jsonl"
    argv = ["--n", "4", "--s", "2", "--bs", "3"]
    flags = ["--solver-cmd", solver_cmd, "--records", str(records), "--time-limit", "60"]
    output = run_json(capsys, "search", *argv, *flags)
    assert output["outcome"] == "feasible"
    assert output["partition"] == [2, 1, 1]
    assert output["solver_calls"] == 1

    again = run_json(capsys, "search", *argv, "--records", str(records))
    assert again["solver_calls"] == 0
    assert again["function"] == output["function"]

    audit = run_json(capsys, "verify-log", "--records", str(records))
    assert audit == {"checked": 1, "confirmed": 1, "mismatches": []}


def test_search_without_solver(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    records = ["--records", str(tmp_path / "records.jsonl")]
    pruned = run_json(capsys, "search", "--n", "8", "--s", "3", "--bs", "6", *records)
    assert pruned["outcome"] == "infeasible"

    assert cli.main(["search", "--n", "4", "--s", "2", "--bs", "3", *records]) == 2
    assert "no solver command" in capsys.readouterr().err


def test_max_bs(tmp_path: Path, solver_cmd: str, capsys: pytest.CaptureFixture[str]) -> None:
    flags = ["--solver-cmd", solver_cmd, "--records", str(tmp_path / "r.jsonl")]
    output = run_json(capsys, "max-bs", "--n", "4", "--s", "2", *flags)
    assert output["max_bs"] == 3
    assert output["complete"] is True


def test_table(tmp_path: Path, solver_cmd: str, capsys: pytest.CaptureFixture[str]) -> None:
    flags = ["--solver-cmd", solver_cmd, "--records", str(tmp_path / "r.jsonl"), "--workers", "2"]
    output = run_json(capsys, "table", "--max-n", "4", *flags)
    assert output["rows"] == [{"n": 4, "s": 2, "bs": 3, "known": True}]
    assert [4, 2, 3] in output["values"]


def test_oracle(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    output = run_json(capsys, "oracle", "--n", "2", "--out", str(tmp_path))
    assert output["max_bs"] == {"1": 1, "2": 2}
    assert sorted(p.name for p in tmp_path.iterdir()) == ["oracle_n2_s1.txt", "oracle_n2_s2.txt"]
    assert (tmp_path / "oracle_n2_s2.txt").read_text() == output["witnesses"]["2"]


def test_oracle_capacity() -> None:
    assert cli.main(["oracle", "--n", "5"]) == 2


def test_verify_log_reports_mismatch(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "records.jsonl"
    forged = SearchRecord(
        n=2,
        s=1,
        bs=1,
        partition=(2,),
        status=VerdictStatus.SATISFIABLE,
        elapsed=0.0,
        function="n=2\n0000\n",
        verified=True,
    )
    asyncio.run(JsonlRecordRepository(path).append(forged))
    assert cli.main(["verify-log", "--records", str(path)]) == 1
    output = json.loads(capsys.readouterr().out)
    assert output["mismatches"] == [[2, 1, 1, 2]]


def test_unknown_log_level_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc:
        cli.main(["oracle", "--n", "1", "--log-level", "loud"])
    assert exc.value.code == 2
    assert "--log-level" in capsys.readouterr().err


def test_log_level_is_case_insensitive(capsys: pytest.CaptureFixture[str]) -> None:
    output = run_json(capsys, "oracle", "--n", "1", "--log-level", "debug")
    assert output["max_bs"] == {"1": 1}
