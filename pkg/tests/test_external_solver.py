"""Tests for the external SAT solver adapter."""

import asyncio
import shlex
import sys
from pathlib import Path

import pytest

from src.application.services.encoder_service import CnfEncoderService
from src.domain.entities.cnf import CnfInstance, VariableMap
from src.domain.entities.partition import Partition
from src.domain.entities.search import SolverConfig, VerdictStatus
from src.domain.exceptions import (
    DomainValidationError,
    SolverConfigurationError,
    SolverProtocolError,
)
from src.infrastructure.solvers.external_solver import (
    ExternalSatSolver,
    build_command,
    parse_solver_output,
)


def instance(*clauses: tuple[int, ...]) -> CnfInstance:
    return CnfInstance(var_count=2, clauses=clauses, var_map=VariableMap(n=1))


class TestParseSolverOutput:
    def test_satisfiable_with_split_value_lines(self) -> None:
        output = "c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n"
        assert parse_solver_output(output, 10) == (VerdictStatus.SATISFIABLE, (1, -2, 3))

    def test_unsatisfiable(self) -> None:
        assert parse_solver_output("s UNSATISFIABLE\n", 20) == (VerdictStatus.UNSATISFIABLE, None)

    @pytest.mark.parametrize("word", ["UNKNOWN", "INDETERMINATE"])
    def test_unknown(self, word: str) -> None:
        assert parse_solver_output(f"s {word}\n", 0) == (VerdictStatus.UNKNOWN, None)

    def test_exit_code_without_status_line(self) -> None:
        assert parse_solver_output("", 20) == (VerdictStatus.UNSATISFIABLE, None)

    @pytest.mark.parametrize(
        ("output", "returncode"),
        [
            ("s SATISFIABLE\n", 10),
            ("s UNSATISFIABLE\n", 10),
            ("s SATISFIABLE\ns UNSATISFIABLE\n", 0),
            ("s MAYBE\n", 0),
            ("s SATISFIABLE\nv 1 x 0\n", 10),
            ("", 1),
        ],
        ids=["no-model", "exit-mismatch", "conflict", "unknown-word", "bad-value", "silent"],
    )
    def test_protocol_errors(self, output: str, returncode: int) -> None:
        with pytest.raises(SolverProtocolError):
            parse_solver_output(output, returncode)


class TestBuildCommand:
    def test_placeholder_is_replaced(self) -> None:
        path = Path("/tmp/x.cnf")
        assert build_command("kissat -q {instance}", path) == ["kissat", "-q", "/tmp/x.cnf"]

    def test_path_is_appended(self) -> None:
        assert build_command("minisat", Path("a.cnf")) == ["minisat", "a.cnf"]

    def test_empty_command(self) -> None:
        with pytest.raises(SolverConfigurationError):
            build_command("   ", Path("a.cnf"))


class TestExternalSatSolver:
    async def test_satisfiable_instance(self, solver_cmd: str) -> None:
        solver = ExternalSatSolver(SolverConfig(command=solver_cmd, time_limit=60))
        verdict = await solver.solve(instance((1,), (-2,)))
        assert verdict.status is VerdictStatus.SATISFIABLE
        assert verdict.model == (1, -2)

    async def test_unsatisfiable_instance(self, solver_cmd: str) -> None:
        solver = ExternalSatSolver(SolverConfig(command=solver_cmd, time_limit=60))
        verdict = await solver.solve(instance((1,), (-1,)))
        assert verdict.status is VerdictStatus.UNSATISFIABLE
        assert verdict.model is None

    async def test_model_covers_variables_in_no_clause(
        self, solver_cmd: str, encoder: CnfEncoderService
    ) -> None:
        cnf = encoder.build_instance(2, 2, 2, Partition(n=2, parts=(1, 1)))
        assert max(abs(lit) for clause in cnf.clauses for lit in clause) < cnf.var_count
        solver = ExternalSatSolver(SolverConfig(command=solver_cmd, time_limit=60))
        verdict = await solver.solve(cnf)
        assert verdict.status is VerdictStatus.SATISFIABLE
        assert verdict.model is not None
        assert sorted(abs(lit) for lit in verdict.model) == list(range(1, cnf.var_count + 1))
        table = encoder.decode_model(cnf, verdict.model)
        assert table.n == 2

    async def test_workers_bound_concurrent_processes(self, tmp_path: Path) -> None:
        trace = tmp_path / "trace.txt"
        script = (
            "import time; t = open(%r, 'a'); t.write('start\\n'); t.flush(); "
            "time.sleep(0.3); t.write('end\\n'); t.close(); print('s UNSATISFIABLE')"
        ) % str(trace)
        command = f"{shlex.quote(sys.executable)} -c {shlex.quote(script)}"
        solver = ExternalSatSolver(SolverConfig(command=command, time_limit=30, workers=1))
        verdicts = await asyncio.gather(*(solver.solve(instance((1,))) for _ in range(3)))
        assert all(v.status is VerdictStatus.UNSATISFIABLE for v in verdicts)
        assert trace.read_text().split() == ["start", "end"] * 3

    async def test_timeout_is_unknown(self) -> None:
        command = f"{shlex.quote(sys.executable)} -c 'import time; time.sleep(5)'"
        solver = ExternalSatSolver(SolverConfig(command=command, time_limit=0.2))
        verdict = await solver.solve(instance((1,)))
        assert verdict.status is VerdictStatus.UNKNOWN
        assert verdict.elapsed < 5

    async def test_missing_executable(self, tmp_path: Path) -> None:
        command = str(tmp_path / "no-such-solver")
        solver = ExternalSatSolver(SolverConfig(command=command))
        with pytest.raises(SolverConfigurationError):
            await solver.solve(instance((1,)))

    def test_config_validation(self) -> None:
        with pytest.raises(DomainValidationError, match="time limit"):
            SolverConfig(command="minisat", time_limit=0)
