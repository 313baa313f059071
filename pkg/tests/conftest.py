"""Shared fixtures."""

import random
import sys
from collections.abc import Iterator
from pathlib import Path
from typing import Any

import pytest
from structlog.testing import capture_logs

from src.application.services.analysis_service import AnalysisService
from src.application.services.encoder_service import CnfEncoderService
from src.application.services.search_service import SearchService
from src.domain.entities.boolean_function import TruthTable
from src.infrastructure.repositories.record_repository import JsonlRecordRepository
from tests.support.pysat_solver import PysatSolver

SOLVER_SCRIPT = Path(__file__).parent / "support" / "dimacs_solver.py"


@pytest.fixture(autouse=True)
def no_bound_violations() -> Iterator[list[dict[str, Any]]]:
    """Fail any test during which a function exceeded bs <= (s^2 + s)/2."""
    with capture_logs() as logs:
        yield logs
    violations = [e for e in logs if e.get("event") == "conjecture_bound_violated"]
    assert not violations, f"separation bound violated: {violations}"


@pytest.fixture
def analysis() -> AnalysisService:
    return AnalysisService()


@pytest.fixture
def encoder() -> CnfEncoderService:
    return CnfEncoderService()


@pytest.fixture
def pysat_solver() -> PysatSolver:
    return PysatSolver()


@pytest.fixture
def records(tmp_path: Path) -> JsonlRecordRepository:
    return JsonlRecordRepository(tmp_path / "records.jsonl")


@pytest.fixture
def search_service(
    pysat_solver: PysatSolver,
    records: JsonlRecordRepository,
    encoder: CnfEncoderService,
    analysis: AnalysisService,
) -> SearchService:
    return SearchService(pysat_solver, records, encoder, analysis)


@pytest.fixture
def solver_cmd() -> str:
    """Command template running the python-sat contract script."""
    return f'"{sys.executable}" "{SOLVER_SCRIPT}" {{instance}}'


def random_table(rng: random.Random, n: int) -> TruthTable:
    return TruthTable.from_bits(n, (rng.randint(0, 1) for _ in range(1 << n)))
