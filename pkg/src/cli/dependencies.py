"""Dependency Wiring.

This module builds services and repositories from settings, with
command-line flags taking precedence over the environment.
"""

from dataclasses import dataclass
from pathlib import Path

from src.application.services.analysis_service import AnalysisLimits, AnalysisService
from src.application.services.encoder_service import CnfEncoderService
from src.application.services.family_service import FamilyService
from src.application.services.oracle_service import OracleService
from src.application.services.search_service import SearchService
from src.domain.entities.cnf import CnfInstance
from src.domain.entities.search import SolverConfig, SolverVerdict
from src.domain.exceptions import SolverConfigurationError
from src.domain.solvers.sat_solver import ISatSolver
from src.infrastructure.config import Settings, settings
from src.infrastructure.repositories.record_repository import JsonlRecordRepository
from src.infrastructure.solvers.external_solver import ExternalSatSolver


class UnconfiguredSolver(ISatSolver):
    """Stands in when no solver command is set."""

    async def solve(self, instance: CnfInstance) -> SolverVerdict:
        raise SolverConfigurationError(
            "no solver command; pass --solver-cmd or set SOLVER_COMMAND"
        )


@dataclass(frozen=True)
class RunOptions:
    """Effective global options of one command run."""

    solver_cmd: str | None
    time_limit: float
    workers: int
    prune_singletons: bool
    records: Path

    @classmethod
    def resolve(
        cls,
        solver_cmd: str | None = None,
        time_limit: float | None = None,
        workers: int | None = None,
        no_prune_singletons: bool = False,
        records: Path | None = None,
        config: Settings = settings,
    ) -> "RunOptions":
        """Merge command-line values over settings; a given flag always wins."""
        return cls(
            solver_cmd=solver_cmd or config.solver.command,
            time_limit=time_limit if time_limit is not None else config.solver.time_limit,
            workers=workers if workers is not None else config.solver.workers,
            prune_singletons=config.search.prune_singletons and not no_prune_singletons,
            records=records or config.search.records_path,
        )


def get_limits(config: Settings = settings) -> AnalysisLimits:
    """Get the analyzer capacity limits."""
    return AnalysisLimits(
        scan_max_n=config.limits.scan_max_n,
        extended_scan_max_n=config.limits.extended_scan_max_n,
        bs_scan_max_n=config.limits.bs_scan_max_n,
        bs_input_max_n=config.limits.bs_input_max_n,
        oracle_max_n=config.limits.oracle_max_n,
        oracle_extended_max_n=config.limits.oracle_extended_max_n,
    )


def get_analysis_service() -> AnalysisService:
    return AnalysisService(get_limits())


def get_encoder_service() -> CnfEncoderService:
    return CnfEncoderService()


def get_family_service() -> FamilyService:
    return FamilyService(get_analysis_service())


def get_oracle_service() -> OracleService:
    limits = get_limits()
    return OracleService(limits, AnalysisService(limits))


def get_record_repository(options: RunOptions) -> JsonlRecordRepository:
    """Get the record log repository.

    Args:
        options: Effective run options.

    Returns:
        JsonlRecordRepository instance.
    """
    return JsonlRecordRepository(options.records)


def get_solver(options: RunOptions) -> ISatSolver:
    """Get the external solver.

    Without a configured command, the returned solver fails on first use, so
    searches answered from the log or by pruning still run.
    """
    if not options.solver_cmd:
        return UnconfiguredSolver()
    return ExternalSatSolver(
        SolverConfig(
            command=options.solver_cmd,
            time_limit=options.time_limit,
            workers=options.workers,
        )
    )


def get_search_service(options: RunOptions) -> SearchService:
    """Get the search service.

    Args:
        options: Effective run options.

    Returns:
        SearchService instance.
    """
    return SearchService(
        solver=get_solver(options),
        records=get_record_repository(options),
        encoder=get_encoder_service(),
        analysis=get_analysis_service(),
        prune_singletons=options.prune_singletons,
        workers=options.workers,
    )
