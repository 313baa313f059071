"""Search Entities.

Solver configuration and verdicts, the persisted per-partition record, and
the results produced by the search use cases.
"""

from dataclasses import dataclass, field
from enum import StrEnum

from src.domain.entities.boolean_function import TruthTable
from src.domain.entities.partition import Partition
from src.domain.exceptions import DomainValidationError


class VerdictStatus(StrEnum):
    """Outcome of one solver run."""

    SATISFIABLE = "sat"
    UNSATISFIABLE = "unsat"
    UNKNOWN = "unknown"


class PointOutcome(StrEnum):
    """Outcome of a search for one (n, s, bs) point."""

    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolverConfig:
    """How to run the external solver.

    ``command`` is a template; ``{instance}`` is replaced by the DIMACS file
    path, otherwise the path is appended as the last argument. ``workers``
    caps the solver processes running at once.
    """

    command: str
    time_limit: float = 600.0
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.command.strip():
            raise DomainValidationError("solver command must not be empty")
        if self.time_limit <= 0:
            raise DomainValidationError(f"time limit must be positive, got {self.time_limit}")
        if self.workers < 1:
            raise DomainValidationError(f"workers must be at least 1, got {self.workers}")


@dataclass(frozen=True)
class SolverVerdict:
    """Parsed solver answer; the model lists signed literals."""

    status: VerdictStatus
    model: tuple[int, ...] | None = None
    elapsed: float = 0.0

    def __post_init__(self) -> None:
        if (self.model is not None) != (self.status is VerdictStatus.SATISFIABLE):
            raise DomainValidationError("a model is present exactly for satisfiable verdicts")


@dataclass(frozen=True)
class SearchRecord:
    """Persisted verdict for one (n, s, bs, partition) cell."""

    n: int
    s: int
    bs: int
    partition: tuple[int, ...]
    status: VerdictStatus
    elapsed: float
    function: str | None = None
    verified: bool = False

    def __post_init__(self) -> None:
        if (self.function is not None) != (self.status is VerdictStatus.SATISFIABLE):
            raise DomainValidationError("a decoded function is present exactly for sat records")
        if self.verified and self.status is not VerdictStatus.SATISFIABLE:
            raise DomainValidationError("only sat records can be verified")

    @property
    def key(self) -> tuple[int, int, int, tuple[int, ...]]:
        return (self.n, self.s, self.bs, self.partition)

    @property
    def completed(self) -> bool:
        """True when the cell never needs to be solved again."""
        if self.status is VerdictStatus.SATISFIABLE:
            return self.verified
        return self.status is VerdictStatus.UNSATISFIABLE


@dataclass(frozen=True)
class PointResult:
    """Feasible (with function and partition), Infeasible or Unknown."""

    n: int
    s: int
    bs: int
    outcome: PointOutcome
    function: TruthTable | None = None
    partition: Partition | None = None
    partitions_total: int = 0
    solver_calls: int = 0
    unknown_partitions: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class MaxBsResult:
    """Largest feasible bs for (n, s); ``complete`` is False after an Unknown."""

    n: int
    s: int
    max_bs: int | None
    complete: bool
    witness: TruthTable | None = None
    points: tuple[PointResult, ...] = ()


@dataclass(frozen=True)
class SeparationRow:
    """(n, s, bs) where bs first becomes achievable at this n."""

    n: int
    s: int
    bs: int
    known: bool


@dataclass
class SeparationTable:
    """Rows for n <= max_n, plus every computed max_bs value."""

    max_n: int
    rows: list[SeparationRow] = field(default_factory=list)
    values: dict[tuple[int, int], int] = field(default_factory=dict)
    complete: bool = True
    missing_known_rows: list[tuple[int, int, int]] = field(default_factory=list)


@dataclass(frozen=True)
class LogAudit:
    """Outcome of re-verifying every sat record of the log."""

    checked: int
    confirmed: int
    mismatches: tuple[tuple[int, int, int, tuple[int, ...]], ...] = ()


@dataclass(frozen=True)
class OracleResult:
    """Exact max bs per sensitivity over every function on n variables."""

    n: int
    values: dict[int, int]
    witnesses: dict[int, TruthTable]
    functions_enumerated: int
