"""Search DTOs.

This module defines the Data Transfer Objects printed by the encode,
search, table, oracle and verify-log commands.
"""

from pydantic import BaseModel, ConfigDict, Field

from src.domain.entities.search import (
    LogAudit,
    MaxBsResult,
    OracleResult,
    PointResult,
    SeparationTable,
)


class EncodedInstanceDto(BaseModel):
    """One DIMACS file written by the encode command."""

    model_config = ConfigDict(strict=True)

    partition: list[int]
    path: str
    var_count: int
    clause_count: int


class EncodeResultDto(BaseModel):
    """Output of the encode command."""

    model_config = ConfigDict(strict=True)

    n: int
    s: int
    bs: int
    instances: list[EncodedInstanceDto]


class PointResultDto(BaseModel):
    """Verdict for one (n, s, bs) point."""

    model_config = ConfigDict(strict=True)

    n: int
    s: int
    bs: int
    outcome: str = Field(..., description="feasible, infeasible or unknown")
    function: str | None = Field(None, description="Verified witness table text")
    partition: list[int] | None = Field(None, description="Partition the witness satisfies")
    partitions_total: int
    solver_calls: int
    unknown_partitions: list[list[int]] = Field(default_factory=list)

    @classmethod
    def from_result(cls, result: PointResult) -> "PointResultDto":
        return cls(
            n=result.n,
            s=result.s,
            bs=result.bs,
            outcome=str(result.outcome),
            function=result.function.to_text() if result.function else None,
            partition=list(result.partition.parts) if result.partition else None,
            partitions_total=result.partitions_total,
            solver_calls=result.solver_calls,
            unknown_partitions=[list(p) for p in result.unknown_partitions],
        )


class MaxBsDto(BaseModel):
    """Output of the max-bs command."""

    model_config = ConfigDict(strict=True)

    n: int
    s: int
    max_bs: int | None
    complete: bool = Field(..., description="False when a point came back unknown")
    witness: str | None = None
    points: list[PointResultDto]

    @classmethod
    def from_result(cls, result: MaxBsResult) -> "MaxBsDto":
        return cls(
            n=result.n,
            s=result.s,
            max_bs=result.max_bs,
            complete=result.complete,
            witness=result.witness.to_text() if result.witness else None,
            points=[PointResultDto.from_result(p) for p in result.points],
        )


class SeparationRowDto(BaseModel):
    model_config = ConfigDict(strict=True)

    n: int
    s: int
    bs: int
    known: bool = Field(..., description="Matches a known separation row")


class SeparationTableDto(BaseModel):
    """Output of the table command."""

    model_config = ConfigDict(strict=True)

    max_n: int
    complete: bool
    rows: list[SeparationRowDto]
    values: list[list[int]] = Field(..., description="[n, s, max_bs] for every computed pair")
    missing_known_rows: list[list[int]]

    @classmethod
    def from_table(cls, table: SeparationTable) -> "SeparationTableDto":
        return cls(
            max_n=table.max_n,
            complete=table.complete,
            rows=[SeparationRowDto(n=r.n, s=r.s, bs=r.bs, known=r.known) for r in table.rows],
            values=[[n, s, bs] for (n, s), bs in sorted(table.values.items())],
            missing_known_rows=[list(row) for row in table.missing_known_rows],
        )


class OracleResultDto(BaseModel):
    """Output of the oracle command."""

    model_config = ConfigDict(strict=True)

    n: int
    functions_enumerated: int
    max_bs: dict[str, int] = Field(..., description="Sensitivity to max bs")
    witnesses: dict[str, str] = Field(..., description="Sensitivity to witness table text")
    written: list[str] = Field(default_factory=list, description="Witness files written")

    @classmethod
    def from_result(
        cls, result: OracleResult, written: list[str] | None = None
    ) -> "OracleResultDto":
        return cls(
            n=result.n,
            functions_enumerated=result.functions_enumerated,
            max_bs={str(s): bs for s, bs in result.values.items()},
            witnesses={str(s): t.to_text() for s, t in result.witnesses.items()},
            written=written or [],
        )


class LogAuditDto(BaseModel):
    """Output of the verify-log command."""

    model_config = ConfigDict(strict=True)

    checked: int
    confirmed: int
    mismatches: list[list[int]] = Field(
        default_factory=list, description="[n, s, bs, *partition] per mismatching record"
    )

    @classmethod
    def from_audit(cls, audit: LogAudit) -> "LogAuditDto":
        return cls(
            checked=audit.checked,
            confirmed=audit.confirmed,
            mismatches=[[n, s, bs, *parts] for n, s, bs, parts in audit.mismatches],
        )
