"""Analysis DTOs.

This module defines the Data Transfer Objects printed by the analysis and
family commands.
"""

from pydantic import BaseModel, ConfigDict, Field

from src.application.services.analysis_service import FunctionMeasures
from src.application.services.family_service import FamilyReport
from src.domain.entities.boolean_function import BlockSet, SensitivityReport


class SensitivityDto(BaseModel):
    """Sensitivity value with its witness input."""

    model_config = ConfigDict(strict=True)

    value: int = Field(..., description="s(f, w) at the witness")
    witness: str = Field(..., description="Witness input, x_1 leftmost")
    sensitive_indices: list[int] = Field(..., description="Variables whose flip changes f")

    @classmethod
    def from_report(cls, report: SensitivityReport) -> "SensitivityDto":
        return cls(
            value=report.value,
            witness=report.witness.to_string(),
            sensitive_indices=sorted(report.sensitive_indices),
        )


class BlockSetDto(BaseModel):
    """Disjoint sensitive blocks at a witness input."""

    model_config = ConfigDict(strict=True)

    witness: str = Field(..., description="Witness input, x_1 leftmost")
    blocks: list[list[int]] = Field(..., description="Blocks of 1-based variable indices")

    @classmethod
    def from_block_set(cls, blocks: BlockSet) -> "BlockSetDto":
        return cls(witness=blocks.witness.to_string(), blocks=blocks.as_lists())


class AnalysisDto(BaseModel):
    """Output of the analyze command."""

    model_config = ConfigDict(strict=True)

    n: int = Field(..., description="Number of variables")
    sensitivity: SensitivityDto
    block_sensitivity: int = Field(..., description="bs(f)")
    blocks: BlockSetDto

    @classmethod
    def from_measures(cls, n: int, measures: FunctionMeasures) -> "AnalysisDto":
        return cls(
            n=n,
            sensitivity=SensitivityDto.from_report(measures.sensitivity),
            block_sensitivity=measures.block_sensitivity,
            blocks=BlockSetDto.from_block_set(measures.blocks),
        )


class FamilyReportDto(BaseModel):
    """Output of the family --check command."""

    model_config = ConfigDict(strict=True)

    family: str
    n: int
    expected_s: int
    expected_bs: int
    sensitivity: int = Field(..., description="s(f) by exhaustive scan")
    sensitivity_witness: str
    s_at_zero: int
    bs_at_zero: int
    bs_exact: bool = Field(..., description="False when bs_at_zero is the witness lower bound")
    witness_blocks: BlockSetDto
    verified_blocks: int
    block_sensitivity: int | None = Field(None, description="bs(f) when a full scan fits")
    table_agrees: bool | None = Field(None, description="Evaluator and explicit table agree")
    within_bound: bool
    matches: bool = Field(..., description="Every computed value equals the expected one")

    @classmethod
    def from_report(cls, report: FamilyReport) -> "FamilyReportDto":
        return cls(
            family=report.name,
            n=report.n,
            expected_s=report.expected_s,
            expected_bs=report.expected_bs,
            sensitivity=report.sensitivity,
            sensitivity_witness=report.sensitivity_witness.to_string(),
            s_at_zero=report.s_at_zero,
            bs_at_zero=report.bs_at_zero,
            bs_exact=report.bs_exact,
            witness_blocks=BlockSetDto.from_block_set(report.witness_blocks),
            verified_blocks=report.verified_blocks,
            block_sensitivity=report.block_sensitivity,
            table_agrees=report.table_agrees,
            within_bound=report.within_bound,
            matches=report.matches,
        )
