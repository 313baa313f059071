"""Family Service.

This module checks the separating families against their claimed
sensitivity and block sensitivity.
"""

from dataclasses import dataclass

import numpy as np

from src.application.services.analysis_service import AnalysisService
from src.domain.entities.boolean_function import BlockSet, Input, StructuredFunction, TruthTable
from src.domain.families import (
    paired_sections_family,
    paired_sections_witness_blocks,
    rubinstein_family,
)
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FamilyReport:
    """Measured and expected values for one family member.

    ``bs_at_zero`` is exact when ``bs_exact`` is set, otherwise it is the
    lower bound given by the verified witness blocks. Fields that were not
    computed at this n are None.
    """

    name: str
    n: int
    expected_s: int
    expected_bs: int
    sensitivity: int
    sensitivity_witness: Input
    s_at_zero: int
    bs_at_zero: int
    bs_exact: bool
    witness_blocks: BlockSet
    verified_blocks: int
    block_sensitivity: int | None
    table_agrees: bool | None
    within_bound: bool

    @property
    def matches(self) -> bool:
        if self.sensitivity != self.expected_s or self.verified_blocks != len(self.witness_blocks):
            return False
        if self.bs_exact and self.bs_at_zero != self.expected_bs:
            return False
        return self.block_sensitivity is None or self.block_sensitivity == self.expected_bs


class FamilyService:
    """Exhaustive and witness-based checks of the function families."""

    def __init__(self, analysis: AnalysisService | None = None) -> None:
        """Initialize the family service.

        Args:
            analysis: Analyzer whose limits decide which checks are exact.
        """
        self._analysis = analysis or AnalysisService()

    def check_paired_sections(self, k: int, allow_large: bool = False) -> FamilyReport:
        """Check s(f) = 2k+1 and bs(f, 0) = (2k+1)(k+1) for the paired-sections family.

        Raises:
            CapacityError: If the exhaustive scan exceeds the applicable limit.
        """
        width = 2 * k + 1
        return self._check(
            paired_sections_family(k),
            paired_sections_witness_blocks(k),
            expected_s=width,
            expected_bs=width * (k + 1),
            allow_large=allow_large,
        )

    def check_rubinstein(self, m: int, allow_large: bool = False) -> FamilyReport:
        """Check s(f) = m and bs(f) = m^2 / 2 for Rubinstein's family.

        The witness blocks are the m/2 aligned pairs of every interval at 0...0.
        """
        f = rubinstein_family(m)
        blocks = BlockSet(
            blocks=tuple(
                frozenset({t * m + 2 * j - 1, t * m + 2 * j})
                for t in range(m)
                for j in range(1, m // 2 + 1)
            ),
            witness=Input.zeros(f.n),
        )
        return self._check(
            f, blocks, expected_s=m, expected_bs=m * m // 2, allow_large=allow_large
        )

    def table(self, f: StructuredFunction) -> TruthTable:
        """Materialize a family member as an explicit table."""
        return TruthTable.from_function(f)

    def _check(
        self,
        f: StructuredFunction,
        blocks: BlockSet,
        expected_s: int,
        expected_bs: int,
        allow_large: bool,
    ) -> FamilyReport:
        limits = self._analysis.limits
        zero = Input.zeros(f.n)
        report = self._analysis.sensitivity(f, allow_extended=allow_large)
        s_at_zero = self._analysis.sensitivity_at(f, zero).value
        verified = sum(1 for block in blocks.blocks if f(zero.flip(block)) != f(zero))

        bs_exact = f.n <= limits.bs_input_max_n
        if bs_exact:
            bs_at_zero, _ = self._analysis.block_sensitivity_at(f, zero)
        else:
            bs_at_zero = verified

        full_bs: int | None = None
        if f.n <= limits.bs_scan_max_n:
            full_bs, _ = self._analysis.block_sensitivity(f)

        agrees: bool | None = None
        if f.n <= limits.scan_max_n:
            indices = np.arange(1 << f.n, dtype=np.int64)
            # scalar evaluator against the vectorized section rule
            agrees = bool(
                np.array_equal(
                    self._analysis.evaluate_indices(self.table(f), indices),
                    self._analysis.evaluate_indices(f, indices),
                )
            )

        within = self._analysis.audit_bound(
            report.value,
            full_bs if full_bs is not None else bs_at_zero,
            n=f.n,
            source=f.name,
        )
        result = FamilyReport(
            name=f.name,
            n=f.n,
            expected_s=expected_s,
            expected_bs=expected_bs,
            sensitivity=report.value,
            sensitivity_witness=report.witness,
            s_at_zero=s_at_zero,
            bs_at_zero=bs_at_zero,
            bs_exact=bs_exact,
            witness_blocks=blocks,
            verified_blocks=verified,
            block_sensitivity=full_bs,
            table_agrees=agrees,
            within_bound=within,
        )
        logger.info(
            "family_checked",
            family=f.name,
            n=f.n,
            s=report.value,
            bs_at_zero=bs_at_zero,
            matches=result.matches,
        )
        return result
