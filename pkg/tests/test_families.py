"""Tests for the separating families and their checks."""

import pytest

from src.application.services.analysis_service import AnalysisService
from src.application.services.family_service import FamilyService
from src.domain.entities.boolean_function import Input, TruthTable
from src.domain.exceptions import CapacityError, DomainValidationError
from src.domain.families import (
    paired_sections_family,
    paired_sections_witness_blocks,
    rubinstein_family,
)


class TestPairedSections:
    def test_k0_is_the_identity_on_one_variable(self) -> None:
        f = paired_sections_family(0)
        assert f.n == 1
        assert f(Input.from_string("1")) == 1
        assert f(Input.from_string("0")) == 0

    @pytest.mark.parametrize(
        ("bits", "value"),
        [
            ("110000000", 1),
            ("010000000", 0),
            ("001000000", 1),
            ("111000000", 0),
            ("111100000", 0),
            ("000110000", 1),
            ("000000001", 1),
            ("000000000", 0),
        ],
    )
    def test_k1_section_rule(self, bits: str, value: int) -> None:
        assert paired_sections_family(1)(Input.from_string(bits)) == value

    def test_witness_blocks_k1(self) -> None:
        blocks = paired_sections_witness_blocks(1)
        assert blocks.as_lists() == [[1, 2], [3], [4, 5], [6], [7, 8], [9]]
        assert blocks.witness == Input.zeros(9)
        assert blocks.certifies(paired_sections_family(1))

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_witness_blocks_certify(self, k: int) -> None:
        blocks = paired_sections_witness_blocks(k)
        assert len(blocks) == (2 * k + 1) * (k + 1)
        assert blocks.certifies(paired_sections_family(k))

    def test_negative_k(self) -> None:
        with pytest.raises(DomainValidationError):
            paired_sections_family(-1)


class TestRubinstein:
    @pytest.mark.parametrize(
        ("bits", "value"), [("1100", 1), ("1000", 0), ("1111", 1), ("0110", 0)]
    )
    def test_m2_values(self, bits: str, value: int) -> None:
        assert rubinstein_family(2)(Input.from_string(bits)) == value

    def test_m4_interval_needs_exactly_one_aligned_pair(self) -> None:
        f = rubinstein_family(4)
        assert f(Input.from_string("0011" + "0" * 12)) == 1
        assert f(Input.from_string("0110" + "0" * 12)) == 0
        assert f(Input.from_string("1111" + "0" * 12)) == 0

    @pytest.mark.parametrize("m", [0, 1, 3, -2])
    def test_rejects_odd_or_small_m(self, m: int) -> None:
        with pytest.raises(DomainValidationError):
            rubinstein_family(m)


class TestFamilyService:
    def test_paired_sections_k1(self) -> None:
        report = FamilyService().check_paired_sections(1)
        assert report.n == 9
        assert report.sensitivity == 3
        assert report.s_at_zero == 3
        assert report.bs_exact
        assert report.bs_at_zero == 6
        assert report.verified_blocks == 6
        assert report.block_sensitivity == 6
        assert report.table_agrees is True
        assert report.within_bound
        assert report.matches

    def test_paired_sections_k1_table_matches_evaluator(self) -> None:
        f = paired_sections_family(1)
        table = FamilyService().table(f)
        assert isinstance(table, TruthTable)
        assert all(table.value_at(i) == f.value_at(i) for i in range(512))

    def test_rubinstein_m2(self) -> None:
        report = FamilyService().check_rubinstein(2)
        assert report.sensitivity == 2
        assert report.block_sensitivity == 2
        assert report.bs_at_zero == 2
        assert report.matches

    def test_paired_sections_k2_needs_opt_in(self) -> None:
        with pytest.raises(CapacityError):
            FamilyService().check_paired_sections(2)

    def test_paired_sections_k2_witness_at_zero(self, analysis: AnalysisService) -> None:
        f = paired_sections_family(2)
        zero = Input.zeros(25)
        blocks = paired_sections_witness_blocks(2)
        assert len(blocks) == 15
        assert all(f(zero.flip(block)) == 1 for block in blocks.blocks)
        assert analysis.sensitivity_at(f, zero).value == 5

    @pytest.mark.slow
    def test_paired_sections_k2_exhaustive(self) -> None:
        report = FamilyService().check_paired_sections(2, allow_large=True)
        assert report.sensitivity == 5
        assert report.s_at_zero == 5
        assert not report.bs_exact
        assert report.bs_at_zero == 15
        assert report.matches
