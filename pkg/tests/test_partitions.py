"""Tests for partition enumeration and the Partition entity."""

import pytest

from src.domain.algorithms.partitions import enumerate_partitions
from src.domain.entities.partition import Partition
from src.domain.exceptions import DomainValidationError


def parts(n: int, bs: int, max_singletons: int | None = None) -> list[tuple[int, ...]]:
    return [p.parts for p in enumerate_partitions(n, bs, max_singletons)]


class TestEnumeratePartitions:
    def test_lexicographically_decreasing(self) -> None:
        assert parts(6, 3) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
        assert parts(4, 2) == [(3, 1), (2, 2)]

    @pytest.mark.parametrize(
        ("n", "bs", "count"), [(1, 1, 1), (5, 1, 1), (5, 5, 1), (7, 3, 4), (10, 4, 9), (12, 6, 11)]
    )
    def test_counts_match_partition_numbers(self, n: int, bs: int, count: int) -> None:
        result = parts(n, bs)
        assert len(result) == count
        assert len(set(result)) == count
        assert all(sum(p) == n and len(p) == bs for p in result)

    def test_bs_above_n_is_empty(self) -> None:
        assert parts(3, 4) == []

    def test_singleton_pruning(self) -> None:
        assert parts(8, 6) == [(3, 1, 1, 1, 1, 1), (2, 2, 1, 1, 1, 1)]
        assert parts(8, 6, max_singletons=3) == []
        assert parts(6, 4, max_singletons=2) == [(2, 2, 1, 1)]

    @pytest.mark.parametrize(("n", "bs", "limit"), [(0, 1, None), (3, 0, None), (3, 2, -1)])
    def test_invalid_arguments(self, n: int, bs: int, limit: int | None) -> None:
        with pytest.raises(DomainValidationError):
            enumerate_partitions(n, bs, limit)


class TestPartition:
    def test_blocks_are_consecutive_ranges(self) -> None:
        partition = Partition.parse("3,2,1")
        assert partition.n == 6
        assert [list(b) for b in partition.blocks()] == [[1, 2, 3], [4, 5], [6]]
        assert partition.block_masks() == [0b000111, 0b011000, 0b100000]
        assert partition.singletons == 1
        assert str(partition) == "3,2,1"

    @pytest.mark.parametrize("text", ["1,2", "2,0", "a,1", ""])
    def test_parse_rejects_invalid_text(self, text: str) -> None:
        with pytest.raises(DomainValidationError):
            Partition.parse(text)
