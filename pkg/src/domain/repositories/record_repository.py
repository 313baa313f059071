"""Search Record Repository Interface.

This module defines the abstract interface for the append-only log of
per-partition solver verdicts.
"""

from abc import ABC, abstractmethod

from src.domain.entities.search import SearchRecord


class IRecordRepository(ABC):
    """Abstract interface for the search record log.

    The log is the source of truth for resumed searches. Later records for
    the same (n, s, bs, partition) cell supersede earlier ones.
    """

    @abstractmethod
    async def append(self, record: SearchRecord) -> None:
        """Append one record.

        Args:
            record: The verdict record to persist.
        """
        pass

    @abstractmethod
    async def list_all(self) -> list[SearchRecord]:
        """List every record in log order.

        Returns:
            List of SearchRecord entities.
        """
        pass

    @abstractmethod
    async def find_point(self, n: int, s: int, bs: int) -> dict[tuple[int, ...], SearchRecord]:
        """Retrieve the latest record per partition for one search point.

        Args:
            n: Number of variables.
            s: Sensitivity bound.
            bs: Block sensitivity target.

        Returns:
            Mapping from partition parts to the latest record.
        """
        pass
