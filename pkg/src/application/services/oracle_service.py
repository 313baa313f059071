"""Oracle Service.

This module computes max bs per sensitivity by brute force over all
2^(2^n) functions on n variables, independently of the SAT encoding.

Tables are processed in chunks as integers whose bit idx is f(idx). For
each chunk the sensitivity of every function is computed at once, and
block sensitivity is found by testing every packing of pairwise-disjoint
non-empty blocks at every input.
"""

from collections.abc import Iterator

import numpy as np

from src.application.services.analysis_service import AnalysisLimits, AnalysisService
from src.domain.entities.boolean_function import TruthTable
from src.domain.entities.search import OracleResult
from src.domain.exceptions import CapacityError, DomainValidationError
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

_CHUNK_TABLES = 1 << 14


def _packings(available: int) -> Iterator[tuple[int, ...]]:
    """Yield every set of pairwise-disjoint non-empty submasks of ``available``."""
    if not available:
        yield ()
        return
    low = available & -available
    rest = available ^ low
    yield from _packings(rest)
    sub = rest
    while True:
        block = sub | low
        for tail in _packings(rest & ~block):
            yield (block, *tail)
        if sub == 0:
            break
        sub = (sub - 1) & rest


def packings(n: int) -> list[tuple[int, ...]]:
    """All packings of blocks over n variables, largest first."""
    return sorted(_packings((1 << n) - 1), key=len, reverse=True)


class OracleService:
    """Exhaustive reference for max_bs on small n."""

    def __init__(
        self, limits: AnalysisLimits | None = None, analysis: AnalysisService | None = None
    ) -> None:
        """Initialize the oracle service.

        Args:
            limits: Capacity limits; ``oracle_max_n`` and ``oracle_extended_max_n`` apply.
            analysis: Analyzer used for the bound audit.
        """
        self._limits = limits or AnalysisLimits()
        self._analysis = analysis or AnalysisService(self._limits)

    def oracle_max_bs(
        self, n: int, s_filter: int | None = None, allow_large: bool = False
    ) -> OracleResult:
        """Max bs over all functions with sensitivity exactly s, for each s >= 1.

        Witnesses are the smallest table (as an integer) attaining the maximum.

        Raises:
            DomainValidationError: If n < 1.
            CapacityError: If n exceeds the oracle limit for the given flag.
        """
        if n < 1:
            raise DomainValidationError(f"n must be positive, got {n}")
        limit = self._limits.oracle_extended_max_n if allow_large else self._limits.oracle_max_n
        if n > limit:
            raise CapacityError("oracle enumeration", n, limit)
        if n > self._limits.oracle_max_n:
            logger.warning("oracle_long_run", n=n, functions=1 << (1 << n))

        size = 1 << n
        total = 1 << size
        inputs = np.arange(size, dtype=np.int64)
        shifts = inputs.astype(np.uint64)
        # xor[w, mask] = w ^ mask
        xor = inputs[:, None] ^ inputs[None, :]
        by_size = packings(n)

        best: dict[int, tuple[int, int]] = {}
        for start in range(0, total, _CHUNK_TABLES):
            tables = np.arange(start, min(start + _CHUNK_TABLES, total), dtype=np.uint64)
            values = ((tables[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.bool_)

            sens = np.zeros(values.shape, dtype=np.int8)
            for i in range(n):
                sens += values != values[:, inputs ^ (1 << i)]
            s_values = sens.max(axis=1)

            flips = values[:, xor] != values[:, :, None]
            bs_at = np.zeros(values.shape, dtype=np.int8)
            for packing in by_size:
                if not packing:
                    continue
                valid = np.ones(values.shape, dtype=np.bool_)
                for block in packing:
                    valid &= flips[:, :, block]
                bs_at[valid & (bs_at < len(packing))] = len(packing)
            bs_values = bs_at.max(axis=1)

            for s in np.unique(s_values).tolist():
                if s == 0 or (s_filter is not None and s != s_filter):
                    continue
                chosen = np.flatnonzero(s_values == s)
                chunk_best = int(bs_values[chosen].max())
                witness = start + int(chosen[bs_values[chosen] == chunk_best][0])
                if s not in best or chunk_best > best[s][0]:
                    best[s] = (chunk_best, witness)

        values_by_s = {s: bs for s, (bs, _) in sorted(best.items())}
        witnesses = {
            s: TruthTable.from_bits(n, ((table >> i) & 1 for i in range(size)))
            for s, (_, table) in sorted(best.items())
        }
        for s, bs in values_by_s.items():
            self._analysis.audit_bound(s, bs, n=n, source="oracle")
        logger.info("oracle_finished", n=n, functions=total, values=values_by_s)
        return OracleResult(
            n=n, values=values_by_s, witnesses=witnesses, functions_enumerated=total
        )
