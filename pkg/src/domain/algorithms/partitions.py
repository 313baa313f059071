"""Integer Partition Enumeration.

Partitions into a fixed number of non-increasing parts, emitted in
lexicographically decreasing order.
"""

from collections.abc import Iterator

from src.domain.entities.partition import Partition
from src.domain.exceptions import DomainValidationError


def _parts(remaining: int, count: int, largest: int) -> Iterator[tuple[int, ...]]:
    if count == 0:
        if remaining == 0:
            yield ()
        return
    # every later part is >= 1 and <= the current one
    high = min(largest, remaining - (count - 1))
    low = -(-remaining // count)
    for p in range(high, low - 1, -1):
        for rest in _parts(remaining - p, count - 1, p):
            yield (p, *rest)


def enumerate_partitions(n: int, bs: int, max_singletons: int | None = None) -> list[Partition]:
    """List partitions of n into exactly bs parts.

    Args:
        n: The number being partitioned.
        bs: Number of parts.
        max_singletons: When set, drop partitions with more parts of size 1.

    Returns:
        Partitions in lexicographically decreasing order; empty when bs > n.

    Raises:
        DomainValidationError: If n or bs is not positive, or max_singletons < 0.
    """
    if n < 1 or bs < 1:
        raise DomainValidationError(f"n and bs must be positive, got n={n}, bs={bs}")
    if max_singletons is not None and max_singletons < 0:
        raise DomainValidationError(f"max_singletons must be >= 0, got {max_singletons}")
    if bs > n:
        return []
    result = []
    for parts in _parts(n, bs, n):
        if max_singletons is not None and parts.count(1) > max_singletons:
            continue
        result.append(Partition(n=n, parts=parts))
    return result
