"""Partition Entity.

A partition of n into bs non-increasing parts; part i becomes the block of
consecutive variable indices P_i in the block-sensitivity constraint.
"""

from dataclasses import dataclass

from src.domain.exceptions import DomainValidationError


@dataclass(frozen=True)
class Partition:
    """Non-increasing positive parts summing to n."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainValidationError("a partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise DomainValidationError(f"parts must be positive: {self.parts}")
        if sum(self.parts) != self.n:
            raise DomainValidationError(f"parts {self.parts} do not sum to n={self.n}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise DomainValidationError(f"parts must be non-increasing: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2,1,1"``."""
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError as e:
            raise DomainValidationError(f"invalid partition {text!r}") from e
        return cls(n=sum(parts), parts=parts)

    @property
    def size(self) -> int:
        """Number of parts, i.e. the block sensitivity it certifies."""
        return len(self.parts)

    @property
    def singletons(self) -> int:
        return sum(1 for p in self.parts if p == 1)

    def blocks(self) -> list[range]:
        """Return P_1, ..., P_bs as ranges of 1-based variable indices."""
        result = []
        start = 1
        for p in self.parts:
            result.append(range(start, start + p))
            start += p
        return result

    def block_masks(self) -> list[int]:
        """Return the canonical index of 0...0^{P_i} for each block."""
        return [((1 << len(block)) - 1) << (block.start - 1) for block in self.blocks()]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)
