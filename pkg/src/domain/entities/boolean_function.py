"""Boolean Function Entities.

This module defines inputs, explicit truth tables, predicate-evaluated
functions and the certificates returned by the analyzers.

Bit convention: variable x_i (1-based) is bit i-1 of the canonical input
index, so x_1 is the least significant bit. String forms of an Input list
x_1 first; truth-table text lists values in ascending index order.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from src.domain.exceptions import CapacityError, DomainValidationError

TABLE_MAX_N = 20


def index_mask(n: int, indices: Iterable[int]) -> int:
    """Turn a set of 1-based variable indices into a canonical bit mask.

    Args:
        n: Number of variables.
        indices: Variable indices, each in 1..n.

    Returns:
        Integer mask with bit i-1 set for every index i.

    Raises:
        DomainValidationError: If an index lies outside 1..n.
    """
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise DomainValidationError(f"variable index {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def mask_indices(mask: int) -> frozenset[int]:
    """Return the 1-based variable indices set in a canonical mask."""
    result = []
    i = 1
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return frozenset(result)


@dataclass(frozen=True)
class Input:
    """An assignment to n Boolean variables.

    ``bits[i-1]`` holds x_i.
    """

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainValidationError(f"number of variables must be positive, got {self.n}")
        if len(self.bits) != self.n:
            raise DomainValidationError(f"expected {self.n} bits, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise DomainValidationError("input bits must be 0 or 1")

    @classmethod
    def from_index(cls, n: int, index: int) -> "Input":
        if not 0 <= index < (1 << n):
            raise DomainValidationError(f"index {index} outside 0..{(1 << n) - 1}")
        return cls(n=n, bits=tuple((index >> i) & 1 for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "Input":
        return cls(n=n, bits=(0,) * n)

    @classmethod
    def from_string(cls, text: str) -> "Input":
        """Parse the display form, x_1 first (e.g. ``"110000000"``)."""
        if not text or any(c not in "01" for c in text):
            raise DomainValidationError(f"invalid input string {text!r}")
        return cls(n=len(text), bits=tuple(int(c) for c in text))

    @property
    def index(self) -> int:
        """Canonical index: sum of x_i * 2^(i-1)."""
        return sum(b << i for i, b in enumerate(self.bits))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def flip(self, indices: Iterable[int]) -> "Input":
        """Return this input with every bit in ``indices`` complemented.

        Raises:
            DomainValidationError: If an index lies outside 1..n.
        """
        return Input.from_index(self.n, self.index ^ index_mask(self.n, indices))

    def __str__(self) -> str:
        return self.to_string()


class BooleanFunction(ABC):
    """A total Boolean function on n variables."""

    n: int

    @abstractmethod
    def value_at(self, index: int) -> int:
        """Evaluate the function at a canonical input index."""
        pass

    def __call__(self, w: Input) -> int:
        if w.n != self.n:
            raise DomainValidationError(f"input has n={w.n}, function has n={self.n}")
        return self.value_at(w.index)


@dataclass(frozen=True)
class TruthTable(BooleanFunction):
    """Explicit 2^n-entry table, one byte (0 or 1) per canonical index."""

    n: int
    data: bytes = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainValidationError(f"number of variables must be positive, got {self.n}")
        if self.n > TABLE_MAX_N:
            raise CapacityError("explicit truth table", self.n, TABLE_MAX_N)
        if len(self.data) != 1 << self.n:
            raise DomainValidationError(
                f"truth table for n={self.n} needs {1 << self.n} entries, got {len(self.data)}"
            )
        if not set(self.data) <= {0, 1}:
            raise DomainValidationError("truth table entries must be 0 or 1")

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "TruthTable":
        return cls(n=n, data=bytes(bits))

    @classmethod
    def constant(cls, n: int, value: int) -> "TruthTable":
        return cls(n=n, data=bytes([value]) * (1 << n))

    @classmethod
    def from_function(cls, f: BooleanFunction) -> "TruthTable":
        """Materialize any function as an explicit table (n <= 20)."""
        if isinstance(f, TruthTable):
            return f
        if f.n > TABLE_MAX_N:
            raise CapacityError("explicit truth table", f.n, TABLE_MAX_N)
        return cls(n=f.n, data=bytes(f.value_at(i) for i in range(1 << f.n)))

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        """Parse the two-line table format ``n=<int>`` / ``0101...``.

        A single trailing newline is tolerated; any other whitespace is not.
        """
        body = text[:-1] if text.endswith("\n") else text
        lines = body.split("\n")
        if len(lines) != 2 or not lines[0].startswith("n="):
            raise DomainValidationError("truth table text must be 'n=<int>' then one bit line")
        try:
            n = int(lines[0][2:])
        except ValueError as e:
            raise DomainValidationError(f"invalid header {lines[0]!r}") from e
        if str(n) != lines[0][2:]:
            raise DomainValidationError(f"invalid header {lines[0]!r}")
        if any(c not in "01" for c in lines[1]):
            raise DomainValidationError("truth table values must be '0' or '1'")
        return cls.from_bits(n, (int(c) for c in lines[1]))

    def to_text(self) -> str:
        return f"n={self.n}\n" + "".join("1" if b else "0" for b in self.data) + "\n"

    def value_at(self, index: int) -> int:
        return self.data[index]

    def negate(self) -> "TruthTable":
        return TruthTable(n=self.n, data=bytes(1 - b for b in self.data))

    def shift_compose(self, indices: Iterable[int]) -> "TruthTable":
        """Return g with g(x) = f(x^T); applying it twice gives f back."""
        mask = index_mask(self.n, indices)
        return TruthTable(n=self.n, data=bytes(self.data[i ^ mask] for i in range(1 << self.n)))


@dataclass(frozen=True)
class SectionRule:
    """Variables split into equal contiguous sections; f = 1 iff some section is good.

    A section is good when its local bits, read as an integer with its
    first variable least significant, equal one of ``good_patterns``.
    """

    width: int
    section_count: int
    good_patterns: frozenset[int]

    @property
    def n(self) -> int:
        return self.width * self.section_count

    def evaluate_index(self, index: int) -> int:
        local_mask = (1 << self.width) - 1
        for t in range(self.section_count):
            if ((index >> (t * self.width)) & local_mask) in self.good_patterns:
                return 1
        return 0


@dataclass(frozen=True, eq=False)
class StructuredFunction(BooleanFunction):
    """Predicate-evaluated function for n too large for an explicit table.

    ``section_rule``, when present, describes the same function
    declaratively so analyzers can evaluate it in bulk.
    """

    n: int
    evaluator: Callable[[Input], int]
    section_rule: SectionRule | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainValidationError(f"number of variables must be positive, got {self.n}")
        if self.section_rule is not None and self.section_rule.n != self.n:
            raise DomainValidationError("section rule does not cover the function's variables")

    def value_at(self, index: int) -> int:
        return 1 if self.evaluator(Input.from_index(self.n, index)) else 0


@dataclass(frozen=True)
class BlockSet:
    """Pairwise-disjoint blocks of variable indices at a witness input."""

    blocks: tuple[frozenset[int], ...]
    witness: Input

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise DomainValidationError("blocks must be non-empty")
            index_mask(self.witness.n, block)
            if seen & block:
                raise DomainValidationError("blocks must be pairwise disjoint")
            seen |= block

    def __len__(self) -> int:
        return len(self.blocks)

    def certifies(self, f: BooleanFunction) -> bool:
        """Check that flipping each block at the witness changes f."""
        base = f(self.witness)
        return all(f(self.witness.flip(block)) != base for block in self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [sorted(block) for block in self.blocks]


@dataclass(frozen=True)
class SensitivityReport:
    """Sensitivity of a function at ``witness``."""

    value: int
    witness: Input
    sensitive_indices: frozenset[int]

    def __post_init__(self) -> None:
        if self.value != len(self.sensitive_indices):
            raise DomainValidationError("sensitivity value must equal the number of indices")
