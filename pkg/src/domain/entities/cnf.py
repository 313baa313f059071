"""CNF Instance Entities.

Variable numbering is fixed: table variable for canonical input index idx
is idx+1, followed by one counting-ladder block per input in ascending
index order. Inside a ladder block, cell c_{i,j} (1 <= j <= i <= n) sits at
offset i(i-1)/2 + (j-1), i.e. row-major order.
"""

from dataclasses import dataclass

from src.domain.entities.boolean_function import TruthTable
from src.domain.entities.partition import Partition
from src.domain.exceptions import DomainValidationError

Clause = tuple[int, ...]
BIT_ORDER = "lsb-x1"


def _or_none(value: int | None) -> str:
    return "none" if value is None else str(value)


def ladder_size(n: int) -> int:
    """Number of materialized ladder cells c_{i,j} with 1 <= j <= i <= n."""
    return n * (n + 1) // 2


@dataclass(frozen=True)
class VariableMap:
    """Locates table and counting-ladder variables of an instance."""

    n: int
    ladder_width: int = 0

    @property
    def table_count(self) -> int:
        return 1 << self.n

    @property
    def table_range(self) -> range:
        return range(1, self.table_count + 1)

    @property
    def var_count(self) -> int:
        return self.table_count * (1 + self.ladder_width)

    def table_var(self, index: int) -> int:
        return index + 1

    def ladder_range(self, index: int) -> range:
        start = self.table_count + index * self.ladder_width + 1
        return range(start, start + self.ladder_width)

    def ladder_var(self, index: int, i: int, j: int) -> int:
        """Variable of c_{i,j} in the ladder of input ``index``."""
        if not 1 <= j <= i <= self.n or self.ladder_width == 0:
            raise DomainValidationError(f"no ladder cell c_{{{i},{j}}} for n={self.n}")
        return self.ladder_range(index).start + i * (i - 1) // 2 + (j - 1)

    def describe(self) -> str:
        table = f"table=1..{self.table_count}"
        if self.ladder_width == 0:
            return f"{table} ladder=none"
        return (
            f"{table} ladder={self.table_count + 1}..{self.var_count} "
            f"ladder_width={self.ladder_width}"
        )


@dataclass(frozen=True)
class CnfInstance:
    """A numbered clause set with its variable map and search parameters."""

    var_count: int
    clauses: tuple[Clause, ...]
    var_map: VariableMap
    s: int | None = None
    partition: Partition | None = None

    def __post_init__(self) -> None:
        if self.var_count < 1:
            raise DomainValidationError("an instance needs at least one variable")
        for clause in self.clauses:
            if not clause:
                raise DomainValidationError("clauses must be non-empty")
            literals = set(clause)
            for lit in literals:
                if lit == 0 or abs(lit) > self.var_count:
                    raise DomainValidationError(f"literal {lit} outside 1..{self.var_count}")
                if -lit in literals:
                    raise DomainValidationError(f"clause {clause} is tautological")

    @property
    def n(self) -> int:
        return self.var_map.n

    @property
    def bs(self) -> int | None:
        return self.partition.size if self.partition is not None else None

    def to_dimacs(self) -> str:
        """Render as DIMACS CNF with metadata comment lines.

        Identical instances always give byte-identical text.
        """
        partition = str(self.partition) if self.partition is not None else "none"
        lines = [
            f"c meta n={self.n} s={_or_none(self.s)} bs={_or_none(self.bs)} "
            f"partition={partition} bitorder={BIT_ORDER}",
            f"c vars {self.var_map.describe()}",
            f"p cnf {self.var_count} {len(self.clauses)}",
        ]
        lines.extend(" ".join(map(str, clause)) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"

    def pin_function(self, f: TruthTable) -> "CnfInstance":
        """Return this instance with unit clauses fixing every table variable to f."""
        if f.n != self.n:
            raise DomainValidationError(f"function has n={f.n}, instance has n={self.n}")
        units = tuple(
            (self.var_map.table_var(i) if f.value_at(i) else -self.var_map.table_var(i),)
            for i in range(1 << f.n)
        )
        return CnfInstance(
            var_count=self.var_count,
            clauses=self.clauses + units,
            var_map=self.var_map,
            s=self.s,
            partition=self.partition,
        )
