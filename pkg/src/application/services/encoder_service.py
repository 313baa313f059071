"""CNF Encoder Service.

This module builds the SAT instances asking for a function f on n
variables with s(f) <= s that is sensitive at 0...0 on every block of a
given partition.

Sensitivity at each input w is counted in unary with a ladder of cells
c_{i,j} = "at least j of b_1..b_i are 1", where b_i is f(w^{i}):

    c_{i,j} <-> (c_{i-1,j-1} AND b_i) OR c_{i-1,j}

Base cells are constants (c_{i,0} = 1, c_{i,j} = 0 for i < j) and are
folded into the clauses of their neighbours. The full-width row
a_j = c_{n,j} is then used as

    f(w) = 0  ->  NOT a_{s+1}
    f(w) = 1  ->  a_{n-s}
"""

from collections.abc import Iterable

from src.domain.algorithms.partitions import enumerate_partitions
from src.domain.entities.boolean_function import BlockSet, TruthTable, index_mask
from src.domain.entities.cnf import Clause, CnfInstance, VariableMap, ladder_size
from src.domain.entities.partition import Partition
from src.domain.exceptions import DecodeError, DomainValidationError
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def _ladder_clauses(x: int, b: int, p: int | None, q: int | None) -> list[Clause]:
    """Clauses for x <-> (p AND b) OR q; p=None is constant true, q=None constant false."""
    clauses: list[Clause] = [(-b, x) if p is None else (-p, -b, x)]
    if q is not None:
        clauses.append((-q, x))
    if p is not None:
        clauses.append((-x, p) if q is None else (-x, p, q))
    clauses.append((-x, b) if q is None else (-x, b, q))
    return clauses


class CnfEncoderService:
    """Encoder for the s(f) <= s and bs(f) >= bs constraints.

    Variable numbering and clause order are fully deterministic.
    """

    def enumerate_partitions(
        self, n: int, bs: int, max_singletons: int | None = None
    ) -> list[Partition]:
        """List the partitions of n into bs parts, largest first."""
        return enumerate_partitions(n, bs, max_singletons)

    def encode_bs_constraint(self, partition: Partition) -> list[Clause]:
        """Unit clauses: f(0...0) = 0 and f(0...0^{P_i}) = 1 for every block."""
        var_map = VariableMap(n=partition.n)
        clauses: list[Clause] = [(-var_map.table_var(0),)]
        clauses.extend((var_map.table_var(mask),) for mask in partition.block_masks())
        return clauses

    def encode_sensitivity_constraint(self, n: int, s: int) -> tuple[list[Clause], VariableMap]:
        """Clauses forcing s(f, w) <= s at every input, plus their variable map.

        Raises:
            DomainValidationError: If s is negative.
        """
        if s < 0:
            raise DomainValidationError(f"sensitivity bound must be >= 0, got {s}")
        if s >= n:
            return [], VariableMap(n=n)

        var_map = VariableMap(n=n, ladder_width=ladder_size(n))
        clauses: list[Clause] = []
        for w in range(1 << n):
            for i in range(1, n + 1):
                b = var_map.table_var(w ^ (1 << (i - 1)))
                for j in range(1, i + 1):
                    x = var_map.ladder_var(w, i, j)
                    p = var_map.ladder_var(w, i - 1, j - 1) if j > 1 else None
                    q = var_map.ladder_var(w, i - 1, j) if j <= i - 1 else None
                    clauses.extend(_ladder_clauses(x, b, p, q))
            v = var_map.table_var(w)
            if n - s >= 1:
                clauses.append((-v, var_map.ladder_var(w, n, n - s)))
            if s + 1 <= n:
                clauses.append((v, -var_map.ladder_var(w, n, s + 1)))
        return clauses, var_map

    def build_instance(self, n: int, s: int, bs: int, partition: Partition) -> CnfInstance:
        """Conjoin the bs and sensitivity constraints for one partition.

        Raises:
            DomainValidationError: If the partition does not split n into bs parts.
        """
        if partition.n != n or partition.size != bs:
            raise DomainValidationError(
                f"partition {partition} does not split n={n} into bs={bs} parts"
            )
        sensitivity_clauses, var_map = self.encode_sensitivity_constraint(n, s)
        clauses = self.encode_bs_constraint(partition) + sensitivity_clauses
        instance = CnfInstance(
            var_count=var_map.var_count,
            clauses=tuple(clauses),
            var_map=var_map,
            s=s,
            partition=partition,
        )
        logger.debug(
            "instance_built",
            n=n,
            s=s,
            bs=bs,
            partition=str(partition),
            var_count=instance.var_count,
            clause_count=len(instance.clauses),
        )
        return instance

    def emit_dimacs(self, instance: CnfInstance) -> str:
        """Render the instance as DIMACS CNF with metadata comment lines."""
        return instance.to_dimacs()

    def decode_model(self, instance: CnfInstance, model: Iterable[int]) -> TruthTable:
        """Read f off the table variables of a model given as signed literals.

        Raises:
            DecodeError: If some table variable is not assigned.
        """
        assigned = {abs(lit): lit > 0 for lit in model if lit}
        bits = []
        for index in range(instance.var_map.table_count):
            var = instance.var_map.table_var(index)
            if var not in assigned:
                raise DecodeError(f"model does not assign table variable {var}")
            bits.append(1 if assigned[var] else 0)
        return TruthTable.from_bits(instance.n, bits)

    def normalize_witness(self, f: TruthTable, blocks: BlockSet) -> tuple[TruthTable, Partition]:
        """Move a block-sensitivity certificate into the encoder's normal form.

        The result g has g(0...0) = 0, is sensitive on the consecutive blocks
        of the returned partition, and s(g) <= s(f). Variables outside every
        block are joined to the largest block and ignored by g.

        Raises:
            DomainValidationError: If ``blocks`` does not certify f or is empty.
        """
        if not blocks.blocks or not blocks.certifies(f):
            raise DomainValidationError("block set does not certify the function")
        n = f.n
        shifted = f.shift_compose(sorted(i + 1 for i in range(n) if blocks.witness.bits[i]))
        if shifted.value_at(0):
            shifted = shifted.negate()

        covered: set[int] = set()
        for block in blocks.blocks:
            covered |= block
        uncovered = sorted(set(range(1, n + 1)) - covered)
        ordered = sorted(blocks.blocks, key=lambda b: (-len(b), min(b)))
        order = [v for block in ordered for v in sorted(block)]
        order[len(ordered[0]) : len(ordered[0])] = uncovered
        ignored = index_mask(n, uncovered)

        data = bytearray(1 << n)
        for y in range(1 << n):
            x = 0
            for position, var in enumerate(order):
                if (y >> position) & 1:
                    x |= 1 << (var - 1)
            data[y] = shifted.value_at(x & ~ignored)
        parts = (len(ordered[0]) + len(uncovered), *(len(b) for b in ordered[1:]))
        return TruthTable(n=n, data=bytes(data)), Partition(n=n, parts=parts)
