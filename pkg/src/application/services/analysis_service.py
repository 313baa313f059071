"""Analysis Service.

This module computes sensitivity and block sensitivity exactly.
Functions are evaluated in bulk with numpy: explicit tables by lookup,
section-rule functions by vectorized section matching, anything else by
calling the evaluator per input.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.domain.algorithms.packing import max_disjoint_packing
from src.domain.bounds import separation_bound
from src.domain.entities.boolean_function import (
    BlockSet,
    BooleanFunction,
    Input,
    SectionRule,
    SensitivityReport,
    StructuredFunction,
    TruthTable,
    mask_indices,
)
from src.domain.exceptions import CapacityError, DomainValidationError
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

BoolArray = npt.NDArray[np.bool_]
IndexArray = npt.NDArray[np.int64]

_CHUNK_BITS = 18


@dataclass(frozen=True)
class AnalysisLimits:
    """Largest n accepted by each exhaustive operation."""

    scan_max_n: int = 20
    extended_scan_max_n: int = 25
    bs_scan_max_n: int = 12
    bs_input_max_n: int = 16
    oracle_max_n: int = 4
    oracle_extended_max_n: int = 5


@dataclass(frozen=True)
class FunctionMeasures:
    """Sensitivity and block sensitivity of one function with witnesses."""

    sensitivity: SensitivityReport
    block_sensitivity: int
    blocks: BlockSet


def _evaluate_section_rule(rule: SectionRule, indices: IndexArray) -> BoolArray:
    local_mask = (1 << rule.width) - 1
    good = np.array(sorted(rule.good_patterns), dtype=np.int64)
    result = np.zeros(indices.shape, dtype=np.bool_)
    for t in range(rule.section_count):
        result |= np.isin((indices >> (t * rule.width)) & local_mask, good)
    return result


def _superset_closure(flags: BoolArray, n: int) -> BoolArray:
    """out[mask] is True iff flags[sub] for some sub of mask (sum over subsets)."""
    out = flags.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return out


class AnalysisService:
    """Exact sensitivity and block sensitivity analyzers.

    Ties between witnesses always resolve to the smallest canonical index.
    """

    def __init__(self, limits: AnalysisLimits | None = None) -> None:
        """Initialize the analysis service.

        Args:
            limits: Capacity limits; defaults apply when omitted.
        """
        self._limits = limits or AnalysisLimits()

    @property
    def limits(self) -> AnalysisLimits:
        return self._limits

    def evaluate_indices(self, f: BooleanFunction, indices: IndexArray) -> BoolArray:
        """Evaluate f at every canonical index in ``indices``."""
        if isinstance(f, TruthTable):
            return np.frombuffer(f.data, dtype=np.uint8)[indices].astype(np.bool_)
        if isinstance(f, StructuredFunction) and f.section_rule is not None:
            return _evaluate_section_rule(f.section_rule, indices)
        return np.fromiter(
            (f.value_at(int(i)) for i in indices), dtype=np.bool_, count=len(indices)
        )

    def sensitivity_at(self, f: BooleanFunction, w: Input) -> SensitivityReport:
        """Count the single-bit flips of w that change f."""
        self._check_dimension(f, w)
        neighbours = np.array([w.index ^ (1 << i) for i in range(f.n)], dtype=np.int64)
        base = f.value_at(w.index)
        flips = self.evaluate_indices(f, neighbours) != bool(base)
        indices = frozenset(int(i) + 1 for i in np.flatnonzero(flips))
        return SensitivityReport(value=len(indices), witness=w, sensitive_indices=indices)

    def sensitivity(self, f: BooleanFunction, allow_extended: bool = False) -> SensitivityReport:
        """Maximize sensitivity over all 2^n inputs.

        Args:
            f: Function to scan.
            allow_extended: Opt in to scans up to ``extended_scan_max_n``.

        Raises:
            CapacityError: If n exceeds the applicable scan limit.
        """
        limit = self._limits.extended_scan_max_n if allow_extended else self._limits.scan_max_n
        if f.n > limit:
            raise CapacityError("sensitivity scan", f.n, limit)

        size = 1 << f.n
        chunk = 1 << min(f.n, _CHUNK_BITS)
        best_value, best_index = -1, 0
        for start in range(0, size, chunk):
            indices = np.arange(start, min(start + chunk, size), dtype=np.int64)
            base = self.evaluate_indices(f, indices)
            counts = np.zeros(indices.shape, dtype=np.int16)
            for i in range(f.n):
                counts += base != self.evaluate_indices(f, indices ^ (1 << i))
            local = int(counts.argmax())
            if counts[local] > best_value:
                best_value, best_index = int(counts[local]), start + local
            if best_value == f.n:
                break
        logger.debug("sensitivity_scanned", n=f.n, value=best_value, witness=best_index)
        return self.sensitivity_at(f, Input.from_index(f.n, best_index))

    def block_sensitivity_at(self, f: BooleanFunction, w: Input) -> tuple[int, BlockSet]:
        """Exact maximum number of disjoint sensitive blocks at w.

        Raises:
            CapacityError: If n exceeds ``bs_input_max_n``.
        """
        self._check_dimension(f, w)
        if f.n > self._limits.bs_input_max_n:
            raise CapacityError("block sensitivity at an input", f.n, self._limits.bs_input_max_n)
        masks = np.arange(1 << f.n, dtype=np.int64)
        values = self.evaluate_indices(f, masks ^ w.index)
        return self._pack(f.n, values, w)

    def block_sensitivity(self, f: BooleanFunction) -> tuple[int, BlockSet]:
        """Maximize block sensitivity over all inputs.

        Raises:
            CapacityError: If n exceeds ``bs_scan_max_n``.
        """
        if f.n > self._limits.bs_scan_max_n:
            raise CapacityError("block sensitivity scan", f.n, self._limits.bs_scan_max_n)
        masks = np.arange(1 << f.n, dtype=np.int64)
        table = self.evaluate_indices(f, masks)
        best: tuple[int, BlockSet] | None = None
        for index in range(1 << f.n):
            value, blocks = self._pack(f.n, table[masks ^ index], Input.from_index(f.n, index))
            if best is None or value > best[0]:
                best = (value, blocks)
            if value == f.n:
                break
        assert best is not None
        return best

    def measure(self, f: BooleanFunction) -> FunctionMeasures:
        """Compute s(f) and bs(f) and audit the separation bound."""
        report = self.sensitivity(f)
        value, blocks = self.block_sensitivity(f)
        self.audit_bound(report.value, value, n=f.n)
        return FunctionMeasures(sensitivity=report, block_sensitivity=value, blocks=blocks)

    def audit_bound(self, s: int, bs: int, **context: object) -> bool:
        """Check bs <= (s^2 + s)/2; a violation is logged at critical level."""
        if bs <= separation_bound(s):
            return True
        logger.critical(
            "conjecture_bound_violated", s=s, bs=bs, bound=separation_bound(s), **context
        )
        return False

    def _pack(self, n: int, values: BoolArray, w: Input) -> tuple[int, BlockSet]:
        # values[mask] = f(w ^ mask); mask 0 is w itself
        sensitive = values != values[0]
        below = _superset_closure(sensitive, n)
        strict = np.zeros_like(sensitive)
        for i in range(n):
            strict.reshape(-1, 2, 1 << i)[:, 1, :] |= below.reshape(-1, 2, 1 << i)[:, 0, :]
        minimal = np.flatnonzero(sensitive & ~strict).tolist()
        packing = max_disjoint_packing(minimal)
        blocks = BlockSet(blocks=tuple(mask_indices(b) for b in packing), witness=w)
        return len(blocks), blocks

    @staticmethod
    def _check_dimension(f: BooleanFunction, w: Input) -> None:
        if f.n != w.n:
            raise DomainValidationError(f"input has n={w.n}, function has n={f.n}")
