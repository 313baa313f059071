"""Search Service.

This module contains the search use cases: solving one (n, s, bs) point
over all of its partitions, scanning for the largest feasible bs, building
the separation table, and re-verifying the record log.
"""

import asyncio
import functools
from dataclasses import dataclass

from src.application.services.analysis_service import AnalysisService
from src.application.services.encoder_service import CnfEncoderService
from src.domain.bounds import KNOWN_SEPARATIONS, KNOWN_SEPARATIONS_MAX_N
from src.domain.entities.boolean_function import BlockSet, Input, TruthTable
from src.domain.entities.cnf import CnfInstance
from src.domain.entities.partition import Partition
from src.domain.entities.search import (
    LogAudit,
    MaxBsResult,
    PointOutcome,
    PointResult,
    SearchRecord,
    SeparationRow,
    SeparationTable,
    SolverVerdict,
    VerdictStatus,
)
from src.domain.exceptions import ConsistencyError, DomainValidationError
from src.domain.repositories.record_repository import IRecordRepository
from src.domain.solvers.sat_solver import ISatSolver
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


@dataclass
class _Winner:
    function: TruthTable
    partition: Partition


class SearchService:
    """Search service orchestrating solver runs over partitions.

    Verdicts never depend on timing: the winning partition is always the
    lowest-rank satisfiable one, and records are appended in rank order.
    """

    def __init__(
        self,
        solver: ISatSolver,
        records: IRecordRepository,
        encoder: CnfEncoderService | None = None,
        analysis: AnalysisService | None = None,
        prune_singletons: bool = True,
        workers: int = 1,
    ) -> None:
        """Initialize the search service.

        Args:
            solver: The SAT solver back end.
            records: The record log repository.
            encoder: CNF encoder; a default one is created when omitted.
            analysis: Analyzer used to re-verify decoded functions.
            prune_singletons: Skip partitions with more singleton parts than s.
            workers: Maximum number of concurrent solver runs.
        """
        if workers < 1:
            raise DomainValidationError(f"workers must be at least 1, got {workers}")
        self._solver = solver
        self._records = records
        self._encoder = encoder or CnfEncoderService()
        self._analysis = analysis or AnalysisService()
        self._prune_singletons = prune_singletons
        self._workers = workers

    async def run_solver(self, instance: CnfInstance) -> SolverVerdict:
        """Solve one instance with the configured back end."""
        return await self._solver.solve(instance)

    def partitions_for(self, n: int, s: int, bs: int) -> list[Partition]:
        """Partitions searched for (n, s, bs), in rank order.

        With pruning on, a partition with more than s singleton parts is
        skipped: each singleton block is a sensitive variable at 0...0.
        """
        if not self._prune_singletons:
            return self._encoder.enumerate_partitions(n, bs)
        kept = self._encoder.enumerate_partitions(n, bs, max_singletons=s)
        pruned = len(self._encoder.enumerate_partitions(n, bs)) - len(kept)
        if pruned:
            logger.debug("partition_pruned", n=n, s=s, bs=bs, pruned=pruned)
        return kept

    async def search_point(self, n: int, s: int, bs: int) -> PointResult:
        """Decide whether some f on n variables has s(f) <= s and bs(f) >= bs.

        Returns:
            Feasible with a verified function and its partition, Infeasible
            when every partition is unsatisfiable, Unknown otherwise.

        Raises:
            DomainValidationError: If s or bs is outside 1..n.
            ConsistencyError: If a decoded function fails re-verification.
        """
        if not 1 <= s <= n or not 1 <= bs <= n:
            raise DomainValidationError(f"need 1 <= s, bs <= n, got n={n}, s={s}, bs={bs}")

        partitions = self.partitions_for(n, s, bs)
        cached = await self._records.find_point(n, s, bs)

        # a verified sat record caps the ranks worth solving
        limit = len(partitions)
        for rank, partition in enumerate(partitions):
            record = cached.get(partition.parts)
            if record is None or not record.completed:
                continue
            if record.status is VerdictStatus.SATISFIABLE:
                limit = rank + 1
                break
        ranked = partitions[:limit]

        instances: dict[int, CnfInstance] = {}
        for rank, partition in enumerate(ranked):
            record = cached.get(partition.parts)
            if record is None or not record.completed:
                instances[rank] = self._encoder.build_instance(n, s, bs, partition)

        semaphore = asyncio.Semaphore(self._workers)
        tasks: dict[int, asyncio.Task[SolverVerdict]] = {}

        async def solve(instance: CnfInstance) -> SolverVerdict:
            async with semaphore:
                return await self.run_solver(instance)

        def cancel_after(rank: int) -> None:
            for other, task in tasks.items():
                if other > rank:
                    task.cancel()

        def on_done(rank: int, task: asyncio.Task[SolverVerdict]) -> None:
            if task.cancelled() or task.exception() is not None:
                return
            if task.result().status is VerdictStatus.SATISFIABLE:
                cancel_after(rank)

        for rank, instance in instances.items():
            task = asyncio.create_task(solve(instance))
            task.add_done_callback(functools.partial(on_done, rank))
            tasks[rank] = task

        winner: _Winner | None = None
        unknown: list[tuple[int, ...]] = []
        try:
            for rank, partition in enumerate(ranked):
                if rank not in tasks:
                    record = cached[partition.parts]
                    if record.status is VerdictStatus.SATISFIABLE:
                        assert record.function is not None
                        winner = _Winner(TruthTable.from_text(record.function), partition)
                        break
                    continue

                verdict = await tasks[rank]
                if verdict.status is VerdictStatus.SATISFIABLE:
                    assert verdict.model is not None
                    function = self._encoder.decode_model(instances[rank], verdict.model)
                    verified = self.verify(function, partition, s)
                    await self._append(n, s, bs, partition, verdict, function, verified)
                    if not verified:
                        raise ConsistencyError(
                            f"decoded function for n={n} s={s} bs={bs} "
                            f"partition={partition} failed verification"
                        )
                    winner = _Winner(function, partition)
                    break
                await self._append(n, s, bs, partition, verdict)
                if verdict.status is VerdictStatus.UNKNOWN:
                    unknown.append(partition.parts)
        finally:
            for task in tasks.values():
                task.cancel()
            await asyncio.gather(*tasks.values(), return_exceptions=True)

        if winner is not None:
            outcome = PointOutcome.FEASIBLE
        elif unknown:
            outcome = PointOutcome.UNKNOWN
        else:
            outcome = PointOutcome.INFEASIBLE
        result = PointResult(
            n=n,
            s=s,
            bs=bs,
            outcome=outcome,
            function=winner.function if winner else None,
            partition=winner.partition if winner else None,
            partitions_total=len(partitions),
            solver_calls=sum(1 for t in tasks.values() if t.done() and not t.cancelled()),
            unknown_partitions=tuple(unknown),
        )
        logger.info(
            "search_point_resolved",
            n=n,
            s=s,
            bs=bs,
            outcome=str(outcome),
            partition=str(result.partition) if result.partition else None,
            partitions=len(partitions),
            solver_calls=result.solver_calls,
        )
        return result

    async def max_bs(self, n: int, s: int, start_bs: int | None = None) -> MaxBsResult:
        """Find the largest bs with a feasible (n, s, bs) point.

        Args:
            n: Number of variables.
            s: Sensitivity bound.
            start_bs: Known achievable value to start from, e.g. the result
                for n-1 variables; never below s.

        Returns:
            The largest feasible bs; ``complete`` is False when a point
            came back Unknown.
        """
        if not 1 <= s <= n:
            raise DomainValidationError(f"need 1 <= s <= n, got n={n}, s={s}")
        bs = max(s, start_bs or s)
        best: int | None = None
        witness: TruthTable | None = None
        points: list[PointResult] = []
        complete = True
        while bs <= n:
            point = await self.search_point(n, s, bs)
            points.append(point)
            if point.outcome is PointOutcome.UNKNOWN:
                complete = False
                break
            if point.outcome is PointOutcome.INFEASIBLE:
                break
            best, witness = bs, point.function
            bs += 1
        if best is not None:
            self._analysis.audit_bound(s, best, n=n, source="max_bs")
        return MaxBsResult(
            n=n, s=s, max_bs=best, complete=complete, witness=witness, points=tuple(points)
        )

    async def build_table(self, max_n: int) -> SeparationTable:
        """Compute max_bs for every 1 <= s <= n <= max_n and extract the separation rows.

        A row (n, s, bs) is reported where bs > s and bs exceeds the value
        for n-1 variables.
        """
        if max_n < 1:
            raise DomainValidationError(f"max_n must be positive, got {max_n}")
        table = SeparationTable(max_n=max_n)
        for n in range(1, max_n + 1):
            for s in range(1, n + 1):
                previous = table.values.get((n - 1, s))
                result = await self.max_bs(n, s, start_bs=previous)
                value = result.max_bs if result.max_bs is not None else (previous or s)
                table.values[(n, s)] = value
                if not result.complete:
                    table.complete = False
                    logger.warning("table_point_incomplete", n=n, s=s, lower_bound=value)
                    continue
                if value > max(s, previous or s):
                    known = (n, s, value) in KNOWN_SEPARATIONS
                    row = SeparationRow(n=n, s=s, bs=value, known=known)
                    table.rows.append(row)
                    logger.info("separation_row", n=n, s=s, bs=value, known=row.known)

        found = {(r.n, r.s, r.bs) for r in table.rows}
        table.missing_known_rows = sorted(
            row
            for row in KNOWN_SEPARATIONS
            if row[0] <= min(max_n, KNOWN_SEPARATIONS_MAX_N) and row not in found
        )
        if table.missing_known_rows:
            logger.warning("known_rows_missing", rows=table.missing_known_rows)
        return table

    async def reverify_log(self) -> LogAudit:
        """Re-check every sat record of the log with the exact analyzers."""
        checked = confirmed = 0
        mismatches: list[tuple[int, int, int, tuple[int, ...]]] = []
        for record in await self._records.list_all():
            if record.status is not VerdictStatus.SATISFIABLE:
                continue
            assert record.function is not None
            checked += 1
            function = TruthTable.from_text(record.function)
            partition = Partition(n=record.n, parts=record.partition)
            ok = function.n == record.n and self.verify(function, partition, record.s)
            if ok:
                confirmed += 1
            if ok != record.verified:
                mismatches.append(record.key)
                logger.error("record_mismatch", key=str(record.key), recorded=record.verified)
        return LogAudit(checked=checked, confirmed=confirmed, mismatches=tuple(mismatches))

    def verify(self, f: TruthTable, partition: Partition, s: int) -> bool:
        """Check s(f) <= s and that the partition's blocks are sensitive at 0...0.

        The separation bound is audited on the function's own s and bs.
        """
        report = self._analysis.sensitivity(f)
        blocks = BlockSet(
            blocks=tuple(frozenset(block) for block in partition.blocks()),
            witness=Input.zeros(f.n),
        )
        if report.value > s or not blocks.certifies(f):
            logger.error(
                "verification_failed",
                n=f.n,
                s=s,
                actual_s=report.value,
                partition=str(partition),
            )
            return False
        limits = self._analysis.limits
        if f.n <= limits.bs_scan_max_n:
            bs, _ = self._analysis.block_sensitivity(f)
        elif f.n <= limits.bs_input_max_n:
            bs, _ = self._analysis.block_sensitivity_at(f, Input.zeros(f.n))
        else:
            bs = len(blocks)
        self._analysis.audit_bound(report.value, bs, n=f.n, source="search")
        return True

    async def _append(
        self,
        n: int,
        s: int,
        bs: int,
        partition: Partition,
        verdict: SolverVerdict,
        function: TruthTable | None = None,
        verified: bool = False,
    ) -> None:
        await self._records.append(
            SearchRecord(
                n=n,
                s=s,
                bs=bs,
                partition=partition.parts,
                status=verdict.status,
                elapsed=verdict.elapsed,
                function=function.to_text() if function is not None else None,
                verified=verified,
            )
        )
