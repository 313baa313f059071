"""External SAT Solver.

This module runs a SAT-competition style solver as a separate process:
the instance is written to a DIMACS file whose path is passed on the
command line, the answer is read from the "s" status line and the "v"
value lines, and exit codes 10/20 are accepted as SAT/UNSAT signals.
"""

import asyncio
import shlex
import tempfile
import time
from pathlib import Path

from src.domain.entities.cnf import CnfInstance
from src.domain.entities.search import SolverConfig, SolverVerdict, VerdictStatus
from src.domain.exceptions import SolverConfigurationError, SolverProtocolError
from src.domain.solvers.sat_solver import ISatSolver
from src.infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

INSTANCE_PLACEHOLDER = "{instance}"

_STATUS_WORDS = {
    "SATISFIABLE": VerdictStatus.SATISFIABLE,
    "UNSATISFIABLE": VerdictStatus.UNSATISFIABLE,
    "UNKNOWN": VerdictStatus.UNKNOWN,
    "INDETERMINATE": VerdictStatus.UNKNOWN,
}
_EXIT_CODES = {10: VerdictStatus.SATISFIABLE, 20: VerdictStatus.UNSATISFIABLE}


def build_command(template: str, instance_path: Path) -> list[str]:
    """Expand the solver command template for one instance file."""
    argv = shlex.split(template)
    if not argv:
        raise SolverConfigurationError("solver command is empty")
    if any(INSTANCE_PLACEHOLDER in arg for arg in argv):
        return [arg.replace(INSTANCE_PLACEHOLDER, str(instance_path)) for arg in argv]
    return [*argv, str(instance_path)]


def parse_solver_output(
    output: str, returncode: int
) -> tuple[VerdictStatus, tuple[int, ...] | None]:
    """Parse solver stdout into a status and, for SAT, the model literals.

    Raises:
        SolverProtocolError: If no status can be determined, status line and
            exit code disagree, a value line is malformed, or a SAT answer
            carries no model.
    """
    statuses: set[VerdictStatus] = set()
    model: list[int] = []
    for raw in output.splitlines():
        line = raw.strip()
        if line.startswith("s "):
            word = line[2:].strip()
            if word not in _STATUS_WORDS:
                raise SolverProtocolError(f"unknown status line {line!r}", output)
            statuses.add(_STATUS_WORDS[word])
        elif line.startswith("v ") or line == "v":
            try:
                model.extend(int(tok) for tok in line[1:].split())
            except ValueError as e:
                raise SolverProtocolError(f"malformed value line {line!r}", output) from e

    if len(statuses) > 1:
        raise SolverProtocolError("conflicting status lines", output)
    by_exit = _EXIT_CODES.get(returncode)
    if statuses:
        status = statuses.pop()
        if by_exit is not None and status is not VerdictStatus.UNKNOWN and by_exit is not status:
            raise SolverProtocolError(
                f"status {status} contradicts exit code {returncode}", output
            )
    elif by_exit is not None:
        status = by_exit
    else:
        raise SolverProtocolError(f"no status line and exit code {returncode}", output)

    if status is not VerdictStatus.SATISFIABLE:
        return status, None
    literals = tuple(lit for lit in model if lit != 0)
    if not literals:
        raise SolverProtocolError("satisfiable answer without a model", output)
    return status, literals


class ExternalSatSolver(ISatSolver):
    """ISatSolver backed by an external executable.

    Each call runs in its own temporary directory; the process is killed on
    timeout and on cancellation. Concurrent calls beyond the configured
    worker count wait for a free slot.
    """

    def __init__(self, config: SolverConfig) -> None:
        """Initialize the external solver.

        Args:
            config: Command template, per-instance time limit and worker count.
        """
        self._config = config
        self._slots = asyncio.Semaphore(config.workers)

    @property
    def config(self) -> SolverConfig:
        return self._config

    async def solve(self, instance: CnfInstance) -> SolverVerdict:
        """Write the instance, run the solver, and parse its answer.

        At most ``config.workers`` solver processes run at once.
        """
        async with self._slots:
            return await self._solve(instance)

    async def _solve(self, instance: CnfInstance) -> SolverVerdict:
        with tempfile.TemporaryDirectory(prefix="sensbench-") as tmp:
            path = Path(tmp) / "instance.cnf"
            await asyncio.to_thread(path.write_text, instance.to_dimacs(), "ascii")
            argv = build_command(self._config.command, path)
            started = time.monotonic()
            try:
                process = await asyncio.create_subprocess_exec(
                    *argv,
                    stdout=asyncio.subprocess.PIPE,
                    stderr=asyncio.subprocess.PIPE,
                )
            except (FileNotFoundError, PermissionError) as e:
                raise SolverConfigurationError(f"cannot run solver {argv[0]!r}: {e}") from e
            logger.debug("solver_started", pid=process.pid, command=argv[0], n=instance.n)

            try:
                stdout, _ = await asyncio.wait_for(
                    process.communicate(), timeout=self._config.time_limit
                )
            except TimeoutError:
                await self._kill(process)
                elapsed = time.monotonic() - started
                logger.info("solver_timeout", n=instance.n, elapsed=round(elapsed, 3))
                return SolverVerdict(status=VerdictStatus.UNKNOWN, elapsed=elapsed)
            except asyncio.CancelledError:
                await self._kill(process)
                raise

        elapsed = time.monotonic() - started
        assert process.returncode is not None
        status, model = parse_solver_output(stdout.decode(errors="replace"), process.returncode)
        logger.debug(
            "solver_finished",
            status=str(status),
            returncode=process.returncode,
            elapsed=round(elapsed, 3),
        )
        return SolverVerdict(status=status, model=model, elapsed=elapsed)

    @staticmethod
    async def _kill(process: asyncio.subprocess.Process) -> None:
        if process.returncode is None:
            try:
                process.kill()
            except ProcessLookupError:
                pass
        await process.wait()
