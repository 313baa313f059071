"""SAT Solver Interface.

This module defines the abstract interface for solving one CNF instance.
"""

from abc import ABC, abstractmethod

from src.domain.entities.cnf import CnfInstance
from src.domain.entities.search import SolverVerdict


class ISatSolver(ABC):
    """Abstract interface for a SAT solver.

    Implementations must be cancellation-safe: cancelling ``solve`` stops
    any work started on behalf of the instance.
    """

    @abstractmethod
    async def solve(self, instance: CnfInstance) -> SolverVerdict:
        """Decide one instance.

        Args:
            instance: The CNF instance.

        Returns:
            Verdict with a model when satisfiable; UNKNOWN on timeout.

        Raises:
            SolverConfigurationError: If the solver cannot be started.
            SolverProtocolError: If the solver output cannot be parsed.
        """
        pass
