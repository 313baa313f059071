"""Contract-conforming SAT solver script backed by python-sat.

Reads the DIMACS file named on the command line, prints "s" and "v" lines
and exits with 10 (SAT) or 20 (UNSAT). Imports nothing from the package
so it runs as a plain script.
"""

import sys
from collections.abc import Iterable, Sequence

from pysat.formula import CNF
from pysat.solvers import Solver

SOLVER_NAME = "g3"


def solve_clauses(
    clauses: Iterable[Sequence[int]], var_count: int
) -> tuple[bool, list[int] | None]:
    """Solve and return a model assigning every variable 1..var_count."""
    with Solver(name=SOLVER_NAME, bootstrap_with=[list(c) for c in clauses]) as solver:
        if not solver.solve():
            return False, None
        assigned = {abs(lit): lit for lit in solver.get_model() or []}
    return True, [assigned.get(v, -v) for v in range(1, var_count + 1)]


def header_var_count(path: str) -> int:
    """Variable count declared on the ``p cnf`` line."""
    with open(path, encoding="ascii") as handle:
        for line in handle:
            fields = line.split()
            if fields[:2] == ["p", "cnf"]:
                return int(fields[2])
    raise ValueError(f"{path}: no 'p cnf' header")


def main(path: str) -> int:
    cnf = CNF(from_file=path)
    # variables in no clause still get a value
    var_count = max(header_var_count(path), cnf.nv)
    sat, model = solve_clauses(cnf.clauses, var_count)
    if not sat:
        print("s UNSATISFIABLE")
        return 20
    assert model is not None
    print("s SATISFIABLE")
    print("v " + " ".join(map(str, model)) + " 0")
    return 10


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
