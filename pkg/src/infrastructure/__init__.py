"""Infrastructure Layer Package.

This layer contains implementations of external dependencies.
It includes the record log, the external SAT solver, configuration and logging.
"""
