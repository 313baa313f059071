"""Services Package.

This package contains the use cases: exact analysis, CNF encoding,
partition search, the brute-force oracle and the family checks.
"""
