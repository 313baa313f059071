"""Repository Interfaces Package.

This package contains all repository interface definitions (ABCs).
These define the contracts for record persistence without implementation details.
"""
