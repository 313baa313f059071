"""Solver Interfaces Package.

This package contains the abstract contract for SAT solver back ends.
"""
