"""Solvers Package.

This package contains concrete SAT solver back ends.
"""
