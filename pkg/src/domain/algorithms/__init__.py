"""Algorithms Package.

This package contains pure combinatorial algorithms used by the services.
"""
