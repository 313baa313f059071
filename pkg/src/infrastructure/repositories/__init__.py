"""Repositories Package.

This package contains concrete implementations of repository interfaces.
"""
