"""Logging Package.

This package contains logging configuration using Structlog.
"""
