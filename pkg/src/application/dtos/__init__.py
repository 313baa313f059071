"""Data Transfer Objects Package.

This package contains the Pydantic models printed by the command line:
analysis reports, family checks, search results and log audits.
"""
