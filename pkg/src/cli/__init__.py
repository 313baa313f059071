"""CLI Layer Package.

This layer contains the command-line interface.
It maps arguments to service calls and prints results as JSON.
"""
