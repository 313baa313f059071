"""Domain Entities Package.

This package contains Boolean functions, certificates, partitions, CNF
instances and search records.
"""
