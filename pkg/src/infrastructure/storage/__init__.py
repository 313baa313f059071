"""Storage Package.

This package contains the serialized form of persisted search records and
the writer for generated artifact files.
"""
