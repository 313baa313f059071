"""Domain Layer Package.

This is the core of the application: Boolean function entities, the
separating families, partition and packing algorithms, and the ports
for solvers and record storage.
The Domain layer has no dependencies on other layers.
"""
