"""
Sensitivity Workbench - exact analyzers and SAT search for s(f) vs. bs(f)
"""

__version__ = "0.1.0"
__description__ = "Sensitivity and block sensitivity of Boolean functions"
