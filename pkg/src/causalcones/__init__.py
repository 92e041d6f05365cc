"""Exact-arithmetic derivation of entropic causal inequalities.

Shannon cones, conditional-independence constraints, and switch-variable
convexification are combined into polyhedral derivation pipelines whose
projections yield the entropic inequalities obeyed by causal correlations;
a distribution layer evaluates entropy vectors and scans for violations.
"""

__version__ = "0.1.0"
