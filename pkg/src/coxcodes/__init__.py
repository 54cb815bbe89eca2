"""Sorting index, permutation codes, and statistic-transporting bijections on
the Coxeter families A (permutations), B (signed permutations), and
D (even-signed permutations), plus an exhaustive verification harness.
"""

from . import harness, perm_a, perm_b, perm_d, qpoly

__version__ = "0.1.0"

__all__ = ["perm_a", "perm_b", "perm_d", "qpoly", "harness", "__version__"]
