"""Secure linear network function computation toolkit.

Constructs, verifies and bounds linear network codes that compute a
vector-linear target function at a sink while hiding a vector-linear
security function from an edge-wiretapping adversary.  All arithmetic
is exact over prime fields.
"""

from .gf import FieldMatrix, PrimeField

__all__ = ["FieldMatrix", "PrimeField"]
__version__ = "0.1.0"
