"""Secure vector-linear codes for three-layer multi-edge trees.

A tree here has U relay nodes, V sources per relay, and alpha parallel
edges on every connection.  Codes are built per branch, at full rate
when the branch capacity equals alpha/rank(F), and at reduced rate
through relay re-keying otherwise; branch codes then compose into a
whole-tree code, certified either branch-by-branch or through a secure
subset of branches.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import ConstructionBug, FieldTooSmall, NotCertified, ShapeError, WrongCase
from .gf import (
    FieldMatrix,
    column_space_basis,
    hstack_all,
    intersect_spans,
    inverse,
    is_mds,
    kronecker,
    rank,
    rref,
    right_kernel,
    solve_membership,
    vandermonde,
    vstack_all,
)
from .netmodel import Network, enumerate_wiretap_sets
from .codes import (
    LinearSecureCode,
    check_decodability,
    check_security_subspace,
    security_matrix,
)


@dataclass(frozen=True)
class TreeSpec:
    """Shape and functions of a (branches, sources-per-branch, multiplicity) tree."""

    branches: int
    sources_per_branch: int
    multiplicity: int
    q: int
    F: FieldMatrix
    G: FieldMatrix

    def __post_init__(self):
        expected = self.branches * self.sources_per_branch
        if self.F.rows != expected or self.G.rows != expected:
            raise ShapeError("coefficient matrices need one row per source")

    def materialize(self):
        u, v, alpha = self.branches, self.sources_per_branch, self.multiplicity
        nodes, edges, sources = [], [], []
        for i in range(1, u + 1):
            for j in range(1, v + 1):
                name = f"s{i}_{j}"
                nodes.append(name)
                sources.append(name)
        nodes.extend(f"v{i}" for i in range(1, u + 1))
        nodes.append("g")
        for i in range(1, u + 1):
            for j in range(1, v + 1):
                for k in range(1, alpha + 1):
                    edges.append((f"o{i}_{j}_{k}", f"s{i}_{j}", f"v{i}"))
        for i in range(1, u + 1):
            for k in range(1, alpha + 1):
                edges.append((f"d{i}_{k}", f"v{i}", "g"))
        return Network(nodes=nodes, edges=edges, sources=sources, sink="g")

    def branch_rows(self, i):
        v = self.sources_per_branch
        return list(range(i * v, (i + 1) * v))
