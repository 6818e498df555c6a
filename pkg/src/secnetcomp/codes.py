"""Linear secure network codes: global encodings, decodability, security.

A code carries one global encoding matrix per edge, acting on the
concatenated row vector ``(m_1, k_1, m_2, k_2, ...)`` grouped per
source: ``l`` message rows then ``z_i`` key rows for source i.
"""

from dataclasses import dataclass, field

from .errors import FieldMismatch, IncompleteCode, ShapeError
from .gf import FieldMatrix, hstack_all, intersect_spans, left_kernel, kronecker, solve_membership, vstack_all


@dataclass(frozen=True)
class SecurityMatrix:
    """Block matrix S with (m, k) @ S = m @ (G kron I_l)."""

    matrix: FieldMatrix
    G: FieldMatrix
    l: int
    z: tuple


def security_matrix(g, l, z):
    """Stack per-source blocks [g_i kron I_l over z_i zero rows]."""
    if g.rows != len(z):
        raise ShapeError("one key length per source required")
    q = g.q
    ident = FieldMatrix.identity(q, l)
    blocks = []
    for i in range(g.rows):
        g_row = FieldMatrix(q, [g.row(i)], cols=g.cols)
        top = kronecker(g_row, ident)
        blocks.append(top.vstack(FieldMatrix.zeros(q, z[i], l * g.cols)))
    return SecurityMatrix(matrix=vstack_all(q, blocks, cols=l * g.cols), G=g, l=l, z=tuple(z))


class LinearSecureCode:
    """Per-edge global encoding matrices for a network, plus (l, n, z, q)."""

    def __init__(self, net, q, l, n, z, global_maps):
        self.net = net
        self.q = q
        self.l = l
        self.n = n
        self.z = tuple(z)
        if len(self.z) != net.s:
            raise ShapeError("one key length per source required")
        self.total_rows = net.s * l + sum(self.z)
        self.global_maps = dict(global_maps)
        for e in net.edge_ids:
            m = self.global_maps.get(e)
            if m is None:
                raise IncompleteCode(f"no global matrix for edge {e}")
            if m.q != q:
                raise FieldMismatch(f"edge {e} matrix over wrong modulus")
            if (m.rows, m.cols) != (self.total_rows, n):
                raise ShapeError(
                    f"edge {e} matrix is {m.rows}x{m.cols}, expected {self.total_rows}x{n}"
                )

    @property
    def rate(self):
        from fractions import Fraction

        return Fraction(self.l, self.n)

    def block_range(self, i):
        """Row slice of source i's block (messages then keys)."""
        offset = sum(self.l + self.z[j] for j in range(i))
        return offset, offset + self.l + self.z[i]

    def source_block(self, e, i):
        lo, hi = self.block_range(i)
        return self.global_maps[e].take_rows(range(lo, hi))

    def message_row_indices(self):
        idx = []
        for i in range(self.net.s):
            lo, _ = self.block_range(i)
            idx.extend(range(lo, lo + self.l))
        return idx

    def key_row_indices(self):
        idx = []
        for i in range(self.net.s):
            lo, _ = self.block_range(i)
            idx.extend(range(lo + self.l, lo + self.l + self.z[i]))
        return idx

    def edge_matrix(self, e):
        return self.global_maps[e]

    def stack(self, edge_set):
        """Global matrix of an edge set, columns in canonical edge order."""
        edges = self.net.sorted_edges(edge_set)
        return hstack_all(
            self.q, [self.global_maps[e] for e in edges], rows=self.total_rows
        )

    def pack(self, m, k):
        """Interleave message and key symbols into the global row vector."""
        s, l = self.net.s, self.l
        if len(m) != s * l:
            raise ShapeError(f"need {s * l} message symbols")
        if len(k) != sum(self.z):
            raise ShapeError(f"need {sum(self.z)} key symbols")
        vec = []
        kpos = 0
        for i in range(s):
            vec.extend(m[i * l : (i + 1) * l])
            vec.extend(k[kpos : kpos + self.z[i]])
            kpos += self.z[i]
        return tuple(x % self.q for x in vec)


@dataclass
class LocalCode:
    """Local encoding coefficients; globals derive by topological recursion.

    source_coeffs[e] = (a, b): message rows (l x n) and key rows (z_i x n)
    for a source edge e.  transfer[(d, e)] = n x n matrix applied to the
    upstream edge d when forming e; required for every d into tail(e).
    """

    q: int
    l: int
    n: int
    z: tuple
    source_coeffs: dict = field(default_factory=dict)
    transfer: dict = field(default_factory=dict)


def derive_global(net, lc):
    """Resolve a local code into per-edge global matrices."""
    q, l, n = lc.q, lc.l, lc.n
    z = tuple(lc.z)
    s = net.s
    total_rows = s * l + sum(z)
    source_of = {sigma: i for i, sigma in enumerate(net.sources)}
    offsets = []
    off = 0
    for i in range(s):
        offsets.append(off)
        off += l + z[i]

    order = net.topological_order()
    node_rank = {v: i for i, v in enumerate(order)}
    edges = sorted(net.edge_ids, key=lambda e: (node_rank[net.tail[e]], net.edge_index[e]))

    maps = {}
    for e in edges:
        tail = net.tail[e]
        if tail in source_of:
            i = source_of[tail]
            coeffs = lc.source_coeffs.get(e)
            if coeffs is None:
                raise IncompleteCode(f"no source coefficients for edge {e}")
            a, b = coeffs
            if (a.rows, a.cols) != (l, n) or (b.rows, b.cols) != (z[i], n):
                raise ShapeError(f"bad coefficient shapes on edge {e}")
            block = a.vstack(b)
            rows = [[0] * n for _ in range(total_rows)]
            for r in range(block.rows):
                rows[offsets[i] + r] = list(block.row(r))
            maps[e] = FieldMatrix(q, rows, cols=n)
        else:
            acc = FieldMatrix.zeros(q, total_rows, n)
            for d in net.in_edges[tail]:
                t = lc.transfer.get((d, e))
                if t is None:
                    raise IncompleteCode(f"missing transfer matrix for ({d}, {e})")
                if (t.rows, t.cols) != (n, n):
                    raise ShapeError(f"transfer matrix for ({d}, {e}) must be {n}x{n}")
                acc = acc + maps[d].mul(t)
            maps[e] = acc
    return LinearSecureCode(net, q, l, n, z, maps)


def transmit(code, m, k):
    """Evaluate every edge symbol vector for one realization of (m, k)."""
    vec = code.pack(m, k)
    return {e: code.edge_matrix(e).row_vector_mul(vec) for e in code.net.edge_ids}


def check_decodability(code, f):
    """Zero-error computability of the target at the sink.

    The sink can compute the target with some (possibly nonlinear)
    decoder iff the target is constant on the fibers of the sink-input
    map, i.e. every left-kernel vector of H_In(sink) also kills the
    target matrix.  When the target's column span additionally sits
    inside the sink input's span, the returned linear decoder Psi
    satisfies H_In(sink) @ Psi = S_f.
    """
    if f.rows != code.net.s:
        raise ShapeError("target matrix needs one row per source")
    sink_in = code.stack(code.net.in_edges[code.net.sink])
    s_f = security_matrix(f, code.l, code.z).matrix
    kernel = left_kernel(sink_in)
    ok = kernel.mul(s_f).is_zero
    if not ok:
        return False, None
    cols = []
    for j in range(s_f.cols):
        x = solve_membership(s_f.col(j), sink_in)
        if x is None:
            return True, None
        cols.append(x)
    psi = FieldMatrix.from_cols(code.q, cols, rows=sink_in.cols)
    return True, psi


def check_security_subspace(code, s_matrix, wiretaps):
    """Span-disjointness of every wiretap view from the protected span.

    Returns ``(ok, violating_set, witness_column)``; the witness is a
    nonzero vector in both spans when a violation exists.
    """
    s = s_matrix.matrix if isinstance(s_matrix, SecurityMatrix) else s_matrix
    for w in wiretaps:
        hw = code.stack(w)
        inter = intersect_spans(hw, s)
        if inter.cols > 0:
            return False, frozenset(w), inter.col(0)
    return True, None, None


def causality_violations(code):
    """Non-source edges whose encoding leaves the span of their node's inputs."""
    net = code.net
    bad = []
    source_nodes = set(net.sources)
    for e in net.edge_ids:
        tail = net.tail[e]
        if tail in source_nodes:
            continue
        upstream = code.stack(net.in_edges[tail])
        for j in range(code.n):
            if solve_membership(code.edge_matrix(e).col(j), upstream) is None:
                bad.append(e)
                break
    return bad


def code_from_columns(net, q, l, n, z, columns):
    """Build a code from per-edge column tuples (convenience for fixtures)."""
    maps = {}
    for e, cols in columns.items():
        if n == 1:
            maps[e] = FieldMatrix.column(q, cols)
        else:
            maps[e] = FieldMatrix.from_cols(q, cols)
    return LinearSecureCode(net, q, l, n, z, maps)
