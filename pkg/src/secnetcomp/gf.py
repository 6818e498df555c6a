"""Exact arithmetic and linear algebra over prime fields.

Everything downstream (encoding matrices, cut bounds, security checks)
runs on the dense, immutable :class:`FieldMatrix` defined here.  All
values stay reduced into ``[0, q)``; no operation ever touches floats.
"""

from itertools import combinations, product

from .errors import DegenerateInput, DivisionByZero, FieldMismatch, ShapeError


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Prime field of modulus q, verified prime at construction."""

    __slots__ = ("q",)

    def __init__(self, q):
        if not is_prime(q):
            raise DegenerateInput(f"modulus {q} is not prime")
        self.q = q

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def inv(self, a):
        a %= self.q
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.q - 2, self.q)

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class FieldMatrix:
    """Dense row-major matrix over a prime field; immutable and hashable.

    Zero-row and zero-column matrices are legal: empty kernels, empty
    key blocks and rate-zero codes all need them.
    """

    __slots__ = ("q", "rows", "cols", "data")

    def __init__(self, q, entries, cols=None):
        rows = [tuple(int(x) % q for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
        else:
            if cols is None:
                cols = 0
            width = cols
        if cols is not None and rows and cols != width:
            raise ShapeError(f"declared {cols} columns, rows have {width}")
        self.q = q
        self.rows = len(rows)
        self.cols = width
        self.data = tuple(rows)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, q, rows, cols):
        return cls(q, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, q, n):
        return cls(q, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, q, rows, cols=None):
        return cls(q, rows, cols=cols)

    @classmethod
    def from_cols(cls, q, cols, rows=None):
        if not cols:
            return cls.zeros(q, rows or 0, 0)
        height = len(cols[0])
        return cls(q, [[col[i] for col in cols] for i in range(height)])

    @classmethod
    def column(cls, q, values):
        return cls(q, [[v] for v in values], cols=1)

    # -- accessors ---------------------------------------------------------

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    @property
    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.q == other.q
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.q, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"FieldMatrix(q={self.q}, {self.rows}x{self.cols}, {list(map(list, self.data))})"

    # -- arithmetic --------------------------------------------------------

    def _check_same_field(self, other):
        if self.q != other.q:
            raise FieldMismatch(f"moduli differ: {self.q} vs {other.q}")

    def __add__(self, other):
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("addition shape mismatch")
        q = self.q
        return FieldMatrix(
            q,
            [
                [(a + b) % q for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        q = self.q
        c %= q
        return FieldMatrix(q, [[(c * x) % q for x in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other):
        return self.mul(other)

    def mul(self, other):
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        q = self.q
        ocols = other.cols
        out = []
        for r in self.data:
            acc = [0] * ocols
            for a, orow in zip(r, other.data):
                if a:
                    for j, b in enumerate(orow):
                        acc[j] += a * b
            out.append([v % q for v in acc])
        return FieldMatrix(q, out, cols=ocols)

    def row_vector_mul(self, vec):
        """vec (length rows) times self, returned as a tuple of length cols."""
        if len(vec) != self.rows:
            raise ShapeError("vector length mismatch")
        q = self.q
        acc = [0] * self.cols
        for a, row in zip(vec, self.data):
            if a % q:
                for j, b in enumerate(row):
                    acc[j] += a * b
        return tuple(v % q for v in acc)

    def transpose(self):
        return FieldMatrix(
            self.q,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    # -- block operations --------------------------------------------------

    def hstack(self, *others):
        q = self.q
        mats = [self, *others]
        for m in others:
            self._check_same_field(m)
            if m.rows != self.rows:
                raise ShapeError("hstack row mismatch")
        total = sum(m.cols for m in mats)
        return FieldMatrix(
            q,
            [sum((list(m.data[i]) for m in mats), []) for i in range(self.rows)],
            cols=total,
        )

    def vstack(self, *others):
        q = self.q
        for m in others:
            self._check_same_field(m)
            if m.cols != self.cols:
                raise ShapeError("vstack column mismatch")
        rows = list(self.data)
        for m in others:
            rows.extend(m.data)
        return FieldMatrix(q, rows, cols=self.cols)

    def take_cols(self, indices):
        return FieldMatrix(
            self.q,
            [[row[j] for j in indices] for row in self.data],
            cols=len(indices),
        )

    def take_rows(self, indices):
        return FieldMatrix(self.q, [self.data[i] for i in indices], cols=self.cols)


def hstack_all(q, mats, rows=None):
    """Concatenate matrices left to right; empty list gives a 0-column matrix."""
    mats = list(mats)
    if not mats:
        return FieldMatrix.zeros(q, rows or 0, 0)
    return mats[0].hstack(*mats[1:])


def vstack_all(q, mats, cols=None):
    mats = list(mats)
    if not mats:
        return FieldMatrix.zeros(q, 0, cols or 0)
    return mats[0].vstack(*mats[1:])


# -- elimination ------------------------------------------------------------


def rref(m):
    """Reduced row-echelon form.

    Returns ``(reduced, rank, pivot_columns)``.
    """
    q = m.q
    rows = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = pow(rows[pr][pc], q - 2, q)
        rows[pr] = [(inv * x) % q for x in rows[pr]]
        for i in range(nrows):
            if i != pr and rows[i][pc]:
                c = rows[i][pc]
                rows[i] = [(a - c * b) % q for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return FieldMatrix(q, rows, cols=ncols), pr, tuple(pivots)


def rank(m):
    return rref(m)[1]


def right_kernel(m):
    """Basis of {x : m @ x = 0} as columns of the returned matrix."""
    red, rk, pivots = rref(m)
    q = m.q
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * m.cols
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = (-red.data[i][f]) % q
        basis.append(vec)
    return FieldMatrix.from_cols(q, basis, rows=m.cols)


def left_kernel(m):
    """Basis of {v : v @ m = 0} as rows of the returned matrix."""
    k = right_kernel(m.transpose())
    return k.transpose()


def column_space_basis(m):
    """Columns of m restricted to a pivot basis of the column space."""
    _, _, pivots = rref(m)
    return m.take_cols(list(pivots))


def intersect_spans(a, b):
    """Basis of the intersection of the column spans of a and b.

    Solves ``a x = b y`` through the kernel of ``[a | -b]`` and maps the
    x-parts through ``a``; the result's columns are independent.
    """
    if a.q != b.q:
        raise FieldMismatch("moduli differ")
    if a.rows != b.rows:
        raise ShapeError("span intersection needs equal ambient dimension")
    if a.cols == 0 or b.cols == 0:
        return FieldMatrix.zeros(a.q, a.rows, 0)
    stacked = a.hstack(b.scale(-1))
    ker = right_kernel(stacked)
    if ker.cols == 0:
        return FieldMatrix.zeros(a.q, a.rows, 0)
    xpart = ker.take_rows(range(a.cols))
    candidates = a.mul(xpart)
    return column_space_basis(candidates)


def solve_membership(v, a):
    """Coefficients x with ``a x = v`` (as a tuple), or None if v is outside ⟨a⟩."""
    if len(v) != a.rows:
        raise ShapeError("vector length mismatch")
    q = a.q
    aug = a.hstack(FieldMatrix.column(q, v))
    red, rk, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [0] * a.cols
    for i, p in enumerate(pivots):
        x[p] = red.data[i][a.cols]
    return tuple(x)


def inverse(m):
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    red, rk, _ = rref(m.hstack(FieldMatrix.identity(m.q, n)))
    if rk < n:
        raise ShapeError("matrix is singular")
    return red.take_cols(range(n, 2 * n))


# -- structured matrices -----------------------------------------------------


def kronecker(a, b):
    if a.q != b.q:
        raise FieldMismatch("moduli differ")
    q = a.q
    out = []
    for arow in a.data:
        for brow in b.data:
            out.append([(x * y) % q for x in arow for y in brow])
    return FieldMatrix(q, out, cols=a.cols * b.cols)


def vandermonde(q, points, rows):
    """Matrix with entry (i, j) = points[j] ** i."""
    pts = [p % q for p in points]
    if len(set(pts)) != len(pts):
        raise DegenerateInput("Vandermonde points must be distinct")
    if rows > len(pts):
        raise ShapeError("more rows than points")
    return FieldMatrix(q, [[pow(p, i, q) for p in pts] for i in range(rows)], cols=len(pts))


def is_mds(m):
    """True iff every rows x rows column submatrix is nonsingular."""
    if m.rows > m.cols:
        raise ShapeError("MDS check needs rows <= cols")
    if m.rows == 0:
        return True
    for subset in combinations(range(m.cols), m.rows):
        if rank(m.take_cols(subset)) < m.rows:
            return False
    return True


def span_members(m):
    """Every vector in the column span, as tuples; exponential, test-scale only."""
    q = m.q
    vecs = set()
    cols = m.columns()
    for coeffs in product(range(q), repeat=len(cols)):
        acc = [0] * m.rows
        for c, col in zip(coeffs, cols):
            if c:
                for i, x in enumerate(col):
                    acc[i] += c * x
        vecs.add(tuple(v % q for v in acc))
    return vecs
