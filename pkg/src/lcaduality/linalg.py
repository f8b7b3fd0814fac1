"""Dense exact linear algebra over a :class:`~lcaduality.fields.Field`.

Elimination pivots on the first nonzero entry found scanning each column
top to bottom, columns left to right, so echelon forms (and therefore every
basis and witness derived from them) are deterministic.
"""

from __future__ import annotations

from .errors import UsageError


class DenseMatrix:
    """Row-major matrix of exact scalars.

    ``rows`` is stored as a tuple of tuples; treat instances as immutable.
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise UsageError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise UsageError("ragged matrix rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
            n,
        )

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"DenseMatrix({self.field.name}, {self.nrows}x{self.ncols})"

    def transpose(self):
        cols = [list(c) for c in zip(*self.rows)] if self.nrows else []
        if not cols:
            cols = [[] for _ in range(self.ncols)]
        return DenseMatrix(self.field, cols, self.nrows)

    def columns(self, indices):
        """Submatrix keeping the given columns, in the given order."""
        return DenseMatrix(self.field, [[r[j] for j in indices] for r in self.rows], len(indices))

    def apply(self, v):
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise UsageError(f"vector of length {len(v)} does not match {self.ncols} columns")
        dot = self.field.dot
        return [dot(r, v) for r in self.rows]

    def apply_left(self, phi):
        """Row-vector product ``phi M``."""
        if len(phi) != self.nrows:
            raise UsageError(f"row vector of length {len(phi)} does not match {self.nrows} rows")
        F = self.field
        out = [F.zero] * self.ncols
        for c, r in zip(phi, self.rows):
            if c:
                out = F.axpy(c, r, out)
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise UsageError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        dot = self.field.dot
        return DenseMatrix(self.field, [[dot(r, c) for c in cols] for r in self.rows], other.ncols)


def rref(M: DenseMatrix):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows of
    the reduced form (one per pivot) and ``pivots`` their pivot columns.
    """
    F = M.field
    work = [list(r) for r in M.rows if any(r)]
    pivots = []
    top = 0
    for col in range(M.ncols):
        if top == len(work):
            break
        found = next((i for i in range(top, len(work)) if work[i][col]), None)
        if found is None:
            continue
        work[top], work[found] = work[found], work[top]
        lead = work[top][col]
        if lead != F.one:
            inv = F.inv(lead)
            work[top] = [F.mul(inv, x) for x in work[top]]
        prow = work[top]
        for i in range(len(work)):
            if i != top:
                c = work[i][col]
                if c:
                    work[i] = F.axpy(F.neg(c), prow, work[i])
        pivots.append(col)
        top += 1
    return work[:top], pivots


def rank(M: DenseMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: DenseMatrix):
    """Basis of the right null space ``{v : M v = 0}``, one vector per free column."""
    F = M.field
    rows, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = [F.zero] * M.ncols
        v[free] = F.one
        for row, pc in zip(rows, pivots):
            if row[free]:
                v[pc] = F.neg(row[free])
        basis.append(v)
    return basis


def solve(M: DenseMatrix, b):
    """Some ``x`` with ``M x = b``, or ``None`` when b is outside the column space.

    Free variables are set to zero.
    """
    F = M.field
    if len(b) != M.nrows:
        raise UsageError(f"right-hand side of length {len(b)} does not match {M.nrows} rows")
    aug = DenseMatrix(F, [list(r) + [F(x)] for r, x in zip(M.rows, b)], M.ncols + 1)
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [F.zero] * M.ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[M.ncols]
    return x


def left_annihilator(M: DenseMatrix, b):
    """A row vector ``phi`` with ``phi M = 0`` and ``phi . b != 0``.

    Returns ``None`` exactly when :func:`solve` finds a solution. The first
    such vector of the deterministic left-kernel basis is returned.
    """
    F = M.field
    if len(b) != M.nrows:
        raise UsageError(f"right-hand side of length {len(b)} does not match {M.nrows} rows")
    b = [F(x) for x in b]
    for phi in kernel_basis(M.transpose()):
        if F.dot(phi, b):
            return phi
    return None


def row_space_basis(field, vectors, dim):
    """Canonical (reduced echelon) basis of the span of ``vectors`` in ``field^dim``."""
    if not vectors:
        return []
    return [tuple(r) for r in rref(DenseMatrix(field, vectors, dim))[0]]


def column_space_basis(M: DenseMatrix):
    """Canonical basis of the image of M (as vectors of length ``nrows``)."""
    return row_space_basis(M.field, M.transpose().rows, M.nrows)


def orthogonal_complement(field, vectors, dim):
    """Basis of ``{x : <v|x> = 0 for every v in vectors}`` for the dot product."""
    if not vectors:
        return [[field.one if i == j else field.zero for j in range(dim)] for i in range(dim)]
    return kernel_basis(DenseMatrix(field, vectors, dim))


def same_span(field, us, vs, dim) -> bool:
    return row_space_basis(field, us, dim) == row_space_basis(field, vs, dim)
