"""Exact dense linear algebra over any field descriptor.

Determinants use fraction-free (Bareiss) elimination over the rationals
and plain exact-division Gaussian elimination everywhere else.  Pivots are
the first nonzero entry in a column; exact arithmetic needs no magnitude
heuristics.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .exactfield import FieldDescriptor, FieldElement, FieldMismatch, Rational


class NotSquare(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


Vector = tuple[FieldElement, ...]


class Matrix:
    """Immutable row-major matrix of field elements sharing one descriptor."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldDescriptor, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.fd != field:
                raise FieldMismatch(f"entry field {e.fd!r} differs from {field!r}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, field: FieldDescriptor | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix needs at least one row")
        if field is None:
            field = rows[0][0].fd
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        return cls(field, len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "Matrix":
        zero, one = field.zero(), field.one()
        return cls(field, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[FieldElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        if self.field != other.field:
            raise FieldMismatch("matrix product across fields")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = self.field.zero()
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return Matrix(self.field, self.rows, other.cols, out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return NotImplemented

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} vs {self.cols} columns")
        return tuple(
            _dot(self.row(i), v, self.field) for i in range(self.rows))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix[{body}]"


def _dot(u, v, field) -> FieldElement:
    acc = field.zero()
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# determinant

def det(m: Matrix) -> FieldElement:
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols}")
    if m.rows == 0:
        return m.field.one()
    if isinstance(m.field, Rational):
        return _det_bareiss_rational(m)
    return _det_gauss(m)


def _det_bareiss_rational(m: Matrix) -> FieldElement:
    # clear denominators row by row, then run integer Bareiss
    n = m.rows
    scale = Fraction(1)
    a: list[list[int]] = []
    for i in range(n):
        fracs = [e.payload for e in m.row(i)]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        scale *= mult
        a.append([int(f * mult) for f in fracs])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return m.field.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return m.field.from_fraction(Fraction(sign * a[n - 1][n - 1]) / scale)


def _det_gauss(m: Matrix) -> FieldElement:
    n = m.rows
    a = m.row_list()
    field = m.field
    result = field.one()
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if not a[i][k].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return field.zero()
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            result = -result
        pivot = a[k][k]
        result = result * pivot
        inv = pivot.inv()
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            if factor.is_zero():
                continue
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - factor * a[k][j]
            a[i][k] = field.zero()
    return result


def det2(u: Vector, v: Vector) -> FieldElement:
    """Determinant of two 2-vectors; the workhorse of the plane sweeps."""
    if len(u) != 2 or len(v) != 2:
        raise DimensionMismatch("det2 needs 2-vectors")
    return u[0] * v[1] - u[1] * v[0]


# ---------------------------------------------------------------------------
# echelon form, rank, kernel, solve

def _rref(rows: list[list[FieldElement]], field: FieldDescriptor):
    """In-place reduced row echelon form; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(m: Matrix) -> int:
    rows = m.row_list()
    if not rows:
        return 0
    return len(_rref(rows, m.field))


def rank_of_rows(vectors, field: FieldDescriptor) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return len(_rref(rows, field))


def kernel(m: Matrix) -> list[Vector]:
    """Basis of the right null space {v : M v = 0}."""
    field = m.field
    rows = m.row_list()
    pivots = _rref(rows, field) if rows else []
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Vector):
    """Solve M x = b; returns (particular solution or None, kernel basis)."""
    if len(b) != m.rows:
        raise DimensionMismatch(f"rhs length {len(b)} vs {m.rows} rows")
    field = m.field
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    pivots = _rref(aug, field)
    if m.cols in pivots:
        return None, kernel(m)
    zero = field.zero()
    x = [zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][m.cols]
    return tuple(x), kernel(m)


def in_span(vectors, v: Vector, field: FieldDescriptor) -> bool:
    """True iff v lies in the row span of vectors."""
    rows = [list(u) for u in vectors]
    if not rows:
        return all(e.is_zero() for e in v)
    pivots = _rref(rows, field)
    w = list(v)
    for r, pc in enumerate(pivots):
        if not w[pc].is_zero():
            f = w[pc]
            w = [a - f * b for a, b in zip(w, rows[r])]
    return all(e.is_zero() for e in w)


# ---------------------------------------------------------------------------
# 3-space cross product

def cross3(u: Vector, v: Vector) -> Vector:
    if len(u) != 3 or len(v) != 3:
        raise DimensionMismatch("cross3 needs 3-vectors")
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
