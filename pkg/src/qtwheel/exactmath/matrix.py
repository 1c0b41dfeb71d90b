"""Dense matrices over Z or Z[q, t] and exact determinants."""

from __future__ import annotations

from typing import Callable, List, Sequence

from ..errors import InvalidArgument
from .poly import BivariatePolynomial, exact_quotient


class Matrix:
    """Immutable rectangular matrix of ints or BivariatePolynomial entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InvalidArgument("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, one=1) -> "Matrix":
        return cls([[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols} matrix")
        return self.rows[i][j]

    def tolist(self) -> List[list]:
        return [list(r) for r in self.rows]

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def evaluate(self, q: int, t: int) -> "Matrix":
        """Integer matrix obtained by substituting q and t."""
        return self.map(lambda x: x.evaluate(q, t) if isinstance(x, BivariatePolynomial) else x)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else Matrix([])

    def row_sums(self) -> list:
        out = []
        for r in self.rows:
            s = 0
            for x in r:
                s = s + x
            out.append(s)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InvalidArgument("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, other) -> "Matrix":
        if not isinstance(other, Matrix):
            return self.map(lambda x: x * other)
        if self.ncols != other.nrows:
            raise InvalidArgument("shape mismatch in matrix product")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, scalar) -> "Matrix":
        return self.map(lambda x: scalar * x)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise InvalidArgument("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"

    def trace(self):
        acc = 0
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc


# Two names kept for readability at call sites; both are Matrix.
PolyMatrix = Matrix
IntMatrix = Matrix


def det_bareiss(m: Matrix):
    """Fraction-free Gaussian elimination; every division is exact."""
    if not m.is_square():
        raise InvalidArgument(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pivot - aik * a[k][j]
                a[i][j] = exact_quotient(num, prev) if prev != 1 else num
            a[i][k] = 0
        prev = pivot
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def det_cofactor(m: Matrix):
    """Laplace expansion along the first row; oracle for small sizes."""
    if not m.is_square():
        raise InvalidArgument(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    rows = m.tolist()

    def rec(rs: list, cols: tuple):
        if not rs:
            return 1
        first, rest = rs[0], rs[1:]
        acc = 0
        for idx, c in enumerate(cols):
            entry = first[c]
            if entry == 0:
                continue
            minor = rec(rest, cols[:idx] + cols[idx + 1:])
            term = entry * minor
            acc = acc - term if idx % 2 else acc + term
        return acc

    return rec(rows, tuple(range(m.ncols)))


def det_poly(m: Matrix):
    """Exact determinant; polynomial results are returned as BivariatePolynomial."""
    d = det_bareiss(m)
    if any(isinstance(x, BivariatePolynomial) for r in m.rows for x in r):
        return BivariatePolynomial.coerce(d)
    return d
