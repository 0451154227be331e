"""Dense exact linear algebra over the rationals.

Everything downstream (hom spaces, homology ranks, homotopy solving) reduces
to small exact kernels/solves, so this stays deliberately simple: dense lists
of Fractions, fraction-free only in the sense that Fraction arithmetic is
exact. Matrices are immutable by convention once built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction  # scalar type used across the package


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """A rows x cols matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data: list[list[Fraction]] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative matrix dimensions")
        self.nrows = nrows
        self.ncols = ncols
        if data is None:
            self.data = [[Fraction(0)] * ncols for _ in range(nrows)]
        else:
            if len(data) != nrows or any(len(r) != ncols for r in data):
                raise ValueError("matrix data shape mismatch")
            self.data = [[_frac(x) for x in row] for row in data]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(n, m, rows)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = Fraction(1)
        return m

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Matrix:
        return cls(nrows, ncols)

    def copy(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, [row[:] for row in self.data])

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.data == other.data

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.data!r})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other: Matrix) -> Matrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        return Matrix(self.nrows, self.ncols,
                      [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> Matrix:
        c = _frac(c)
        return Matrix(self.nrows, self.ncols, [[c * x for x in row] for row in self.data])

    def __neg__(self) -> Matrix:
        return self.scale(Fraction(-1))

    def __mul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch in mul: {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        out = Matrix(self.nrows, other.ncols)
        for i in range(self.nrows):
            row = self.data[i]
            for k in range(self.ncols):
                a = row[k]
                if a == 0:
                    continue
                orow = other.data[k]
                trow = out.data[i]
                for j in range(other.ncols):
                    b = orow[j]
                    if b != 0:
                        trow[j] = trow[j] + a * b
        return out

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((row[j] * vec[j] for j in range(self.ncols)), Fraction(0)) for row in self.data]

    def transpose(self) -> Matrix:
        return Matrix(self.ncols, self.nrows, [list(col) for col in zip(*self.data)] if self.nrows else [[] for _ in range(self.ncols)])

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise ValueError("hstack row mismatch")
        return Matrix(self.nrows, self.ncols + other.ncols,
                      [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise ValueError("vstack col mismatch")
        return Matrix(self.nrows + other.nrows, self.ncols, [r[:] for r in self.data] + [r[:] for r in other.data])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
        rows = list(rows)
        cols = list(cols)
        return Matrix(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    # --- elimination ---

    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and pivot column indices."""
        m = self.copy()
        pivots: list[int] = []
        r = 0
        for c in range(m.ncols):
            if r == m.nrows:
                break
            pivot_row = None
            for i in range(r, m.nrows):
                if m.data[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m.data[r], m.data[pivot_row] = m.data[pivot_row], m.data[r]
            pv = m.data[r][c]
            m.data[r] = [x / pv for x in m.data[r]]
            for i in range(m.nrows):
                if i != r and m.data[i][c] != 0:
                    f = m.data[i][c]
                    m.data[i] = [a - f * b for a, b in zip(m.data[i], m.data[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel, as vectors of length ncols."""
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        basis = []
        for j in free:
            v = [Fraction(0)] * self.ncols
            v[j] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][j]
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence[Fraction]) -> list[Fraction] | None:
        """One particular solution of self * x = rhs, or None if inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        aug = self.hstack(Matrix(self.nrows, 1, [[_frac(x)] for x in rhs]))
        R, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.ncols]
        return x

    def solve_matrix(self, rhs: Matrix) -> Matrix | None:
        """X with self * X = rhs, or None."""
        cols = []
        for j in range(rhs.ncols):
            x = self.solve([rhs.data[i][j] for i in range(rhs.nrows)])
            if x is None:
                return None
            cols.append(x)
        return Matrix(self.ncols, rhs.ncols, [[cols[j][i] for j in range(rhs.ncols)] for i in range(self.ncols)])

    def inverse(self) -> Matrix | None:
        if self.nrows != self.ncols:
            return None
        aug = self.hstack(Matrix.identity(self.nrows))
        R, pivots = aug.rref()
        if pivots != list(range(self.nrows)):
            return None
        return R.submatrix(range(self.nrows), range(self.nrows, 2 * self.nrows))

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def solve_from_columns(column_fn, nuk: int, rhs: list[Fraction]):
    """Solve A x = rhs where column j of A is column_fn(j); returns x or None."""
    if nuk == 0:
        return [] if all(c == 0 for c in rhs) else None
    cols = [column_fn(j) for j in range(nuk)]
    nr = len(cols[0])
    A = Matrix(nr, nuk, [[cols[j][i] for j in range(nuk)] for i in range(nr)])
    return A.solve(rhs)


def kernel_from_columns(column_fn, nuk: int) -> list[list[Fraction]]:
    """Kernel basis of the linear map whose j-th column is column_fn(j)."""
    if nuk == 0:
        return []
    cols = [column_fn(j) for j in range(nuk)]
    nr = len(cols[0])
    A = Matrix(nr, nuk, [[cols[j][i] for j in range(nuk)] for i in range(nr)])
    return A.nullspace()
