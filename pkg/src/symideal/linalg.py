"""Exact dense matrices and rank/solve over the package fields.

Rank over the rationals clears denominators row by row and runs
fraction-free (Bareiss) elimination on integers; over a prime field it is
plain elimination mod p.  Those two integer kernels live in a compiled
extension when it was built, with a pure-Python twin as fallback; this
module picks the backend at import time (SYMIDEAL_PURE=1 forces the
fallback).  Solving is exact everywhere: Fraction arithmetic over the
rationals, kernel elimination mod p.

Matrix text format: rows separated by ";", entries by ",", for example
``1,0;0,1``; rational entries ``a/b`` are allowed over the rationals.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

from .errors import ParseError
from .fields import Field, PrimeField

if os.environ.get("SYMIDEAL_PURE") == "1":
    from . import _kernels_py as _kernels
else:
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _kernels


def backend_name() -> str:
    """Which elimination kernels are active: 'compiled' or 'pure-python'."""
    return _kernels.BACKEND


class Matrix:
    """An immutable dense matrix over one exact field."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, entries):
        rows = [tuple(field.of(x) for x in row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows have unequal lengths")
        self.field = field
        self.nrows = len(rows)
        self.ncols = width
        self._rows = tuple(rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field: Field, columns) -> "Matrix":
        columns = [list(col) for col in columns]
        return cls(field, [[col[i] for col in columns] for i in range(len(columns[0]))])

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def rows(self):
        return self._rows

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self._rows))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("field mismatch in matrix product")
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch: {self.nrows}x{self.ncols} times "
                f"{other.nrows}x{other.ncols}"
            )
        f = self.field
        cols = other.transpose()._rows
        out = []
        for row in self._rows:
            out_row = []
            for col in cols:
                acc = f.zero()
                for a, b in zip(row, col):
                    acc = f.add(acc, f.mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return Matrix(f, out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._rows == other._rows

    def __hash__(self):
        return hash((self.field, self._rows))

    def rank(self) -> int:
        """Exact rank over the matrix field."""
        if isinstance(self.field, PrimeField):
            return _kernels.rank_mod_p([list(r) for r in self._rows], self.field.p)
        return _kernels.bareiss_rank(_cleared_integer_rows(self._rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self._rows]!r})"

    def __str__(self):
        f = self.field
        return ";".join(",".join(f.format(x) for x in row) for row in self._rows)

    @classmethod
    def parse(cls, text: str, field: Field) -> "Matrix":
        """Parse the ``1,0;0,1`` text format over the given field."""
        rows = []
        for row_text in text.strip().split(";"):
            entries = row_text.split(",")
            if entries == [""]:
                raise ParseError(f"empty matrix row in {text!r}")
            rows.append([field.parse(e) for e in entries])
        if not rows:
            raise ParseError("empty matrix")
        if len({len(r) for r in rows}) != 1:
            raise ParseError(f"ragged matrix rows in {text!r}")
        return cls(field, rows)


def _cleared_integer_rows(rows) -> list:
    """Scale each row of rationals by its denominator lcm; rank-preserving."""
    out = []
    for row in rows:
        scale = 1
        for x in row:
            d = Fraction(x).denominator
            scale = scale * d // gcd(scale, d)
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def span_rank(field: Field, vectors) -> int:
    """Dimension of the span of the given coordinate vectors (0 if empty)."""
    vectors = [list(v) for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    return Matrix(field, vectors).rank()


def solve_exact(matrix: Matrix, rhs):
    """One exact solution x of matrix * x = rhs, or None if inconsistent.

    Free variables are set to zero, and pivoting is deterministic, so the
    returned solution is a pure function of the inputs.
    """
    f = matrix.field
    rhs = [f.of(b) for b in rhs]
    if len(rhs) != matrix.nrows:
        raise ValueError("right-hand side length does not match row count")
    augmented = [list(row) + [b] for row, b in zip(matrix.rows(), rhs)]
    ncols = matrix.ncols
    if isinstance(f, PrimeField):
        reduced, pivots = _kernels.rref_mod_p(augmented, f.p)
    else:
        reduced, pivots = _rref_fraction(augmented)
    if pivots and pivots[-1] == ncols:
        return None
    solution = [f.zero()] * ncols
    for r, c in enumerate(pivots):
        solution[c] = f.of(reduced[r][ncols])
    return solution


def _rref_fraction(rows):
    """Reduced row echelon form over the rationals; mirrors rref_mod_p."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        mr = m[r]
        inv = 1 / mr[c]
        for j in range(c, ncols):
            mr[j] *= inv
        for i in range(nrows):
            if i != r:
                t = m[i][c]
                if t:
                    mi = m[i]
                    for j in range(c, ncols):
                        mi[j] -= t * mr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots
