"""Exact integer and rational linear algebra.

Everything here is computed over Python's arbitrary-precision integers, so
results are exact for any input size; there is no overflow to detect.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an operation requires a nonsingular (or full-rank) matrix."""


def _check_rows(rows) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(entry for entry in row) for row in rows)
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("matrix rows must all have the same length")
            for entry in row:
                if not isinstance(entry, int):
                    raise ValueError(f"matrix entries must be integers, got {entry!r}")
    return rows


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "entries", _check_rows(rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        columns = list(columns)
        if not columns:
            return cls([])
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not match for multiplication")
        cols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match matrix width")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self.entries])


class RationalVector:
    """Exact rational vector stored as integer numerators over one positive
    denominator, always fully reduced so equality is structural."""

    __slots__ = ("numerators", "denominator")

    def __init__(self, numerators: Iterable[int], denominator: int = 1):
        nums = tuple(numerators)
        if denominator == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if denominator < 0:
            denominator = -denominator
            nums = tuple(-n for n in nums)
        g = gcd(denominator, *nums) if nums else denominator
        if g > 1:
            denominator //= g
            nums = tuple(n // g for n in nums)
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalVector is immutable")

    @classmethod
    def from_fractions(cls, fractions: Sequence[Fraction]) -> "RationalVector":
        den = 1
        for f in fractions:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls([f.numerator * (den // f.denominator) for f in fractions], den)

    def __len__(self) -> int:
        return len(self.numerators)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.denominator) for n in self.numerators)

    def dot(self, vector: Sequence[int]) -> Fraction:
        return Fraction(sum(n * v for n, v in zip(self.numerators, vector)), self.denominator)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalVector):
            return NotImplemented
        return self.numerators == other.numerators and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerators, self.denominator))

    def __lt__(self, other: "RationalVector") -> bool:
        return self.as_fractions() < other.as_fractions()

    def __repr__(self) -> str:
        return f"RationalVector({list(self.numerators)}, {self.denominator})"


def _det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square list-of-lists matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(m: IntMatrix) -> int:
    """Exact determinant of a square integer matrix."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    return _det(m.to_lists())


def is_unimodular(m: IntMatrix) -> bool:
    """True iff m is square with determinant +1 or -1."""
    return m.is_square and _det(m.to_lists()) in (1, -1)


def _hermite(rows: list[list[int]], track_u: bool):
    """Lower-triangular Hermite normal form via integer row operations.

    Returns (h, u) with u @ rows == h, or (h, None) when track_u is False.
    h has positive diagonal and entries 0 <= h[i][j] < h[j][j] for i > j.
    """
    n = len(rows)
    h = [row[:] for row in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if track_u else None
    # Triangularize: pivot column j gets its gcd at row j, zeros in rows < j.
    # Columns are processed right to left so rows 0..j stay zero in columns > j.
    for j in range(n - 1, -1, -1):
        for i in range(j):
            a, b = h[j][j], h[i][j]
            if b == 0:
                continue
            g, s, t = _xgcd(a, b)
            aq, bq = a // g, b // g
            row_j, row_i = h[j], h[i]
            for k in range(j + 1):
                rj, ri = row_j[k], row_i[k]
                row_j[k] = s * rj + t * ri
                row_i[k] = aq * ri - bq * rj
            if track_u:
                uj, ui = u[j], u[i]
                for k in range(n):
                    vj, vi = uj[k], ui[k]
                    uj[k] = s * vj + t * vi
                    ui[k] = aq * vi - bq * vj
        if h[j][j] == 0:
            raise SingularMatrixError("matrix is singular")
        if h[j][j] < 0:
            h[j] = [-x for x in h[j]]
            if track_u:
                u[j] = [-x for x in u[j]]
    # Reduce below-diagonal entries into [0, diagonal). Within each row the
    # columns are handled right to left: reducing entry (i, j) with pivot row
    # j touches columns <= j only, so entries already reduced stay reduced.
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            q = h[i][j] // h[j][j]
            if q == 0:
                continue
            row_i, row_j = h[i], h[j]
            for k in range(j + 1):
                row_i[k] -= q * row_j[k]
            if track_u:
                ui, uj = u[i], u[j]
                for k in range(n):
                    ui[k] -= q * uj[k]
    return h, u


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = gcd(a, b) > 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(l: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Hermite normal form with transformation: returns (h, u) with u @ l = h.

    h is the unique lower-triangular matrix with positive diagonal and
    0 <= h[i][j] < h[j][j] for i > j that is reachable from l by unimodular
    row operations; u is the (determinant +-1) matrix performing them.
    """
    if not l.is_square:
        raise ValueError("hermite_normal_form requires a square matrix")
    h, u = _hermite(l.to_lists(), track_u=True)
    return IntMatrix(h), IntMatrix(u)


def hermite_form(l: IntMatrix) -> IntMatrix:
    """Hermite normal form without the transformation matrix (faster)."""
    if not l.is_square:
        raise ValueError("hermite_form requires a square matrix")
    h, _ = _hermite(l.to_lists(), track_u=False)
    return IntMatrix(h)


def solve_rational(m: IntMatrix, b: Sequence[int]) -> RationalVector:
    """Exact solution x of m @ x = b for nonsingular square m."""
    if not m.is_square:
        raise ValueError("solve_rational requires a square matrix")
    n = m.rows
    if len(b) != n:
        raise ValueError("right-hand side length does not match matrix size")
    a = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(m.entries, b)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[pivot_row] = a[pivot_row], a[k]
        pivot = a[k][k]
        for i in range(n):
            if i == k or a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    return RationalVector.from_fractions([a[i][n] / a[i][i] for i in range(n)])


def invert_unimodular(u: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a unimodular matrix."""
    if not is_unimodular(u):
        raise ValueError("matrix is not unimodular")
    n = u.rows
    cols = [solve_rational(u, [1 if i == k else 0 for i in range(n)]) for k in range(n)]
    return IntMatrix.from_columns([c.numerators for c in cols])


def gcd_of_maximal_minors(m: IntMatrix) -> int:
    """Gcd of all (d-1) x (d-1) minors of a d x (d-1) integer matrix."""
    d = m.rows
    if m.cols != d - 1:
        raise ValueError("expected a matrix with one more row than columns")
    rows = m.to_lists()
    g = 0
    for skip in range(d):
        minor = _det([rows[i] for i in range(d) if i != skip])
        g = gcd(g, minor)
        if g == 1:
            return 1
    if g == 0:
        raise SingularMatrixError("columns are rank deficient")
    return g


def rank(m: IntMatrix) -> int:
    """Rank of an integer matrix, computed exactly."""
    a = [[Fraction(x) for x in row] for row in m.entries]
    n_rows, n_cols = len(a), m.cols
    r = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        for i in range(r + 1, n_rows):
            if a[i][col] != 0:
                factor = a[i][col] / pivot
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == n_rows:
            break
    return r
