"""Exact rational arithmetic kernels.

Everything downstream (partitions, graphs, interpolation polynomials,
harmonic families, boundary integrals) reduces to arithmetic over Q.
This module holds the shared primitives: rational parsing/formatting,
Pochhammer and falling-factorial products, exact dense linear algebra
(determinant, Pfaffian, linear solve) over `fractions.Fraction`, and a
thin high-precision float layer (mpmath) used only by the convergence
experiments and the hypergeometric summation check.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath

DEFAULT_PRECISION = 128


class ShapeError(ValueError):
    """Matrix/vector dimensions do not fit the requested operation."""


class SingularMatrixError(ValueError):
    """A linear solve hit a singular (or numerically empty) system."""


# ---------------------------------------------------------------------------
# rational scalars
# ---------------------------------------------------------------------------

def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("refusing to coerce a float to an exact rational")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse the wire form 'p/q' (or plain 'p')."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    return str(Fraction(value))


def pochhammer(t, n: int) -> Fraction:
    """Rising factorial (t)_n = t (t+1) ... (t+n-1), with (t)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    t = as_rational(t)
    out = Fraction(1)
    for k in range(n):
        out *= t + k
    return out


def falling_factorial(a, k: int) -> Fraction:
    """Falling factorial a (a-1) ... (a-k+1), with the empty product 1."""
    if k < 0:
        raise ValueError("falling_factorial needs k >= 0")
    a = as_rational(a)
    if a.denominator == 1:
        return _falling_factorial_int(a.numerator, k)
    out = Fraction(1)
    for j in range(k):
        out *= a - j
    return out


def _falling_factorial_int(n: int, k: int) -> Fraction:
    # Integer arguments route through math.factorial; the convergence
    # experiments hit this with 4-digit arguments thousands of times.
    if k == 0:
        return Fraction(1)
    if n >= 0:
        if k > n:
            return Fraction(0)
        return Fraction(factorial(n) // factorial(n - k))
    # (-m)(-m-1)...(-m-k+1) = (-1)^k (m+k-1)! / (m-1)!
    m = -n
    val = factorial(m + k - 1) // factorial(m - 1)
    return Fraction(-val if k % 2 else val)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class RationalMatrix:
    """Immutable dense matrix over Fraction."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("RationalMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]})"

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_skew_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(i == j) for j in range(n)] for i in range(n)])

    def mul_vector(self, v: Sequence) -> list[Fraction]:
        vec = [as_rational(x) for x in v]
        if len(vec) != self.ncols:
            raise ShapeError("vector length does not match column count")
        return [sum((row[j] * vec[j] for j in range(self.ncols)), Fraction(0)) for row in self.rows]


def det(m: RationalMatrix) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    if not m.is_square:
        raise ShapeError("determinant needs a square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m.rows]
    sign = 1
    out = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        out *= p
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            f = a[r][col] / p
            row = a[r]
            top = a[col]
            for c in range(col, n):
                row[c] -= f * top[c]
    return out if sign == 1 else -out


_PFAFFIAN_EXPANSION_LIMIT = 8


def pfaffian(m: RationalMatrix) -> Fraction:
    """Exact Pfaffian of an even-dimensional skew-symmetric matrix.

    Recursive first-row expansion up to 8x8; symmetric skew elimination
    above that. pfaffian(m)**2 == det(m) always.
    """
    if not m.is_square:
        raise ShapeError("pfaffian needs a square matrix")
    if m.nrows % 2 != 0:
        raise ShapeError("pfaffian needs even dimension")
    if not m.is_skew_symmetric():
        raise ValueError("pfaffian needs a skew-symmetric matrix")
    if m.nrows <= _PFAFFIAN_EXPANSION_LIMIT:
        return _pfaffian_expand([list(row) for row in m.rows])
    return _pfaffian_eliminate([list(row) for row in m.rows])


def _pfaffian_expand(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    if n == 2:
        return a[0][1]
    total = Fraction(0)
    for j in range(1, n):
        coef = a[0][j]
        if coef == 0:
            continue
        keep = [r for r in range(1, n) if r != j]
        minor = [[a[r][c] for c in keep] for r in keep]
        term = coef * _pfaffian_expand(minor)
        total += term if j % 2 == 1 else -term
    return total


def _pfaffian_eliminate(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    sign = 1
    out = Fraction(1)
    for k in range(0, n, 2):
        pivot = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k + 1:
            _swap_symmetric(a, pivot, k + 1)
            sign = -sign
        p = a[k][k + 1]
        out *= p
        for i in range(k + 2, n):
            if a[k][i] == 0:
                continue
            f = a[k][i] / p
            for c in range(n):
                a[i][c] -= f * a[k + 1][c]
            for r in range(n):
                a[r][i] -= f * a[r][k + 1]
    return out if sign == 1 else -out


def _swap_symmetric(a: list[list[Fraction]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def solve_linear(a: RationalMatrix, b: Sequence) -> list[Fraction]:
    """Exact solution of a x = b; SingularMatrixError on rank deficiency."""
    if not a.is_square:
        raise ShapeError("solve_linear needs a square matrix")
    n = a.nrows
    rhs = [as_rational(x) for x in b]
    if len(rhs) != n:
        raise ShapeError("right-hand side length does not match")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(a.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("singular system")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        for r in range(n):
            if r == col or aug[r][col] == 0:
                continue
            f = aug[r][col] / p
            for c in range(col, n + 1):
                aug[r][c] -= f * aug[col][c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def invert_matrix(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse (column-by-column solve); SingularMatrixError if singular."""
    if not m.is_square:
        raise ShapeError("inverse needs a square matrix")
    n = m.nrows
    cols = []
    for j in range(n):
        e = [Fraction(i == j) for i in range(n)]
        cols.append(solve_linear(m, e))
    return RationalMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# high-precision floats (experiments only; never used in exact identities)
# ---------------------------------------------------------------------------

def to_bigfloat(value, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Correctly rounded conversion of a rational to a binary float."""
    q = as_rational(value)
    with mpmath.workprec(precision):
        return mpmath.fdiv(q.numerator, q.denominator)


def format_bigfloat(x, precision: int = DEFAULT_PRECISION) -> str:
    """Decimal serialization with an explicit precision tag, 'digits@bits'."""
    digits = max(1, int(precision * 0.30103) + 2)
    with mpmath.workprec(precision):
        body = mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False)
    return f"{body}@{precision}"


def parse_bigfloat(text: str) -> tuple[mpmath.mpf, int]:
    """Inverse of format_bigfloat; returns (value, precision_bits)."""
    body, _, tag = text.partition("@")
    precision = int(tag) if tag else DEFAULT_PRECISION
    with mpmath.workprec(precision):
        return mpmath.mpf(body), precision
