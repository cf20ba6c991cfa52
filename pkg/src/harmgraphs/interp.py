"""Classical and interpolation symmetric polynomials at rational points.

Three families of inhomogeneous interpolation polynomials drive the
harmonic-function constructions: shifted Schur (Young/Jack side),
factorial monomial (Kingman side) and factorial Schur P (strict side).
Each is evaluated through at least two independent routes so every
value used downstream can be cross-checked exactly:

* shifted Schur: falling-factorial bialternant, reverse-tableau sum,
  and generating-series extraction;
* factorial monomial: direct distinct-permutation sum;
* factorial Schur P: one-row series -> two-row recurrences -> Pfaffian.

A multiplicative functional is a list of generator values; the engine
expands targets over products of one-row generators (degree-capped,
cached) and evaluates functionals by multiplicativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

import mpmath

from .exact import (
    RationalMatrix,
    SingularMatrixError,
    as_rational,
    det,
    falling_factorial,
    invert_matrix,
    pfaffian,
)
from .partitions import Partition, partitions_up_to, reverse_tableaux
from .series import factorial_series_from_rational, poly_mul

Point = tuple[Fraction, ...]


def as_point(values) -> Point:
    return tuple(as_rational(v) for v in values)


def diagram_point(lam: Partition, length: int | None = None) -> Point:
    """The coordinates of a diagram, zero-padded to the requested length."""
    l = max(lam.length, length or 0)
    return tuple(Fraction(lam.part(i)) for i in range(1, l + 1))


# ---------------------------------------------------------------------------
# classical Schur and monomial evaluation
# ---------------------------------------------------------------------------

_TABLEAU_BOX_LIMIT = 12


def schur_eval(mu: Partition, x, route: str = "auto") -> Fraction:
    """Classical Schur polynomial s_mu at a finite point."""
    x = as_point(x)
    if mu.length > len(x):
        return Fraction(0)
    if route == "tableau":
        return _schur_tableau(mu, x)
    if route == "bialternant":
        return _schur_bialternant(mu, x)
    if len(set(x)) == len(x):
        return _schur_bialternant(mu, x)
    if mu.size > _TABLEAU_BOX_LIMIT:
        raise ValueError("repeated coordinates and the diagram is too large for the tableau route")
    return _schur_tableau(mu, x)


def _schur_tableau(mu: Partition, x: Point) -> Fraction:
    total = Fraction(0)
    boxes = list(mu.boxes())
    for filling in reverse_tableaux(mu, len(x)):
        term = Fraction(1)
        for (i, j) in boxes:
            term *= x[filling[i - 1][j - 1] - 1]
        total += term
    return total


def _vandermonde(values: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out *= values[i] - values[j]
    return out


def _schur_bialternant(mu: Partition, x: Point) -> Fraction:
    k = len(x)
    if len(set(x)) != k:
        raise ValueError("bialternant route needs pairwise-distinct coordinates")
    v = _vandermonde(x)
    rows = [[x[i] ** (mu.part(j + 1) + (k - 1 - j)) for j in range(k)] for i in range(k)]
    return det(RationalMatrix(rows)) / v


def _distinct_perms(pool: tuple[int, ...]):
    if not pool:
        yield ()
        return
    seen = set()
    for i, v in enumerate(pool):
        if v in seen:
            continue
        seen.add(v)
        for rest in _distinct_perms(pool[:i] + pool[i + 1 :]):
            yield (v,) + rest


def monomial_eval(mu: Partition, x) -> Fraction:
    """Monomial symmetric polynomial m_mu at a finite point."""
    x = as_point(x)
    if mu.length > len(x):
        return Fraction(0)
    padded = mu.parts + (0,) * (len(x) - mu.length)
    total = Fraction(0)
    for perm in _distinct_perms(padded):
        term = Fraction(1)
        for xi, e in zip(x, perm):
            if e:
                term *= xi**e
        total += term
    return total


def factorial_monomial_eval(mu: Partition, x) -> Fraction:
    """Factorial monomial m*_mu: ordinary powers replaced by falling powers."""
    x = as_point(x)
    if mu.length > len(x):
        return Fraction(0)
    padded = mu.parts + (0,) * (len(x) - mu.length)
    total = Fraction(0)
    for perm in _distinct_perms(padded):
        term = Fraction(1)
        for xi, e in zip(x, perm):
            if e:
                term *= falling_factorial(xi, e)
        total += term
    return total


# ---------------------------------------------------------------------------
# shifted Schur evaluation
# ---------------------------------------------------------------------------

def shifted_schur_eval(mu: Partition, x, route: str = "auto") -> Fraction:
    """Shifted Schur polynomial s*_mu at a finite point.

    The falling-factorial bialternant needs the shifted coordinates
    x_i + (k - i) pairwise distinct; the reverse-tableau sum works
    everywhere but only scales to small diagrams.
    """
    x = as_point(x)
    if mu.length > len(x):
        return Fraction(0)
    if route == "tableau":
        return _shifted_schur_tableau(mu, x)
    if route == "determinant":
        return _shifted_schur_det(mu, x)
    k = len(x)
    shifted = [x[i] + (k - 1 - i) for i in range(k)]
    if len(set(shifted)) == k:
        return _shifted_schur_det(mu, x)
    if mu.size > _TABLEAU_BOX_LIMIT:
        raise SingularMatrixError("singular denominator and diagram too large for the tableau route")
    return _shifted_schur_tableau(mu, x)


def _shifted_schur_det(mu: Partition, x: Point) -> Fraction:
    k = len(x)
    shifted = [x[i] + (k - 1 - i) for i in range(k)]
    denom_rows = [[falling_factorial(shifted[i], k - 1 - j) for j in range(k)] for i in range(k)]
    denom = det(RationalMatrix(denom_rows))
    if denom == 0:
        raise SingularMatrixError("shifted coordinates collide; bialternant denominator vanishes")
    num_rows = [
        [falling_factorial(shifted[i], mu.part(j + 1) + (k - 1 - j)) for j in range(k)]
        for i in range(k)
    ]
    return det(RationalMatrix(num_rows)) / denom


def _shifted_schur_tableau(mu: Partition, x: Point) -> Fraction:
    total = Fraction(0)
    boxes = list(mu.boxes())
    for filling in reverse_tableaux(mu, len(x)):
        term = Fraction(1)
        for (i, j) in boxes:
            term *= x[filling[i - 1][j - 1] - 1] - (j - i)
        total += term
    return total


def shifted_schur_at_diagram(mu: Partition, lam: Partition) -> Fraction:
    """s*_mu evaluated at the coordinate sequence of a diagram."""
    length = max(1, lam.length, mu.length)
    return _shifted_schur_det(mu, diagram_point(lam, length))


# ---------------------------------------------------------------------------
# one-row generating series
# ---------------------------------------------------------------------------

def _balanced_product(num_shifts: Sequence[Fraction], den_shifts: Sequence[Fraction]):
    num = [Fraction(1)]
    den = [Fraction(1)]
    for a in num_shifts:
        num = poly_mul(num, [a, Fraction(1)])
    for a in den_shifts:
        den = poly_mul(den, [a, Fraction(1)])
    return num, den


def h_star_values(x, count: int) -> list[Fraction]:
    """Values of the one-row shifted Schur generators h*_1..h*_count at x.

    Extracted from the product form of their generating series down the
    inverse falling-factorial basis; exact for any rational point.
    """
    x = as_point(x)
    num, den = _balanced_product(
        [Fraction(i) for i in range(1, len(x) + 1)],
        [Fraction(i) - x[i - 1] for i in range(1, len(x) + 1)],
    )
    return factorial_series_from_rational(num, den, count)


def h_star_eval(m: int, x) -> Fraction:
    if m == 0:
        return Fraction(1)
    return h_star_values(x, m)[m - 1]


def super_h_star_values(xs, ys, count: int) -> list[Fraction]:
    """Generator values under the two-alphabet (super) realization.

    The series is the product of (u + 1/2 + y_i)/(u + 1/2 - x_i) over the
    combined support; at the split-diagonal point of a diagram it must
    reproduce the ordinary h* values of that diagram, which is the oracle
    pinning the 1/2 shift.
    """
    xs = as_point(xs)
    ys = as_point(ys)
    width = max(len(xs), len(ys))
    half = Fraction(1, 2)
    num_shifts = [half + (ys[i] if i < len(ys) else Fraction(0)) for i in range(width)]
    den_shifts = [half - (xs[i] if i < len(xs) else Fraction(0)) for i in range(width)]
    num, den = _balanced_product(num_shifts, den_shifts)
    return factorial_series_from_rational(num, den, count)


def q_one_row_values(x, count: int) -> list[Fraction]:
    """Doubled one-row values from the odd-power-sum generating product.

    The product of (u + 1 + x_i)/(u + 1 - x_i) expands with coefficients
    equal to twice the factorial Schur P one-row values (the doubled
    normalization carries the 2^length factor of the P/Q pair).
    """
    x = as_point(x)
    num, den = _balanced_product([1 + xi for xi in x], [1 - xi for xi in x])
    return factorial_series_from_rational(num, den, count)


def pstar_one_row_values_from_point(x, count: int) -> list[Fraction]:
    return [v / 2 for v in q_one_row_values(x, count)]


# ---------------------------------------------------------------------------
# multiplicative functionals
# ---------------------------------------------------------------------------

H_STAR = "h-star"
P_STAR = "p-star-one-row"


@dataclass(frozen=True)
class FunctionalSpec:
    """A multiplicative functional given by its one-row generator values.

    `family` names the generator alphabet: h-star generates the shifted
    symmetric algebra, p-star-one-row the odd-power-sum subalgebra.
    The scalar t is minus the value on the degree-one generator.
    """

    family: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.family not in (H_STAR, P_STAR):
            raise ValueError(f"unknown generator family {self.family!r}")
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    @property
    def degree_cap(self) -> int:
        return len(self.values)

    @property
    def t(self) -> Fraction:
        """-pi(generator_1); the denominator parameter of the extrapolation."""
        if not self.values:
            raise ValueError("empty functional has no degree-one value")
        return -self.values[0]

    def g(self, m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        if m > len(self.values):
            raise ValueError(f"functional only carries generator values up to degree {len(self.values)}")
        return self.values[m - 1]


def young_zz_functional(e, t, cap: int) -> FunctionalSpec:
    """The two-parameter multiplicative functional on the shifted algebra.

    Parameters enter through the symmetric combinations e = z + z' and
    t = z z'; the m-th generator value is (-1)^m / m! times the product
    of (t + c e + c^2) over c = 0..m-1.
    """
    e = as_rational(e)
    t = as_rational(t)
    vals = []
    prod = Fraction(1)
    for m in range(1, cap + 1):
        c = m - 1
        prod *= t + c * e + c * c
        vals.append(prod * (-1) ** m / factorial(m))
    return FunctionalSpec(H_STAR, tuple(vals))


def evaluation_functional(x, cap: int) -> FunctionalSpec:
    """Evaluation at a point, packaged as h*-generator values."""
    return FunctionalSpec(H_STAR, tuple(h_star_values(x, cap)))


def super_evaluation_functional(xs, ys, cap: int) -> FunctionalSpec:
    return FunctionalSpec(H_STAR, tuple(super_h_star_values(xs, ys, cap)))


def schur_t_functional(t, cap: int) -> FunctionalSpec:
    """One-row generator values of the t-functional on the strict side.

    The m-th value is (-1)^m/(2 m!) times the product of (2t + c(c+1))
    over c = 0..m-1; hypergeometric summation identifies the series with
    the staircase evaluations at t = -k(k+1)/2.
    """
    t = as_rational(t)
    vals = []
    prod = Fraction(1)
    for m in range(1, cap + 1):
        c = m - 1
        prod *= 2 * t + c * (c + 1)
        vals.append(prod * (-1) ** m / (2 * factorial(m)))
    return FunctionalSpec(P_STAR, tuple(vals))


def schur_point_functional(x, cap: int) -> FunctionalSpec:
    return FunctionalSpec(P_STAR, tuple(pstar_one_row_values_from_point(x, cap)))


# ---------------------------------------------------------------------------
# factorial Schur P pipeline: one-row -> two-row -> Pfaffian
# ---------------------------------------------------------------------------

def pstar_one_row_values(source, n: int) -> list[Fraction]:
    """One-row factorial Schur P values under a point or functional."""
    if isinstance(source, FunctionalSpec):
        if source.family != P_STAR:
            raise ValueError("functional must carry one-row P generator values")
        if n > source.degree_cap:
            raise ValueError("functional does not carry enough generator values")
        return list(source.values[:n])
    return pstar_one_row_values_from_point(source, n)


def pstar_two_row_table(one_row: Sequence[Fraction], bound: int) -> dict[tuple[int, int], Fraction]:
    """Two-row values for all p > q >= 1 with p + q <= bound.

    Built by double induction from the one-row values: the q = 1 row
    comes from the degree-lowering relation, higher q from the four-term
    relation; antisymmetry fills the rest.
    """
    if len(one_row) < bound:
        raise ValueError(f"need one-row values up to degree {bound}")
    r = lambda m: one_row[m - 1]
    table: dict[tuple[int, int], Fraction] = {}

    def get(p: int, q: int) -> Fraction:
        if p == q:
            return Fraction(0)
        if p < q:
            return -table[(q, p)]
        return table[(p, q)]

    # seed: the degree-lowering relation, fixed by interpolation vanishing
    # at the one-row diagram of size p+1 (which forces the r(p+1) term)
    for p in range(2, bound):
        table[(p, 1)] = r(p) * r(1) - p * r(p) - r(p + 1)
    for q in range(2, bound):
        for p in range(q + 1, bound - q + 1):
            rhs = r(p) * r(q) - r(p + 1) * r(q - 1) - (p - q + 1) * r(p) * r(q - 1)
            table[(p, q)] = rhs - get(p + 1, q - 1) - (p + q - 1) * get(p, q - 1)
    return table


def pstar_two_row(one_row: Sequence[Fraction], p: int, q: int) -> Fraction:
    """Single two-row value; indices extend antisymmetrically."""
    if p == q:
        return Fraction(0)
    hi, lo = max(p, q), min(p, q)
    table = pstar_two_row_table(one_row, hi + lo)
    val = table[(hi, lo)]
    return val if p > q else -val


def pstar_eval(mu: Partition, source) -> Fraction:
    """Factorial Schur P value of a strict partition under a point/functional.

    Assembled as the Pfaffian of the two-row values; odd lengths are
    bordered by the one-row values with a zero corner, the classical
    padding convention validated against the closed product form.
    """
    if not mu.is_strict:
        raise ValueError("factorial Schur P needs a strict partition")
    if mu.length == 0:
        return Fraction(1)
    parts = mu.parts
    bound = parts[0] + (parts[1] if len(parts) > 1 else 0) + 1
    one_row = pstar_one_row_values(source, bound)
    if mu.length == 1:
        return one_row[parts[0] - 1]
    table = pstar_two_row_table(one_row, parts[0] + parts[1])

    def two_row(p: int, q: int) -> Fraction:
        if p == q:
            return Fraction(0)
        return table[(p, q)] if p > q else -table[(q, p)]

    size = mu.length + (mu.length % 2)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(Fraction(0))
            elif i < mu.length and j < mu.length:
                row.append(two_row(parts[i], parts[j]))
            elif i < mu.length:
                row.append(one_row[parts[i] - 1])
            else:
                row.append(-one_row[parts[j] - 1])
        rows.append(row)
    return pfaffian(RationalMatrix(rows))


def pstar_closed_form(t, mu: Partition) -> Fraction:
    """Closed product for the t-functional on a factorial Schur P basis element."""
    if not mu.is_strict:
        raise ValueError("needs a strict partition")
    t = as_rational(t)
    n = mu.size
    out = Fraction(1)
    for (i, j) in mu.boxes():
        out *= 2 * t + (j - 1) * j
    denom = Fraction(2) ** mu.length
    for p in mu.parts:
        denom *= factorial(p)
    out /= denom
    for i in range(1, mu.length + 1):
        for j in range(i + 1, mu.length + 1):
            out *= Fraction(mu.part(i) - mu.part(j), mu.part(i) + mu.part(j))
    return out * (-1) ** n


# ---------------------------------------------------------------------------
# generator-basis expansion and functional application
# ---------------------------------------------------------------------------

class SingularBasisError(SingularMatrixError):
    """The degree-capped evaluation system degenerated (should not happen)."""


@lru_cache(maxsize=None)
def _h_star_at_diagram_cached(m: int, lam_parts: tuple[int, ...]) -> Fraction:
    lam = Partition(lam_parts)
    return shifted_schur_at_diagram(Partition([m] if m else []), lam)


@lru_cache(maxsize=None)
def _basis_inverse(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...], RationalMatrix]:
    diagrams = tuple(partitions_up_to(n))
    basis = tuple(partitions_up_to(n))
    rows = []
    for lam in diagrams:
        row = []
        for rho in basis:
            val = Fraction(1)
            for part in rho.parts:
                val *= _h_star_at_diagram_cached(part, lam.parts)
            row.append(val)
        rows.append(row)
    matrix = RationalMatrix(rows)
    try:
        inverse = invert_matrix(matrix)
    except SingularMatrixError as exc:  # pragma: no cover - would falsify uniqueness
        raise SingularBasisError(
            f"degree-{n} evaluation system is singular; interpolation uniqueness fails"
        ) from exc
    return diagrams, basis, inverse


def express_in_generator_basis(
    target_values: Mapping[Partition, Fraction], n: int
) -> dict[Partition, Fraction]:
    """Coefficients of a degree-<=n element over products of h* generators.

    The element is identified by its values on all diagrams of size <= n
    (interpolation uniqueness); the returned map sends an exponent
    partition rho to the coefficient of the product of h*_{rho_i}.
    """
    diagrams, basis, inverse = _basis_inverse(n)
    vec = [as_rational(target_values[lam]) for lam in diagrams]
    coeffs = inverse.mul_vector(vec)
    return {rho: c for rho, c in zip(basis, coeffs) if c != 0}


@lru_cache(maxsize=None)
def shifted_schur_h_coeffs(mu_parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Cached h*-product expansion of a shifted Schur element."""
    mu = Partition(mu_parts)
    n = mu.size
    diagrams = partitions_up_to(n)
    targets = {lam: shifted_schur_at_diagram(mu, lam) for lam in diagrams}
    coeffs = express_in_generator_basis(targets, n)
    return tuple(sorted(((rho.parts, c) for rho, c in coeffs.items()), reverse=True))


def apply_functional(coeffs, spec: FunctionalSpec) -> Fraction:
    """Evaluate a functional on an h*-product expansion by multiplicativity."""
    if spec.family != H_STAR:
        raise ValueError("expansion over h* products needs an h-star functional")
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    total = Fraction(0)
    for rho, c in items:
        parts = rho.parts if isinstance(rho, Partition) else tuple(rho)
        val = as_rational(c)
        for m in parts:
            val *= spec.g(m)
        total += val
    return total


def functional_on_shifted_schur(mu: Partition, spec: FunctionalSpec) -> Fraction:
    """pi(s*_mu) through the basis-change engine."""
    return apply_functional(shifted_schur_h_coeffs(mu.parts), spec)


def young_zz_closed_form(e, t, mu: Partition) -> Fraction:
    """Closed product for the two-parameter functional on shifted Schur."""
    e = as_rational(e)
    t = as_rational(t)
    out = Fraction(1)
    for (i, j) in mu.boxes():
        c = j - i
        out *= Fraction(t + c * e + c * c, mu.hook(i, j))
    return out * (-1) ** mu.size


# ---------------------------------------------------------------------------
# hypergeometric summation check (high precision, not exact)
# ---------------------------------------------------------------------------

def gauss_2f1_check(
    a,
    b,
    c,
    tol: float = 1e-20,
    precision: int = 128,
    max_terms: int = 200_000,
) -> bool:
    """Partial sums of 2F1(a,b;c;1) against the Gamma-ratio closed form.

    Requires c - a - b > 0 (convergence) and c not a nonpositive integer.
    Terms are accumulated at the requested binary precision until they
    fall three orders below the tolerance or the series terminates.
    """
    a = as_rational(a)
    b = as_rational(b)
    c = as_rational(c)
    if c <= 0 and c.denominator == 1:
        raise ValueError("c must not be a nonpositive integer")
    if c - a - b <= 0:
        raise ValueError("series diverges unless c - a - b > 0")
    with mpmath.workprec(precision):
        term = mpmath.mpf(1)
        total = mpmath.mpf(1)
        m = 0
        cutoff = mpmath.mpf(tol) / 1000
        while m < max_terms:
            ratio_num = (a + m) * (b + m)
            ratio_den = (c + m) * (m + 1)
            term = term * mpmath.mpf(ratio_num.numerator) / mpmath.mpf(ratio_num.denominator)
            term = term * mpmath.mpf(ratio_den.denominator) / mpmath.mpf(ratio_den.numerator)
            if term == 0:
                break
            total += term
            m += 1
            if abs(term) < cutoff:
                break
        closed = (
            mpmath.gamma(_to_mpf(c))
            * mpmath.gamma(_to_mpf(c - a - b))
            / mpmath.gamma(_to_mpf(c - a))
            / mpmath.gamma(_to_mpf(c - b))
        )
        return bool(abs(total - closed) < mpmath.mpf(tol))


def _to_mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)
