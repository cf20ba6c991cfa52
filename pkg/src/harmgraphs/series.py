"""Dense polynomial helpers over Q and factorial-series extraction.

The generating series used by the interpolation machinery live in the
inverse falling-factorial basis 1/(u(u-1)...(u-m+1)).  Their sources are
explicit rational functions of u, so coefficients are extracted exactly
by algebraic expansion (multiply by u, read off the value at infinity,
shift u -> u+1, repeat).  A sampling-based extraction at integer points
is kept as an independent cross-check; it is only valid when the
coefficient sequence terminates, which holds for evaluations at diagrams.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import (
    RationalMatrix,
    as_rational,
    falling_factorial,
    solve_linear,
)

Poly = list[Fraction]  # coefficients, index = power of u


class SeriesPoleError(ValueError):
    """A sample point hit a pole and no valid shifted window exists."""


# ---------------------------------------------------------------------------
# polynomial arithmetic
# ---------------------------------------------------------------------------

def poly_trim(p: Sequence[Fraction]) -> Poly:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    return poly_add(a, [-c for c in b])


def poly_scale(a: Sequence[Fraction], s) -> Poly:
    s = as_rational(s)
    return poly_trim([c * s for c in a])


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_eval(p: Sequence[Fraction], x) -> Fraction:
    x = as_rational(x)
    out = Fraction(0)
    for c in reversed(list(p)):
        out = out * x + c
    return out


def poly_shift(p: Sequence[Fraction], c) -> Poly:
    """Compose with a translation: returns q with q(u) = p(u + c)."""
    c = as_rational(c)
    out: Poly = []
    for coeff in reversed(list(p)):
        out = poly_add(poly_mul(out, [c, Fraction(1)]), [coeff])
    return out


def poly_from_linear_factors(constants: Iterable) -> Poly:
    """Product of (u + a) over the given constants a."""
    out: Poly = [Fraction(1)]
    for a in constants:
        out = poly_mul(out, [as_rational(a), Fraction(1)])
    return out


def poly_integral(p: Sequence[Fraction]) -> Poly:
    """Antiderivative with zero constant term."""
    return [Fraction(0)] + [c / (i + 1) for i, c in enumerate(p)]


# ---------------------------------------------------------------------------
# truncated power series (for the boundary kernel assembly)
# ---------------------------------------------------------------------------

def series_mul(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> Poly:
    """Product of two power series kept to degree < order."""
    out = [Fraction(0)] * order
    for i, ca in enumerate(a[:order]):
        if ca == 0:
            continue
        for j, cb in enumerate(b[: order - i]):
            out[i + j] += ca * cb
    return out


def geometric_series(ratio, order: int) -> Poly:
    """1/(1 - ratio*u) to degree < order."""
    r = as_rational(ratio)
    out = [Fraction(1)]
    for _ in range(order - 1):
        out.append(out[-1] * r)
    return out


def exp_series(coeff, order: int) -> Poly:
    """exp(coeff*u) to degree < order, exact rational coefficients."""
    c = as_rational(coeff)
    out = [Fraction(1)]
    for k in range(1, order):
        out.append(out[-1] * c / k)
    return out


# ---------------------------------------------------------------------------
# factorial series
# ---------------------------------------------------------------------------

def factorial_series_from_rational(num: Sequence[Fraction], den: Sequence[Fraction], count: int) -> list[Fraction]:
    """First `count` coefficients g_m of num/den = 1 + sum g_m/(u falling m).

    Requires deg num == deg den with leading-coefficient ratio 1 (the
    series has constant term 1).  Exact for every rational source,
    including the non-terminating ones where integer sampling fails.
    """
    num = poly_trim([as_rational(c) for c in num])
    den = poly_trim([as_rational(c) for c in den])
    if not den:
        raise ZeroDivisionError("zero denominator")
    if len(num) != len(den) or num[-1] != den[-1]:
        raise ValueError("rational source must tend to 1 at infinity")
    rem = poly_sub(num, den)  # deg rem < deg den
    coeffs: list[Fraction] = []
    for _ in range(count):
        u_rem = [Fraction(0)] + rem  # multiply by u; rem is trimmed
        g = u_rem[-1] / den[-1] if len(u_rem) == len(den) else Fraction(0)
        coeffs.append(g)
        rem = poly_shift(poly_sub(u_rem, poly_scale(den, g)), 1)
        den = poly_shift(den, 1)
    return coeffs


def evaluate_factorial_series(coeffs: Sequence[Fraction], u) -> Fraction:
    """1 + sum g_m/(u falling m) for a finite coefficient list."""
    u = as_rational(u)
    out = Fraction(1)
    basis = Fraction(1)
    for m, g in enumerate(coeffs, start=1):
        basis *= u - (m - 1)
        if basis == 0:
            if any(c != 0 for c in coeffs[m - 1 :]):
                raise ZeroDivisionError("series hit a vanishing basis element")
            break
        out += g / basis
    return out


def extract_series_coeffs(
    values: Callable[[int], Fraction],
    degree: int,
    poles: Iterable[int] = (),
    truncation: int | None = None,
) -> list[Fraction]:
    """Recover g_1..g_degree of 1 + sum g_m/(u falling m) from samples.

    Samples at u = 1..degree give a triangular system because the basis
    elements with m > u vanish there.  That shortcut is valid only when
    the sampled function *is* the finite sum, i.e. the coefficients
    terminate; `truncation` states the last possibly-nonzero index.
    When a pole sits in the triangular window the window shifts past
    max(pole, truncation) and the square system is solved exactly.
    """
    pole_set = {int(p) for p in poles}
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree == 0:
        return []
    if not (pole_set & set(range(1, degree + 1))):
        coeffs: list[Fraction] = []
        for n in range(1, degree + 1):
            rhs = as_rational(values(n)) - 1
            for m, g in enumerate(coeffs, start=1):
                rhs -= g / falling_factorial(n, m)
            coeffs.append(rhs * falling_factorial(n, n))
        return coeffs
    if truncation is None:
        raise SeriesPoleError(
            "pole at an integer sample and no truncation bound; cannot shift the window"
        )
    top = max(truncation, 1)
    start = max(max(pole_set, default=0) + 1, top, degree + 1)
    samples = list(range(start, start + top))
    rows = [[Fraction(1) / falling_factorial(n, m) for m in range(1, top + 1)] for n in samples]
    rhs = [as_rational(values(n)) - 1 for n in samples]
    sol = solve_linear(RationalMatrix(rows), rhs)
    sol += [Fraction(0)] * max(0, degree - top)
    return sol[:degree]
