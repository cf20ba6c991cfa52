"""Boundary faces, limit densities, exact Selberg-type integrals, kernels.

The probability densities attached to the truncated families live on
finite-dimensional faces of the boundary simplex.  Every integral
needed here reduces to closed form on the standard simplex:

* monomials integrate by the Dirichlet formula;
* one leftover Cauchy determinant or quotient Pfaffian expands over
  permutations/perfect matchings into terms whose denominators are
  sums over *disjoint* variable pairs, and each such term integrates
  exactly by a per-pair radial (Beta) reduction.

That makes the μ = ∅ mass-one checks exact as well, not just the
full-length alternant cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

import mpmath

from .exact import as_rational, pochhammer, to_bigfloat
from .graphs import dim_closed_form
from .harmonic import (
    GammaShaped,
    HarmonicFamily,
    TruncKingman,
    TruncSchur,
    TruncYoung,
    level_measure,
)
from .interp import _distinct_perms, monomial_eval, schur_eval
from .partitions import Partition
from .series import (
    Poly,
    exp_series,
    geometric_series,
    poly_add,
    poly_eval,
    poly_integral,
    poly_mul,
    poly_scale,
    poly_sub,
    series_mul,
)


# ---------------------------------------------------------------------------
# boundary points and embeddings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThomaPoint:
    """A finite-support boundary point: two ordered nonnegative lists."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        alpha = tuple(as_rational(a) for a in self.alpha)
        beta = tuple(as_rational(b) for b in self.beta)
        for seq in (alpha, beta):
            if any(x < 0 for x in seq):
                raise ValueError("coordinates must be nonnegative")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("coordinates must be nonincreasing")
        if sum(alpha) + sum(beta) > 1:
            raise ValueError("coordinate sums must not exceed 1")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def gamma(self) -> Fraction:
        return 1 - sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))


def embed_rows(nu: Partition, n: int) -> tuple[Fraction, ...]:
    """Row-scaling embedding of a level-n vertex: coordinates nu_i / n."""
    if nu.size != n or n < 1:
        raise ValueError("need |nu| = n >= 1")
    return tuple(Fraction(p, n) for p in nu.parts)


def embed_frobenius(nu: Partition, n: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split-diagonal embedding: ((P_i + 1/2)/n ; (Q_i + 1/2)/n)."""
    if nu.size != n or n < 1:
        raise ValueError("need |nu| = n >= 1")
    fc = nu.frobenius()
    half = Fraction(1, 2)
    return (
        tuple((p + half) / n for p in fc.p),
        tuple((q + half) / n for q in fc.q),
    )


# ---------------------------------------------------------------------------
# exact simplex integration
# ---------------------------------------------------------------------------

def dirichlet_integral(kappas) -> Fraction:
    """Ordered-simplex Dirichlet value (1/l!)*prod((k_i-1)!)/(sum(k)-1)!.

    Valid termwise for symmetric integrands expanded into monomials.
    """
    ks = [int(k) for k in kappas]
    if any(k < 1 for k in ks):
        raise ValueError("parameters must be >= 1")
    num = 1
    for k in ks:
        num *= factorial(k - 1)
    return Fraction(num, factorial(len(ks)) * factorial(sum(ks) - 1))


def simplex_monomial_integral(exponents) -> Fraction:
    """Unordered-simplex integral of a monomial over sum(x) = 1."""
    es = [int(e) for e in exponents]
    if any(e < 0 for e in es):
        raise ValueError("exponents must be >= 0")
    num = 1
    for e in es:
        num *= factorial(e)
    return Fraction(num, factorial(len(es) + sum(es) - 1))


def simplex_pair_integral(exponents, pairs) -> Fraction:
    """Unordered-simplex integral of a monomial over disjoint pair denominators.

    Computes the integral of prod(x_i^e_i) / prod((x_a + x_b)) where the
    pairs (a, b) are disjoint index pairs.  Radial reduction inside each
    pair yields a Beta factor and a merged Dirichlet variable, giving

        prod(e_i!) / ( prod(e_a + e_b + 1) * (N + sum(e) - P - 1)! )

    with N variables and P pairs.
    """
    es = [int(e) for e in exponents]
    if any(e < 0 for e in es):
        raise ValueError("exponents must be >= 0")
    seen: set[int] = set()
    denom = 1
    for a, b in pairs:
        if a in seen or b in seen or a == b:
            raise ValueError("pairs must be disjoint")
        seen.update((a, b))
        denom *= es[a] + es[b] + 1
    num = 1
    for e in es:
        num *= factorial(e)
    order = len(es) + sum(es) - len(list(pairs)) - 1
    return Fraction(num, denom * factorial(order))


# ---------------------------------------------------------------------------
# densities on the faces
# ---------------------------------------------------------------------------

def _gamma_int(n: int) -> int:
    return factorial(n - 1)


def _det_gamma_matrix(lam: Partition, l: int) -> Fraction:
    from .exact import RationalMatrix, det

    delta = [l - i for i in range(1, l + 1)]
    rows = [
        [Fraction(_gamma_int(lam.part(i + 1) + delta[i] + delta[j] + 1)) for j in range(l)]
        for i in range(l)
    ]
    return det(RationalMatrix(rows))


def young_density_constant(lam: Partition) -> Fraction:
    l = lam.length
    return Fraction(_gamma_int(lam.size + l * l)) / _det_gamma_matrix(lam, l)


def _vandermonde(values) -> Fraction:
    out = Fraction(1)
    vals = list(values)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= vals[i] - vals[j]
    return out


def _alternant(values, exponents) -> Fraction:
    from .exact import RationalMatrix, det

    rows = [[as_rational(v) ** e for e in exponents] for v in values]
    return det(RationalMatrix(rows))


def _quotient_pfaffian(values) -> Fraction:
    """prod_{i<j} (v_i - v_j)/(v_i + v_j), the Pfaffian of the quotient matrix
    bordered by ones when the size is odd."""
    vals = list(values)
    out = Fraction(1)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= (vals[i] - vals[j]) / (vals[i] + vals[j])
    return out


def schur_density_constant(lam: Partition) -> Fraction:
    if not lam.is_strict:
        raise ValueError("needs a strict partition")
    l = lam.length
    denom = Fraction(1)
    for p in lam.parts:
        denom *= factorial(p)
    shifted = [Fraction(p + 1) for p in lam.parts]
    pf = _quotient_pfaffian(shifted)  # (lam_i - lam_j)/(lam_i + lam_j + 2)
    return Fraction(_gamma_int(lam.size + l)) / (denom * pf)


def kingman_density_constant(lam: Partition) -> Fraction:
    l = lam.length
    out = Fraction(_gamma_int(lam.size + l))
    for r in lam.multiplicities().values():
        out *= factorial(r)
    for p in lam.parts:
        out /= factorial(p)
    return out


def gamma_density_constant(lam: Partition) -> Fraction:
    from .exact import RationalMatrix, det

    fc = lam.frobenius()
    d = fc.depth
    if d < 1:
        raise ValueError("needs depth >= 1")
    cauchy = det(
        RationalMatrix([[Fraction(1, fc.p[i] + fc.q[j] + 1) for j in range(d)] for i in range(d)])
    )
    denom = cauchy
    for p, q in zip(fc.p, fc.q):
        denom *= factorial(p) * factorial(q)
    return Fraction(_gamma_int(lam.size)) / denom


@dataclass(frozen=True)
class DensitySpec:
    """A face density: graph tag, source partition, exact normalization."""

    graph: str
    lam: Partition
    constant: Fraction
    face_dim: int

    def density(self, point) -> Fraction:
        return density_value(self, point)


def density_spec(graph: str, lam: Partition) -> DensitySpec:
    if graph == "young":
        if lam.length < 2:
            raise ValueError("young face needs length >= 2")
        return DensitySpec(graph, lam, young_density_constant(lam), lam.length)
    if graph == "kingman":
        return DensitySpec(graph, lam, kingman_density_constant(lam), lam.length)
    if graph == "schur":
        return DensitySpec(graph, lam, schur_density_constant(lam), lam.length)
    if graph == "gamma":
        return DensitySpec(graph, lam, gamma_density_constant(lam), 2 * lam.depth)
    raise ValueError(f"unknown graph {graph!r}")


def density_value(spec: DensitySpec, point) -> Fraction:
    """Exact density at a rational face point.

    Young/Kingman points are alpha tuples of the face length; the gamma
    face takes (alpha_tuple, beta_tuple).  Determinant and Pfaffian
    forms reject coordinate collisions.
    """
    lam = spec.lam
    if spec.graph == "young":
        alpha = tuple(as_rational(a) for a in point)
        l = lam.length
        if len(alpha) != l:
            raise ValueError("wrong face dimension")
        return spec.constant * schur_eval(lam, alpha) * _vandermonde(alpha) ** 2
    if spec.graph == "kingman":
        alpha = tuple(as_rational(a) for a in point)
        return spec.constant * monomial_eval(lam, alpha)
    if spec.graph == "schur":
        alpha = tuple(as_rational(a) for a in point)
        l = lam.length
        if len(alpha) != l:
            raise ValueError("wrong face dimension")
        if len(set(alpha)) != l:
            raise ValueError("coordinate collision in a Pfaffian form")
        # P_lam * Pf^2 = alternant * Pf since length(lam) = face length
        return spec.constant * _alternant(alpha, lam.parts) * _quotient_pfaffian(alpha)
    if spec.graph == "gamma":
        alpha = tuple(as_rational(a) for a in point[0])
        beta = tuple(as_rational(b) for b in point[1])
        fc = lam.frobenius()
        d = fc.depth
        if len(alpha) != d or len(beta) != d:
            raise ValueError("wrong face dimension")
        from .exact import RationalMatrix, det

        cauchy = det(
            RationalMatrix([[1 / (alpha[i] + beta[j]) for j in range(d)] for i in range(d)])
        )
        return (
            spec.constant
            * _alternant(alpha, fc.p)
            * _alternant(beta, fc.q)
            * cauchy
        )
    raise ValueError(f"unknown graph {spec.graph!r}")


# ---------------------------------------------------------------------------
# exact Selberg-type verification
# ---------------------------------------------------------------------------

_EXPANSION_CAP = 5


@dataclass(frozen=True)
class SelbergResult:
    graph: str
    lam: Partition
    mu: Partition
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _check_cap(l: int) -> None:
    if l > _EXPANSION_CAP:
        raise ValueError(
            f"face dimension {l} exceeds the permutation-expansion cap {_EXPANSION_CAP}"
        )


def _alternant_terms(values_count: int, exponents) -> list[tuple[int, list[int]]]:
    """det[x_i^(exponents_j)] expanded: (sign, exponent-per-variable) terms."""
    terms = []
    for perm in permutations(range(values_count)):
        sign = _perm_sign(perm)
        exps = [0] * values_count
        for i, p in enumerate(perm):
            exps[i] = exponents[p]
        terms.append((sign, exps))
    return terms


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _matchings(indices: list[int]):
    """Perfect matchings with Pfaffian signs over an even index list."""
    if not indices:
        yield 1, []
        return
    first = indices[0]
    for k in range(1, len(indices)):
        partner = indices[k]
        rest = indices[1:k] + indices[k + 1 :]
        for sign, pairs in _matchings(rest):
            yield sign * (-1) ** (k - 1), [(first, partner)] + pairs


def _integrate_alternant_times_pfaffian(l: int, base_terms) -> Fraction:
    """Unordered integral of (sum of monomial terms) * quotient Pfaffian.

    The Pfaffian of [(x_i - x_j)/(x_i + x_j)] (1-bordered if l is odd)
    expands over matchings into disjoint-pair denominators; each term
    then integrates in closed form.
    """
    size = l + (l % 2)
    total = Fraction(0)
    for msign, pairs in _matchings(list(range(size))):
        real_pairs = [(a, b) for a, b in pairs if a < l and b < l]
        # border pairs carry entry 1 and leave their real index unpaired
        for sign0, exps0 in base_terms:
            stack = [(Fraction(sign0 * msign), list(exps0), 0)]
            while stack:
                coef, exps, idx = stack.pop()
                if idx == len(real_pairs):
                    total += coef * simplex_pair_integral(exps, real_pairs)
                    continue
                a, b = real_pairs[idx]
                up = list(exps)
                up[a] += 1
                down = list(exps)
                down[b] += 1
                stack.append((coef, up, idx + 1))
                stack.append((-coef, down, idx + 1))
    return total


def selberg_verify(graph: str, lam: Partition, mu: Partition) -> SelbergResult:
    """Exact both-sides evaluation of the finite-face integral identity.

    The left side is the truncated-family harmonic value; the right side
    is the normalized face integral computed exactly by alternant and
    Pfaffian/Cauchy expansion against Dirichlet-style closed forms.
    Shape combinations without an exact route are rejected.
    """
    if graph == "young":
        return _selberg_young(lam, mu)
    if graph == "kingman":
        return _selberg_kingman(lam, mu)
    if graph == "schur":
        return _selberg_schur(lam, mu)
    if graph == "gamma":
        return _selberg_gamma(lam, mu)
    raise ValueError(f"unknown graph {graph!r}")


def _selberg_young(lam: Partition, mu: Partition) -> SelbergResult:
    l = lam.length
    _check_cap(l)
    if mu.length > l:
        raise ValueError("need length(mu) <= length(lam)")
    lhs = TruncYoung(lam).phi(mu)
    delta = [l - i for i in range(1, l + 1)]
    mu_exp = [mu.part(j + 1) + delta[j] for j in range(l)]
    lam_exp = [lam.part(j + 1) + delta[j] for j in range(l)]
    total = Fraction(0)
    for s1, e1 in _alternant_terms(l, mu_exp):
        for s2, e2 in _alternant_terms(l, lam_exp):
            total += s1 * s2 * simplex_monomial_integral([a + b for a, b in zip(e1, e2)])
    rhs = young_density_constant(lam) * total / factorial(l)
    return SelbergResult("young", lam, mu, lhs, rhs)


def _selberg_kingman(lam: Partition, mu: Partition) -> SelbergResult:
    l = lam.length
    _check_cap(l)
    if mu.length > l:
        raise ValueError("need length(mu) <= length(lam)")
    lhs = TruncKingman(lam).phi(mu)
    mu_pad = mu.parts + (0,) * (l - mu.length)
    lam_pad = lam.parts
    total = Fraction(0)
    for e1 in _distinct_perms(mu_pad):
        for e2 in _distinct_perms(lam_pad):
            total += simplex_monomial_integral([a + b for a, b in zip(e1, e2)])
    rhs = kingman_density_constant(lam) * total / factorial(l)
    return SelbergResult("kingman", lam, mu, lhs, rhs)


def _selberg_schur(lam: Partition, mu: Partition) -> SelbergResult:
    if not lam.is_strict or not mu.is_strict:
        raise ValueError("strict partitions required")
    l = lam.length
    _check_cap(l)
    lhs = TruncSchur(lam).phi(mu)
    if mu.length == l:
        # both alternants of full length; the squared Pfaffian cancels
        total = Fraction(0)
        for s1, e1 in _alternant_terms(l, list(mu.parts)):
            for s2, e2 in _alternant_terms(l, list(lam.parts)):
                total += s1 * s2 * simplex_monomial_integral([a + b for a, b in zip(e1, e2)])
        rhs = schur_density_constant(lam) * total / factorial(l)
        return SelbergResult("schur", lam, mu, lhs, rhs)
    if mu.size == 0:
        base = _alternant_terms(l, list(lam.parts))
        total = _integrate_alternant_times_pfaffian(l, base)
        rhs = schur_density_constant(lam) * total / factorial(l)
        return SelbergResult("schur", lam, mu, lhs, rhs)
    raise ValueError(
        "no exact route for 0 < length(mu) < length(lam) on the strict face"
    )


def _selberg_gamma(lam: Partition, mu: Partition) -> SelbergResult:
    fc = lam.frobenius()
    d = fc.depth
    _check_cap(d)
    family = GammaShaped(fc, degree_cap=max(8, mu.size))
    lhs = family.phi(mu)
    const = gamma_density_constant(lam)
    if mu.depth == d:
        mf = mu.frobenius()
        total = Fraction(0)
        for s1, a1 in _alternant_terms(d, list(mf.p)):
            for s2, b1 in _alternant_terms(d, list(mf.q)):
                for s3, a2 in _alternant_terms(d, list(fc.p)):
                    for s4, b2 in _alternant_terms(d, list(fc.q)):
                        exps = [x + y for x, y in zip(a1, a2)] + [x + y for x, y in zip(b1, b2)]
                        total += s1 * s2 * s3 * s4 * simplex_monomial_integral(exps)
        rhs = const * total / factorial(d) ** 2
        return SelbergResult("gamma", lam, mu, lhs, rhs)
    if mu.size == 0:
        # one Cauchy determinant survives; expand it over permutations
        total = Fraction(0)
        for s1, a2 in _alternant_terms(d, list(fc.p)):
            for s2, b2 in _alternant_terms(d, list(fc.q)):
                for perm in permutations(range(d)):
                    psign = _perm_sign(perm)
                    exps = list(a2) + list(b2)
                    pairs = [(i, d + perm[i]) for i in range(d)]
                    total += s1 * s2 * psign * simplex_pair_integral(exps, pairs)
        rhs = const * total / factorial(d) ** 2
        return SelbergResult("gamma", lam, mu, lhs, rhs)
    raise ValueError("no exact route for 0 < depth(mu) < depth(lam) on the hook face")


# ---------------------------------------------------------------------------
# boundary kernels
# ---------------------------------------------------------------------------

def young_kernel(mu: Partition, omega: ThomaPoint) -> Fraction:
    """Extreme-point kernel on the Young graph at a finite-support point.

    Complete homogeneous values come from the truncated expansion of
    exp(gamma*u) * prod(1 + beta_i u) / prod(1 - alpha_i u); the Schur
    value is the Jacobi-Trudi determinant in those.
    """
    order = mu.size + 1
    series: Poly = exp_series(omega.gamma, order)
    for b in omega.beta:
        series = series_mul(series, [Fraction(1), b], order)
    for a in omega.alpha:
        series = series_mul(series, geometric_series(a, order), order)
    h = lambda k: series[k] if 0 <= k < order else Fraction(0)
    m = mu.length
    if m == 0:
        return Fraction(1)
    from .exact import RationalMatrix, det

    rows = [[h(mu.part(i + 1) - (i + 1) + (j + 1)) for j in range(m)] for i in range(m)]
    return det(RationalMatrix(rows))


def kingman_kernel(mu: Partition, omega: ThomaPoint) -> Fraction:
    """Extended monomial kernel on the Kingman graph."""
    if omega.beta:
        raise ValueError("kingman boundary points carry no beta coordinates")
    r1 = mu.multiplicity(1)
    rest = [p for p in mu.parts if p != 1]
    total = Fraction(0)
    gamma_pow = Fraction(1)
    for k in range(r1 + 1):
        nu = Partition(sorted(rest + [1] * (r1 - k), reverse=True))
        total += gamma_pow / factorial(k) * monomial_eval(nu, omega.alpha)
        gamma_pow *= omega.gamma
    return total


# ---------------------------------------------------------------------------
# convergence experiments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    support_size: int
    mass_is_one: bool
    interior_points: int
    max_ratio_error: mpmath.mpf
    binned_distance: mpmath.mpf


@dataclass(frozen=True)
class ConvergenceReport:
    family: str
    rows: tuple[ConvergenceRow, ...]
    ratio_tolerance: float

    @property
    def ratios_ok(self) -> bool:
        return all(
            row.max_ratio_error <= self.ratio_tolerance for row in self.rows if row.interior_points
        )

    @property
    def distances_decreasing(self) -> bool:
        ds = [row.binned_distance for row in self.rows]
        return all(ds[i + 1] < ds[i] for i in range(len(ds) - 1))


def _face_density_polynomial(spec: DensitySpec) -> Poly:
    """Density restricted to the width-2 face as a polynomial in alpha_1."""
    if spec.face_dim != 2 or spec.graph not in ("young", "kingman"):
        raise ValueError("face polynomial only implemented for width-2 row faces")
    lam = spec.lam
    a = [Fraction(0), Fraction(1)]  # alpha_1
    b = poly_sub([Fraction(1)], a)  # alpha_2 = 1 - alpha_1

    def power(p: Poly, e: int) -> Poly:
        out = [Fraction(1)]
        for _ in range(e):
            out = poly_mul(out, p)
        return out

    if spec.graph == "young":
        e1, e2 = lam.part(1) + 1, lam.part(2)
        alt = poly_sub(poly_mul(power(a, e1), power(b, e2)), poly_mul(power(a, e2), power(b, e1)))
        dens = poly_mul(alt, poly_sub(a, b))
    else:
        e1, e2 = lam.part(1), lam.part(2)
        dens = poly_mul(power(a, e1), power(b, e2))
        if e1 != e2:
            dens = poly_add(dens, poly_mul(power(a, e2), power(b, e1)))
    return poly_scale(dens, spec.constant)


def convergence_experiment(
    family: HarmonicFamily,
    n_values,
    resolution: int = 20,
    interior_fraction: Fraction = Fraction(1, 4),
    ratio_tolerance: float = 0.05,
    precision: int = 128,
) -> ConvergenceReport:
    """Compare exact level measures against the limiting face density.

    For each n: checks the exact unit mass, the pointwise ratio
    measure * n^(face_dim - 1) / density on interior vertices, and a
    binned total-variation-style distance on width-2 faces.  Interior
    means every row at least interior_fraction * n and consecutive rows
    separated by at least interior_fraction * n; near the diagonal the
    density degenerates (squared Vandermonde) and the pointwise ratio
    has no limit, so those vertices are excluded from the ratio check.
    """
    if isinstance(family, TruncYoung):
        spec = density_spec("young", family.lam)
    elif isinstance(family, TruncKingman):
        spec = density_spec("kingman", family.lam)
    elif isinstance(family, TruncSchur):
        spec = density_spec("schur", family.lam)
    elif isinstance(family, GammaShaped):
        spec = density_spec("gamma", family.fc.to_partition())
    else:
        raise ValueError("convergence experiments need a truncated family")
    l = spec.face_dim
    rows = []
    for n in sorted(int(n) for n in n_values):
        weights = _fast_level_weights(family, n)
        mass = sum((w for _, w in weights), Fraction(0))
        support = [(nu, w) for nu, w in weights if w != 0]
        interior = 0
        max_err = to_bigfloat(0, precision)
        bins = [Fraction(0)] * resolution
        lo, width = Fraction(1, 2), Fraction(1, 2 * resolution)
        gap = interior_fraction * n
        for nu, w in support:
            if spec.graph == "gamma":
                fc = nu.frobenius()
                if 2 * fc.depth != l:
                    continue
                point = embed_frobenius(nu, n)
                blocks = [fc.p, fc.q]
            else:
                alpha = embed_rows(nu, n) + (Fraction(0),) * (l - nu.length)
                point = alpha
                blocks = [nu.parts + (0,) * (l - nu.length)]
                if l == 2:
                    idx = min(int((alpha[0] - lo) / width), resolution - 1)
                    bins[idx] += w
            if _rows_separated(blocks, gap):
                dens = spec.density(point)
                if dens > 0:
                    ratio = w * n ** (l - 1) / dens
                    err = abs(to_bigfloat(ratio - 1, precision))
                    max_err = max(max_err, err)
                    interior += 1
        distance = to_bigfloat(0, precision)
        if l == 2 and spec.graph in ("young", "kingman"):
            poly = _face_density_polynomial(spec)
            anti = poly_integral(poly)
            acc = Fraction(0)
            for i in range(resolution):
                left = lo + i * width
                right = lo + (i + 1) * width
                exact_bin = poly_eval(anti, right) - poly_eval(anti, left)
                acc += abs(bins[i] - exact_bin)
            distance = to_bigfloat(acc, precision)
        rows.append(
            ConvergenceRow(
                n=n,
                support_size=len(support),
                mass_is_one=(mass == 1),
                interior_points=interior,
                max_ratio_error=max_err,
                binned_distance=distance,
            )
        )
    return ConvergenceReport(family.spec_string(), tuple(rows), ratio_tolerance)


def _rows_separated(blocks, gap) -> bool:
    """Interior test: every coordinate block ends above the gap and has
    consecutive differences above the gap (the density degenerates at
    coordinate collisions, so those vertices carry no pointwise limit)."""
    for block in blocks:
        if not block or block[-1] < gap:
            return False
        if any(block[i] - block[i + 1] < gap for i in range(len(block) - 1)):
            return False
    return True


def _fast_level_weights(family: HarmonicFamily, n: int) -> list[tuple[Partition, Fraction]]:
    """Level measure restricted to the support, with the shared Pochhammer
    denominator factored out of the per-vertex work."""
    from .graphs import level
    from .interp import factorial_monomial_eval, pstar_eval, shifted_schur_eval

    if isinstance(family, (TruncYoung, TruncKingman, TruncSchur)):
        width = family.width
        poch = pochhammer(family.t, n)
        sign = -1 if n % 2 else 1
        out = []
        for nu in level(n, family.kind, max_length=width):
            if isinstance(family, TruncYoung):
                val = shifted_schur_eval(nu, family.point(), route="determinant")
            elif isinstance(family, TruncKingman):
                val = factorial_monomial_eval(nu, family.point())
            else:
                val = pstar_eval(nu, family._cached_functional(nu.part(1) + nu.part(2) + 2))
            out.append((nu, dim_closed_form(nu, family.kind) * sign * val / poch))
        return out
    if isinstance(family, GammaShaped) and n > family.degree_cap:
        raise ValueError(
            f"level {n} exceeds the family degree cap {family.degree_cap}; raise degree_cap"
        )
    measure = level_measure(family, n)
    return [(p, w) for p, w in measure.weights]
