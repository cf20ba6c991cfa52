"""Closed-form harmonic families, harmonicity checks and level measures.

A family packages exact parameters plus a phi(mu) evaluator.  phi is
normalized to 1 at the empty partition, and harmonicity means the value
at a vertex equals the multiplicity-weighted sum over its upper covers.
Four infinite families (two-parameter Young, its Jack deformation, the
two-parameter Kingman family, the one-parameter strict family) evaluate
through closed products; four truncated families route through the
interpolation machinery and vanish outside a finite-width subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import as_rational, pochhammer
from .graphs import GraphKind, KINGMAN, SCHUR, YOUNG, covers_up, dim, edge_multiplicity, jack, level
from .interp import (
    FunctionalSpec,
    factorial_monomial_eval,
    functional_on_shifted_schur,
    pstar_eval,
    schur_point_functional,
    shifted_schur_eval,
    super_evaluation_functional,
)
from .partitions import FrobeniusCoords, Partition


class FamilyError(ValueError):
    """Invalid family parameters (forbidden scalar, wrong shape, ...)."""


def _reject_nonpositive_integer_t(t: Fraction, allow_zero: bool = False) -> None:
    if t.denominator == 1 and (t < 0 or (t == 0 and not allow_zero)):
        raise FamilyError(f"denominator parameter t = {t} hits a forbidden value")


@dataclass(frozen=True)
class AdmissibleReport:
    ok: bool
    reason: str
    surrogate: bool = False


class HarmonicFamily:
    """Interface: a graph kind, an exact phi, and an admissibility verdict."""

    kind: GraphKind

    def phi(self, mu: Partition) -> Fraction:
        raise NotImplementedError

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.spec_string()

    def _surrogate_nonnegative(self, surrogate_level: int) -> AdmissibleReport:
        for n in range(surrogate_level + 1):
            for lam in level(n, self.kind):
                if self.phi(lam) < 0:
                    return AdmissibleReport(
                        False, f"surrogate: phi({lam}) < 0", surrogate=True
                    )
        return AdmissibleReport(
            True, f"surrogate: all phi >= 0 through level {surrogate_level}", surrogate=True
        )


@dataclass(frozen=True)
class YoungZZ(HarmonicFamily):
    """Two-parameter family on the Young graph via e = z+z', t = zz'."""

    e: Fraction
    t: Fraction
    kind: GraphKind = field(default=YOUNG, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "e", as_rational(self.e))
        object.__setattr__(self, "t", as_rational(self.t))
        _reject_nonpositive_integer_t(self.t)

    def phi(self, mu: Partition) -> Fraction:
        out = Fraction(1)
        for (i, j) in mu.boxes():
            c = j - i
            out *= Fraction(self.t + c * self.e + c * c, mu.hook(i, j))
        return out / pochhammer(self.t, mu.size)

    @staticmethod
    def params_admissible(e, t) -> AdmissibleReport:
        """Nondegeneracy region in the (e, t) encoding.

        Conjugate pair iff the discriminant of X^2 - eX + t is negative;
        the real case needs both roots inside one open unit interval
        (m, m+1), tested through the sign of the quadratic at m and m+1.
        """
        e = as_rational(e)
        t = as_rational(t)
        disc = e * e - 4 * t
        if disc < 0:
            return AdmissibleReport(True, "conjugate nonreal pair")
        half = e / 2
        if half.denominator == 1 and disc > 0:
            return AdmissibleReport(False, "real roots straddle an integer midpoint")
        m = half.numerator // half.denominator  # floor
        q_m = Fraction(m) ** 2 - e * m + t
        q_m1 = Fraction(m + 1) ** 2 - e * (m + 1) + t
        if q_m > 0 and q_m1 > 0:
            return AdmissibleReport(True, f"real pair inside ({m}, {m + 1})")
        return AdmissibleReport(False, "real roots not inside an open unit interval")

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self.params_admissible(self.e, self.t)

    def spec_string(self) -> str:
        return f"young-zz:e={self.e},t={self.t}"


@dataclass(frozen=True)
class JackZZ(HarmonicFamily):
    """Deformed two-parameter family; zz is z*z', the scalar is t = zz/theta."""

    e: Fraction
    zz: Fraction
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "e", as_rational(self.e))
        object.__setattr__(self, "zz", as_rational(self.zz))
        object.__setattr__(self, "theta", as_rational(self.theta))
        if self.theta <= 0:
            raise FamilyError("theta must be > 0")
        _reject_nonpositive_integer_t(self.t)

    @property
    def t(self) -> Fraction:
        return self.zz / self.theta

    @property
    def kind(self) -> GraphKind:
        return jack(self.theta)

    def phi(self, mu: Partition) -> Fraction:
        out = Fraction(1)
        for (i, j) in mu.boxes():
            c = Fraction(j - 1) - self.theta * (i - 1)
            num = self.zz + c * self.e + c * c
            den = mu.arm(i, j) + self.theta * mu.leg(i, j) + self.theta
            out *= num / den
        return out / pochhammer(self.t, mu.size)

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self._surrogate_nonnegative(surrogate_level)

    def spec_string(self) -> str:
        return f"jack:e={self.e},t={self.zz},theta={self.theta}"


@dataclass(frozen=True)
class KingmanTA(HarmonicFamily):
    """Two-parameter partition-structure family on the Kingman graph."""

    t: Fraction
    alpha: Fraction
    kind: GraphKind = field(default=KINGMAN, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "t", as_rational(self.t))
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        _reject_nonpositive_integer_t(self.t, allow_zero=True)

    def phi(self, mu: Partition) -> Fraction:
        n = mu.size
        l = mu.length
        if n == 0:
            return Fraction(1)
        num = Fraction(1)
        for p in mu.parts:
            for v in range(1, p):
                num *= v
        for r in mu.multiplicities().values():
            for v in range(1, r + 1):
                num /= v
        scal = Fraction(1)
        for i in range(l):
            scal *= self.t + i * self.alpha
        # the leading t of the scalar cancels the leading t of (t)_n,
        # which is what makes t = 0 legal here
        tail = Fraction(1)
        for k in range(1, n):
            tail *= self.t + k
        if l >= 1:
            scal_over_poch = (scal / self.t if self.t != 0 else _cancel_t_at_zero(self.alpha, l)) / tail
        else:
            scal_over_poch = Fraction(1)
        box_prod = Fraction(1)
        for (i, j) in mu.boxes():
            if j >= 2:
                box_prod *= 1 - self.alpha / (j - 1)
        return num * scal_over_poch * box_prod

    @staticmethod
    def params_admissible(t, alpha) -> AdmissibleReport:
        t = as_rational(t)
        alpha = as_rational(alpha)
        if 0 <= alpha < 1 and t > -alpha:
            return AdmissibleReport(True, "0 <= alpha < 1 and t > -alpha")
        return AdmissibleReport(False, "outside 0 <= alpha < 1, t > -alpha")

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self.params_admissible(self.t, self.alpha)

    def spec_string(self) -> str:
        return f"kingman:t={self.t},alpha={self.alpha}"


def _cancel_t_at_zero(alpha: Fraction, l: int) -> Fraction:
    """(t (t+a)...(t+(l-1)a))/t at t = 0, i.e. the product over 1..l-1."""
    out = Fraction(1)
    for i in range(1, l):
        out *= i * alpha
    return out


@dataclass(frozen=True)
class SchurT(HarmonicFamily):
    """One-parameter family on the graph of strict partitions."""

    t: Fraction
    kind: GraphKind = field(default=SCHUR, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "t", as_rational(self.t))
        _reject_nonpositive_integer_t(self.t)

    def phi(self, mu: Partition) -> Fraction:
        if not mu.is_strict:
            raise FamilyError("strict-graph family evaluated at a non-strict partition")
        out = Fraction(1)
        for (i, j) in mu.boxes():
            out *= 2 * self.t + (j - 1) * j
        out /= Fraction(2) ** mu.length
        for p in mu.parts:
            for v in range(1, p + 1):
                out /= v
        for i in range(1, mu.length + 1):
            for j in range(i + 1, mu.length + 1):
                out *= Fraction(mu.part(i) - mu.part(j), mu.part(i) + mu.part(j))
        return out / pochhammer(self.t, mu.size)

    @staticmethod
    def params_admissible(t) -> AdmissibleReport:
        t = as_rational(t)
        if t > 0:
            return AdmissibleReport(True, "t > 0")
        return AdmissibleReport(False, "t <= 0")

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self.params_admissible(self.t)

    def spec_string(self) -> str:
        return f"schur:t={self.t}"


@dataclass(frozen=True)
class TruncYoung(HarmonicFamily):
    """Finite-width family: shifted Schur evaluation at a reflected point.

    Supported on diagrams with at most length(lam) rows; the evaluation
    point has coordinates -lam_i - 2(l - i) - 1.
    """

    lam: Partition
    kind: GraphKind = field(default=YOUNG, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.lam.length < 2:
            raise FamilyError("truncated Young family needs length >= 2")

    @property
    def width(self) -> int:
        return self.lam.length

    @property
    def t(self) -> Fraction:
        return Fraction(self.lam.size + self.width**2)

    def point(self) -> tuple[Fraction, ...]:
        l = self.width
        return tuple(Fraction(-self.lam.part(i) - 2 * (l - i) - 1) for i in range(1, l + 1))

    def phi(self, mu: Partition) -> Fraction:
        if mu.length > self.width:
            return Fraction(0)
        val = shifted_schur_eval(mu, self.point(), route="determinant")
        return val * (-1) ** mu.size / pochhammer(self.t, mu.size)

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self._surrogate_nonnegative(surrogate_level)

    def spec_string(self) -> str:
        return f"trunc-young:lambda={self.lam}"


@dataclass(frozen=True)
class GammaShaped(HarmonicFamily):
    """Hook-bounded family driven by the two-alphabet generator values.

    Supported on diagrams whose diagonal has at most depth(fc) boxes;
    generator values are taken at the reflected split-diagonal point
    (-p - 1/2; -q - 1/2) and targets expand through the basis engine.
    """

    fc: FrobeniusCoords
    degree_cap: int = 8
    kind: GraphKind = field(default=YOUNG, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.fc.depth < 1:
            raise FamilyError("gamma-shaped family needs depth >= 1")
        if self.degree_cap < 1:
            raise FamilyError("degree cap must be >= 1")

    @staticmethod
    def from_partition(lam: Partition, degree_cap: int = 8) -> "GammaShaped":
        return GammaShaped(lam.frobenius(), degree_cap)

    @property
    def depth(self) -> int:
        return self.fc.depth

    @property
    def t(self) -> Fraction:
        return Fraction(self.fc.size)

    def phi(self, mu: Partition) -> Fraction:
        if mu.depth > self.depth:
            return Fraction(0)
        if mu.size > self.degree_cap:
            raise FamilyError(
                f"degree cap {self.degree_cap} exceeded at |mu| = {mu.size}; raise degree_cap"
            )
        val = functional_on_shifted_schur(mu, self._cached_functional())
        return val * (-1) ** mu.size / pochhammer(self.t, mu.size)

    def _cached_functional(self) -> FunctionalSpec:
        return _gamma_functional(self.fc.p, self.fc.q, self.degree_cap)

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self._surrogate_nonnegative(min(surrogate_level, self.degree_cap))

    def spec_string(self) -> str:
        return f"gamma:lambda={self.fc.to_partition()},cap={self.degree_cap}"


@lru_cache(maxsize=None)
def _gamma_functional(p: tuple[int, ...], q: tuple[int, ...], cap: int) -> FunctionalSpec:
    half = Fraction(1, 2)
    xs = [-pi - half for pi in p]
    ys = [-qi - half for qi in q]
    return super_evaluation_functional(xs, ys, cap)


@dataclass(frozen=True)
class TruncKingman(HarmonicFamily):
    """Finite-width family: factorial monomial evaluation at -lam - 1."""

    lam: Partition
    kind: GraphKind = field(default=KINGMAN, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.lam.length < 1:
            raise FamilyError("truncated Kingman family needs a nonempty partition")

    @property
    def width(self) -> int:
        return self.lam.length

    @property
    def t(self) -> Fraction:
        return Fraction(self.lam.size + self.width)

    def point(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(-p - 1) for p in self.lam.parts)

    def phi(self, mu: Partition) -> Fraction:
        if mu.length > self.width:
            return Fraction(0)
        val = factorial_monomial_eval(mu, self.point())
        return val * (-1) ** mu.size / pochhammer(self.t, mu.size)

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self._surrogate_nonnegative(surrogate_level)

    def spec_string(self) -> str:
        return f"trunc-kingman:lambda={self.lam}"


@dataclass(frozen=True)
class TruncSchur(HarmonicFamily):
    """Finite-width strict family via the one-row/two-row/Pfaffian pipeline."""

    lam: Partition
    kind: GraphKind = field(default=SCHUR, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.lam.is_strict or self.lam.length < 1:
            raise FamilyError("truncated strict family needs a nonempty strict partition")

    @property
    def width(self) -> int:
        return self.lam.length

    @property
    def t(self) -> Fraction:
        return Fraction(self.lam.size + self.width)

    def point(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(-p - 1) for p in self.lam.parts)

    def phi(self, mu: Partition) -> Fraction:
        if not mu.is_strict:
            raise FamilyError("strict-graph family evaluated at a non-strict partition")
        if mu.length > self.width:
            return Fraction(0)
        need = mu.part(1) + mu.part(2) + 2
        val = pstar_eval(mu, self._cached_functional(need))
        return val * (-1) ** mu.size / pochhammer(self.t, mu.size)

    def _cached_functional(self, need: int) -> FunctionalSpec:
        # round the cap up in blocks so the cache stays small
        cap = 40 * (1 + (need - 1) // 40)
        return _trunc_schur_functional(self.lam.parts, cap)

    def admissible(self, surrogate_level: int = 6) -> AdmissibleReport:
        return self._surrogate_nonnegative(surrogate_level)

    def spec_string(self) -> str:
        return f"trunc-schur:lambda={self.lam}"


@lru_cache(maxsize=None)
def _trunc_schur_functional(lam_parts: tuple[int, ...], cap: int) -> FunctionalSpec:
    point = [Fraction(-p - 1) for p in lam_parts]
    return schur_point_functional(point, cap)


# ---------------------------------------------------------------------------
# family-spec strings
# ---------------------------------------------------------------------------

def parse_family(spec: str) -> HarmonicFamily:
    """Parse compact family strings like 'young-zz:e=3,t=2' or 'schur:t=3'."""
    name, _, body = spec.strip().partition(":")
    name = name.strip().lower()
    kv: dict[str, str] = {}
    if body:
        for item in body.split(","):
            key, _, value = item.partition("=")
            if not value:
                raise FamilyError(f"malformed family parameter {item!r}")
            kv[key.strip().lower()] = value.strip()
    try:
        if name == "young-zz":
            return YoungZZ(as_rational(kv.pop("e")), as_rational(kv.pop("t")))
        if name == "jack":
            return JackZZ(
                as_rational(kv.pop("e")), as_rational(kv.pop("t")), as_rational(kv.pop("theta"))
            )
        if name == "kingman":
            return KingmanTA(as_rational(kv.pop("t")), as_rational(kv.pop("alpha")))
        if name == "schur":
            return SchurT(as_rational(kv.pop("t")))
        if name == "trunc-young":
            return TruncYoung(Partition.parse(kv.pop("lambda")))
        if name == "gamma":
            cap = int(kv.pop("cap", "8"))
            return GammaShaped.from_partition(Partition.parse(kv.pop("lambda")), cap)
        if name == "trunc-kingman":
            return TruncKingman(Partition.parse(kv.pop("lambda")))
        if name == "trunc-schur":
            return TruncSchur(Partition.parse(kv.pop("lambda")))
    except KeyError as exc:
        raise FamilyError(f"family {name!r} is missing parameter {exc}") from None
    raise FamilyError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# harmonicity, measures, lattice bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HarmonicityViolation:
    mu: Partition
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class HarmonicityReport:
    family: str
    max_level: int
    checked: int
    violations: tuple[HarmonicityViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_harmonicity(family: HarmonicFamily, max_level: int) -> HarmonicityReport:
    """Verify the cover-sum identity exactly for all vertices below max_level."""
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    violations = []
    checked = 0
    for n in range(max_level):
        for mu in level(n, family.kind):
            lhs = family.phi(mu)
            rhs = Fraction(0)
            for lam in covers_up(mu, family.kind):
                rhs += edge_multiplicity(mu, lam, family.kind) * family.phi(lam)
            checked += 1
            if lhs != rhs:
                violations.append(HarmonicityViolation(mu, lhs, rhs))
    return HarmonicityReport(family.spec_string(), max_level, checked, tuple(violations))


@dataclass(frozen=True)
class LevelMeasure:
    """The probability distribution dim * phi on one level."""

    n: int
    weights: tuple[tuple[Partition, Fraction], ...]

    def total(self) -> Fraction:
        return sum((w for _, w in self.weights), Fraction(0))

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.weights)

    def support(self) -> list[Partition]:
        return [p for p, w in self.weights if w != 0]


def level_measure(family: HarmonicFamily, n: int, max_length: int | None = None) -> LevelMeasure:
    entries = []
    for lam in level(n, family.kind, max_length=max_length):
        entries.append((lam, dim(Partition(), lam, family.kind) * family.phi(lam)))
    return LevelMeasure(n, tuple(entries))


def lattice_bound_approx(
    phi_fam: HarmonicFamily,
    psi_fam: HarmonicFamily,
    mu: Partition,
    n: int,
    mode: str,
) -> Fraction:
    """Level-n approximation of the join/meet of two harmonic functions."""
    if mode not in ("join", "meet"):
        raise ValueError("mode must be 'join' or 'meet'")
    if phi_fam.kind != psi_fam.kind:
        raise ValueError("families must live on the same graph")
    if mu.size >= n:
        raise ValueError("need |mu| < n")
    pick = max if mode == "join" else min
    total = Fraction(0)
    for lam in level(n, phi_fam.kind):
        d = dim(mu, lam, phi_fam.kind)
        if d != 0:
            total += d * pick(phi_fam.phi(lam), psi_fam.phi(lam))
    return total
