"""The four multiplicative graded graphs on partitions.

Vertices are partitions graded by size; edges add one box.  Edge
multiplicities: Young and Schur carry weight 1, Kingman carries the row
multiplicity of the grown row, and the Jack deformation carries a
rational function of its positive parameter evaluated over the column
of the new box.  Weighted path dimensions are computed by the cover
recursion with a shared memo, with closed forms as oracles where they
exist.
"""

from __future__ import annotations

import csv
import io
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import as_rational
from .partitions import Partition, partitions_of
from .series import Poly, poly_eval, poly_mul, poly_trim


@dataclass(frozen=True)
class GraphKind:
    """One of the four graphs; Jack carries its deformation parameter."""

    name: str
    theta: Fraction | None = None

    def __post_init__(self):
        if self.name not in ("young", "jack", "kingman", "schur"):
            raise ValueError(f"unknown graph kind {self.name!r}")
        if self.name == "jack":
            if self.theta is None or as_rational(self.theta) <= 0:
                raise ValueError("jack graph needs theta > 0")
            object.__setattr__(self, "theta", as_rational(self.theta))
        elif self.theta is not None:
            raise ValueError(f"{self.name} graph takes no parameter")

    @property
    def strict(self) -> bool:
        return self.name == "schur"

    def __str__(self):
        if self.name == "jack":
            return f"jack({self.theta})"
        return self.name


YOUNG = GraphKind("young")
KINGMAN = GraphKind("kingman")
SCHUR = GraphKind("schur")


def jack(theta) -> GraphKind:
    return GraphKind("jack", as_rational(theta))


def parse_kind(text: str) -> GraphKind:
    text = text.strip().lower()
    if text.startswith("jack"):
        inner = text[4:].strip("():=")
        if not inner:
            raise ValueError("jack kind needs a theta, e.g. jack(1/2)")
        return jack(inner)
    return {"young": YOUNG, "kingman": KINGMAN, "schur": SCHUR}[text]


# ---------------------------------------------------------------------------
# covers and levels
# ---------------------------------------------------------------------------

def covers_up(mu: Partition, kind: GraphKind) -> list[Partition]:
    """All one-box-larger vertices of the graph, decreasing lexicographic."""
    if kind.strict and not mu.is_strict:
        raise ValueError("schur graph vertices must be strict partitions")
    return mu.up_covers(strict=kind.strict)


def covers_down(lam: Partition, kind: GraphKind) -> list[Partition]:
    """All one-box-smaller vertices of the graph, decreasing lexicographic."""
    if kind.strict and not lam.is_strict:
        raise ValueError("schur graph vertices must be strict partitions")
    return lam.down_covers(strict=kind.strict)


def level(n: int, kind: GraphKind, max_length: int | None = None) -> list[Partition]:
    """All vertices of size n, optionally truncated by length."""
    return partitions_of(n, max_length=max_length, strict=kind.strict)


# ---------------------------------------------------------------------------
# edge multiplicities
# ---------------------------------------------------------------------------

def _new_box(mu: Partition, lam: Partition) -> tuple[int, int]:
    if lam.size != mu.size + 1 or not lam.contains(mu):
        raise ValueError(f"{lam} does not cover {mu}")
    for i in range(1, lam.length + 1):
        if lam.part(i) != mu.part(i):
            return (i, lam.part(i))
    raise ValueError("unreachable")


def jack_multiplicity_poly(mu: Partition, lam: Partition) -> tuple[Poly, Poly]:
    """Jack edge weight as a reduced rational function of theta.

    Numerator/denominator share no power of theta, so substituting
    theta = 0 evaluates the degeneration limit directly.
    """
    i0, j0 = _new_box(mu, lam)
    num: Poly = [Fraction(1)]
    den: Poly = [Fraction(1)]
    col_height = mu.conjugate().part(j0)
    for i in range(1, col_height + 1):
        a = Fraction(mu.arm(i, j0))
        l = Fraction(mu.leg(i, j0))
        num = poly_mul(num, poly_mul([a, l + 2], [a + 1, l]))
        den = poly_mul(den, poly_mul([a, l + 1], [a + 1, l + 1]))
    num, den = _strip_common_theta_power(num, den)
    return num, den


def _strip_common_theta_power(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    def valuation(p: Poly) -> int:
        for k, c in enumerate(p):
            if c != 0:
                return k
        return 0

    v = min(valuation(num), valuation(den))
    return poly_trim(num[v:]), poly_trim(den[v:])


def edge_multiplicity(mu: Partition, lam: Partition, kind: GraphKind) -> Fraction:
    """Weight of the edge mu -> lam; rejects non-edges."""
    i0, j0 = _new_box(mu, lam)
    if kind.name in ("young", "schur"):
        if kind.strict and not (mu.is_strict and lam.is_strict):
            raise ValueError("schur edges join strict partitions")
        return Fraction(1)
    if kind.name == "kingman":
        return Fraction(lam.multiplicity(lam.part(i0)))
    num, den = jack_multiplicity_poly(mu, lam)
    return poly_eval(num, kind.theta) / poly_eval(den, kind.theta)


# ---------------------------------------------------------------------------
# weighted path dimensions
# ---------------------------------------------------------------------------

_dim_cache: dict[tuple, Fraction] = {}
_dim_lock = threading.Lock()


def _kind_key(kind: GraphKind):
    return (kind.name, kind.theta)


def dim(mu: Partition, lam: Partition, kind: GraphKind) -> Fraction:
    """Sum of edge-weight products over all increasing paths mu -> lam."""
    if mu == lam:
        return Fraction(1)
    if lam.size <= mu.size or not lam.contains(mu):
        return Fraction(0)
    key = (_kind_key(kind), mu.parts, lam.parts)
    with _dim_lock:
        hit = _dim_cache.get(key)
    if hit is not None:
        return hit
    total = Fraction(0)
    for nu in covers_down(lam, kind):
        if nu.contains(mu):
            total += dim(mu, nu, kind) * edge_multiplicity(nu, lam, kind)
    with _dim_lock:
        _dim_cache[key] = total
    return total


def dim_from_empty(lam: Partition, kind: GraphKind) -> Fraction:
    return dim(Partition(), lam, kind)


def dim_closed_form(lam: Partition, kind: GraphKind) -> Fraction:
    """Closed-form total dimension; the Jack graph has none and is rejected."""
    n = lam.size
    if kind.name == "young":
        m = lam.length
        denom = 1
        for i in range(1, m + 1):
            denom *= factorial(lam.part(i) + m - i)
        prod = 1
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                prod *= lam.part(i) - i - lam.part(j) + j
        return Fraction(factorial(n) * prod, denom)
    if kind.name == "kingman":
        denom = 1
        for p in lam.parts:
            denom *= factorial(p)
        return Fraction(factorial(n), denom)
    if kind.name == "schur":
        if not lam.is_strict:
            raise ValueError("schur dimension needs a strict partition")
        denom = 1
        for p in lam.parts:
            denom *= factorial(p)
        out = Fraction(factorial(n), denom)
        m = lam.length
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                out *= Fraction(lam.part(i) - lam.part(j), lam.part(i) + lam.part(j))
        return out
    raise ValueError("no closed form for the jack graph; use the recursion")


def dims_csv(n: int, kind: GraphKind, max_length: int | None = None) -> str:
    """CSV dump 'level,partition,dim' for one level (exact p/q strings)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["level", "partition", "dim"])
    for lam in level(n, kind, max_length=max_length):
        writer.writerow([n, str(lam), str(dim_from_empty(lam, kind))])
    return buf.getvalue()
