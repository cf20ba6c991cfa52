"""Partitions, strict partitions, Frobenius coordinates and box statistics.

Partitions are immutable value objects (no trailing zeros ever stored)
with structural equality; every enumeration in the package is emitted in
decreasing lexicographic order so goldens stay deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exact import as_rational


class Partition:
    """A nonincreasing tuple of positive integers, possibly empty."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        cleaned = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError(f"negative part in {parts!r}")
        if any(cleaned[i] < cleaned[i + 1] for i in range(len(cleaned) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts!r}")
        object.__setattr__(self, "parts", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Partition is immutable")

    # -- basic protocol --

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "+".join(str(p) for p in self.parts) if self.parts else "0"

    def __lt__(self, other):
        return self.parts < other.parts

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse the text form '3+2+1' ('0' or '' is the empty partition)."""
        text = text.strip()
        if text in ("", "0", "[]"):
            return Partition()
        if text.startswith("["):
            body = text.strip("[]")
            items = [s for s in body.split(",") if s.strip()]
            return Partition(int(s) for s in items)
        return Partition(int(s) for s in text.split("+"))

    # -- sizes and shapes --

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length with the zero-extension convention, 1-based."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def multiplicity(self, k: int) -> int:
        """Number of parts equal to k."""
        return sum(1 for p in self.parts if p == k)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @property
    def is_strict(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))

    def contains(self, other: "Partition") -> bool:
        return other.length <= self.length and all(
            other.parts[i] <= self.parts[i] for i in range(other.length)
        )

    # -- boxes --

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Yield the cells (i, j), 1-based, row by row."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def arm(self, i: int, j: int) -> int:
        return self.parts[i - 1] - j

    def leg(self, i: int, j: int) -> int:
        return self.conjugate().parts[j - 1] - i

    @staticmethod
    def content(i: int, j: int) -> int:
        return j - i

    @staticmethod
    def theta_content(i: int, j: int, theta) -> Fraction:
        """(j-1) - theta*(i-1); equals the ordinary content at theta = 1."""
        return Fraction(j - 1) - as_rational(theta) * (i - 1)

    def hook(self, i: int, j: int) -> int:
        return self.arm(i, j) + self.leg(i, j) + 1

    def shifted_boxes(self) -> Iterator[tuple[int, int]]:
        """Cells of the shifted diagram (row i shifted right by i-1 columns).

        Only meaningful for strict partitions.
        """
        if not self.is_strict:
            raise ValueError("shifted diagram needs a strict partition")
        for i, p in enumerate(self.parts, start=1):
            for j in range(i, i + p):
                yield (i, j)

    # -- covers --

    def up_covers(self, strict: bool = False) -> list["Partition"]:
        """All partitions one box above, in decreasing lexicographic order."""
        out = []
        for i in range(len(self.parts) + 1):
            here = self.part(i + 1)
            above = self.parts[i - 1] if i > 0 else None
            if above is not None and here + 1 > above:
                continue
            grown = list(self.parts)
            if i == len(self.parts):
                grown.append(1)
            else:
                grown[i] += 1
            cand = Partition(grown)
            if strict and not cand.is_strict:
                continue
            out.append(cand)
        out.sort(key=lambda p: p.parts, reverse=True)
        return out

    def down_covers(self, strict: bool = False) -> list["Partition"]:
        """All partitions one box below, in decreasing lexicographic order."""
        out = []
        for i in range(len(self.parts)):
            below = self.part(i + 2)
            if self.parts[i] - 1 < below:
                continue
            shrunk = list(self.parts)
            shrunk[i] -= 1
            cand = Partition(shrunk)
            if strict and not cand.is_strict:
                continue
            out.append(cand)
        out.sort(key=lambda p: p.parts, reverse=True)
        return out

    # -- Frobenius coordinates --

    def frobenius(self) -> "FrobeniusCoords":
        conj = self.conjugate()
        d = 0
        while self.part(d + 1) >= d + 1:
            d += 1
        p = tuple(self.parts[i] - (i + 1) for i in range(d))
        q = tuple(conj.parts[i] - (i + 1) for i in range(d))
        return FrobeniusCoords(p, q)

    @property
    def depth(self) -> int:
        """Number of diagonal boxes."""
        d = 0
        while self.part(d + 1) >= d + 1:
            d += 1
        return d


class FrobeniusCoords:
    """Arm/leg lengths (p_1,...,p_d | q_1,...,q_d) along the diagonal."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p = tuple(int(x) for x in p)
        q = tuple(int(x) for x in q)
        if len(p) != len(q):
            raise ValueError("coordinate lists must have equal length")
        for seq in (p, q):
            if any(x < 0 for x in seq):
                raise ValueError("coordinates must be >= 0")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("coordinates must strictly decrease")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("FrobeniusCoords is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FrobeniusCoords) and self.p == other.p and self.q == other.q
        )

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"FrobeniusCoords(p={list(self.p)}, q={list(self.q)})"

    def __str__(self):
        return "({}|{})".format(
            ",".join(map(str, self.p)), ",".join(map(str, self.q))
        )

    @staticmethod
    def parse(text: str) -> "FrobeniusCoords":
        body = text.strip().strip("()")
        left, _, right = body.partition("|")
        p = [int(s) for s in left.split(",") if s.strip()]
        q = [int(s) for s in right.split(",") if s.strip()]
        return FrobeniusCoords(p, q)

    @property
    def depth(self) -> int:
        return len(self.p)

    @property
    def size(self) -> int:
        return sum(self.p) + sum(self.q) + len(self.p)

    def to_partition(self) -> Partition:
        d = len(self.p)
        rows = []
        conj_rows = [self.q[i] + (i + 1) for i in range(d)]
        for i in range(d):
            rows.append(self.p[i] + (i + 1))
        # extend below the diagonal block using the column lengths
        max_col = conj_rows[0] if conj_rows else 0
        for i in range(d, max_col):
            rows.append(sum(1 for c in conj_rows if c >= i + 1))
        return Partition(rows)


EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions_cached(n: int, max_part: int, max_length: int, strict: bool) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_length == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        cap = first - 1 if strict else first
        for rest in _partitions_cached(n - first, min(cap, n - first), max_length - 1, strict):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_length: int | None = None, strict: bool = False) -> list[Partition]:
    """All partitions of n (strict if requested), decreasing lexicographic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cap = n if max_length is None else min(max_length, n)
    return [Partition(t) for t in _partitions_cached(n, n, cap, strict)]


def partitions_up_to(n: int, strict: bool = False) -> list[Partition]:
    """All partitions of size 0..n, sizes ascending, dec-lex within a size."""
    out: list[Partition] = []
    for m in range(n + 1):
        out.extend(partitions_of(m, strict=strict))
    return out


def reverse_tableaux(mu: Partition, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Fillings of mu with entries in {1..k} decreasing weakly along rows
    and strictly down columns, emitted as row tuples."""
    if k < 1:
        raise ValueError("k must be >= 1")
    shape = mu.parts
    if not shape:
        yield ()
        return

    rows: list[list[int]] = [[] for _ in shape]

    def fill(cell: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if cell == mu.size:
            yield tuple(tuple(r) for r in rows)
            return
        # row-major position of the next cell
        i = 0
        consumed = cell
        while consumed >= shape[i]:
            consumed -= shape[i]
            i += 1
        j = consumed
        hi = k
        if j > 0:
            hi = min(hi, rows[i][j - 1])
        if i > 0:
            hi = min(hi, rows[i - 1][j] - 1)
        for v in range(hi, 0, -1):
            rows[i].append(v)
            yield from fill(cell + 1)
            rows[i].pop()

    yield from fill(0)
