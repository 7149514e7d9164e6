"""Partitions as Ferrers diagrams of monomials in k[x, y].

Row ``r`` (0-based, counted from the top) holds ``x^0 y^r ... x^{p_r - 1} y^r``;
x grows rightward and y downward.  ``C_P`` is the set of these monomials and
``E_P`` the monomial ideal spanned by everything else.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import EmptyInput, ParseError
from .hilbert import HilbertFunction


class Monomial(NamedTuple):
    xdeg: int
    ydeg: int

    @property
    def degree(self) -> int:
        return self.xdeg + self.ydeg

    def __str__(self):
        def factor(v, e):
            return "" if e == 0 else v if e == 1 else f"{v}^{e}"

        s = factor("x", self.xdeg) + factor("y", self.ydeg)
        return s or "1"

    def to_json(self) -> str:
        return f"x^{self.xdeg}*y^{self.ydeg}"


_MONO_JSON = re.compile(r"x\^(\d+)\*y\^(\d+)$")


def monomial_from_json(s: str) -> Monomial:
    m = _MONO_JSON.match(s)
    if not m:
        raise ParseError(f"bad monomial {s!r}")
    return Monomial(int(m.group(1)), int(m.group(2)))


class Hook(NamedTuple):
    corner: Monomial
    arm: int
    leg: int

    @property
    def hand(self) -> Monomial:
        return Monomial(self.corner.xdeg + self.arm - 1, self.corner.ydeg)

    @property
    def foot(self) -> Monomial:
        return Monomial(self.corner.xdeg, self.corner.ydeg + self.leg - 1)

    @property
    def difference(self) -> int:
        return self.arm - self.leg


@dataclass(frozen=True, order=True)
class Partition:
    """Non-increasing tuple of positive parts.

    The empty partition is permitted as a value (it is the triangle of order
    zero, i.e. ``E_P = R``) but :func:`parse_partition` rejects it.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @classmethod
    def of(cls, *parts) -> "Partition":
        return cls(tuple(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, r: int) -> int:
        """Length of row ``r``, zero past the last row."""
        return self.parts[r] if 0 <= r < len(self.parts) else 0

    @cached_property
    def conj(self) -> tuple[int, ...]:
        return conjugate(self).parts

    def column(self, c: int) -> int:
        cj = self.conj
        return cj[c] if 0 <= c < len(cj) else 0

    def contains(self, m: Monomial) -> bool:
        """Is ``m`` a standard monomial (a cell of the diagram)?"""
        return m.xdeg >= 0 and m.ydeg >= 0 and m.xdeg < self.part(m.ydeg)

    def cells(self):
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield Monomial(c, r)

    @cached_property
    def T(self) -> HilbertFunction:
        return diagonal_lengths(self)

    def __str__(self):
        return format_partition(self)


def diagonal_lengths(P: Partition) -> HilbertFunction:
    counts: list[int] = []
    for r, p in enumerate(P.parts):
        for c in range(p):
            i = r + c
            if i >= len(counts):
                counts.extend([0] * (i + 1 - len(counts)))
            counts[i] += 1
    return HilbertFunction(tuple(counts))


def conjugate(P: Partition) -> Partition:
    if not P.parts:
        return P
    return Partition(tuple(sum(1 for p in P.parts if p > c) for c in range(P.parts[0])))


def corner_monomials(P: Partition) -> tuple[Monomial, ...]:
    """Minimal monomial generators of ``E_P``, by increasing ydeg."""
    out = []
    prev = None
    for r in range(len(P) + 1):
        p = P.part(r)
        if prev is None or p < prev:
            out.append(Monomial(p, r))
        prev = p
    return tuple(out)


def hooks(P: Partition):
    for r, p in enumerate(P.parts):
        for c in range(p):
            yield Hook(Monomial(c, r), p - c, P.column(c) - r)


def difference_one_hooks(P: Partition) -> tuple[Hook, ...]:
    return tuple(h for h in hooks(P) if h.difference == 1)


def row_hook_count(P: Partition, r: int) -> int:
    """Number of difference-one hooks whose hand ends row ``r``."""
    p = P.part(r)
    return sum(1 for c in range(p) if (p - c) - (P.column(c) - r) == 1)


def hands(P: Partition, i: int) -> tuple[Monomial, ...]:
    """End-of-row monomials of degree ``i`` in lex order (increasing ydeg)."""
    return tuple(
        Monomial(p - 1, r) for r, p in enumerate(P.parts) if p - 1 + r == i
    )


def border_monomials(P: Partition, i: int):
    """Degree-``i`` horizontal and vertical border monomials of ``E_P``.

    ``x^a y^b`` is horizontal-border when ``b > 0`` and ``x^a y^{b-1}`` is a
    cell; vertical-border when ``a > 0`` and ``x^{a-1} y^b`` is a cell.
    Both lists are in lex order.
    """
    A, B = [], []
    for b in range(i + 1):
        m = Monomial(i - b, b)
        if P.contains(m):
            continue
        if b > 0 and P.contains(Monomial(i - b, b - 1)):
            A.append(m)
        if i - b > 0 and P.contains(Monomial(i - b - 1, b)):
            B.append(m)
    return tuple(A), tuple(B)


def _slices_to_partition(slices) -> Partition:
    rows: dict[int, int] = {}
    for i, xs in enumerate(slices):
        for a in xs:
            b = i - a
            rows[b] = max(rows.get(b, 0), a + 1)
    return Partition(tuple(rows[b] for b in range(len(rows))))


def enumerate_partitions(T: HilbertFunction) -> tuple[Partition, ...]:
    """All partitions with diagonal lengths T, lexicographically descending.

    Depth-first search over order ideals one degree at a time: a degree-i
    slice is a set of x-exponents, and ``x^a y^{i-a}`` may be added only if
    both of its degree-(i-1) divisors are already present.
    """
    from itertools import combinations

    if not T.values:
        return (Partition(()),)
    found = []

    def grow(i, prev, slices):
        if i == len(T.values):
            found.append(_slices_to_partition(slices))
            return
        cand = [a for a in range(i + 1) if (a == 0 or a - 1 in prev) and (a == i or a in prev)]
        for pick in combinations(cand, T.values[i]):
            s = frozenset(pick)
            slices.append(s)
            grow(i + 1, s, slices)
            slices.pop()

    grow(0, frozenset(), [])
    return tuple(sorted(found, reverse=True))


_TOKEN = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"15,12^4,11,7"``; exponents repeat a part."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text.strip():
        raise EmptyInput("empty partition")
    parts: list[int] = []
    pos = 0
    for tok in text.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad partition token {tok!r}", pos)
        val, rep = int(m.group(1)), int(m.group(2) or 1)
        if val <= 0:
            raise ParseError("parts must be positive", pos)
        if parts and val > parts[-1]:
            raise ParseError("parts must be non-increasing", pos)
        parts.extend([val] * rep)
        pos += len(tok) + 1
    return Partition(tuple(parts))


def format_partition(P: Partition, shorthand: bool = True) -> str:
    """Comma-separated parts; runs of length > 1 use ``part^count``."""
    if not shorthand:
        return ",".join(str(p) for p in P.parts)
    out = []
    k = 0
    while k < len(P.parts):
        n = 1
        while k + n < len(P.parts) and P.parts[k + n] == P.parts[k]:
            n += 1
        out.append(f"{P.parts[k]}^{n}" if n > 1 else str(P.parts[k]))
        k += n
    return ",".join(out)
