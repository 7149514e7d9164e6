"""Hilbert functions of graded Artinian quotients of k[x, y].

A valid sequence has the shape ``(1, 2, ..., d, t_d, ..., t_j)`` with
``d >= t_d >= ... >= t_j > 0``.  ``d`` is the order (the degree of the first
generator) and ``j`` the socle degree.  Outside the stored range the values
follow the usual conventions ``t_{d-1} = d`` and ``t_{j+1} = 0``, which hold
automatically for the stored sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import EmptyInput, NonUnimodalShape, ParseError


@dataclass(frozen=True)
class HilbertFunction:
    """Validated Hilbert function, trailing zeros stripped.

    The empty sequence is allowed only as the degenerate component of a
    block with ``delta_i = delta_{i+1} = 0`` (the quotient by the unit ideal);
    :func:`validate` never produces it.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_shape(self.values)

    @property
    def order(self) -> int:
        """Degree ``d`` of the first generator."""
        for i, t in enumerate(self.values):
            if t != i + 1:
                return i
        return len(self.values)

    @property
    def socle(self) -> int:
        """Socle degree ``j``; equals ``d - 1`` for a full triangle."""
        return len(self.values) - 1

    d = order
    j = socle

    def t(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def delta(self, i: int) -> int:
        """``t_{i-1} - t_i``."""
        return self.t(i - 1) - self.t(i)

    @property
    def size(self) -> int:
        return sum(self.values)

    def is_triangle(self) -> bool:
        return self.socle < self.order

    def is_single_block(self) -> bool:
        return self.socle <= self.order

    def block_degrees(self) -> range:
        return range(self.order, self.socle + 1)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return format_hilbert(self)


class Box(NamedTuple):
    degree: int
    height: int
    width: int

    @property
    def area(self) -> int:
        return self.height * self.width


def _check_shape(values):
    if not values:
        return
    if any(v <= 0 for v in values):
        raise NonUnimodalShape(f"values must be positive: {values}")
    d = len(values)
    for i, t in enumerate(values):
        if t != i + 1:
            d = i
            break
    if d < len(values) and values[d] > d:
        raise NonUnimodalShape(f"t_{d}={values[d]} exceeds the order {d}")
    for i in range(d, len(values) - 1):
        if values[i + 1] > values[i]:
            raise NonUnimodalShape(
                f"t_{i + 1}={values[i + 1]} > t_{i}={values[i]} past the order"
            )


def validate(values: Iterable[int]) -> HilbertFunction:
    """Build a :class:`HilbertFunction`, accepting optional trailing zeros."""
    vals = [int(v) for v in values]
    while vals and vals[-1] == 0:
        vals.pop()
    if not vals:
        raise EmptyInput("empty Hilbert function")
    return HilbertFunction(tuple(vals))


def parse_hilbert(text: str) -> HilbertFunction:
    """Parse ``"1,2,3,4,2,0"``."""
    text = text.strip()
    if not text:
        raise EmptyInput("empty Hilbert function")
    vals = []
    pos = 0
    for tok in text.split(","):
        s = tok.strip()
        if not s.isdigit():
            raise ParseError(f"expected a non-negative integer, got {tok!r}", pos)
        vals.append(int(s))
        pos += len(tok) + 1
    return validate(vals)


def format_hilbert(T: HilbertFunction, trailing_zero: bool = False) -> str:
    s = ",".join(str(v) for v in T.values)
    return s + ",0" if trailing_zero else s


def deltas(T: HilbertFunction) -> tuple[int, ...]:
    """``(delta_d, ..., delta_{j+1})``."""
    return tuple(T.delta(i) for i in range(T.order, T.socle + 2))


def boxes(T: HilbertFunction) -> tuple[Box, ...]:
    """Box ``delta_{i+1} x (1 + delta_i)`` for each block degree ``i``."""
    return tuple(Box(i, T.delta(i + 1), 1 + T.delta(i)) for i in T.block_degrees())


def kappa_T(T: HilbertFunction) -> int:
    """Generic number of generators over the whole family with Hilbert function T."""
    if not T.values:
        return 1
    d = T.order
    total = 1 + T.delta(d)
    # degree i + 1 needs at least [delta_{i+1} - delta_i]^+ new generators
    for i in range(d, T.socle + 1):
        total += max(T.delta(i + 1) - T.delta(i), 0)
    return total


def dim_GT(T: HilbertFunction) -> int:
    return sum((T.delta(i) + 1) * T.delta(i + 1) for i in T.block_degrees())


def single_block(d: int, t: int) -> HilbertFunction:
    """``(1, 2, ..., d, t)``; ``t = 0`` gives the triangle of order ``d``."""
    return HilbertFunction(tuple(range(1, d + 1)) + ((t,) if t else ()))


def single_block_components(T: HilbertFunction) -> tuple[tuple[int, HilbertFunction], ...]:
    """Components ``(i, T_i)`` with ``T_i = (1, ..., d_i, delta_{i+1})``."""
    out = []
    for i in T.block_degrees():
        lo, hi = T.delta(i), T.delta(i + 1)
        out.append((i, single_block(lo + hi, hi)))
    return tuple(out)


def block_params(T: HilbertFunction) -> tuple[int, int, int]:
    """``(d, t, s)`` for a single-block (or triangle) T, with ``s = d + 1 - t``."""
    d = T.order
    t = T.t(d)
    return d, t, d + 1 - t


def _first_run(T: HilbertFunction):
    d = T.order
    for i in range(d, T.socle):
        if T.t(i) == T.t(i + 1) < d:
            return i
    return None


def is_elementary(T: HilbertFunction) -> bool:
    return _first_run(T) is None


def split_once(T: HilbertFunction):
    """Split at the first constant run ``t_i = t_{i+1} = s < d``.

    Returns ``(T1, T2, s)`` with ``T1_u = min(t_u, s)`` and
    ``T2_u = t_{u+s} - s``, or ``None`` when T is elementary.
    """
    i = _first_run(T)
    if i is None:
        return None
    s = T.t(i)
    t1 = tuple(min(v, s) for v in T.values)
    t2 = []
    u = 0
    while T.t(u + s) - s > 0:
        t2.append(T.t(u + s) - s)
        u += 1
    return HilbertFunction(t1), HilbertFunction(tuple(t2)), s


def elementary_factors(T: HilbertFunction) -> tuple[HilbertFunction, ...]:
    """Elementary factors, ordered so that :func:`splice_factors` inverts."""
    parts = split_once(T)
    if parts is None:
        return (T,)
    t1, t2, _ = parts
    return elementary_factors(t1) + (t2,)


def splice_factors(factors) -> HilbertFunction:
    """Inverse of :func:`elementary_factors`."""
    acc = list(factors[0].values)
    for f in factors[1:]:
        s = HilbertFunction(tuple(acc)).order
        n = max(len(acc), s + len(f.values))
        acc += [0] * (n - len(acc))
        for u, v in enumerate(f.values):
            acc[u + s] += v
    return HilbertFunction(tuple(acc))


def all_hilbert_functions(n: int):
    """Every valid T with ``|T| = n``, in a deterministic order."""
    out = []

    def tail(prefix, remaining, cap):
        if remaining == 0:
            out.append(HilbertFunction(tuple(prefix)))
            return
        for t in range(min(cap, remaining), 0, -1):
            prefix.append(t)
            tail(prefix, remaining - t, t)
            prefix.pop()

    d = 1
    while d * (d + 1) // 2 <= n:
        head = list(range(1, d + 1))
        tail(head, n - d * (d + 1) // 2, d)
        d += 1
    return out
