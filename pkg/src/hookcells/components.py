"""Single-block components of a partition, and elementary-factor splitting."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOutOfRange
from .hilbert import HilbertFunction, single_block, split_once
from .partitions import Monomial, Partition, border_monomials, hands


@dataclass(frozen=True)
class Component:
    degree: int
    T: HilbertFunction
    P: Partition
    V1: tuple[Monomial, ...]
    V2: tuple[Monomial, ...]

    def to_json(self):
        return {
            "degree": self.degree,
            "T_i": list(self.T.values),
            "P_i": list(self.P.parts),
            "V_i1": [m.to_json() for m in self.V1],
            "V_i2": [m.to_json() for m in self.V2],
        }


@dataclass(frozen=True)
class ComponentDecomposition:
    partition: Partition
    entries: tuple[Component, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_json(self):
        return [c.to_json() for c in self.entries]


def _check_degree(P: Partition, i: int):
    T = P.T
    if not T.order <= i <= T.socle:
        raise DegreeOutOfRange(f"degree {i} outside [{T.order}, {T.socle}]")
    return T


def component_sets(P: Partition, i: int):
    """``(V_i1, V_i2)``: border monomials feeding the degree-``i`` component."""
    T = _check_degree(P, i)
    A, B = border_monomials(P, i)
    V1 = list(A)
    if not P.contains(Monomial(i, 0)):
        # add the vertical-border monomial closest above the top of A
        top = A[0].ydeg if A else i + 1
        above = [m for m in B if m.ydeg < top]
        if above:
            V1.insert(0, above[-1])
    V2 = hands(P, i)[: T.delta(i + 1)]
    return tuple(V1), tuple(V2)


def _keep_rows_cols(P: Partition, cols, rows) -> Partition:
    parts = []
    for r in sorted(rows):
        n = sum(1 for c in cols if c < P.part(r))
        if n:
            parts.append(n)
    return Partition(tuple(sorted(parts, reverse=True)))


def component_partition(P: Partition, i: int) -> Partition:
    """Delete the rows and columns of P not indexed by ``V_i1 + V_i2``."""
    V1, V2 = component_sets(P, i)
    mons = V1 + V2
    return _keep_rows_cols(P, {m.xdeg for m in mons}, {m.ydeg for m in mons})


def component_partition_by_relabel(P: Partition, i: int) -> Partition:
    """Same result built from the order-preserving relabelling of ``V_i1 + V_i2``.

    Sorting the ``d_i + 1`` monomials by ydeg and sending the k-th one to
    ``x^{d_i - k} y^k`` gives the degree-``d_i`` slice of the component; all
    lower degrees are full and all higher degrees empty.
    """
    T = P.T
    V1, V2 = component_sets(P, i)
    d_i = T.delta(i) + T.delta(i + 1)
    allm = sorted(V1 + V2, key=lambda m: m.ydeg)
    inside = {k for k, m in enumerate(allm) if m in V2}
    rows = []
    for r in range(d_i + 1):
        n = d_i - r + (1 if r in inside else 0)
        if n:
            rows.append(n)
    return Partition(tuple(rows))


def decompose(P: Partition) -> ComponentDecomposition:
    T = P.T
    out = []
    for i in T.block_degrees():
        V1, V2 = component_sets(P, i)
        Ti = single_block(T.delta(i) + T.delta(i + 1), T.delta(i + 1))
        out.append(Component(i, Ti, component_partition(P, i), V1, V2))
    return ComponentDecomposition(P, tuple(out))


def split_partition_once(P: Partition):
    """Partition-level analogue of :func:`hilbert.split_once`.

    At the first constant run ``t_i = t_{i+1} = s < d`` the degree-i
    monomials of ``E_P`` are exactly the multiples of one ``x^a y^b`` with
    ``a + b = s``.  The cells in the quadrant above ``x^a y^b`` form the
    second factor (shifted to the origin); the rest form the first.
    """
    parts = split_once(P.T)
    if parts is None:
        return None
    T1, T2, s = parts
    T = P.T
    i = next(k for k in range(T.order, T.socle) if T.t(k) == T.t(k + 1) == s)
    outside = [a for a in range(i + 1) if not P.contains(Monomial(a, i - a))]
    a = outside[0]
    b = s - a
    assert i - outside[-1] == b and len(outside) == i + 1 - s
    rows = (P.part(r) if r < b else min(P.part(r), a) for r in range(len(P)))
    P1 = Partition(tuple(v for v in rows if v))
    P2 = Partition(tuple(p - a for p in P.parts[b:] if p > a))
    assert P1.T == T1 and P2.T == T2
    return P1, P2, s


def elementary_partition_factors(P: Partition) -> tuple[Partition, ...]:
    """Factors ``P(1), ..., P(r)`` aligned with :func:`hilbert.elementary_factors`."""
    parts = split_partition_once(P)
    if parts is None:
        return (P,)
    P1, P2, _ = parts
    return elementary_partition_factors(P1) + (P2,)
