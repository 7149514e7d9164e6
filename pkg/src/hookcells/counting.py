"""Counting partitions of fixed diagonal lengths by their generic generator count."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .errors import InvalidShape, NotSingleBlock
from .hilbert import HilbertFunction, block_params, kappa_T, single_block_components


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is zero whenever ``k`` is out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _block_counts(T: HilbertFunction) -> list[tuple[int, int]]:
    """``(A_i, S_i)`` for each block degree ``i`` from ``d`` to ``j``.

    ``A_i`` counts the choices in block ``i`` and ``S_i`` the special ones.
    """
    out = []
    for i in T.block_degrees():
        lo, mid, hi = T.t(i - 1), T.t(i), T.t(i + 1)
        a = binom(lo - hi + 1, mid - hi)
        excess = max(2 * mid - hi - lo, 0)
        out.append((a, binom(lo - hi + 1, mid - hi - excess - 1)))
    return out


def count_partitions(T: HilbertFunction) -> int:
    """Size of ``P(T)`` as a product of one binomial per block."""
    if not T.values:
        return 1
    return prod(a for a, _ in _block_counts(T))


def _single_window(T: HilbertFunction) -> range:
    if not T.values:
        return range(1, 2)
    d, t, s = block_params(T)
    delta = max(t + 1 - s, 0)
    return range(s + delta, s + t + 1)


def mu_single(T: HilbertFunction, k: int) -> int:
    """Partitions of a single-block T whose generator count is ``k``."""
    if T.values and not T.is_single_block():
        raise NotSingleBlock(f"{T.values} has more than one block")
    if not T.values:
        return 1 if k == 1 else 0
    d, t, s = block_params(T)
    delta = max(t + 1 - s, 0)
    n = s + t
    if k == s + delta:
        return binom(n, s) - binom(n, s + delta + 1)
    if s + delta < k <= n:
        return binom(n, k) - binom(n, k + 1)
    return 0


def _shift(T: HilbertFunction) -> int:
    d, j = T.order, T.socle
    return (T.t(d) - d) - (T.t(j) - j)


def mu(T: HilbertFunction, k: int) -> int:
    """Partitions of T with generator count ``k``, by convolving the blocks.

    The component counts ``k_i`` must sum to ``k`` plus a shift fixed by T;
    each ``k_i`` ranges only over its block's feasible window.
    """
    if not T.values or T.is_single_block():
        return mu_single(T, k)
    comps = [Ti for _, Ti in single_block_components(T)]
    # distribution of partial sums, block by block
    dist = {0: 1}
    for Ti in comps:
        nxt: dict[int, int] = {}
        for ki in _single_window(Ti):
            m = mu_single(Ti, ki)
            if not m:
                continue
            for acc, c in dist.items():
                nxt[acc + ki] = nxt.get(acc + ki, 0) + c * m
        dist = nxt
    return dist.get(k + _shift(T), 0)


def kappa_window(T: HilbertFunction) -> range:
    """Values of ``k`` at which ``mu(T, k)`` can be nonzero."""
    if not T.values or T.is_single_block():
        return _single_window(T)
    lo = hi = 0
    for _, Ti in single_block_components(T):
        w = _single_window(Ti)
        lo += w.start
        hi += w.stop - 1
    return range(lo - _shift(T), hi - _shift(T) + 1)


def count_special(T: HilbertFunction) -> int:
    """Inclusion-exclusion over the set of blocks forced to be special."""
    if not T.values:
        return 0
    blocks = _block_counts(T)
    idx = range(len(blocks))
    total = 0
    for size in range(1, len(blocks) + 1):
        sign = 1 if size % 2 else -1
        for lam in combinations(idx, size):
            chosen = set(lam)
            total += sign * prod(blocks[i][1] if i in chosen else blocks[i][0] for i in idx)
    return total


def count_nonspecial(T: HilbertFunction) -> int:
    """Product of the per-block non-special counts."""
    if not T.values:
        return 1
    return prod(a - s for a, s in _block_counts(T))


def ci_shape(d: int, k: int) -> HilbertFunction:
    """Diagonal lengths of the complete-intersection cases.

    ``k = 0``: ``(1, ..., d, d-1, ..., 1)``.  ``k >= 2``: ``d`` repeated
    ``k`` times and then descending to 1.
    """
    if d < 2 or k < 0 or k == 1:
        raise InvalidShape(f"need d >= 2 and k = 0 or k >= 2, got d={d}, k={k}")
    up = tuple(range(1, d + 1))
    down = tuple(range(d - 1, 0, -1))
    if k == 0:
        return HilbertFunction(up + down)
    return HilbertFunction(up + (d,) * (k - 1) + down)


def ci_jordan_count(d: int, k: int) -> int:
    """Non-special partitions of the complete-intersection shape."""
    T = ci_shape(d, k)
    return count_partitions(T) - count_special(T)


@dataclass(frozen=True)
class KappaDistribution:
    T: HilbertFunction
    counts: dict[int, int]
    total: int
    special: int

    def rows(self):
        """``(k, mu, cumulative, special)`` in increasing ``k``."""
        base = kappa_T(self.T)
        run = 0
        for k in sorted(self.counts):
            run += self.counts[k]
            yield k, self.counts[k], run, k > base

    def to_json(self) -> str:
        return json.dumps(
            {
                "T": list(self.T.values),
                "total": self.total,
                "special": self.special,
                "rows": [
                    {"k": k, "mu": m, "cumulative": c, "special": s}
                    for k, m, c, s in self.rows()
                ],
            },
            indent=2,
        )

    def to_tsv(self) -> str:
        lines = ["k\tmu\tcumulative\tspecial"]
        lines += [f"{k}\t{m}\t{c}\t{int(s)}" for k, m, c, s in self.rows()]
        return "\n".join(lines)


def kappa_distribution(T: HilbertFunction) -> KappaDistribution:
    counts = {k: mu(T, k) for k in kappa_window(T)}
    counts = {k: v for k, v in counts.items() if v}
    return KappaDistribution(T, counts, count_partitions(T), count_special(T))
