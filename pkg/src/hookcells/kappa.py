"""Closed formulas for the generic number of generators of ideals in a cell."""

from __future__ import annotations

from dataclasses import dataclass

from .components import decompose, elementary_partition_factors
from .errors import EmptyBlock, NotSingleBlock
from .hilbert import block_params, kappa_T
from .hookcode import hook_code
from .partitions import Partition, corner_monomials


@dataclass(frozen=True)
class GeneratorProfile:
    start_degree: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[int, int]:
        return {self.start_degree + k: c for k, c in enumerate(self.counts)}


@dataclass(frozen=True)
class BlockCodeStats:
    degree: int
    delta_i: int
    delta_next: int
    runs: tuple[tuple[int, int], ...]
    tau: tuple[int, ...]
    r: tuple[int, ...]
    g: tuple[int, ...]

    @property
    def theta(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.g, self.r))

    @property
    def n(self) -> int:
        return len(self.runs)


def taus(runs) -> tuple[int, ...]:
    """``tau_k = l_k + ... + l_n - h_k``."""
    out = []
    for k, (h, _) in enumerate(runs):
        out.append(sum(l for _, l in runs[k:]) - h)
    return tuple(out)


def rg_by_cases(runs, delta_i, delta_next):
    """``(r, g)`` split on whether the smallest part is zero."""
    n = len(runs)
    hs = [h for h, _ in runs]
    ls = [l for _, l in runs]
    top = hs[0] == delta_i + 1
    if hs[-1] > 0:
        g = [delta_next - (n - 1) if top else delta_next - n]
        g += [sum(ls[k:]) - (n - k) for k in range(1, n)]
        r = [hs[k] - (n - k) for k in range(n)]
    else:
        g = [delta_next - (n - 2) if top else delta_next - (n - 1)]
        g += [sum(ls[k:]) - (n - 1 - k) for k in range(1, n)]
        r = [hs[k] - (n - 1 - k) for k in range(n)]
    return tuple(r), tuple(g)


def rg_compact(runs, delta_i, delta_next):
    """The same ``(r, g)`` with the two cases folded into max terms."""
    n = len(runs)
    hs = [h for h, _ in runs]
    ls = [l for _, l in runs]
    zero_tail = max(1 - hs[-1], 0)
    r = tuple(hs[k] - (n - k) + zero_tail for k in range(n))
    g = tuple(
        sum(ls[k:]) - (n - k) + zero_tail + max(hs[k] - delta_i, 0) for k in range(n)
    )
    return r, g


def _stats(degree, parts, delta_i, delta_next) -> BlockCodeStats:
    runs = _runs(parts)
    r, g = rg_compact(runs, delta_i, delta_next)
    return BlockCodeStats(degree, delta_i, delta_next, runs, taus(runs), r, g)


def _runs(parts):
    out: list[list[int]] = []
    for h in parts:
        if out and out[-1][0] == h:
            out[-1][1] += 1
        else:
            out.append([h, 1])
    return tuple((h, l) for h, l in out)


def block_stats(P: Partition, i: int) -> BlockCodeStats:
    T = P.T
    if not T.order <= i <= T.socle or T.delta(i + 1) == 0:
        raise EmptyBlock(f"block {i} of {P} is empty")
    parts = hook_code(P).block(i).parts
    return _stats(i, parts, T.delta(i), T.delta(i + 1))


def kappa_single_block(P: Partition) -> int:
    """``s + max(t + 1 - s, 0, tau_1, ..., tau_n)``."""
    T = P.T
    if not T.is_single_block():
        raise NotSingleBlock(f"{P} has diagonal lengths {T.values}")
    d, t, s = block_params(T)
    if t == 0:
        return d + 1
    runs = _runs(hook_code(P).block(d).parts)
    return s + max(t + 1 - s, 0, *taus(runs))


def kappa_single_block_recursive(P: Partition) -> int:
    """Single-block kappa through repeated removal of the first column.

    Removing the first column of P corresponds to ``I : x``.  If the code ends
    in a zero part the colon ideal needs one generator fewer; otherwise kappa
    is the colon's kappa, floored at ``s``.  Triangles (including the empty
    partition) are the base case with ``d + 1`` generators.
    """
    T = P.T
    if not T.is_single_block():
        raise NotSingleBlock(f"{P} has diagonal lengths {T.values}")
    d, t, s = block_params(T)
    if t == 0:
        return d + 1
    parts = hook_code(P).block(d).parts
    bar = Partition(tuple(p - 1 for p in P.parts if p > 1))
    k = kappa_single_block_recursive(bar)
    if parts[-1] == 0:
        return k + 1
    return max(k, s)


def beta_profile(P: Partition) -> GeneratorProfile:
    """Generators per degree, ``d`` through ``j + 1``."""
    T = P.T
    d = T.order
    counts = [d + 1 - T.t(d)]
    code = hook_code(P)
    for b in code.blocks:
        lo, hi = T.delta(b.degree), T.delta(b.degree + 1)
        if hi == 0:
            counts.append(0)
            continue
        st = _stats(b.degree, b.parts, lo, hi)
        counts.append(max(hi - lo, 0, *st.tau))
    return GeneratorProfile(d, tuple(counts))


def kappa(P: Partition) -> int:
    return beta_profile(P).total


def kappa_by_components(P: Partition) -> int:
    T = P.T
    total = sum(kappa_single_block(c.P) for c in decompose(P))
    d, j = T.order, T.socle
    return total - (T.t(d) - T.t(j)) - (j - d)


def kappa_by_factors(P: Partition) -> int:
    factors = elementary_partition_factors(P)
    return sum(kappa_by_components(f) for f in factors) - len(factors) + 1


def is_special(P: Partition) -> bool:
    return kappa(P) != kappa_T(P.T)


def is_special_single_block(P: Partition) -> bool:
    """Some ``tau_k`` exceeds ``max(t + 1 - s, 0)``."""
    T = P.T
    d, t, s = block_params(T)
    if t == 0:
        return False
    runs = _runs(hook_code(P).block(d).parts)
    return max(taus(runs)) > max(t + 1 - s, 0)


def is_special_by_components(P: Partition) -> bool:
    return any(is_special_single_block(c.P) for c in decompose(P))


def monomial_betti(P: Partition) -> GeneratorProfile:
    """Corner monomials of ``E_P`` per degree, from the hook code alone."""
    T = P.T
    d = T.order
    counts = [d + 1 - T.t(d)]
    for b in hook_code(P).blocks:
        lo, hi = T.delta(b.degree), T.delta(b.degree + 1)
        if hi == 0:
            counts.append(0)
            continue
        hs = [h for h, _ in _runs(b.parts)]
        counts.append(hi - len(hs) + max(1 - hs[-1], 0) + max(hs[0] - lo, 0))
    return GeneratorProfile(d, tuple(counts))


def corner_profile(P: Partition) -> GeneratorProfile:
    """Corner monomials per degree, counted directly."""
    T = P.T
    d = T.order
    counts = [0] * (T.socle + 2 - d)
    for m in corner_monomials(P):
        counts[m.degree - d] += 1
    return GeneratorProfile(d, tuple(counts))


def report(P: Partition) -> dict:
    T = P.T
    return {
        "partition": list(P.parts),
        "T": list(T.values),
        "hook_code": hook_code(P).to_json(),
        "kappa": kappa(P),
        "beta_profile": {str(k): v for k, v in beta_profile(P).as_dict().items()},
        "monomial_betti": {str(k): v for k, v in monomial_betti(P).as_dict().items()},
        "special": is_special(P),
    }


