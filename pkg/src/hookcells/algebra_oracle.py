"""Exact graded linear algebra over GF(p) for ideals of k[x, y].

A degree-i form is stored as a list of ``i + 1`` coefficients indexed by
ydeg, so ``x^a y^b`` is position ``b``.  The initial monomial of a form is its
nonzero term of highest ydeg, and echelon pivots are chosen the same way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import ArityMismatch, BudgetExhausted, DegreeTooSmall, InvalidShape
from .partitions import Monomial, Partition, corner_monomials


@dataclass(frozen=True)
class HomogeneousForm:
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("need degree + 1 coefficients")

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "HomogeneousForm":
        v = [0] * (m.degree + 1)
        v[m.ydeg] = c
        return cls(m.degree, tuple(v))

    @classmethod
    def from_terms(cls, degree: int, terms: dict, p: int) -> "HomogeneousForm":
        """``terms`` maps Monomial (or ``(xdeg, ydeg)``) to coefficient."""
        v = [0] * (degree + 1)
        for m, c in terms.items():
            a, b = m
            if a + b != degree:
                raise ValueError(f"monomial {m} is not of degree {degree}")
            v[b] = (v[b] + c) % p
        return cls(degree, tuple(v))

    def initial(self):
        for b in range(self.degree, -1, -1):
            if self.coeffs[b]:
                return Monomial(self.degree - b, b)
        return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


class EchelonSpace:
    """Subspace of ``R_i`` in reduced row-echelon form.

    ``rows`` maps pivot ydeg to a row normalised to 1 at its pivot; every row
    vanishes at every other pivot.
    """

    __slots__ = ("degree", "p", "rows")

    def __init__(self, degree: int, p: int):
        self.degree = degree
        self.p = p
        self.rows: dict[int, list[int]] = {}

    def copy(self) -> "EchelonSpace":
        e = EchelonSpace(self.degree, self.p)
        e.rows = {k: v[:] for k, v in self.rows.items()}
        return e

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec) -> list[int]:
        p = self.p
        v = [c % p for c in vec]
        for piv, row in self.rows.items():
            c = v[piv]
            if c:
                for k, r in enumerate(row):
                    if r:
                        v[k] = (v[k] - c * r) % p
        return v

    def add(self, vec) -> bool:
        """Insert a vector; return whether the dimension grew."""
        v = self.reduce(vec)
        piv = next((b for b in range(len(v) - 1, -1, -1) if v[b]), None)
        if piv is None:
            return False
        p = self.p
        inv = pow(v[piv], p - 2, p)
        v = [c * inv % p for c in v]
        for row in self.rows.values():
            c = row[piv]
            if c:
                for k, r in enumerate(v):
                    if r:
                        row[k] = (row[k] - c * r) % p
        self.rows[piv] = v
        return True

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def pivots(self) -> frozenset[Monomial]:
        return frozenset(Monomial(self.degree - b, b) for b in self.rows)

    def times_linear(self) -> "EchelonSpace":
        """``R_1`` times this space, in degree + 1."""
        out = EchelonSpace(self.degree + 1, self.p)
        # x * rows keeps every pivot and is already reduced
        out.rows = {b: row + [0] for b, row in self.rows.items()}
        for row in self.rows.values():
            out.add([0] + row)  # y * f
        return out


@dataclass
class GradedIdealBasis:
    """Per-degree echelon bases of the ideal generated by some forms."""

    p: int
    spaces: dict[int, EchelonSpace] = field(default_factory=dict)
    new_generators: dict[int, int] = field(default_factory=dict)

    def dim(self, i: int) -> int:
        return len(self.spaces[i])


def close(generators: Sequence[HomogeneousForm], bound: int, p: int) -> GradedIdealBasis:
    """Span closure under multiplication by ``R_1`` in degrees ``0..bound``."""
    by_deg: dict[int, list[HomogeneousForm]] = {}
    for g in generators:
        by_deg.setdefault(g.degree, []).append(g)
    basis = GradedIdealBasis(p)
    prev = EchelonSpace(-1, p)
    for i in range(bound + 1):
        cur = prev.times_linear() if i > 0 else EchelonSpace(0, p)
        before = len(cur)
        for g in by_deg.get(i, ()):
            cur.add(g.coeffs)
        basis.spaces[i] = cur
        basis.new_generators[i] = len(cur) - before
        prev = cur
    return basis


def hilbert_function(generators, bound: int, p: int) -> tuple[int, ...]:
    """``dim R_i - dim I_i`` for ``i <= bound``, trailing zeros stripped."""
    basis = close(generators, bound, p)
    vals = [i + 1 - basis.dim(i) for i in range(bound + 1)]
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


def initial_ideal(generators, bound: int, p: int) -> dict[int, frozenset[Monomial]]:
    basis = close(generators, bound, p)
    return {i: basis.spaces[i].pivots() for i in range(bound + 1)}


def minimal_generator_count(generators, bound: int, p: int) -> dict[int, int]:
    """``dim I_i - dim (R_1 I_{i-1})`` per degree, zero entries dropped."""
    basis = close(generators, bound, p)
    return {i: n for i, n in basis.new_generators.items() if n}


# --- cells ------------------------------------------------------------------


def tail_support(P: Partition, c: Monomial) -> tuple[Monomial, ...]:
    """Cells of the same degree as ``c`` with strictly lower ydeg."""
    e = c.degree
    return tuple(
        Monomial(e - b, b) for b in range(c.ydeg) if P.contains(Monomial(e - b, b))
    )


def tail_parameter_count(P: Partition) -> int:
    return sum(len(tail_support(P, c)) for c in corner_monomials(P))


def _ideal_slice(P: Partition, e: int) -> frozenset[Monomial]:
    return frozenset(Monomial(e - b, b) for b in range(e + 1) if not P.contains(Monomial(e - b, b)))


@dataclass
class CellPoint:
    """An accepted tail tuple; ``profile`` maps degree to minimal generators."""

    cell: "_Cell"
    tails: tuple[int, ...]
    profile: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.profile.values())

    @property
    def generators(self) -> tuple[HomogeneousForm, ...]:
        out = []
        k = 0
        for e in sorted(self.cell.corners):
            n = self.cell.nparams[e]
            out += self.cell.forms(e, self.tails[k:k + n])
            k += n
        return tuple(out)


def _rank(vectors, p) -> int:
    space = EchelonSpace(len(vectors[0]) - 1, p)
    return sum(space.add(v) for v in vectors)


class _Cell:
    """Degree-by-degree search over the tails of the corner generators."""

    def __init__(self, P: Partition, p: int):
        T = P.T
        if p <= T.socle or not is_prime(p):
            raise InvalidShape(f"need a prime exceeding the socle degree {T.socle}, got {p}")
        self.P, self.p, self.T = P, p, T
        self.top = T.socle + 1
        self.corners: dict[int, list[tuple[Monomial, tuple[Monomial, ...]]]] = {}
        for c in corner_monomials(P):
            self.corners.setdefault(c.degree, []).append((c, tail_support(P, c)))
        self.nparams = {e: sum(len(s) for _, s in cs) for e, cs in self.corners.items()}
        self.target = {e: e + 1 - T.t(e) for e in range(self.top + 1)}
        self.slices = {e: _ideal_slice(P, e) for e in range(self.top + 1)}

    @property
    def tuple_count(self) -> int:
        return self.p ** sum(self.nparams.values())

    def forms(self, e, values):
        out = []
        k = 0
        for c, supp in self.corners.get(e, ()):
            v = [0] * (e + 1)
            v[c.ydeg] = 1
            for m in supp:
                v[m.ydeg] = values[k] % self.p
                k += 1
            out.append(HomogeneousForm(e, tuple(v)))
        return out

    def base(self, prev: EchelonSpace, e: int) -> EchelonSpace:
        return prev.times_linear() if e > 0 else EchelonSpace(0, self.p)

    def accept(self, base: EchelonSpace, e: int, vectors):
        """Degree-e space spanned by ``base`` and ``vectors`` if its dimension is right."""
        cur = base.copy()
        for v in vectors:
            cur.add(v)
        if len(cur) != self.target[e]:
            return None
        if cur.pivots() != self.slices[e]:
            raise AssertionError(f"initial ideal differs from E_P in degree {e}")
        return cur

    def candidates(self, base: EchelonSpace, e: int):
        """Yield ``(values, reduced generator vectors)`` for every tail tuple.

        Reduction modulo ``base`` is linear, so the corner and each tail
        monomial are reduced once and tuples are formed by combination.
        """
        pieces = self._reduced_pieces(base, e)
        for values in product(range(self.p), repeat=self.nparams.get(e, 0)):
            yield values, self._combine(pieces, values)

    def exhaustive(self) -> Iterator[CellPoint]:
        def walk(e, prev, tails, profile):
            if e > self.top:
                yield CellPoint(self, tuple(tails), dict(profile))
                return
            base = self.base(prev, e)
            need = self.target[e] - len(base)
            if need < 0:
                return
            for values, vecs in self.candidates(base, e):
                if vecs and _rank(vecs, self.p) != need:
                    continue
                if not vecs and need:
                    continue
                cur = self.accept(base, e, vecs)
                if need:
                    profile[e] = need
                yield from walk(e + 1, cur, tails + list(values), profile)
                profile.pop(e, None)

        yield from walk(0, EchelonSpace(-1, self.p), [], {})

    def _reduced_pieces(self, base: EchelonSpace, e: int):
        pieces = []
        for c, supp in self.corners.get(e, ()):
            unit = [0] * (e + 1)
            unit[c.ydeg] = 1
            cols = []
            for m in supp:
                u = [0] * (e + 1)
                u[m.ydeg] = 1
                cols.append(base.reduce(u))
            pieces.append((base.reduce(unit), cols))
        return pieces

    def _combine(self, pieces, values):
        p = self.p
        vecs = []
        k = 0
        for head, cols in pieces:
            v = head[:]
            for col in cols:
                a = values[k]
                k += 1
                if a:
                    v = [(x + a * y) % p for x, y in zip(v, col)]
            vecs.append(v)
        return vecs

    def random_point(self, rng: random.Random, draws: list[int], limit: int,
                     tries: int = 64) -> CellPoint | None:
        """Randomised depth-first search for one accepted tuple.

        Each degree draws uniform tail values up to ``tries`` times and
        descends on the first acceptable ones, backtracking when a later
        degree cannot be completed.  ``draws[0]`` counts tuples drawn and
        the search stops once it reaches ``limit``.
        """
        p = self.p

        def walk(e, prev, tails, profile):
            if e > self.top:
                return CellPoint(self, tuple(tails), dict(profile))
            base = self.base(prev, e)
            need = self.target[e] - len(base)
            if need < 0:
                return None
            n = self.nparams.get(e, 0)
            pieces = self._reduced_pieces(base, e)
            for _ in range(tries if n else 1):
                if draws[0] >= limit:
                    return None
                draws[0] += 1
                values = [rng.randrange(p) for _ in range(n)]
                vecs = self._combine(pieces, values)
                if (_rank(vecs, p) if vecs else 0) != need:
                    continue
                cur = self.accept(base, e, vecs)
                if need:
                    profile[e] = need
                found = walk(e + 1, cur, tails + values, profile)
                profile.pop(e, None)
                if found is not None:
                    return found
            return None

        return walk(0, EchelonSpace(-1, p), [], {})


def cell_points(P: Partition, p: int, budget: int = 10**6, seed: int = 0,
                stats: dict | None = None) -> Iterator[CellPoint]:
    """Accepted generator systems of the cell of ``E_P`` over GF(p).

    With at most ``budget`` tail tuples every tuple is decided (degree by
    degree, so a rejected prefix rejects all of its extensions at once).
    Otherwise tuples are drawn uniformly at random, degree by degree, until
    ``budget`` draws are spent; each completed draw sequence is a point.
    ``stats["tested"]`` receives the number of tuples covered.
    """
    cell = _Cell(P, p)
    stats = stats if stats is not None else {}
    if cell.tuple_count <= budget:
        stats["tested"] = cell.tuple_count
        stats["exhaustive"] = True
        yield from cell.exhaustive()
        return
    stats["exhaustive"] = False
    rng = random.Random(seed)
    draws = [0]
    while draws[0] < budget:
        pt = cell.random_point(rng, draws, budget)
        stats["tested"] = draws[0]
        if pt is not None:
            yield pt


@dataclass
class OracleResult:
    partition: Partition
    prime: int
    tuples_tested: int
    accepted: int
    min_total: int
    min_profile: dict[int, int]
    primes: tuple[int, ...] = ()
    exhaustive: bool = True


def cell_minimum(P: Partition, p: int, budget: int = 10**6, seed: int = 0) -> OracleResult:
    """Fewest minimal generators over the accepted points found."""
    stats: dict = {}
    best = None
    accepted = 0
    for pt in cell_points(P, p, budget, seed, stats):
        accepted += 1
        if best is None or pt.total < best.total:
            best = pt
    if best is None:
        raise BudgetExhausted(
            f"no accepted point for {P} over GF({p}) after {stats.get('tested', 0)} tuples"
        )
    return OracleResult(P, p, stats["tested"], accepted, best.total, best.profile,
                        (p,), stats["exhaustive"])


def first_prime(P: Partition) -> int:
    """Smallest prime that is at least 5 and exceeds the socle degree."""
    p = 5
    while p <= P.T.socle:
        p = next_prime(p)
    return p


def oracle_kappa(P: Partition, p: int | None = None, budget: int = 10**6,
                 max_primes: int = 6, seed: int = 0) -> OracleResult:
    """Generic generator count, stable across two consecutive primes."""
    if p is None:
        p = first_prime(P)
    res = cell_minimum(P, p, budget, seed)
    primes = [p]
    for _ in range(max_primes - 1):
        q = next_prime(primes[-1])
        nxt = cell_minimum(P, q, budget, seed)
        primes.append(q)
        stable = (nxt.min_total, nxt.min_profile) == (res.min_total, res.min_profile)
        res = nxt
        if stable:
            break
    res.primes = tuple(primes)
    return res


# --- corner kick-off --------------------------------------------------------


def kick_off_targets(d: int, m: int, betas: Sequence[int]) -> tuple[Monomial, ...]:
    return tuple(Monomial(d + 1 - b, b) for b in betas)


def kick_off_generators(d: int, m: int, lambdas: Sequence[int], targets: Sequence[Monomial],
                        p: int = 13) -> tuple[HomogeneousForm, ...]:
    """Degree-d forms ``f_0, ..., f_m`` whose relations produce the targets.

    ``x f_{i+1} - y f_i = lambda_{i+1} N_{i+1}``, so each target with a
    nonzero lambda lies in the ideal in degree d + 1.
    """
    if len(lambdas) != m or len(targets) != m:
        raise ArityMismatch(f"m={m} but got {len(lambdas)} lambdas and {len(targets)} targets")
    if 2 * m > d:
        raise DegreeTooSmall(f"2m={2 * m} exceeds d={d}")
    betas = [t.ydeg for t in targets]
    alphas = [t.xdeg for t in targets]
    if any(t.degree != d + 1 for t in targets):
        raise InvalidShape("targets must have degree d + 1")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])) or (betas and (betas[0] < 0 or betas[-1] >= d - m)):
        raise InvalidShape(f"need 0 <= beta_1 < ... < beta_m < d - m, got {betas}")
    lam = [0] + [c % p for c in lambdas]
    al = [0] + alphas
    be = [0] + betas

    def poly(deg, terms):
        v = [0] * (deg + 1)
        for (a, b), c in terms.items():
            v[b] = (v[b] + c) % p
        return v

    forms = [HomogeneousForm(d, tuple(poly(d, {(m, d - m): 1})))]
    u = {(0, d - m): 1}  # f_0 = x^m * u_0
    for i in range(m):
        # u_{i+1} = y * (u_i + lambda_i x^{alpha_i - 1 - m + i} y^{beta_i})
        nu = {}
        for (a, b), c in u.items():
            nu[(a, b + 1)] = (nu.get((a, b + 1), 0) + c) % p
        if i > 0 and lam[i]:
            key = (al[i] - 1 - m + i, be[i] + 1)
            nu[key] = (nu.get(key, 0) + lam[i]) % p
        u = nu
        terms = {(a + m - i - 1, b): c for (a, b), c in u.items()}
        if lam[i + 1]:
            key = (al[i + 1] - 1, be[i + 1])
            terms[key] = (terms.get(key, 0) + lam[i + 1]) % p
        forms.append(HomogeneousForm(d, tuple(poly(d, terms))))
    return tuple(forms)


def members(forms: Sequence[HomogeneousForm], targets: Sequence[Monomial], p: int) -> tuple[bool, ...]:
    """Which targets lie in the ideal generated by ``forms`` (same degree)."""
    deg = targets[0].degree
    basis = close(forms, deg, p)
    space = basis.spaces[deg]
    return tuple(space.contains(HomogeneousForm.monomial(t).coeffs) for t in targets)
