from itertools import combinations, product

import pytest

from hookcells.algebra_oracle import (
    EchelonSpace,
    HomogeneousForm,
    cell_minimum,
    cell_points,
    close,
    first_prime,
    hilbert_function,
    initial_ideal,
    is_prime,
    kick_off_generators,
    kick_off_targets,
    members,
    minimal_generator_count,
    next_prime,
    oracle_kappa,
    tail_parameter_count,
    tail_support,
)
from hookcells.errors import ArityMismatch, BudgetExhausted, DegreeTooSmall, InvalidShape
from hookcells.hilbert import all_hilbert_functions
from hookcells.kappa import beta_profile, kappa, monomial_betti
from hookcells.partitions import (
    Monomial,
    Partition,
    corner_monomials,
    diagonal_lengths,
    difference_one_hooks,
    enumerate_partitions,
)

from test_partitions import mono


def form(p, **terms):
    """``form(7, y2=1, x1y1=3)`` style constructor over GF(p)."""
    out = {}
    for key, c in terms.items():
        a = b = 0
        for part in key.replace("y", " y").split():
            if part.startswith("x"):
                a = int(part[1:])
            else:
                b = int(part[1:])
        out[(a, b)] = c
    deg = {a + b for a, b in out}.pop()
    return HomogeneousForm.from_terms(deg, out, p)


def monomial_forms(P):
    return [HomogeneousForm.monomial(c) for c in corner_monomials(P)]


def ideal_cells(P, top):
    return {
        i: frozenset(Monomial(i - b, b) for b in range(i + 1) if not P.contains(Monomial(i - b, b)))
        for i in range(top + 1)
    }


# forms and spans


def test_initial_monomial_has_highest_ydeg():
    f = form(7, x2=1, x1y1=3)
    assert f.initial() == Monomial(1, 1)
    assert HomogeneousForm(2, (0, 0, 0)).initial() is None


def test_echelon_space_membership():
    S = EchelonSpace(2, 7)
    assert S.add([1, 2, 0])
    assert not S.add([2, 4, 0])
    assert S.contains([3, 6, 0])
    assert not S.contains([0, 0, 1])
    assert S.pivots() == frozenset({Monomial(1, 1)})


@pytest.mark.parametrize("a", range(7))
def test_complete_intersection_two_three(a):
    gens = [form(7, y2=1, x1y1=a), form(7, x3=1)]
    assert hilbert_function(gens, 5, 7) == (1, 2, 2, 1)
    assert minimal_generator_count(gens, 5, 7) == {2: 1, 3: 1}
    ii = initial_ideal(gens, 5, 7)
    assert ii == ideal_cells(Partition.of(3, 3), 5)


def test_maximal_ideal():
    gens = [HomogeneousForm.monomial(mono("x")), HomogeneousForm.monomial(mono("y"))]
    assert hilbert_function(gens, 3, 5) == (1,)


def test_closure_is_stable_under_linear_forms():
    gens = [form(11, y2=1, x1y1=4, x2=2), form(11, x3=1)]
    basis = close(gens, 5, 11)
    for i in range(5):
        nxt = basis.spaces[i + 1]
        for v in basis.spaces[i].times_linear().rows.values():
            assert nxt.contains(v)


@pytest.mark.parametrize("n", range(1, 13))
def test_monomial_input(n):
    for T in all_hilbert_functions(n):
        for P in enumerate_partitions(T):
            gens = monomial_forms(P)
            top = T.socle + 1
            assert hilbert_function(gens, top, 5) == diagonal_lengths(P).values
            assert initial_ideal(gens, top, 5) == ideal_cells(P, top)
            assert minimal_generator_count(gens, top, 5) == {
                i: c for i, c in monomial_betti(P).as_dict().items() if c
            }


def test_primes():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert next_prime(7) == 11 and next_prime(1) == 2
    assert first_prime(Partition.of(1)) == 5
    assert first_prime(Partition.of(6)) == 7


# cells


def test_tail_support():
    P = Partition.of(4, 1)
    assert tail_support(P, mono("xy")) == (mono("x^2"),)
    assert tail_support(P, mono("y^2")) == (mono("x^2"),)
    assert tail_support(P, mono("x^4")) == ()
    assert tail_parameter_count(P) == 2


def test_square_cell_accepts_every_tail():
    pts = list(cell_points(Partition.of(2, 2), 7))
    assert sorted(pt.tails for pt in pts) == [(a,) for a in range(7)]
    for pt in pts:
        assert hilbert_function(pt.generators, 3, 7) == (1, 2, 1)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_four_one_cell_is_a_parabola(p):
    stats = {}
    pts = list(cell_points(Partition.of(4, 1), p, stats=stats))
    assert stats["tested"] == p**2
    assert len(pts) == p
    # tails are (a, b) on xy + a x^2 and y^2 + b x^2; the second must be -a^2
    assert {pt.tails for pt in pts} == {(a, (-a * a) % p) for a in range(p)}


def test_cell_without_hooks_is_a_point():
    P = Partition.of(2, 2, 1)
    assert not difference_one_hooks(P)
    pts = list(cell_points(P, 7))
    assert len(pts) == 1
    assert set(pts[0].tails) <= {0}


@pytest.mark.parametrize("n", range(1, 8))
def test_accepted_points_count_and_initial_ideal(n):
    # the cell is an affine space of dimension equal to the hook count
    p = 7
    for T in all_hilbert_functions(n):
        for P in enumerate_partitions(T):
            pts = list(cell_points(P, p))
            assert len(pts) == p ** len(difference_one_hooks(P))
            top = T.socle + 1
            want = ideal_cells(P, top)
            for pt in pts:
                assert hilbert_function(pt.generators, top, p) == T.values
                assert initial_ideal(pt.generators, top, p) == want


@pytest.mark.parametrize(
    "parts, expected", [((5, 3, 1), 2), ((4, 3, 3, 2), 4), ((2, 2, 1), 3), ((2, 2), 2), ((3, 3, 1, 1, 1), 3)]
)
def test_oracle_examples(parts, expected):
    P = Partition(parts)
    res = oracle_kappa(P)
    assert res.min_total == expected == kappa(P)
    assert res.exhaustive
    assert len(res.primes) >= 2


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_matches_formula(n):
    for T in all_hilbert_functions(n):
        for P in enumerate_partitions(T):
            res = oracle_kappa(P)
            assert res.min_total == kappa(P)
            want = {i: c for i, c in beta_profile(P).as_dict().items() if c}
            assert res.min_profile == want


def test_oracle_is_non_increasing_in_the_prime():
    P = Partition.of(4, 3, 2, 2, 1)
    totals = [cell_minimum(P, q).min_total for q in (7, 11, 13)]
    assert totals == sorted(totals, reverse=True)
    assert totals[-1] == kappa(P)


def test_sampler_finds_generic_points():
    P = Partition.of(5, 3, 1)
    res = cell_minimum(P, 7, budget=3000)
    assert not res.exhaustive
    assert res.tuples_tested <= 3000
    assert res.accepted > 0
    assert res.min_total == kappa(P)


def test_budget_exhaustion_is_reported():
    with pytest.raises(BudgetExhausted):
        cell_minimum(Partition.of(4, 1), 7, budget=1)


@pytest.mark.parametrize("p", [4, 2, 1])
def test_prime_must_exceed_socle(p):
    with pytest.raises(InvalidShape):
        list(cell_points(Partition.of(3, 1), p))


# corner kick-off


def test_kick_off_four_two():
    targets = kick_off_targets(4, 2, [0, 1])
    assert targets == (mono("x^5"), mono("x^4y"))
    forms = kick_off_generators(4, 2, [1, 1], targets)
    assert len(forms) == 3
    assert members(forms, targets, 13) == (True, True)


def test_kick_off_without_lambdas():
    targets = kick_off_targets(6, 2, [1, 3])
    forms = kick_off_generators(6, 2, [0, 0], targets)
    assert all(sum(1 for c in f.coeffs if c) == 1 for f in forms)
    assert members(forms, targets, 13) == (False, False)


def test_kick_off_single_relation():
    d, p = 5, 13
    (N,) = targets = kick_off_targets(d, 1, [2])
    f0, f1 = kick_off_generators(d, 1, [3], targets, p)
    assert f0 == HomogeneousForm.monomial(Monomial(1, d - 1))
    # x f1 keeps each ydeg, y f0 raises each by one
    xf1 = list(f1.coeffs) + [0]
    yf0 = [0] + list(f0.coeffs)
    diff = [(a - b) % p for a, b in zip(xf1, yf0)]
    assert diff == list(HomogeneousForm.monomial(N, 3).coeffs)


def test_kick_off_membership_sweep():
    p = 13
    for d in range(2, 11):
        for m in range(1, d // 2 + 1):
            for betas in combinations(range(d - m), m):
                targets = kick_off_targets(d, m, betas)
                for support in product((0, 1), repeat=m):
                    lambdas = [s * (k + 2) for k, s in enumerate(support)]
                    forms = kick_off_generators(d, m, lambdas, targets, p)
                    assert members(forms, targets, p) == tuple(map(bool, support))


def test_kick_off_errors():
    targets = kick_off_targets(4, 2, [0, 1])
    with pytest.raises(ArityMismatch):
        kick_off_generators(4, 2, [1], targets)
    with pytest.raises(DegreeTooSmall):
        kick_off_generators(3, 2, [1, 1], kick_off_targets(3, 2, [0, 1]))
