import pytest
from hypothesis import given
from hypothesis import strategies as st

from hookcells.errors import EmptyInput, NonUnimodalShape, ParseError
from hookcells.hilbert import (
    HilbertFunction,
    all_hilbert_functions,
    block_params,
    boxes,
    deltas,
    dim_GT,
    elementary_factors,
    format_hilbert,
    is_elementary,
    kappa_T,
    parse_hilbert,
    single_block_components,
    splice_factors,
    validate,
)
from hookcells.partitions import difference_one_hooks, enumerate_partitions

from oracles import valid_hilbert_functions


def H(*vals):
    return HilbertFunction(tuple(vals))


def up_to(n, *tail):
    return HilbertFunction(tuple(range(1, n + 1)) + tail)


# validation


def test_validate_examples():
    T = validate((1, 2, 3, 2, 1))
    assert (T.order, T.socle) == (3, 4)
    T = validate((1, 2, 3, 4, 2, 0))
    assert (T.order, T.socle) == (4, 4)
    assert T.values == (1, 2, 3, 4, 2)


@pytest.mark.parametrize("vals", [(1, 3), (2,), (1, 2, 3, 2, 3), (1, 2, 4), (1, 2, 3, 4, 5, 7)])
def test_validate_rejects_bad_shapes(vals):
    with pytest.raises(NonUnimodalShape):
        validate(vals)


def test_validate_rejects_empty():
    with pytest.raises(EmptyInput):
        validate(())
    with pytest.raises(EmptyInput):
        validate((0,))


def test_plateau_at_order_is_accepted():
    T = validate((1, 2, 3, 3))
    assert T.order == 3 and T.t(3) == 3


@pytest.mark.parametrize("n", range(1, 15))
def test_generator_matches_brute_force(n):
    assert sorted(T.values for T in all_hilbert_functions(n)) == sorted(valid_hilbert_functions(n))


def test_text_round_trip():
    T = parse_hilbert("1,2,3,4,2,0")
    assert T.values == (1, 2, 3, 4, 2)
    assert format_hilbert(T, trailing_zero=True) == "1,2,3,4,2,0"
    with pytest.raises(ParseError) as err:
        parse_hilbert("1,2,-3")
    assert err.value.position == 4


# invariants


def test_deltas_examples():
    assert deltas(H(1, 2, 3, 4, 3, 2)) == (1, 1, 2)
    T = up_to(13, 12, 6)
    assert (T.delta(13), T.delta(14), T.delta(15)) == (1, 6, 6)
    assert deltas(H(1)) == (1,)


@pytest.mark.parametrize(
    "T, expected", [(H(1, 2, 3, 2, 1), 2), (H(1, 2, 3, 4, 2), 3), (H(1, 2, 1), 2), (H(1, 1), 2)]
)
def test_kappa_T_examples(T, expected):
    assert kappa_T(T) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_kappa_T_bounds(n):
    for T in all_hilbert_functions(n):
        assert kappa_T(T) >= 1 + T.delta(T.order)
        if T.is_single_block():
            d, t, s = block_params(T)
            assert kappa_T(T) == s + max(t + 1 - s, 0)


def test_dim_GT_examples():
    assert dim_GT(H(1, 2, 3, 4, 2)) == 6
    assert dim_GT(H(1)) == 0


def test_dim_GT_of_two_step_example_is_largest_cell():
    # every block contributes; the largest cell over P(T) confirms the total
    T = H(1, 2, 3, 4, 5, 6, 5, 4, 4, 4, 2)
    top = max(len(difference_one_hooks(P)) for P in enumerate_partitions(T))
    assert dim_GT(T) == top == 10
    assert [(b.degree, b.area) for b in boxes(T) if b.area] == [(6, 2), (9, 2), (10, 6)]


@pytest.mark.parametrize("n", range(1, 12))
def test_box_areas_sum_to_dimension(n):
    for T in all_hilbert_functions(n):
        assert sum(b.area for b in boxes(T)) == dim_GT(T)


# components


def test_single_block_components_of_three_block_example():
    T = up_to(13, 10, 6, 3)
    comps = dict(single_block_components(T))
    assert comps[13] == up_to(7, 4)
    assert comps[14] == up_to(7, 3)
    assert comps[15] == up_to(6, 3)


def test_single_block_components_of_small_example():
    comps = dict(single_block_components(H(1, 2, 2, 1)))
    assert comps == {2: H(1, 1), 3: H(1, 2, 1)}


def test_single_block_is_its_own_component():
    T = H(1, 2, 3, 4, 2)
    assert single_block_components(T) == ((4, T),)


# elementary factors


def test_elementary_factors_example():
    T = H(1, 2, 3, 4, 5, 6, 5, 4, 4, 4, 2)
    assert elementary_factors(T) == (H(1, 2, 3, 4, 4, 4, 4, 4, 4, 4, 2), H(1, 2, 1))


def test_elementary_examples():
    assert is_elementary(H(1, 2, 2, 1))
    assert elementary_factors(H(1, 2, 2, 1)) == (H(1, 2, 2, 1),)
    assert elementary_factors(H(1, 2, 3, 4, 2)) == (H(1, 2, 3, 4, 2),)


@pytest.mark.parametrize("n", range(1, 15))
def test_splice_inverts_split(n):
    for T in all_hilbert_functions(n):
        factors = elementary_factors(T)
        assert all(is_elementary(F) for F in factors)
        assert splice_factors(factors) == T


@given(st.integers(1, 14), st.data())
def test_conventions(n, data):
    Ts = all_hilbert_functions(n)
    T = data.draw(st.sampled_from(list(Ts)))
    d, j = T.order, T.socle
    assert T.t(d - 1) == d
    assert T.t(j + 1) == 0
    assert all(T.delta(i) >= 0 for i in range(d, j + 2))
