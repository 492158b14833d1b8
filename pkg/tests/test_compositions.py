from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsymkit.compositions import (
    SubsetOfRange,
    binomial_partial_sum,
    block_stat,
    coarsenings,
    complement,
    compositions,
    descent_mask,
    format_composition,
    from_mask,
    index_of,
    involution,
    is_hook,
    is_refinement,
    mobius,
    parse_composition,
    partitions,
    refined_stat,
    refinements,
    refines,
    reverse,
    set_inverse,
    set_of,
    sort_and_z,
    stat,
    transpose,
    z_coefficient,
)

from strategies import composition_pair, compositions_of, of_size


def test_canonical_order_small_degrees():
    assert compositions(1) == ((1,),)
    assert compositions(2) == ((2,), (1, 1))
    assert compositions(3) == ((3,), (1, 2), (2, 1), (1, 1, 1))
    assert compositions(0) == ((),)


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_and_index(n):
    cs = compositions(n)
    assert len(cs) == 2 ** (n - 1) == len(set(cs))
    assert all(sum(a) == n and min(a) >= 1 for a in cs)
    assert [index_of(n)[a] for a in cs] == list(range(len(cs)))


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        compositions(-1)


def test_worked_example_involutions():
    a = (2, 3, 2, 1)
    assert reverse(a) == (1, 2, 3, 2)
    assert complement(a) == (1, 2, 1, 2, 2)
    assert transpose(a) == (2, 2, 1, 2, 1)
    assert involution(a, "transpose") == transpose(a)
    with pytest.raises(ValueError):
        involution(a, "flip")


@given(compositions_of())
def test_involutions_are_involutive_and_compatible(a):
    n = sum(a)
    for kind in ("reverse", "complement", "transpose"):
        assert involution(involution(a, kind), kind) == a
    assert len(a) + len(complement(a)) - 1 == n
    assert transpose(a) == reverse(complement(a)) == complement(reverse(a))


@given(compositions_of())
def test_set_bijection(a):
    S = set_of(a)
    assert set_inverse(S) == a
    assert from_mask(descent_mask(a), sum(a)) == a
    assert set(set_of(complement(a)).members) == set(S.complement().members)


def test_set_of_example():
    assert set_of((2, 3, 2, 1)).members == (2, 5, 7)
    with pytest.raises(ValueError):
        SubsetOfRange(4, (4,))


def test_refines_blocks():
    assert refines((1, 1, 2, 1), (2, 3)) == [(1, 1), (2, 1)]
    assert refines((2, 1), (1, 2)) is None
    assert refines((1, 1), (3,)) is None


@given(composition_pair())
def test_refinement_agrees_with_sets(pair):
    b, a = pair
    want = set(set_of(b).members) >= set(set_of(a).members)
    assert is_refinement(b, a) == want
    assert (refines(b, a) is not None) == want
    assert (b in {x for x, _ in refinements(a)}) == want
    assert (a in coarsenings(b)) == want


@given(compositions_of(6))
def test_refinement_and_coarsening_counts(a):
    n = sum(a)
    assert len(refinements(a)) == 2 ** (n - len(a))
    assert len(coarsenings(a)) == 2 ** (len(a) - 1)
    for b, blocks in refinements(a):
        assert tuple(sum(bl) for bl in blocks) == a
        assert tuple(x for bl in blocks for x in bl) == b


def _subsets(n):
    return [SubsetOfRange(n, c) for r in range(n) for c in combinations(range(1, n), r)]


@pytest.mark.parametrize("n", range(1, 6))
def test_mobius_inversion(n):
    subs = _subsets(n)
    for S in subs:
        for T in subs:
            if set(T.members) <= set(S.members):
                total = sum(mobius(U, T) for U in subs if set(T.members) <= set(U.members) <= set(S.members))
                assert total == (S == T)
            else:
                assert mobius(S, T) == 0


def test_mobius_ambient_mismatch():
    with pytest.raises(ValueError):
        mobius(SubsetOfRange(3, ()), SubsetOfRange(4, ()))


def test_z_and_statistics():
    assert z_coefficient((2, 1, 1)) == 4
    assert z_coefficient((3, 3, 2, 1)) == 36
    assert sort_and_z((1, 2, 1)) == ((2, 1, 1), Fraction(4))
    assert stat((2, 3, 1), "lp") == 1
    assert stat((2, 3, 1), "piu") == 2 * 5 * 6
    assert stat((2, 3, 1), "sp") == 6 * 6
    assert stat((2, 3, 1), "prod") == 6
    with pytest.raises(ValueError):
        stat((), "lp")


def test_refined_statistics():
    assert refined_stat((1, 2, 3, 1), (3, 4), "lp") == 2
    assert refined_stat((1, 2, 3, 1), (3, 4), "fp") == 3
    assert refined_stat((1, 2, 3, 1), (3, 4), "len") == 4
    assert refined_stat((1, 2, 3, 1), (3, 4), "fb") == 4
    assert block_stat([(1, 2), (3, 1)], "piu") == 3 * 12
    with pytest.raises(ValueError):
        refined_stat((3,), (1, 2), "lp")


@given(st.integers(0, 25), st.integers(0, 25))
def test_binomial_partial_sum(n, c):
    assert binomial_partial_sum(n, c) == Fraction(n + c + 1, c + 1)
    assert binomial_partial_sum(n, c) == sum(Fraction(comb(n, k), comb(n + c, k + c)) for k in range(n + 1))


def test_binomial_partial_sum_domain():
    with pytest.raises(ValueError):
        binomial_partial_sum(-1, 0)


def test_partitions_and_hooks():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert is_hook((1, 1, 3)) and is_hook((4,)) and not is_hook((2, 1))


@given(of_size(5))
def test_text_round_trip(a):
    assert parse_composition(format_composition(a)) == a
    assert parse_composition(" ".join(str(format_composition(a))[1:-1].split())) == a


def test_parse_composition_errors():
    assert parse_composition("[]") == ()
    with pytest.raises(ValueError):
        parse_composition("2,0")
    with pytest.raises(ValueError):
        parse_composition("2,x")
