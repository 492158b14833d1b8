from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsymkit.compositions import compositions, coarsenings, partitions, refinements
from nsymkit.walls import (
    BRICK_EQUATIONS,
    WALL_EQUATIONS,
    WALL_STATS,
    Wall,
    WallError,
    brick_tabloids,
    enumerate_indexed_walls,
    enumerate_walls,
    indexed_wall_count,
    make_wall,
    ordered_count,
    tabloid_count,
    tabloid_weight,
    verify_brick_theorems,
    verify_wall_theorems,
    wall_rhs,
    wall_stat,
    weight,
)

import oracle
from golden import (BRICK_COUNT, BRICK_WEIGHT, INDEXED_WALLS_243_22113, ORDERED_BRICK_COUNT, WALL_FB,
                    WALL_PB)
from strategies import composition_pair, of_size


def test_worked_wall():
    W = make_wall((1, 6, 2, 4), (1, 1, 3, 2, 2, 3, 1))
    assert W.blocks == ((1,), (1, 3, 2), (2,), (3, 1))
    assert wall_stat(W, "pb") == WALL_PB and wall_stat(W, "fb") == WALL_FB
    assert wall_stat(W, "lp") == 4 and wall_stat(W, "fp") == 6
    assert W.render() == "[3][1]\n[2]\n[1][3][2]\n[1]"
    assert W.to_json()["stats"] == {"lp": "4", "fp": "6", "pb": "6", "fb": "12"}


def test_indexed_walls():
    walls = enumerate_indexed_walls((2, 4, 3), (2, 2, 1, 1, 3))
    assert len(walls) == indexed_wall_count((2, 4, 3), (2, 2, 1, 1, 3)) == INDEXED_WALLS_243_22113
    assert len({w.labels for w in walls}) == 4
    assert walls[0].render().splitlines()[0] == "[3:5]"


def test_wall_errors_name_the_course():
    with pytest.raises(WallError, match="course 1 of length 1 cannot be filled: bricks \\[2\\] overshoot to 2"):
        make_wall((1, 2), (2, 1))
    with pytest.raises(WallError, match="differ in size"):
        make_wall((3,), (1, 1))
    with pytest.raises(WallError):
        indexed_wall_count((1, 2), (2, 1))
    with pytest.raises(ValueError):
        wall_stat(make_wall((2,), (2,)), "xx")
    with pytest.raises(ValueError):
        enumerate_walls()


@given(composition_pair(7))
def test_walls_exist_exactly_for_refinements(pair):
    beta, alpha = pair
    refines = beta in {b for b, _ in refinements(alpha)}
    try:
        W = make_wall(alpha, beta)
    except WallError:
        assert not refines
    else:
        assert refines and tuple(sum(c) for c in W.blocks) == alpha


@given(of_size(6))
def test_wall_enumeration_counts(a):
    assert len(enumerate_walls(of_shape=a)) == len(refinements(a))
    assert len(enumerate_walls(of_type=a)) == len(coarsenings(a))
    for W in enumerate_walls(of_type=a):
        assert len(enumerate_indexed_walls(W.shape, W.type)) == indexed_wall_count(W.shape, W.type)


def test_wall_stats_list():
    assert WALL_STATS == ("lp", "fp", "pb", "fb")
    W = Wall((3,), (1, 1, 1), ((1, 1, 1),))
    assert wall_stat(W, "fb") == factorial(3)


def test_worked_brick_tabloids():
    tabs = brick_tabloids((6, 3), (3, 3, 2, 1))
    assert len(tabs) == BRICK_COUNT and weight(tabs) == BRICK_WEIGHT
    assert ordered_count((6, 3), (3, 3, 2, 1)) == ORDERED_BRICK_COUNT
    assert tabs[0].render() == "[1][2][3]\n[3]"


@pytest.mark.parametrize("n", range(1, 7))
def test_tabloid_counts_match_brute_force(n):
    for lam in partitions(n):
        for mu in partitions(n):
            fills = oracle.tabloids(lam, mu)
            assert tabloid_count(lam, mu) == len(fills) == len(brick_tabloids(lam, mu))
            assert tabloid_weight(lam, mu) == sum(prod(row[-1] for row in t) for t in fills)
            assert ordered_count(lam, mu) == oracle.ordered_tabloids(lam, mu)


def test_tabloid_size_mismatch():
    with pytest.raises(ValueError):
        brick_tabloids((3,), (1, 1))


def test_equation_catalogue():
    names = [e.name for e in WALL_EQUATIONS if e.status != "corrected"]
    assert len(names) == 24 and len(set(names)) == 24
    assert {e.name for e in WALL_EQUATIONS if e.status == "misprint"} == {"P2", "P4"}
    assert len([e for e in BRICK_EQUATIONS if e.status != "corrected"]) == 12
    assert {e.name for e in BRICK_EQUATIONS if e.status == "misprint"} == {"B8"}


def test_wall_rhs_example():
    eq = next(e for e in WALL_EQUATIONS if e.name == "R1")
    # h_(1,2) = r_(1,2) + r_(3)
    assert wall_rhs(eq, (1, 2)) == {(1, 2): 1, (3,): 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_wall_theorems(n):
    rep = verify_wall_theorems(n)
    assert rep.passed, [r.line() for r in rep.failures()]
    if n >= 3:
        assert {r.name for r in rep.misprints_refuted()} == {"P2", "P4"}


def test_indexed_weighting_agrees_with_explicit_listing():
    for n in (5, 6):
        a = verify_wall_theorems(n, explicit_indexed=True)
        b = verify_wall_theorems(n, explicit_indexed=False)
        assert [r.passed for r in a.results] == [r.passed for r in b.results]


@pytest.mark.parametrize("n", range(1, 6))
def test_brick_theorems(n):
    rep = verify_brick_theorems(n)
    assert rep.passed, [r.line() for r in rep.failures()]


def test_brick_misprint_refuted_with_counterexample():
    rep = verify_brick_theorems(3)
    bad = rep.misprints_refuted()
    assert [r.name for r in bad] == ["B8"]
    assert "lam=" in bad[0].counterexample


def test_degree_validation():
    with pytest.raises(ValueError):
        verify_wall_theorems(0)
    with pytest.raises(ValueError):
        verify_brick_theorems(0)
