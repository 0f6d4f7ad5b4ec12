import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtsystem.boundary import (
    Boundary,
    Point,
    fundamental,
    mutate,
    projection,
    random_boundary,
    reflected_point,
)
from qtsystem.errors import BelowBoundary, NotAdjacent, NotMutable, WindowExhausted
from qtsystem.network import (
    IDENTITY,
    NetworkWeights,
    chip,
    classical_oracle,
    enumerate_paths,
    exchange_sides,
    path_count,
    path_matrix,
    solve_above,
    solve_below,
    solve_point,
    solve_under,
    verify_chip_exchange,
    verify_tsys_point,
)
from qtsystem.qlaurent import Polynomial, bar, eval_q1, is_positive, to_text
from qtsystem.suites import random_values, tsys_centers
from torus_oracle import t02_by_mutation

EXAMPLE = Boundary(-2, (2, 1, 0, 1, 2))


@st.composite
def boundary_points(draw, above=True):
    b = random_boundary(random.Random(draw(st.integers(0, 10**6))), -5, 5)
    i = draw(st.integers(-3, 3))
    dj = draw(st.integers(0, 3))
    j = b.height(i) + (2 * dj if above else -2 * dj)
    return b, Point(i, j)


def test_chip_shapes():
    a, b = Point(0, 0), Point(1, 1)
    U = chip("U", a, b)
    V = chip("V", b, Point(2, 0))
    assert U.e12 == Polynomial.zero()
    assert V.e21 == Polynomial.zero()
    assert U.e22 == Polynomial.gen(a) * Polynomial.gen(b, -1)
    with pytest.raises(NotAdjacent):
        chip("U", a, Point(2, 0))
    with pytest.raises(ValueError):
        chip("W", a, b)


def test_matrix_identity():
    M = chip("U", Point(0, 0), Point(1, 1))
    assert IDENTITY @ M == M == M @ IDENTITY
    assert M.power(0, Polynomial.one(), Polynomial.zero()) == IDENTITY
    assert M.power(2, Polynomial.one(), Polynomial.zero()) == M @ M


def test_network_weights_need_a_chain():
    path = projection(EXAMPLE, (0, 4))
    weights = NetworkWeights.from_path(path)
    assert [c.kind for c in weights.chips] == ["V", "V", "U", "U"]


def test_t02_matches_mutation_oracle():
    assert to_text(solve_above(fundamental(-1, 1), (0, 2))) == t02_by_mutation()


def test_example_paths():
    path = projection(EXAMPLE, (0, 4))
    monos = enumerate_paths(EXAMPLE, path)
    assert len(monos) == path_count(path) == 5
    total = sum((Polynomial.from_monomial(m) for m in monos), Polynomial.zero())
    assert total == path_matrix(path).e11


def test_unit_values_on_fundamental():
    b = fundamental(-6, 6)
    unit = {i: Fraction(1) for i in range(-6, 7)}
    assert [eval_q1(solve_point(b, (0, j)), unit) for j in (0, 2, 4, 6)] == [1, 2, 13, 89]
    assert eval_q1(solve_point(b, (1, 3)), unit) == eval_q1(solve_point(b, (-1, 3)), unit) == 5
    assert eval_q1(solve_point(b, (0, -4)), unit) == 34


def test_fundamental_below_symmetry():
    b = fundamental(-6, 6)
    unit = {i: Fraction(1) for i in range(-6, 7)}
    for i, j in [(0, -2), (1, -3), (0, -4)]:
        assert eval_q1(solve_point(b, (i, j)), unit) == classical_oracle(b, unit, (i, j))


@settings(max_examples=40, deadline=None)
@given(boundary_points(above=True))
def test_partition_function(bp):
    b, p = bp
    try:
        path = projection(b, p)
    except WindowExhausted:
        return
    monos = enumerate_paths(b, path)
    assert len(monos) == path_count(path)
    total = sum((Polynomial.from_monomial(m) for m in monos), Polynomial.zero())
    assert total * Polynomial.gen(path.end) == solve_above(b, p)


@settings(max_examples=60, deadline=None)
@given(boundary_points(above=True))
def test_two_routes_below_agree(bp):
    b, p = bp
    try:
        target, value = solve_below(b, p)
        direct = solve_under(b, target)
    except WindowExhausted:
        return
    path = projection(b, p)
    assert target == reflected_point(path)
    assert value == direct


@settings(max_examples=40, deadline=None)
@given(boundary_points(above=True), st.integers(0, 10**6))
def test_oracle_equivalence(bp, seed):
    b, p = bp
    try:
        t = solve_point(b, p)
    except WindowExhausted:
        return
    vals = random_values(random.Random(seed), b)
    assert eval_q1(t, vals) == classical_oracle(b, vals, p)
    assert is_positive(t)
    assert bar(t) == t.q_shift(1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_tsys_relation_random(seed):
    b = random_boundary(random.Random(seed), -4, 4)
    for c in tsys_centers(b, 4, 6):
        assert verify_tsys_point(b, c)


def test_solve_below_reflects():
    b = fundamental(-4, 4)
    target, value = solve_below(b, Point(0, 2))
    assert target == reflected_point(projection(b, (0, 2)))
    assert value == solve_point(b, target)


def test_wrong_side():
    with pytest.raises(BelowBoundary):
        solve_above(fundamental(-3, 3), (0, -2))


def test_exchange():
    b = fundamental(-3, 3)
    assert verify_chip_exchange(b, 0)
    assert set(exchange_sides(b, 0)) == {"11", "12", "21", "22"}
    assert verify_chip_exchange(mutate(b, 0, "+"), 2)
    with pytest.raises(NotMutable):
        exchange_sides(b, 1)


def test_oracle_sides_agree():
    b = fundamental(-4, 4)
    vals = {i: Fraction(i + 7, 2) for i in range(-4, 5)}
    assert classical_oracle(b, vals, (0, 2)) == eval_q1(solve_point(b, (0, 2)), vals)
