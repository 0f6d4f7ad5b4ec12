import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtsystem.boundary import (
    Boundary,
    Point,
    apex,
    below_projection,
    format_boundary,
    fundamental,
    lambda_exponent,
    mutate,
    parse_boundary,
    projection,
    random_boundary,
    random_mutations,
    reflected_point,
    same_cluster,
)
from qtsystem.errors import (
    AboveBoundary,
    BadWindow,
    BelowBoundary,
    ConeViolation,
    EdgeColumn,
    NotMutable,
    ParityError,
    ParseError,
    WindowExhausted,
)
from torus_oracle import qcomm_exponent


@st.composite
def boundaries(draw, imin=-5, imax=5):
    return random_boundary(random.Random(draw(st.integers(0, 10**6))), imin, imax)


@st.composite
def cluster_pairs(draw):
    i, j = draw(st.integers(-6, 6)), draw(st.integers(-6, 6))
    m = draw(st.integers(0, 4))
    k = draw(st.integers(0, 3))
    side = draw(st.sampled_from([-1, 1]))
    p = Point(i, j if (i + j) % 2 == 0 else j + 1)
    r = Point(p.i + side * (2 * k + m), p.j + draw(st.sampled_from([-1, 1])) * m)
    return p, r


def test_fundamental_heights():
    b = fundamental(-3, 3)
    assert b.heights == (1, 0, 1, 0, 1, 0, 1)
    assert b.imax == 3
    assert b.point(0) == Point(0, 0)


def test_boundary_rejects_bad_steps():
    with pytest.raises(ValueError):
        Boundary(0, (0, 2))
    with pytest.raises(ParityError):
        Boundary(0, (1, 0))


def test_height_outside_window():
    with pytest.raises(WindowExhausted):
        fundamental(-2, 2).height(3)


def test_lambda_seed_values():
    assert lambda_exponent((0, 0), (1, 1)) == 1
    assert lambda_exponent((1, 1), (0, 0)) == -1
    assert lambda_exponent((0, 0), (2, 0)) == 0
    assert lambda_exponent((0, 0), (3, 1)) == -1
    with pytest.raises(ConeViolation):
        lambda_exponent((0, 0), (0, 2))


@given(cluster_pairs())
def test_lambda_antisymmetric_and_matches_reference(pair):
    p, r = pair
    assert same_cluster(p, r)
    assert lambda_exponent(p, r) == -lambda_exponent(r, p)
    assert lambda_exponent(p, r) == qcomm_exponent(p, r)


def test_mutation_example():
    b = fundamental(-2, 2)
    up = mutate(b, 0, "+")
    assert up.heights == (0, 1, 2, 1, 0)
    assert mutate(up, 0, "-") == b
    with pytest.raises(NotMutable):
        mutate(b, 1, "+")
    with pytest.raises(EdgeColumn):
        mutate(b, -2, "+")


@given(boundaries(), st.integers(0, 10**6))
def test_mutation_is_invertible(b, seed):
    rng = random.Random(seed)
    for a in b.mutable_columns("+"):
        assert mutate(mutate(b, a, "+"), a, "-") == b
    for a in b.mutable_columns("-"):
        assert mutate(mutate(b, a, "-"), a, "+") == b
    for c in random_mutations(b, rng, 5)[1:]:
        assert all(abs(x - y) == 1 for x, y in zip(c.heights, c.heights[1:]))


def test_projection_example():
    b = Boundary(-2, (2, 1, 0, 1, 2))
    path = projection(b, (0, 4))
    assert path.word == "dduu"
    assert (path.start, path.end) == (Point(-2, 2), Point(2, 2))
    assert apex(path) == Point(0, 4)
    assert reflected_point(path) == Point(0, 0)


@settings(max_examples=60)
@given(boundaries(), st.integers(-3, 3), st.integers(1, 5))
def test_projection_endpoints(b, i, dj):
    j = b.height(i) + 2 * dj
    try:
        path = projection(b, (i, j))
    except WindowExhausted:
        return
    assert path.steps[0] == "d" and path.steps[-1] == "u"
    assert path.start.j - path.start.i == j - i
    assert path.end.j + path.end.i == j + i
    assert apex(path) == (i, j)
    assert all(b.on_boundary(p) for p in path.points())


@settings(max_examples=60)
@given(boundaries(), st.integers(-3, 3), st.integers(1, 5))
def test_below_projection_endpoints(b, i, dj):
    j = b.height(i) - 2 * dj
    try:
        path = below_projection(b, (i, j))
    except WindowExhausted:
        return
    assert path.steps[0] == "u" and path.steps[-1] == "d"
    assert path.start.j + path.start.i == j + i
    assert path.end.j - path.end.i == j - i


def test_projection_wrong_side():
    b = fundamental(-3, 3)
    with pytest.raises(BelowBoundary):
        projection(b, (0, -2))
    with pytest.raises(AboveBoundary):
        below_projection(b, (0, 2))
    with pytest.raises(ParityError):
        projection(b, (0, 1))
    with pytest.raises(WindowExhausted):
        projection(b, (0, 8))


def test_random_boundary_bad_window():
    with pytest.raises(BadWindow):
        random_boundary(random.Random(0), 3, 1)


def test_parse_round_trip():
    b = Boundary(-2, (2, 1, 0, 1, 2))
    vals = {-2: Fraction(1, 2), 0: Fraction(3)}
    text = format_boundary(b, vals)
    assert parse_boundary(text) == (b, vals)
    assert parse_boundary("# comment\nwindow -1 1\nheights 1 0 1\n") == (fundamental(-1, 1), {})


@pytest.mark.parametrize(
    "text",
    [
        "heights 0 1\n",
        "window 0 1\nheights 0\n",
        "window 0 1\nheights 0 2\n",
        "window 0 0\nheights 0\nvalue 0 -1\n",
        "window 0 0\nheights 0\nvalue 3 1\n",
        "window 0 0\nheights 0\nvalue 0 1\nvalue 0 2\n",
        "window 0 0\nheights 0\nbogus\n",
        "window 2 0\nheights 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_boundary(text)
