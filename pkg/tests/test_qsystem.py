from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtsystem.errors import NonInvertible
from qtsystem.qlaurent import eval_q1
from qtsystem.qsystem import (
    C,
    R0,
    R1,
    SEED,
    FreeElement,
    classical_q,
    nc_conjugation_sides,
    nc_exchange_sides,
    nc_network,
    nc_sequence,
    nc_step,
    nc_verify,
    qq_conjugation_mismatches,
    qq_network,
    qq_periodic_network,
    qq_relation,
    qq_solve,
    qq_translation_sides,
    qq_verify_conjugation,
    qtext,
    reduce_word,
    specialize,
)

letters = st.sampled_from([1, -1, 2, -2])
free_words = st.lists(letters, max_size=5)


@st.composite
def free_elements(draw):
    total = FreeElement.zero()
    for _ in range(draw(st.integers(0, 3))):
        total = total + FreeElement.word(*draw(free_words)) * draw(st.integers(-2, 2))
    return total


def test_r2_text():
    assert qtext(qq_solve(SEED, 2)) == "q^-1 * R0^-1 + q^1 * R0^-1 * R1^2"
    assert qtext(qq_solve(SEED, 0)) == "R0"
    assert qtext(qq_solve(SEED, 1)) == "R1"


@pytest.mark.parametrize("j", range(1, 11))
def test_quantum_q_system(j):
    r = qq_solve(SEED, j)
    assert qq_network(SEED, j) == r
    assert qq_network(SEED, j, "VU") == r
    assert qq_periodic_network(SEED, j) == r
    lhs, rhs = qq_relation(SEED, j)
    assert lhs == rhs


def test_classical_values():
    # the recursion from R0 = R1 = 1 gives 1, 1, 2, 5, 13, 34
    assert [classical_q(n) for n in range(6)] == [1, 1, 2, 5, 13, 34]
    unit = {0: Fraction(1), 1: Fraction(1)}
    assert [eval_q1(qq_solve(SEED, n), unit) for n in range(6)] == [1, 1, 2, 5, 13, 34]


def test_conjugation_orientations():
    assert qq_verify_conjugation(SEED)
    assert qq_conjugation_mismatches(SEED) == []
    assert qq_conjugation_mismatches(SEED, "printed") == ["12", "21", "22"]


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_translation_invariance(n, p):
    lhs, rhs = qq_translation_sides(SEED, n, p)
    assert lhs == rhs


def test_reduce_word():
    assert reduce_word([1, 2, -2, -1, 2]) == (2,)
    assert str(FreeElement.word(2, -1, 2)) == "R1 * R0^-1 * R1"
    assert str(C) == "R1^-1 * R0 * R1 * R0^-1"


@settings(max_examples=60)
@given(free_elements(), free_elements(), free_elements())
def test_free_algebra_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == FreeElement.zero()
    assert a * FreeElement.one() == a


@given(free_words)
def test_word_inverse(w):
    x = FreeElement.word(*w)
    assert x * x.inverse() == FreeElement.one()
    assert reduce_word(w + [-l for l in reversed(w)]) == ()


def test_non_unit_inverse():
    with pytest.raises(NonInvertible):
        (R0 + R1).inverse()
    with pytest.raises(NonInvertible):
        (R0 * 2).inverse()


def test_commutator_defines_c():
    assert R0 * R1 == R1 * C * R0


@pytest.mark.parametrize("n", range(1, 6))
def test_nc_sequence(n):
    rn, rn1 = nc_sequence(n), nc_sequence(n + 1)
    assert rn * rn1 == rn1 * C * rn
    assert rn1 * C * nc_sequence(n - 1) == rn * rn + 1
    assert nc_network(n) == rn == nc_network(n, "VU")
    assert specialize(rn) == qq_solve(SEED, n)


def test_nc_backward():
    r_minus = nc_sequence(-1)
    assert r_minus == C.inverse() * R1.inverse() * (R0 * R0 + 1)
    assert r_minus * R0 == R0 * C * r_minus
    assert nc_step("konts", 0, True) == nc_step("ncqsys", 0, True)


def test_step_forms():
    assert nc_step("konts", 1) == nc_step("ncqsys", 1) == nc_sequence(2)
    assert nc_step("ncqsys", 2) == nc_sequence(3)
    with pytest.raises(NonInvertible):
        nc_step("konts", 3)


def test_exchange_and_conjugation():
    for lhs, rhs in nc_exchange_sides(0).values():
        assert lhs == rhs
    lhs, rhs = nc_conjugation_sides()
    assert lhs == rhs


def test_specialize_sends_c_to_q():
    assert qtext(specialize(C)) == "q^1"


def test_nc_verify_small():
    checks = nc_verify(4)
    assert checks and all(c.ok for c in checks)
    with pytest.raises(ValueError):
        nc_verify(0)
