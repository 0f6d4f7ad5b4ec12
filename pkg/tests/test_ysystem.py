import random
from fractions import Fraction

import pytest

from qtsystem.boundary import fundamental, mutate
from qtsystem.errors import ParityError
from qtsystem.qlaurent import commutation_certificate
from qtsystem.network import solve_point
from qtsystem.skewword import eval_word
from qtsystem.suites import random_values
from qtsystem.ysystem import (
    chi,
    chi_certificate,
    classical_y,
    pair_certificate,
    same_column_products,
    tchi_certificate,
    verify_chi_commutation,
    verify_quantum_y,
    y_sides,
)

B = fundamental(-6, 6)
UNIT = {i: Fraction(1) for i in range(-6, 7)}


def test_chi_unit_value():
    # chi_{1,2} = (T_{2,2} T_{0,2})^-1 = 1/4 on unit data
    assert eval_word(chi(B, (1, 2)), UNIT) == Fraction(1, 4)


def test_parity_checks():
    with pytest.raises(ParityError):
        chi(B, (0, 2))
    with pytest.raises(ParityError):
        verify_quantum_y(B, 0, 3)


def test_t_chi_q_commutation():
    # T_{k,l+1} chi_{k,l} = q^2 chi_{k,l} T_{k,l+1}, read as a certificate of -2
    for k, l in [(1, 2), (0, 3), (-1, 2), (1, 0)]:
        assert tchi_certificate(B, k, l) == -2


@pytest.mark.parametrize("side", [1, -1])
@pytest.mark.parametrize("k,l", [(1, 2), (0, 1), (-1, 2)])
def test_adjacent_chi_certificate_is_minus_two(k, l, side):
    # the consistent convention gives -2 where the +2 variant was asked for
    assert chi_certificate(B, k, l, side) == -2
    assert not verify_chi_commutation(B, k, l, side)


def test_nonadjacent_pairs():
    assert pair_certificate(B, (-1, 2), (3, 2)) == 0
    assert pair_certificate(B, (-2, 1), (1, 2)) == 0
    # same column two rows apart: no common cluster, no certificate
    assert pair_certificate(B, (1, 0), (1, 2)) is None


@pytest.mark.parametrize("i,j", [(0, 2), (1, 3), (0, 0), (-1, 1), (1, 1)])
def test_quantum_y(i, j):
    assert verify_quantum_y(B, i, j)


def test_quantum_y_on_mutated_boundary():
    b = mutate(B, 0, "+")
    assert verify_quantum_y(b, 0, 2)
    assert verify_quantum_y(b, 1, 3)


@pytest.mark.parametrize("i,j", [(0, 2), (1, 3), (0, 0)])
def test_classical_y(i, j):
    vals = random_values(random.Random(i * 10 + j), B)
    lhs, rhs = classical_y(B, vals, i, j)
    assert lhs == rhs
    # the quantum sides agree at q = 1 too
    ql, qr = y_sides(B, i, j)
    assert eval_word(ql, vals) == eval_word(qr, vals)


def test_same_column_guard():
    assert commutation_certificate(solve_point(B, (1, 3)), solve_point(B, (1, 1))) is None
    for lhs, rhs in same_column_products(B, 1, 2).values():
        assert lhs == rhs
    assert set(same_column_products(B, 0, 1)) == {"up_down", "down_up"}
