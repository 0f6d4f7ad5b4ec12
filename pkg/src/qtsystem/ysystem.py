"""The chi variables chi_{i,j} = (T_{i+1,j} T_{i-1,j})^{-1}, their local
commutation relations and the quantum Y-system they satisfy.

chi centers have i + j odd; the Y-identity is centered at even points.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .boundary import Boundary, Point
from .errors import ParityError
from .network import classical_oracle, solve_point
from .qlaurent import Polynomial, commutation_certificate
from .skewword import SkewWord, atom_word, word_equals, word_normalize


def _t(b: Boundary, p, sign: int = 1) -> SkewWord:
    p = Point(*p)
    return atom_word(p, solve_point(b, p), sign)


def _odd_center(center) -> Point:
    i, j = center
    if (i + j) % 2 == 0:
        raise ParityError(f"chi center {tuple(center)} needs i + j odd")
    return Point(i, j)


def chi(b: Boundary, center) -> SkewWord:
    """chi_{i,j} as the word T_{i-1,j}^-1 T_{i+1,j}^-1."""
    i, j = _odd_center(center)
    return _t(b, (i - 1, j), -1) * _t(b, (i + 1, j), -1)


def chi_certificate(b: Boundary, k: int, l: int, side: int) -> int | None:
    """commutation_certificate(T_{k+s+1,l+1} T_{k+s-1,l+1}, T_{k+1,l} T_{k-1,l})."""
    _odd_center((k, l))
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    a = k + side
    x1 = solve_point(b, (a + 1, l + 1)) * solve_point(b, (a - 1, l + 1))
    x2 = solve_point(b, (k + 1, l)) * solve_point(b, (k - 1, l))
    return commutation_certificate(x1, x2)


def verify_chi_commutation(b: Boundary, k: int, l: int, side: int) -> bool:
    """Check chi_{k+s,l+1} chi_{k,l} = q^2 chi_{k,l} chi_{k+s,l+1} via its inverse form."""
    return chi_certificate(b, k, l, side) == 2


def pair_certificate(b: Boundary, c1, c2) -> int | None:
    """Certificate of (T T)(c1) against (T T)(c2) for two arbitrary chi centers."""
    (i1, j1), (i2, j2) = _odd_center(c1), _odd_center(c2)
    x1 = solve_point(b, (i1 + 1, j1)) * solve_point(b, (i1 - 1, j1))
    x2 = solve_point(b, (i2 + 1, j2)) * solve_point(b, (i2 - 1, j2))
    return commutation_certificate(x1, x2)


def tchi_certificate(b: Boundary, k: int, l: int) -> int | None:
    """Certificate of T_{k,l+1} against T_{k+1,l} T_{k-1,l}; -2 means T chi = q^2 chi T."""
    _odd_center((k, l))
    x2 = solve_point(b, (k + 1, l)) * solve_point(b, (k - 1, l))
    return commutation_certificate(solve_point(b, (k, l + 1)), x2)


def _even_center(i: int, j: int) -> None:
    if (i + j) % 2:
        raise ParityError(f"Y-system center ({i},{j}) needs i + j even")


def _one_plus_chi_inv(b: Boundary, a: int, j: int) -> SkewWord:
    """(1 + chi_{a,j})^-1 = q^-1 T_{a,j-1}^-1 T_{a,j+1}^-1 T_{a+1,j} T_{a-1,j}."""
    w = _t(b, (a, j - 1), -1) * _t(b, (a, j + 1), -1) * _t(b, (a + 1, j)) * _t(b, (a - 1, j))
    return w.q_shift(-1)


def y_sides(b: Boundary, i: int, j: int) -> tuple[SkewWord, SkewWord]:
    """chi_{i,j-1} chi_{i,j+1} and q^2 chi_{i+1,j}(1+chi_{i+1,j})^-1 chi_{i-1,j}(1+chi_{i-1,j})^-1."""
    _even_center(i, j)
    lhs = chi(b, (i, j - 1)) * chi(b, (i, j + 1))
    rhs = (
        chi(b, (i + 1, j))
        * _one_plus_chi_inv(b, i + 1, j)
        * chi(b, (i - 1, j))
        * _one_plus_chi_inv(b, i - 1, j)
    ).q_shift(2)
    return lhs, rhs


def verify_quantum_y(b: Boundary, i: int, j: int) -> bool:
    lhs, rhs = y_sides(b, i, j)
    return word_equals(lhs, rhs)


def y_normal_forms(b: Boundary, i: int, j: int) -> tuple[SkewWord, SkewWord]:
    lhs, rhs = y_sides(b, i, j)
    return word_normalize(lhs), word_normalize(rhs)


def classical_y(b: Boundary, values: Mapping[int, Fraction], i: int, j: int) -> tuple[Fraction, Fraction]:
    """Both sides of chi_{i,j-1} chi_{i,j+1} (1+chi_{i+1,j})(1+chi_{i-1,j}) = chi_{i+1,j} chi_{i-1,j} at q = 1."""
    _even_center(i, j)

    def T(p):
        return classical_oracle(b, values, p)

    def x(a, l):
        return 1 / (T((a + 1, l)) * T((a - 1, l)))

    lhs = x(i, j - 1) * x(i, j + 1) * (1 + x(i + 1, j)) * (1 + x(i - 1, j))
    return lhs, x(i + 1, j) * x(i - 1, j)


def same_column_products(b: Boundary, i: int, j: int) -> dict[str, tuple[Polynomial, Polynomial]]:
    """T_{i,j+1} T_{i,j-1} = q^-1 (A + 1) and T_{i,j-1} T_{i,j+1} = q A + q^-1, A = T_{i+1,j} T_{i-1,j}."""
    up, down = solve_point(b, (i, j + 1)), solve_point(b, (i, j - 1))
    A = solve_point(b, (i + 1, j)) * solve_point(b, (i - 1, j))
    return {
        "up_down": (up * down, (A + 1).q_shift(-1)),
        "down_up": (down * up, A.q_shift(1) + Polynomial.const(1, -1)),
    }
