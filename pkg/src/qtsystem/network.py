"""U/V chips, network weight matrices and the solution of the quantum
T-system on either side of an admissible boundary.

Every computed T is a :class:`~qtsystem.qlaurent.Polynomial` in the
variables of the boundary's cluster. Values below the boundary come from the
(2,2) network entry, never from dividing polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping

from .boundary import (
    Boundary,
    Point,
    ProjectionPath,
    below_projection,
    mutate,
    projection,
    reflected_point,
)
from .errors import BelowBoundary, MissingValue, NotAdjacent, NotMutable, WindowExhausted
from .qlaurent import Monomial, Polynomial, mono_mul


@dataclass(frozen=True)
class Matrix2:
    """A 2x2 matrix over any (non-commutative) ring with + and *."""

    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls, one, zero) -> "Matrix2":
        return cls(one, zero, zero, one)

    def __getitem__(self, rc):
        r, c = rc
        return (self.e11, self.e12, self.e21, self.e22)[2 * (r - 1) + (c - 1)]

    def rows(self):
        return ((self.e11, self.e12), (self.e21, self.e22))

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        # left factor always multiplies on the left: entries do not commute
        return Matrix2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def map(self, fn) -> "Matrix2":
        return Matrix2(fn(self.e11), fn(self.e12), fn(self.e21), fn(self.e22))

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return all(a == b for a, b in zip(self.entries(), other.entries()))

    __hash__ = None

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def power(self, n: int, one, zero) -> "Matrix2":
        result = Matrix2.identity(one, zero)
        for _ in range(n):
            result = result @ self
        return result


IDENTITY = Matrix2.identity(Polynomial.one(), Polynomial.zero())


@lru_cache(maxsize=None)
def chip(kind: str, a: Point, b: Point) -> Matrix2:
    """The chip V(a, b) or U(a, b) on the generators at points a and b."""
    if abs(a[0] - b[0]) != 1 or abs(a[1] - b[1]) != 1:
        raise NotAdjacent(f"{tuple(a)} and {tuple(b)} are not neighbouring boundary points")
    b_inv = Polynomial.gen(b, -1)
    a_b_inv = Polynomial.gen(a) * b_inv
    zero, one = Polynomial.zero(), Polynomial.one()
    if kind == "V":
        return Matrix2(a_b_inv, b_inv, zero, one)
    if kind == "U":
        return Matrix2(one, zero, b_inv.q_shift(-1), a_b_inv)
    raise ValueError(f"chip kind must be 'U' or 'V', got {kind!r}")


@dataclass(frozen=True)
class Chip:
    kind: str
    left: Point
    right: Point


@dataclass(frozen=True)
class NetworkWeights:
    path: ProjectionPath
    chips: tuple[Chip, ...]

    def __post_init__(self):
        for c1, c2 in zip(self.chips, self.chips[1:]):
            if c1.right != c2.left:
                raise ValueError(f"chips {c1} and {c2} do not share a face label")

    @classmethod
    def from_path(cls, path: ProjectionPath) -> "NetworkWeights":
        pts = path.points()
        chips = tuple(
            Chip("V" if s == "d" else "U", pts[k], pts[k + 1]) for k, s in enumerate(path.steps)
        )
        return cls(path, chips)

    def matrices(self) -> list[Matrix2]:
        return [chip(c.kind, c.left, c.right) for c in self.chips]


def _check_on(b: Boundary, path: ProjectionPath) -> None:
    for p in path.points():
        if not b.on_boundary(p):
            raise ValueError(f"path point {tuple(p)} is not on the boundary")


def path_matrix(path: ProjectionPath) -> Matrix2:
    result = IDENTITY
    for m in NetworkWeights.from_path(path).matrices():
        result = result @ m
    return result


def weight_matrix(b: Boundary, path: ProjectionPath) -> Matrix2:
    """Ordered product of chips along ``path``: V on d-steps, U on u-steps."""
    _check_on(b, path)
    return path_matrix(path)


@lru_cache(maxsize=4096)
def solve_above(b: Boundary, p: Point) -> Polynomial:
    """T at a point on or above ``b`` as M(p)_{1,1} T_{i1,j1}."""
    path = projection(b, Point(*p))
    if not path.steps:
        return Polynomial.gen(path.end)
    return path_matrix(path).e11 * Polynomial.gen(path.end)


def solve_below(b: Boundary, p_above: Point) -> tuple[Point, Polynomial]:
    """The reflected point (k, l) of ``p_above`` and T_{k,l} = M(p)_{2,2} T_{i1,j1}."""
    path = projection(b, Point(*p_above))
    if not path.steps:
        return path.end, Polynomial.gen(path.end)
    return reflected_point(path), path_matrix(path).e22 * Polynomial.gen(path.end)


@lru_cache(maxsize=4096)
def solve_under(b: Boundary, p: Point) -> Polynomial:
    """T at a point on or below ``b``, through the projection from below."""
    path = below_projection(b, Point(*p))
    if not path.steps:
        return Polynomial.gen(path.end)
    return path_matrix(path).e22 * Polynomial.gen(path.end)


def solve_point(b: Boundary, p) -> Polynomial:
    """T at any even lattice point whose projection fits in the window."""
    p = Point(*p)
    if p.j >= b.height(p.i):
        return solve_above(b, p)
    return solve_under(b, p)


def point_projection(b: Boundary, p) -> ProjectionPath:
    p = Point(*p)
    if p.j >= b.height(p.i):
        return projection(b, p)
    return below_projection(b, p)


# -- paths as a partition function ---------------------------------------------

def enumerate_paths(b: Boundary, path: ProjectionPath, entry: int = 1, exit: int = 1) -> list[Monomial]:
    """Weights of the connector paths entry -> exit, in traversal order."""
    _check_on(b, path)
    mats = NetworkWeights.from_path(path).matrices()
    out: list[Monomial] = []

    def walk(k: int, row: int, weight: Monomial) -> None:
        if k == len(mats):
            if row == exit:
                out.append(weight)
            return
        for col in (1, 2):
            entry_poly = mats[k][row, col]
            if entry_poly:
                coeff, mono = entry_poly.as_monomial()
                assert coeff == 1
                walk(k + 1, col, mono_mul(weight, mono))

    walk(0, entry, Monomial())
    return out


def path_count(path: ProjectionPath, entry: int = 1, exit: int = 1) -> int:
    """Number of connector paths, from the 0/1 pattern of the chips."""
    count = [[1, 0], [0, 1]]
    for s in path.steps:
        ind = [[1, 1], [0, 1]] if s == "d" else [[1, 0], [1, 1]]
        count = [[sum(count[r][m] * ind[m][c] for m in range(2)) for c in range(2)] for r in range(2)]
    return count[entry - 1][exit - 1]


# -- local identities ----------------------------------------------------------

def exchange_sides(b: Boundary, a: int) -> dict[str, tuple[Polynomial, Polynomial]]:
    """Both sides of V^{(a-1)} U^{(a)} = U^{(a-1)}' V^{(a)}' entry by entry.

    The mutated variable b' = q^-1 (a c + 1) b^-1 is a Laurent polynomial, but
    b'^-1 is not; the (2,2) entry q^-1 b'^-1 c^-1 + a b'^-1 is therefore
    compared after multiplying both sides by b' on the left and on the right.
    """
    if not b.is_local_min(a):
        raise NotMutable(f"column {a} is not a local minimum of {b}")
    mutate(b, a, "+")
    pa, pb, pc = b.point(a - 1), b.point(a), b.point(a + 1)
    A, B, C = (Polynomial.gen(x) for x in (pa, pb, pc))
    B_new = (A * C + 1).q_shift(-1) * B.inverse()
    C_inv = C.inverse()
    lhs = chip("V", pa, pb) @ chip("U", pb, pc)
    return {
        "11": (lhs.e11, B_new * C_inv),
        "12": (lhs.e12, C_inv),
        "21": (lhs.e21, C_inv.q_shift(-1)),
        "22": (B_new * lhs.e22 * B_new, C_inv.q_shift(-1) * B_new + B_new * A),
    }


def verify_chip_exchange(b: Boundary, a: int) -> bool:
    return all(l == r for l, r in exchange_sides(b, a).values())


def tsys_sides(b: Boundary, center) -> tuple[Polynomial, Polynomial]:
    """(q T_{i,j+1} T_{i,j-1},  T_{i+1,j} T_{i-1,j} + 1) at an odd center."""
    i, j = center
    up, down = solve_point(b, (i, j + 1)), solve_point(b, (i, j - 1))
    right, left = solve_point(b, (i + 1, j)), solve_point(b, (i - 1, j))
    return (up * down).q_shift(1), right * left + 1


def verify_tsys_point(b: Boundary, center) -> bool:
    lhs, rhs = tsys_sides(b, center)
    return lhs == rhs


# -- classical q = 1 oracle ----------------------------------------------------

def classical_oracle(b: Boundary, values: Mapping[int, Fraction], p, side: str | None = None) -> Fraction:
    """Exact rational value of T at ``p`` for the commutative T-system.

    Fills the region between ``p`` and the boundary by
    T_{i,j+1} = (T_{i+1,j} T_{i-1,j} + 1) / T_{i,j-1} (or its mirror image).
    """
    for i in range(b.imin, b.imax + 1):
        if i not in values:
            raise MissingValue(f"no value for column {i}")
    p = Point(*p)
    h = b.height(p.i)
    if side == "above" and p.j < h:
        raise BelowBoundary(f"{tuple(p)} is below the boundary")
    if side == "below" and p.j > h:
        raise ValueError(f"{tuple(p)} is above the boundary")
    memo: dict[tuple[int, int], Fraction] = {}

    def value(i: int, j: int) -> Fraction:
        if (i, j) in memo:
            return memo[i, j]
        hi = b.height(i)
        if j == hi:
            v = Fraction(values[i])
        elif j > hi:
            v = (value(i + 1, j - 1) * value(i - 1, j - 1) + 1) / value(i, j - 2)
        else:
            v = (value(i + 1, j + 1) * value(i - 1, j + 1) + 1) / value(i, j + 2)
        memo[i, j] = v
        return v

    try:
        return value(p.i, p.j)
    except WindowExhausted:
        raise WindowExhausted(f"classical recursion for {tuple(p)} leaves the window") from None
