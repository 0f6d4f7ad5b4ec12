"""Conserved quantities c and d of the quantum T-system and the phi/theta
polynomials that give the off-diagonal entries of the network matrix.

  c_{i,j} = T_{i-1,j+1} T_{i,j}^-1 + T_{i,j}^-1 T_{i+1,j-1}   (depends on i - j)
  d_{i,j} = T_{i-1,j-1} T_{i,j}^-1 + T_{i,j}^-1 T_{i+1,j+1}   (depends on i + j)

Every value here is anchored at a boundary point, so the only inverse taken
is that of a generator.
"""
from __future__ import annotations

from functools import lru_cache

from .boundary import Boundary, Point, projection
from .errors import ParityError, WindowExhausted
from .network import path_matrix, solve_point
from .qlaurent import Polynomial


def conserved_value(b: Boundary, kind: str, anchor) -> Polynomial:
    """c or d at a boundary point ``anchor``."""
    i, j = anchor
    if not b.on_boundary(anchor):
        raise ValueError(f"anchor {tuple(anchor)} is not a boundary point")
    t_inv = Polynomial.gen(anchor, -1)
    if kind == "c":
        return solve_point(b, (i - 1, j + 1)) * t_inv + t_inv * solve_point(b, (i + 1, j - 1))
    if kind == "d":
        return solve_point(b, (i - 1, j - 1)) * t_inv + t_inv * solve_point(b, (i + 1, j + 1))
    raise ValueError(f"kind must be 'c' or 'd', got {kind!r}")


def step_conservation(b: Boundary, i: int) -> tuple[str, Polynomial, Polynomial]:
    """The conservation law across the boundary step from column i to i + 1.

    An up step joins two anchors on a line i - j = const (c), a down step two
    anchors on a line i + j = const (d).
    """
    p, r = b.point(i), b.point(i + 1)
    kind = "c" if r.j > p.j else "d"
    return kind, conserved_value(b, kind, r), conserved_value(b, kind, p)


def conservation_sides(b: Boundary, m: int) -> dict[str, tuple[Polynomial, Polynomial]]:
    """c_{m+1,1} vs c_{m,0} and d_{m-1,1} vs d_{m,0} on the fundamental boundary."""
    if m % 2:
        raise ParityError(f"m = {m}: (m, 0) is not a lattice point for odd m")
    return {
        "c": (conserved_value(b, "c", (m + 1, 1)), conserved_value(b, "c", (m, 0))),
        "d": (conserved_value(b, "d", (m - 1, 1)), conserved_value(b, "d", (m, 0))),
    }


def verify_conservation(b: Boundary, m: int) -> bool:
    return all(l == r for l, r in conservation_sides(b, m).values())


def verify_step_conservation(b: Boundary) -> bool:
    """Every step of an arbitrary boundary, where the window allows it."""
    for i in conservation_steps(b):
        try:
            _, lhs, rhs = step_conservation(b, i)
        except WindowExhausted:
            continue
        if lhs != rhs:
            return False
    return True


def conservation_steps(b: Boundary) -> list[int]:
    # neighbours of both anchors may sit two rows off the boundary, which
    # needs one more column on each side
    return list(range(b.imin + 2, b.imax - 2))


@lru_cache(maxsize=None)
def c_m(b: Boundary, m: int) -> Polynomial:
    """c_m = c_{m,0} on the fundamental boundary (m even)."""
    if m % 2:
        raise ParityError(f"c_{m}: the index i - j is always even")
    return conserved_value(b, "c", (m, 0))


@lru_cache(maxsize=None)
def d_m(b: Boundary, m: int) -> Polynomial:
    if m % 2:
        raise ParityError(f"d_{m}: the index i + j is always even")
    return conserved_value(b, "d", (m, 0))


@lru_cache(maxsize=None)
def phi_theta(kind: str, p: int, m: int, b: Boundary) -> Polynomial:
    """phi^{(p)}_m = phi^{(p-1)}_m c_{m+2p-2} - q phi^{(p-2)}_m,
    theta^{(p)}_m = d_{m+2-2p} theta^{(p-1)}_m - q^-1 theta^{(p-2)}_m."""
    if p < -1:
        raise ValueError(f"order {p} < -1")
    if p == -1:
        return Polynomial.zero()
    if p == 0:
        return Polynomial.one()
    prev, prev2 = phi_theta(kind, p - 1, m, b), phi_theta(kind, p - 2, m, b)
    if kind == "phi":
        return prev * c_m(b, m + 2 * p - 2) - prev2.q_shift(1)
    if kind == "theta":
        return d_m(b, m + 2 - 2 * p) * prev - prev2.q_shift(-1)
    raise ValueError(f"kind must be 'phi' or 'theta', got {kind!r}")


def offdiagonal_sides(b: Boundary, p_above) -> dict[str, tuple[Polynomial, Polynomial]]:
    """M(p)_{1,2} T_{i1,1} vs phi^{(n-1)}_{i-j+2} and M(p)_{2,1} T_{i1,1} vs q^-1 theta^{(n-1)}_{i+j-2}."""
    i, j = p_above
    path = projection(b, Point(i, j))
    if len(path) == 0 or len(path) % 2 or path.start.j != 1 or path.end.j != 1:
        raise ValueError(f"projection of {tuple(p_above)} does not run between height-1 points")
    n = len(path) // 2
    M = path_matrix(path)
    t1 = Polynomial.gen(path.end)
    return {
        "12": (M.e12 * t1, phi_theta("phi", n - 1, i - j + 2, b)),
        "21": (M.e21 * t1, phi_theta("theta", n - 1, i + j - 2, b).q_shift(-1)),
    }


def verify_offdiagonal(b: Boundary, p_above) -> bool:
    return all(l == r for l, r in offdiagonal_sides(b, p_above).values())


def commutator(x: Polynomial, y: Polynomial) -> Polynomial:
    return x * y - y * x
