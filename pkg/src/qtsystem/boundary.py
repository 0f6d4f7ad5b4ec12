"""Admissible boundaries (initial data), their mutations, projections and
the pairwise commutation exponent between lattice points.

Everything here is purely combinatorial: heights, steps and integers. The
variables attached to boundary points live in :mod:`qtsystem.qlaurent`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
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


class Point(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"({self.i},{self.j})"


def lambda_exponent(p, q) -> int:
    """Return c such that T_p T_q = q^c T_q T_p.

    With m = |dj| and k = (|di| - m) / 2 the exponent is 0 for even m and
    (-1)^k when p is the lower point, -(-1)^k when p is the higher one.
    """
    di = abs(p[0] - q[0])
    dj = q[1] - p[1]
    m = abs(dj)
    if di < m:
        raise ConeViolation(f"T{tuple(p)} and T{tuple(q)} share no cluster")
    if (di - m) % 2:
        raise ParityError(f"points {tuple(p)}, {tuple(q)} lie on different sublattices")
    if m % 2 == 0:
        return 0
    sign = 1 if ((di - m) // 2) % 2 == 0 else -1
    return sign if dj > 0 else -sign


def same_cluster(p, q) -> bool:
    return abs(p[0] - q[0]) >= abs(p[1] - q[1])


@dataclass(frozen=True)
class Boundary:
    """Heights j_imin, ..., j_imax of an admissible initial data set."""

    imin: int
    heights: tuple[int, ...]

    def __post_init__(self):
        if not self.heights:
            raise BadWindow("empty window")
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        for k, h in enumerate(self.heights):
            if (self.imin + k + h) % 2:
                raise ParityError(f"column {self.imin + k} has height {h} of wrong parity")
        for a, b in zip(self.heights, self.heights[1:]):
            if abs(a - b) != 1:
                raise ValueError(f"heights {self.heights} are not admissible (|dj| != 1)")

    @property
    def imax(self) -> int:
        return self.imin + len(self.heights) - 1

    def __contains__(self, i) -> bool:
        return self.imin <= i <= self.imax

    def height(self, i: int) -> int:
        if i not in self:
            raise WindowExhausted(f"column {i} outside window [{self.imin}, {self.imax}]")
        return self.heights[i - self.imin]

    def point(self, i: int) -> Point:
        return Point(i, self.height(i))

    def points(self) -> list[Point]:
        return [Point(self.imin + k, h) for k, h in enumerate(self.heights)]

    def on_boundary(self, p) -> bool:
        return p[0] in self and self.height(p[0]) == p[1]

    def is_local_min(self, a: int) -> bool:
        if a <= self.imin or a >= self.imax:
            return False
        h = self.height(a)
        return self.height(a - 1) == self.height(a + 1) == h + 1

    def is_local_max(self, a: int) -> bool:
        if a <= self.imin or a >= self.imax:
            return False
        h = self.height(a)
        return self.height(a - 1) == self.height(a + 1) == h - 1

    def mutable_columns(self, direction: str = "+") -> list[int]:
        test = self.is_local_min if direction == "+" else self.is_local_max
        return [a for a in range(self.imin + 1, self.imax) if test(a)]

    def __str__(self):
        return f"window {self.imin} {self.imax}; heights " + " ".join(map(str, self.heights))


def fundamental(imin: int, imax: int) -> Boundary:
    """The staircase j_i = i mod 2 on [imin, imax]."""
    if imin > imax:
        raise BadWindow(f"imin={imin} > imax={imax}")
    return Boundary(imin, tuple(i % 2 for i in range(imin, imax + 1)))


def mutate(b: Boundary, a: int, direction: str) -> Boundary:
    """Raise (``+``) a local minimum or lower (``-``) a local maximum by 2."""
    if direction not in ("+", "-"):
        raise ValueError(f"direction must be '+' or '-', got {direction!r}")
    if a not in b:
        raise WindowExhausted(f"column {a} outside window")
    if a in (b.imin, b.imax):
        raise EdgeColumn(f"column {a} is at the window edge")
    if direction == "+" and not b.is_local_min(a):
        raise NotMutable(f"column {a} is not a local minimum")
    if direction == "-" and not b.is_local_max(a):
        raise NotMutable(f"column {a} is not a local maximum")
    heights = list(b.heights)
    heights[a - b.imin] += 2 if direction == "+" else -2
    return Boundary(b.imin, tuple(heights))


@dataclass(frozen=True)
class ProjectionPath:
    start: Point
    steps: tuple[str, ...]
    end: Point

    def __post_init__(self):
        i, j = self.start
        for s in self.steps:
            i, j = i + 1, j + (1 if s == "u" else -1)
        if (i, j) != tuple(self.end):
            raise ValueError("steps do not lead from start to end")

    def __len__(self):
        return len(self.steps)

    def points(self) -> list[Point]:
        pts = [self.start]
        for s in self.steps:
            i, j = pts[-1]
            pts.append(Point(i + 1, j + (1 if s == "u" else -1)))
        return pts

    @property
    def word(self) -> str:
        return "".join(self.steps)


def _path_between(b: Boundary, i0: int, i1: int) -> ProjectionPath:
    steps = tuple("u" if b.height(i + 1) > b.height(i) else "d" for i in range(i0, i1))
    return ProjectionPath(b.point(i0), steps, b.point(i1))


def _check_point(b: Boundary, p) -> tuple[int, int, int]:
    i, j = p
    if (i + j) % 2:
        raise ParityError(f"point {tuple(p)} has i + j odd")
    return i, j, b.height(i)


def projection(b: Boundary, p) -> ProjectionPath:
    """Projection of a point on or above ``b`` onto the boundary.

    The left end is the rightmost boundary point on the line j - i = const
    through ``p``, the right end the leftmost one on j + i = const.
    """
    i, j, ji = _check_point(b, p)
    if j < ji:
        raise BelowBoundary(f"point {tuple(p)} lies below the boundary (height {ji})")
    if j == ji:
        pt = Point(i, j)
        return ProjectionPath(pt, (), pt)
    # j_k - k is non-increasing, j_k + k non-decreasing: the first hit is extremal
    i0 = i - 1
    while b.height(i0) - i0 != j - i:
        i0 -= 1
    i1 = i + 1
    while b.height(i1) + i1 != j + i:
        i1 += 1
    return _path_between(b, i0, i1)


def below_projection(b: Boundary, p) -> ProjectionPath:
    """Mirror image of :func:`projection` for a point on or below ``b``.

    The path starts with an up step and ends with a down step.
    """
    i, j, ji = _check_point(b, p)
    if j > ji:
        raise AboveBoundary(f"point {tuple(p)} lies above the boundary (height {ji})")
    if j == ji:
        pt = Point(i, j)
        return ProjectionPath(pt, (), pt)
    i0 = i - 1
    while b.height(i0) + i0 != j + i:
        i0 -= 1
    i1 = i + 1
    while b.height(i1) - i1 != j - i:
        i1 += 1
    return _path_between(b, i0, i1)


def reflected_point(path: ProjectionPath) -> Point:
    """The point under the boundary paired with the projection ``path``."""
    (i0, j0), (i1, j1) = path.start, path.end
    return Point((i0 + i1 + j0 - j1) // 2, (j0 + j1 + i0 - i1) // 2)


def apex(path: ProjectionPath) -> Point:
    """The point above the boundary whose projection has these endpoints."""
    (i0, j0), (i1, j1) = path.start, path.end
    return Point((i0 + i1 + j1 - j0) // 2, (j0 + j1 + i1 - i0) // 2)


# -- random boundaries -------------------------------------------------------

def random_boundary(rng: random.Random, imin: int, imax: int, base: int = 0) -> Boundary:
    """A random admissible boundary whose heights stay within base +/- 3."""
    if imin > imax:
        raise BadWindow(f"imin={imin} > imax={imax}")
    h = base + (imin - base) % 2
    heights = [h]
    for _ in range(imin + 1, imax + 1):
        options = [d for d in (-1, 1) if abs(heights[-1] + d - base) <= 3]
        heights.append(heights[-1] + rng.choice(options))
    return Boundary(imin, tuple(heights))


def random_mutations(b: Boundary, rng: random.Random, count: int) -> list[Boundary]:
    """``b`` followed by ``count`` successive random mutations of it."""
    out = [b]
    for _ in range(count):
        cur = out[-1]
        moves = [(a, "+") for a in cur.mutable_columns("+")]
        moves += [(a, "-") for a in cur.mutable_columns("-")]
        if not moves:
            break
        a, d = rng.choice(moves)
        out.append(mutate(cur, a, d))
    return out


# -- text format -------------------------------------------------------------

def parse_boundary(text: str) -> tuple[Boundary, dict[int, Fraction]]:
    """Parse the ``window`` / ``heights`` / ``value`` line format."""
    window = heights = None
    values: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0].startswith("#"):
            continue
        key, args = fields[0], fields[1:]
        try:
            if key == "window":
                if len(args) != 2:
                    raise ParseError("window needs two integers")
                window = (int(args[0]), int(args[1]))
            elif key == "heights":
                heights = tuple(int(a) for a in args)
            elif key == "value":
                if len(args) != 2:
                    raise ParseError("value needs a column and a rational")
                col, val = int(args[0]), Fraction(args[1])
                if col in values:
                    raise ParseError(f"duplicate value for column {col}")
                if val <= 0:
                    raise ParseError(f"value for column {col} must be positive")
                values[col] = val
            else:
                raise ParseError(f"unknown keyword {key!r}")
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if window is None or heights is None:
        raise ParseError("missing 'window' or 'heights' line")
    imin, imax = window
    if imin > imax:
        raise ParseError(f"window {imin} {imax} is empty")
    if len(heights) != imax - imin + 1:
        raise ParseError(f"expected {imax - imin + 1} heights, got {len(heights)}")
    try:
        b = Boundary(imin, heights)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    for col in values:
        if col not in b:
            raise ParseError(f"value for column {col} outside window")
    return b, values


def format_boundary(b: Boundary, values: dict[int, Fraction] | None = None) -> str:
    lines = [f"window {b.imin} {b.imax}", "heights " + " ".join(map(str, b.heights))]
    for col in sorted(values or {}):
        lines.append(f"value {col} {values[col]}")
    return "\n".join(lines) + "\n"
