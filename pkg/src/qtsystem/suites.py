"""Verification sweeps over boundaries, shared by the CLI and the tests.

Each suite turns a boundary into a deterministic, ordered list of checks.
Instances whose data would leave the window are skipped, not counted.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .boundary import (
    Boundary,
    Point,
    fundamental,
    lambda_exponent,
    random_boundary,
    random_mutations,
    same_cluster,
)
from .conserved import (
    commutator,
    conservation_steps,
    c_m,
    d_m,
    offdiagonal_sides,
    step_conservation,
)
from .errors import WindowExhausted
from .network import (
    classical_oracle,
    exchange_sides,
    point_projection,
    solve_point,
    tsys_sides,
)
from .qlaurent import Polynomial, bar, commutation_certificate, eval_q1, is_positive, to_text
from .ysystem import chi_certificate, classical_y, pair_certificate, same_column_products, y_normal_forms

# chi and Y checks multiply products of four T's; beyond this projection
# length the polynomials grow too large for an interactive sweep
YSYS_MAX_LEN = 8

SUITES = ("tsys", "qcomm", "positivity", "bar", "exchange", "conserved", "ysys")


@dataclass
class Check:
    suite: str
    instance: str
    ok: bool
    lhs: str = ""
    rhs: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.suite} {self.instance}"


@dataclass
class RunReport:
    command: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float | None = None

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self, machine: bool = False) -> str:
        lines = [] if machine else [f"# {self.command}"]
        for c in self.checks:
            lines.append(c.line())
            if not c.ok and not machine and (c.lhs or c.rhs):
                lines.append(f"  lhs: {c.lhs}")
                lines.append(f"  rhs: {c.rhs}")
        if not machine:
            summary = f"# {len(self.checks)} checks, {len(self.failures)} failed"
            if self.elapsed is not None:
                summary += f", {self.elapsed:.2f}s"
            lines.append(summary)
        return "\n".join(lines) + "\n"


def _poly_check(suite: str, instance: str, lhs, rhs) -> Check:
    ok = lhs == rhs
    if ok:
        return Check(suite, instance, True)
    fmt = to_text if isinstance(lhs, Polynomial) else str
    return Check(suite, instance, False, fmt(lhs), fmt(rhs))


def _resolvable(b: Boundary, p, max_len: int | None = None) -> bool:
    try:
        n = len(point_projection(b, p))
    except WindowExhausted:
        return False
    return max_len is None or n <= max_len


def lattice_points(b: Boundary, jrange: int, max_len: int | None = None) -> list[Point]:
    """Even points with |j| <= jrange whose value fits in the window, ordered by (j, i)."""
    out = []
    for j in range(-jrange, jrange + 1):
        for i in range(b.imin, b.imax + 1):
            if (i + j) % 2 == 0 and _resolvable(b, (i, j), max_len):
                out.append(Point(i, j))
    return out


def tsys_centers(b: Boundary, jrange: int, max_len: int | None = None) -> list[Point]:
    """Odd centers whose four neighbours all fit in the window."""
    out = []
    for j in range(-jrange, jrange + 1):
        for i in range(b.imin + 1, b.imax):
            if (i + j) % 2 == 0:
                continue
            nbrs = [(i, j + 1), (i, j - 1), (i + 1, j), (i - 1, j)]
            if all(_resolvable(b, p, max_len) for p in nbrs):
                out.append(Point(i, j))
    return out


def random_values(rng: random.Random, b: Boundary) -> dict[int, Fraction]:
    return {i: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for i in range(b.imin, b.imax + 1)}


# -- random T-system instances --------------------------------------------------

@dataclass(frozen=True)
class TsysInstance:
    boundary: Boundary
    center: Point

    def points(self) -> list[Point]:
        i, j = self.center
        return [Point(i, j + 1), Point(i, j - 1), Point(i + 1, j), Point(i - 1, j)]


def random_tsys_instances(
    rng: random.Random, count: int, imin: int = -5, imax: int = 5, max_len: int = 8
) -> list[TsysInstance]:
    """``count`` random (boundary, center) pairs, alternating centers above
    and below the boundary so both solution formulas are exercised."""
    out: list[TsysInstance] = []
    while len(out) < count:
        b = random_boundary(rng, imin, imax)
        want_below = len(out) % 2 == 1
        cands = []
        for c in tsys_centers(b, 12, max_len):
            below = any(p.j < b.height(p.i) for p in TsysInstance(b, c).points())
            if below == want_below:
                cands.append(c)
        if cands:
            out.append(TsysInstance(b, rng.choice(cands)))
    return out


# -- suites ---------------------------------------------------------------------

def suite_tsys(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for c in tsys_centers(b, jrange):
        lhs, rhs = tsys_sides(b, c)
        out.append(_poly_check("tsys", f"{tag}:{c}", lhs, rhs))
    return out


def suite_qcomm(b: Boundary, tag: str, jrange: int, rng: random.Random, limit: int = 60) -> list[Check]:
    pts = lattice_points(b, jrange)
    pairs = [(p, r) for p, r in combinations(pts, 2) if p.i != r.i and same_cluster(p, r)]
    if len(pairs) > limit:
        pairs = rng.sample(pairs, limit)
    out = []
    for p, r in pairs:
        cert = commutation_certificate(solve_point(b, p), solve_point(b, r))
        lam = lambda_exponent(p, r)
        ok = cert == lam
        out.append(Check("qcomm", f"{tag}:{p}{r}", ok, "" if ok else str(cert), "" if ok else str(lam)))
    return out


def suite_positivity(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for p in lattice_points(b, jrange):
        t = solve_point(b, p)
        ok = is_positive(t)
        out.append(Check("positivity", f"{tag}:{p}", ok, "" if ok else to_text(t), ""))
    return out


def suite_bar(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for p in lattice_points(b, jrange):
        t = solve_point(b, p)
        out.append(_poly_check("bar", f"{tag}:{p}", bar(t), t.q_shift(1)))
    return out


def suite_exchange(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for a in b.mutable_columns("+"):
        for entry, (lhs, rhs) in exchange_sides(b, a).items():
            out.append(_poly_check("exchange", f"{tag}:col{a}:{entry}", lhs, rhs))
    return out


def _is_fundamental(b: Boundary) -> bool:
    return b == fundamental(b.imin, b.imax)


def suite_conserved(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for i in conservation_steps(b):
        try:
            kind, lhs, rhs = step_conservation(b, i)
        except WindowExhausted:
            continue
        out.append(_poly_check("conserved", f"{tag}:{kind}-step{i}", lhs, rhs))
    if not _is_fundamental(b):
        return out
    evens = [m for m in range(b.imin, b.imax + 1) if m % 2 == 0]
    cs, ds = {}, {}
    for m in evens:
        try:
            cs[m] = c_m(b, m)
        except WindowExhausted:
            pass
        try:
            ds[m] = d_m(b, m)
        except WindowExhausted:
            pass
    for m in sorted(cs):
        for p in sorted(ds):
            out.append(_poly_check("conserved", f"{tag}:[c{m},d{p}]", commutator(cs[m], ds[p]), Polynomial.zero()))
    for p in lattice_points(b, jrange):
        if p.j < 2:
            continue
        try:
            sides = offdiagonal_sides(b, p)
        except (WindowExhausted, ValueError):
            continue
        for entry, (lhs, rhs) in sides.items():
            out.append(_poly_check("conserved", f"{tag}:offdiag{p}:{entry}", lhs, rhs))
    return out


def chi_adjacent(b: Boundary, jrange: int) -> list[tuple[int, int, int]]:
    out = []
    for l in range(-jrange, jrange):
        for k in range(b.imin + 1, b.imax):
            if (k + l) % 2 == 0:
                continue
            for side in (1, -1):
                a = k + side
                pts = [(a + 1, l + 1), (a - 1, l + 1), (k + 1, l), (k - 1, l)]
                if all(_resolvable(b, p, YSYS_MAX_LEN) for p in pts):
                    out.append((k, l, side))
    return out


def chi_nonadjacent(b: Boundary, jrange: int, rng: random.Random, limit: int = 20) -> list[tuple[Point, Point]]:
    """Pairs of chi centers with |di| >= |dj| + 2, so all four T's share a cluster."""
    centers = [
        Point(k, l)
        for l in range(-jrange, jrange + 1)
        for k in range(b.imin + 1, b.imax)
        if (k + l) % 2 and all(_resolvable(b, p, YSYS_MAX_LEN) for p in [(k + 1, l), (k - 1, l)])
    ]
    pairs = [(c1, c2) for c1, c2 in combinations(centers, 2) if abs(c1.i - c2.i) >= abs(c1.j - c2.j) + 2]
    if len(pairs) > limit:
        pairs = rng.sample(pairs, limit)
    return pairs


def y_centers(b: Boundary, jrange: int) -> list[Point]:
    out = []
    for j in range(-jrange, jrange + 1):
        for i in range(b.imin + 2, b.imax - 1):
            if (i + j) % 2:
                continue
            pts = [(i + 1, j + 1), (i + 1, j - 1), (i - 1, j + 1), (i - 1, j - 1), (i, j), (i + 2, j), (i - 2, j)]
            if all(_resolvable(b, p, YSYS_MAX_LEN) for p in pts):
                out.append(Point(i, j))
    return out


def suite_ysys(b: Boundary, tag: str, jrange: int, rng: random.Random) -> list[Check]:
    out = []
    for k, l, side in chi_adjacent(b, jrange):
        cert = chi_certificate(b, k, l, side)
        ok = cert == 2
        out.append(Check("ysys", f"{tag}:chi({k},{l}){'+' if side > 0 else '-'}", ok, "" if ok else str(cert), "" if ok else "2"))
    for c1, c2 in chi_nonadjacent(b, jrange, rng):
        cert = pair_certificate(b, c1, c2)
        ok = cert == 0
        out.append(Check("ysys", f"{tag}:chi{c1}{c2}", ok, "" if ok else str(cert), "" if ok else "0"))
    values = random_values(rng, b)
    for c in y_centers(b, jrange):
        lhs, rhs = y_normal_forms(b, c.i, c.j)
        ok = lhs.key() == rhs.key()
        out.append(Check("ysys", f"{tag}:Y{c}", ok, "" if ok else str(lhs), "" if ok else str(rhs)))
        q1l, q1r = classical_y(b, values, c.i, c.j)
        out.append(_poly_check("ysys", f"{tag}:Yq1{c}", q1l, q1r))
    for c in tsys_centers(b, jrange, YSYS_MAX_LEN):
        for name, (lhs, rhs) in same_column_products(b, c.i, c.j).items():
            out.append(_poly_check("ysys", f"{tag}:Y3{c}:{name}", lhs, rhs))
    return out


SUITE_FUNCS = {
    "tsys": suite_tsys,
    "qcomm": suite_qcomm,
    "positivity": suite_positivity,
    "bar": suite_bar,
    "exchange": suite_exchange,
    "conserved": suite_conserved,
    "ysys": suite_ysys,
}


def run_suite(name: str, b: Boundary, jrange: int = 5, seed: int = 0, mutations: int = 0) -> list[Check]:
    """Run a suite on ``b`` and on ``mutations`` successive random mutations of it."""
    if name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}")
    rng = random.Random(seed)
    boundaries = random_mutations(b, rng, mutations)
    out: list[Check] = []
    for k, bk in enumerate(boundaries):
        out.extend(SUITE_FUNCS[name](bk, f"b{k}", jrange, rng))
    return out


def oracle_agrees(b: Boundary, p, rng: random.Random, samples: int = 20) -> bool:
    """eval_q1 of the symbolic T equals the rational recursion at random data."""
    t = solve_point(b, p)
    for _ in range(samples):
        values = random_values(rng, b)
        if eval_q1(t, values) != classical_oracle(b, values, p):
            return False
    return True

