"""Laurent polynomials in the q-commuting variables of one cluster.

A monomial is stored in normal order: one generator per column, columns
ascending, and a separate power of q. Products are normal-ordered with the
pairwise exponents of :func:`~qtsystem.boundary.lambda_exponent`, so the
representation is canonical and equality is plain dictionary equality.

Coefficients are exact integers; nothing here ever uses floating point.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .boundary import Point, lambda_exponent
from .errors import ColumnClash, ConeViolation, MissingValue, NonInvertible, ParseError

# ((i, j, exponent), ...) with strictly ascending i
Support = tuple


@dataclass(frozen=True)
class QCoeff:
    """An element of Z[q, 1/q] as a sorted tuple of (exponent, coefficient)."""

    items: tuple = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "QCoeff":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def __bool__(self):
        return bool(self.items)

    def __add__(self, other: "QCoeff") -> "QCoeff":
        d = defaultdict(int, self.items)
        for k, v in other.items:
            d[k] += v
        return QCoeff.from_dict(d)

    def __mul__(self, other: "QCoeff") -> "QCoeff":
        d = defaultdict(int)
        for k1, v1 in self.items:
            for k2, v2 in other.items:
                d[k1 + k2] += v1 * v2
        return QCoeff.from_dict(d)

    def is_positive(self) -> bool:
        return all(v > 0 for _, v in self.items)

    def at_one(self) -> int:
        return sum(v for _, v in self.items)

    def __str__(self):
        if not self.items:
            return "0"
        return " + ".join(f"{v}*q^{k}" for k, v in self.items)


@dataclass(frozen=True)
class Monomial:
    qpow: int = 0
    factors: Support = ()

    def __str__(self):
        return _term_text(self.factors, self.qpow, 1, None)


def _check_cone(i1, j1, i2, j2):
    if abs(i1 - i2) < abs(j1 - j2):
        raise ConeViolation(f"T({i1},{j1}) and T({i2},{j2}) share no cluster")


@lru_cache(maxsize=1 << 18)
def _mul_support(s1: Support, s2: Support) -> tuple[Support, int]:
    """Normal-order the product of two normal-ordered supports.

    Returns the merged support and the power of q picked up while moving
    every factor of ``s2`` left past the factors of ``s1`` in higher columns.
    """
    shift = 0
    for i1, j1, e1 in s1:
        for i2, j2, e2 in s2:
            if i1 > i2:
                shift += e1 * e2 * lambda_exponent((i1, j1), (i2, j2))
            elif i1 < i2:
                _check_cone(i1, j1, i2, j2)
    out = []
    a = b = 0
    while a < len(s1) and b < len(s2):
        f1, f2 = s1[a], s2[b]
        if f1[0] < f2[0]:
            out.append(f1)
            a += 1
        elif f2[0] < f1[0]:
            out.append(f2)
            b += 1
        else:
            if f1[1] != f2[1]:
                raise ColumnClash(f"column {f1[0]} holds heights {f1[1]} and {f2[1]}")
            e = f1[2] + f2[2]
            if e:
                out.append((f1[0], f1[1], e))
            a += 1
            b += 1
    out.extend(s1[a:])
    out.extend(s2[b:])
    return tuple(out), shift


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    support, shift = _mul_support(m1.factors, m2.factors)
    return Monomial(m1.qpow + m2.qpow + shift, support)


def mono_inv(m: Monomial) -> Monomial:
    inv = tuple((i, j, -e) for i, j, e in m.factors)
    # m * (x^-s) = q^shift, so the inverse carries q^(-qpow - shift)
    _, shift = _mul_support(m.factors, inv)
    return Monomial(-m.qpow - shift, inv)


class Polynomial:
    """A finite Z-linear combination of q^k times normal-ordered monomials."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[Support, int], int] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({((), 0): 1})

    @classmethod
    def const(cls, c: int = 1, qpow: int = 0) -> "Polynomial":
        return cls({((), qpow): c})

    @classmethod
    def gen(cls, point, exp: int = 1) -> "Polynomial":
        i, j = point
        if exp == 0:
            return cls.one()
        return cls({(((i, j, exp),), 0): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({(m.factors, m.qpow): coeff})

    # -- views ---------------------------------------------------------------

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict[Support, QCoeff]:
        grouped: dict[Support, dict[int, int]] = defaultdict(dict)
        for (s, k), c in self._terms.items():
            grouped[s][k] = c
        return {s: QCoeff.from_dict(d) for s, d in grouped.items()}

    def monomials(self) -> list[tuple[int, Monomial]]:
        return [(c, Monomial(k, s)) for (s, k), c in sorted(self._terms.items())]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def as_monomial(self) -> tuple[int, Monomial]:
        if len(self._terms) != 1:
            raise NonInvertible(f"{self} is not a single monomial")
        (s, k), c = next(iter(self._terms.items()))
        return c, Monomial(k, s)

    def columns(self) -> set[int]:
        return {f[0] for s, _ in self._terms for f in s}

    def points(self) -> set[Point]:
        return {Point(f[0], f[1]) for s, _ in self._terms for f in s}

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict = defaultdict(int)
        for (s1, k1), c1 in self._terms.items():
            for (s2, k2), c2 in other._terms.items():
                s, shift = _mul_support(s1, s2)
                out[(s, k1 + k2 + shift)] += c1 * c2
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            return self.inverse() ** (-n)
        result = Polynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def q_shift(self, k: int) -> "Polynomial":
        """Multiply by the central element q^k."""
        if k == 0:
            return self
        return Polynomial({(s, e + k): c for (s, e), c in self._terms.items()})

    def inverse(self) -> "Polynomial":
        """Inverse of a unit (a monomial with coefficient +/-1)."""
        c, m = self.as_monomial()
        if c not in (1, -1):
            raise NonInvertible(f"{self} is not a unit")
        return Polynomial.from_monomial(mono_inv(m), c)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other) if other else Polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return to_text(self)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def q_power(k: int) -> Polynomial:
    return Polynomial.const(1, k)


def word(*factors) -> Polynomial:
    """Product of (point, exponent) pairs or Polynomials, in the given order."""
    result = Polynomial.one()
    for f in factors:
        if not isinstance(f, Polynomial):
            pt, e = f
            f = Polynomial.gen(pt, e)
        result = result * f
    return result


# -- bar involution, specialisation, positivity --------------------------------

def _bar_support(s: Support) -> int:
    """q-power of bar(x^s): reversal of the factors plus one q per generator."""
    shift = sum(e for _, _, e in s)
    for a in range(len(s)):
        ia, ja, ea = s[a]
        for b in range(a + 1, len(s)):
            ib, jb, eb = s[b]
            shift += eb * ea * lambda_exponent((ib, jb), (ia, ja))
    return shift


def bar(p: Polynomial) -> Polynomial:
    """The antiautomorphism with q -> 1/q and T -> q T on generators."""
    out = {}
    for (s, k), c in p.items():
        out[(s, -k + _bar_support(s))] = c
    return Polynomial(out)


def eval_q1(p: Polynomial, values: Mapping[int, Fraction]) -> Fraction:
    """Set q = 1 and substitute each column's generator by a rational."""
    total = Fraction(0)
    for (s, _), c in p.items():
        term = Fraction(c)
        for i, _, e in s:
            if i not in values:
                raise MissingValue(f"no value for column {i}")
            term *= Fraction(values[i]) ** e
        total += term
    return total


def is_positive(p: Polynomial) -> bool:
    return all(c > 0 for _, c in p.items())


def commutation_certificate(p: Polynomial, q: Polynomial) -> int | None:
    """The exponent c with p q = q^c q p, or None when no such c exists."""
    pq, qp = p * q, q * p
    if not pq and not qp:
        return 0
    if not pq or not qp or len(pq) != len(qp):
        return None
    (s, k), _ = min(pq.items())
    candidates = [k2 for (s2, k2), _ in qp.items() if s2 == s]
    for k2 in candidates:
        if pq == qp.q_shift(k - k2):
            return k - k2
    return None


# -- canonical text ------------------------------------------------------------

def _gen_text(i, j, e, names):
    base = names[(i, j)] if names and (i, j) in names else f"T[{i},{j}]"
    return base if e == 1 else f"{base}^{e}"


def _term_text(s: Support, k: int, c: int, names) -> str:
    parts = []
    if c != 1:
        parts.append(str(c))
    if k != 0:
        parts.append(f"q^{k}")
    parts.extend(_gen_text(i, j, e, names) for i, j, e in s)
    return " * ".join(parts) if parts else "1"


def to_text(p: Polynomial, names: Mapping[tuple, str] | None = None) -> str:
    """Canonical text: terms sorted by support then q-power, joined by ' + '."""
    if not p:
        return "0"
    return " + ".join(_term_text(s, k, c, names) for (s, k), c in sorted(p.items()))


_FACTOR = re.compile(
    r"^(?:(?P<int>-?\d+)"
    r"|q(?:\^(?P<q>-?\d+))?"
    r"|T\[(?P<i>-?\d+),(?P<j>-?\d+)\](?:\^(?P<e>-?\d+))?"
    r"|(?P<name>[A-Za-z_]\w*)(?:\^(?P<ne>-?\d+))?)$"
)


def parse(text: str, names: Mapping[str, tuple] | None = None) -> Polynomial:
    """Inverse of :func:`to_text`.

    Each term is read as the product of its factors in the order written, so
    non-normal-ordered input is normal-ordered on the way in.
    """
    text = text.strip()
    if text == "0":
        return Polynomial()
    total = Polynomial()
    for raw_term in text.split(" + "):
        term = Polynomial.one()
        for raw in raw_term.strip().split("*"):
            raw = raw.strip()
            m = _FACTOR.match(raw)
            if not m:
                raise ParseError(f"cannot parse factor {raw!r}")
            if m["int"] is not None:
                term = term * int(m["int"])
            elif m["i"] is not None:
                term = term * Polynomial.gen((int(m["i"]), int(m["j"])), int(m["e"] or 1))
            elif m["name"] is not None:
                if not names or m["name"] not in names:
                    raise ParseError(f"unknown generator {m['name']!r}")
                term = term * Polynomial.gen(names[m["name"]], int(m["ne"] or 1))
            else:
                term = term.q_shift(int(m["q"] or 1))
        total = total + term
    return total
