"""Ordered words in network-computed T's and their formal inverses.

A word is q^k times a sequence of atoms T_P^{+1} or T_P^{-1}. The values are
composite Laurent polynomials, so a word cannot in general be multiplied out;
instead it is brought to a normal form by cancelling adjacent inverse pairs
and by swapping neighbouring atoms of different columns, each swap backed by
an explicit commutation certificate of the two values.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .boundary import Point
from .errors import NonInvertible, UncertifiedSwap
from .qlaurent import Polynomial, commutation_certificate, eval_q1


@dataclass(frozen=True)
class Atom:
    point: Point
    sign: int
    value: Polynomial = field(compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"atom sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "point", Point(*self.point))

    @property
    def column(self) -> int:
        return self.point.i

    def inv(self) -> "Atom":
        return Atom(self.point, -self.sign, self.value)

    def __str__(self):
        base = f"T[{self.point.i},{self.point.j}]"
        return base if self.sign == 1 else base + "^-1"


def _default_cert(a: Polynomial, b: Polynomial) -> int | None:
    return commutation_certificate(a, b)


@dataclass(frozen=True)
class SkewWord:
    qpow: int = 0
    atoms: tuple[Atom, ...] = ()

    def __mul__(self, other: "SkewWord") -> "SkewWord":
        if isinstance(other, SkewSum):
            return SkewSum.of(self) * other
        return SkewWord(self.qpow + other.qpow, self.atoms + other.atoms)

    def q_shift(self, k: int) -> "SkewWord":
        return SkewWord(self.qpow + k, self.atoms)

    def inv(self) -> "SkewWord":
        return SkewWord(-self.qpow, tuple(a.inv() for a in reversed(self.atoms)))

    def key(self) -> tuple:
        return (self.qpow, tuple((a.point, a.sign) for a in self.atoms))

    def __str__(self):
        parts = [f"q^{self.qpow}"] if self.qpow else []
        parts += [str(a) for a in self.atoms]
        return " * ".join(parts) if parts else "1"


def atom_word(point, value: Polynomial, sign: int = 1) -> SkewWord:
    return SkewWord(0, (Atom(point, sign, value),))


@dataclass(frozen=True)
class SkewSum:
    """An integer combination of SkewWords."""

    terms: tuple[tuple[int, SkewWord], ...] = ()

    @classmethod
    def of(cls, w: SkewWord, coeff: int = 1) -> "SkewSum":
        return cls(((coeff, w),))

    def __add__(self, other):
        if isinstance(other, SkewWord):
            other = SkewSum.of(other)
        return SkewSum(self.terms + other.terms)

    def __mul__(self, other):
        if isinstance(other, SkewWord):
            other = SkewSum.of(other)
        return SkewSum(tuple((c1 * c2, w1 * w2) for c1, w1 in self.terms for c2, w2 in other.terms))

    def __str__(self):
        return " + ".join(f"{c}*({w})" if c != 1 else f"({w})" for c, w in self.terms) or "0"


def _cancel(atoms: list[Atom]) -> bool:
    for k in range(len(atoms) - 1):
        a, b = atoms[k], atoms[k + 1]
        if a.point == b.point and a.sign == -b.sign:
            del atoms[k : k + 2]
            return True
    return False


def word_normalize(w: SkewWord, cert: Callable = _default_cert) -> SkewWord:
    """Cancel adjacent inverse pairs and sort atoms by column.

    Only neighbouring atoms in different columns are swapped; two atoms in
    the same column keep their relative order. Each swap of a^s b^t with
    a b = q^c b a contributes q^(c s t).
    """
    atoms = list(w.atoms)
    qpow = w.qpow
    certs: dict[tuple[Point, Point], int] = {}
    while True:
        while _cancel(atoms):
            pass
        swapped = False
        for k in range(len(atoms) - 1):
            a, b = atoms[k], atoms[k + 1]
            if a.column <= b.column:
                continue
            key = (a.point, b.point)
            if key not in certs:
                c = cert(a.value, b.value)
                if c is None:
                    raise UncertifiedSwap(f"{a.point} and {b.point} do not q-commute")
                certs[key] = c
            qpow += certs[key] * a.sign * b.sign
            atoms[k], atoms[k + 1] = b, a
            swapped = True
        if not swapped:
            break
    return SkewWord(qpow, tuple(atoms))


def normalize_sum(s: SkewSum, cert: Callable = _default_cert) -> dict:
    out: Counter = Counter()
    for c, w in s.terms:
        out[word_normalize(w, cert).key()] += c
    return {k: c for k, c in out.items() if c}


def word_equals(w1, w2, cert: Callable = _default_cert) -> bool:
    """Equality of normal forms (for sums: equal multisets with coefficients)."""
    if isinstance(w1, SkewWord) and isinstance(w2, SkewWord):
        return word_normalize(w1, cert).key() == word_normalize(w2, cert).key()
    if isinstance(w1, SkewWord):
        w1 = SkewSum.of(w1)
    if isinstance(w2, SkewWord):
        w2 = SkewSum.of(w2)
    return normalize_sum(w1, cert) == normalize_sum(w2, cert)


def eval_word(w, values: Mapping[int, Fraction]) -> Fraction:
    """Value at q = 1 with each column's generator set to a rational."""
    if isinstance(w, SkewSum):
        return sum((c * eval_word(x, values) for c, x in w.terms), Fraction(0))
    result = Fraction(1)
    for a in w.atoms:
        v = eval_q1(a.value, values)
        result *= v if a.sign == 1 else 1 / v
    return result


def expand(w) -> Polynomial:
    """Multiply a word out, provided every inverted atom is a unit."""
    if isinstance(w, SkewSum):
        total = Polynomial.zero()
        for c, x in w.terms:
            total = total + expand(x) * c
        return total
    result = Polynomial.const(1, w.qpow)
    for a in w.atoms:
        if a.sign == 1:
            result = result * a.value
        else:
            try:
                result = result * a.value.inverse()
            except NonInvertible:
                raise NonInvertible(f"{a.point} is not a single monomial and cannot be inverted") from None
    return result
