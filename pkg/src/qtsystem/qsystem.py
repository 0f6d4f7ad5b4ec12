"""The A1 Q-system: its quantum version (R0 R1 = q R1 R0) solved by the
two-step transfer matrix and by the 2-periodic network, and its fully
non-commutative version checked in the group algebra of the free group on
R0, R1.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .boundary import Point, fundamental, projection
from .errors import NonInvertible
from .network import Matrix2, chip
from .qlaurent import Polynomial, to_text

# R0 and R1 are the generators at (0,0) and (1,1): lambda gives R0 R1 = q R1 R0
R0_POINT = Point(0, 0)
R1_POINT = Point(1, 1)
NAMES = {tuple(R0_POINT): "R0", tuple(R1_POINT): "R1"}
NAME_POINTS = {v: k for k, v in NAMES.items()}


@dataclass(frozen=True)
class QSeed:
    r0: Point = R0_POINT
    r1: Point = R1_POINT

    def R0(self, e: int = 1) -> Polynomial:
        return Polynomial.gen(self.r0, e)

    def R1(self, e: int = 1) -> Polynomial:
        return Polynomial.gen(self.r1, e)


SEED = QSeed()


def qtext(p: Polynomial) -> str:
    return to_text(p, NAMES)


def _one_zero():
    return Polynomial.one(), Polynomial.zero()


def qq_weights(seed: QSeed = SEED) -> tuple[Polynomial, Polynomial, Polynomial]:
    """y1 = R1 R0^-1, y2 = R1^-1 R0^-1, y3 = R1^-1 R0."""
    return (
        seed.R1() * seed.R0(-1),
        seed.R1(-1) * seed.R0(-1),
        seed.R1(-1) * seed.R0(),
    )


def qq_transfer(seed: QSeed = SEED) -> Matrix2:
    y1, y2, y3 = qq_weights(seed)
    return Matrix2(y1, Polynomial.one(), y2 * y1, y2 + y3)


@lru_cache(maxsize=None)
def _transfer_power(seed: QSeed, j: int) -> Matrix2:
    if j == 0:
        return Matrix2.identity(*_one_zero())
    return _transfer_power(seed, j - 1) @ qq_transfer(seed)


def qq_solve(seed: QSeed = SEED, j: int = 1) -> Polynomial:
    """R_j = (T^j)_{1,1} R0 for j >= 0."""
    if j < 0:
        raise ValueError(f"j = {j} < 0")
    return _transfer_power(seed, j).e11 * seed.R0()


def qq_chips(seed: QSeed = SEED) -> tuple[Matrix2, Matrix2]:
    """U = U(R0, R1) and V = V(R1, R0)."""
    return chip("U", seed.r0, seed.r1), chip("V", seed.r1, seed.r0)


def qq_network(seed: QSeed = SEED, j: int = 1, start: str = "UV") -> Polynomial:
    """((UV)^j)_{1,1} R0, or ((VU)^{j-1})_{1,1} R1 with start='VU'."""
    U, V = qq_chips(seed)
    one, zero = _one_zero()
    if start == "UV":
        return (U @ V).power(j, one, zero).e11 * seed.R0()
    if start == "VU":
        if j < 1:
            raise ValueError("the VU form needs j >= 1")
        return (V @ U).power(j - 1, one, zero).e11 * seed.R1()
    raise ValueError(f"start must be 'UV' or 'VU', got {start!r}")


def qq_periodic_network(seed: QSeed = SEED, j: int = 1) -> Polynomial:
    """R_j as T_{j mod 2, j} on the staircase boundary, every boundary
    generator replaced by R0 (even column) or R1 (odd column)."""
    if j < 1:
        raise ValueError("the periodic network needs j >= 1")
    b = fundamental(-j - 1, j + 1)
    path = projection(b, (j % 2, j))
    pts = [seed.r0 if p.i % 2 == 0 else seed.r1 for p in path.points()]
    one, zero = _one_zero()
    M = Matrix2.identity(one, zero)
    for k, s in enumerate(path.steps):
        M = M @ chip("V" if s == "d" else "U", pts[k], pts[k + 1])
    end = seed.r0 if path.end.i % 2 == 0 else seed.r1
    return M.e11 * Polynomial.gen(end)


def qq_relation(seed: QSeed = SEED, j: int = 1) -> tuple[Polynomial, Polynomial]:
    """(q R_{j+1} R_{j-1}, R_j^2 + 1)."""
    lhs = (qq_solve(seed, j + 1) * qq_solve(seed, j - 1)).q_shift(1)
    return lhs, qq_solve(seed, j) ** 2 + 1


def _diag(a: Polynomial, b: Polynomial) -> Matrix2:
    z = Polynomial.zero()
    return Matrix2(a, z, z, b)


def qq_conjugation_sides(seed: QSeed = SEED, orientation: str = "corrected") -> tuple[Matrix2, Matrix2]:
    """UV and the conjugated transfer matrix.

    'corrected' is diag(1, R0) T diag(1, R0^-1), which holds entrywise;
    'printed' is diag(1, R0^-1) T diag(1, R0), which disagrees with UV at
    (1,2), (2,1) and (2,2). Both have the same (1,1) entry.
    """
    U, V = qq_chips(seed)
    one = Polynomial.one()
    if orientation == "corrected":
        left, right = _diag(one, seed.R0()), _diag(one, seed.R0(-1))
    elif orientation == "printed":
        left, right = _diag(one, seed.R0(-1)), _diag(one, seed.R0())
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return U @ V, left @ qq_transfer(seed) @ right


def qq_verify_conjugation(seed: QSeed = SEED, orientation: str = "corrected") -> bool:
    lhs, rhs = qq_conjugation_sides(seed, orientation)
    return lhs == rhs


def qq_conjugation_mismatches(seed: QSeed = SEED, orientation: str = "corrected") -> list[str]:
    lhs, rhs = qq_conjugation_sides(seed, orientation)
    return [f"{r}{c}" for r in (1, 2) for c in (1, 2) if lhs[r, c] != rhs[r, c]]


def classical_q(n: int, r0: Fraction = Fraction(1), r1: Fraction = Fraction(1)) -> Fraction:
    """R_n of the commutative Q-system R_{n+1} R_{n-1} = R_n^2 + 1, n >= 0."""
    seq = [Fraction(r0), Fraction(r1)]
    while len(seq) <= n:
        seq.append((seq[-1] ** 2 + 1) / seq[-2])
    return seq[n]


def _clear(p: Polynomial, seed: QSeed) -> tuple[int, int, dict[tuple[int, int, int], int]]:
    """Write p = R0^-A P(R0, R1) R1^-B with P in non-negative powers.

    Returns A, B and P as {(a, b, qpow): coeff} for q^qpow R0^a R1^b.
    """
    A = B = 0
    for (s, _), _ in p.items():
        exps = dict(((i, j), e) for i, j, e in s)
        A = max(A, -exps.get(tuple(seed.r0), 0))
        B = max(B, -exps.get(tuple(seed.r1), 0))
    cleared = seed.R0(A) * p * seed.R1(B) if (A or B) else p
    out = {}
    for (s, k), c in cleared.items():
        exps = dict(((i, j), e) for i, j, e in s)
        out[(exps.get(tuple(seed.r0), 0), exps.get(tuple(seed.r1), 0), k)] = c
    return A, B, out


def qq_translation_sides(seed: QSeed, n: int, p: int) -> tuple[Polynomial, Polynomial]:
    """R_p^A R_{n+p} R_{p+1}^B against P(R_p, R_{p+1}), where R_n = R0^-A P(R0, R1) R1^-B.

    R_p, R_{p+1} q-commute like R0, R1, so R0 -> R_p, R1 -> R_{p+1} is an
    algebra map on polynomials; clearing denominators avoids inverting R_p.
    """
    A, B, P = _clear(qq_solve(seed, n), seed)
    x, y = qq_solve(seed, p), qq_solve(seed, p + 1)
    lhs = (x ** A) * qq_solve(seed, n + p) * (y ** B)
    rhs = Polynomial.zero()
    for (a, b, k), c in P.items():
        rhs = rhs + ((x ** a) * (y ** b)).q_shift(k) * c
    return lhs, rhs


# -- free group algebra ---------------------------------------------------------

# letters: 1 = R0, 2 = R1, negative for inverses
_LETTER_NAMES = {1: "R0", 2: "R1"}


def reduce_word(letters) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _join(w1: tuple[int, ...], w2: tuple[int, ...]) -> tuple[int, ...]:
    """Product of two reduced words: cancellation happens only at the seam."""
    k = 0
    n = min(len(w1), len(w2))
    while k < n and w1[-1 - k] == -w2[k]:
        k += 1
    return w1[: len(w1) - k] + w2[k:]


def _word_key(w: tuple[int, ...]):
    return (len(w), tuple((abs(x), x < 0) for x in w))


def _word_text(w: tuple[int, ...]) -> str:
    if not w:
        return "1"
    parts = []
    k = 0
    while k < len(w):
        m = k
        while m + 1 < len(w) and w[m + 1] == w[k]:
            m += 1
        e = (m - k + 1) * (1 if w[k] > 0 else -1)
        name = _LETTER_NAMES[abs(w[k])]
        parts.append(name if e == 1 else f"{name}^{e}")
        k = m + 1
    return " * ".join(parts)


class FreeElement:
    """An integer combination of freely reduced words in R0^{+-1}, R1^{+-1}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for w, c in (terms or {}).items():
            acc[reduce_word(w)] += c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _reduced(cls, terms: dict) -> "FreeElement":
        x = cls.__new__(cls)
        x.terms = {w: c for w, c in terms.items() if c}
        return x

    @classmethod
    def word(cls, *letters: int) -> "FreeElement":
        return cls({tuple(letters): 1})

    @classmethod
    def one(cls) -> "FreeElement":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls()

    def __add__(self, other):
        if isinstance(other, int):
            other = FreeElement.one() * other
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeElement._reduced(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement._reduced({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FreeElement._reduced({w: c * other for w, c in self.terms.items()})
        out: dict = defaultdict(int)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[_join(w1, w2)] += c1 * c2
        return FreeElement._reduced(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "FreeElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = FreeElement.one()
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "FreeElement":
        """Inverse of a unit, i.e. +-1 times a single word."""
        if len(self.terms) != 1:
            raise NonInvertible(f"{self} is not a single word")
        (w, c), = self.terms.items()
        if c not in (1, -1):
            raise NonInvertible(f"{self} has coefficient {c}")
        return FreeElement({tuple(-x for x in reversed(w)): c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = FreeElement.one() * other
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=_word_key):
            c = self.terms[w]
            text = _word_text(w)
            if c == 1:
                parts.append(text)
            elif text == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c} * {text}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FreeElement({self})"


def fga_mul(x: FreeElement, y: FreeElement) -> FreeElement:
    return x * y


def fga_add(x: FreeElement, y: FreeElement) -> FreeElement:
    return x + y


R0 = FreeElement.word(1)
R1 = FreeElement.word(2)
R0_INV = FreeElement.word(-1)
R1_INV = FreeElement.word(-2)
# forced by R0 R1 = R1 C R0
C = FreeElement.word(-2, 1, 2, -1)
C_INV = C.inverse()


def nc_transfer() -> Matrix2:
    y1, y2, y3 = R1 * R0_INV, R1_INV * R0_INV, R1_INV * R0
    return Matrix2(y1, FreeElement.one(), y2 * y1, y2 + y3)


def nc_chip(kind: str, a: FreeElement, b: FreeElement) -> Matrix2:
    """U(a,b) = [[1,0],[C^-1 b^-1, a b^-1]], V(a,b) = [[a b^-1, b^-1],[0,1]]."""
    b_inv = b.inverse()
    one, zero = FreeElement.one(), FreeElement.zero()
    if kind == "U":
        return Matrix2(one, zero, C_INV * b_inv, a * b_inv)
    if kind == "V":
        return Matrix2(a * b_inv, b_inv, zero, one)
    raise ValueError(f"chip kind must be 'U' or 'V', got {kind!r}")


def _nc_identity() -> Matrix2:
    return Matrix2.identity(FreeElement.one(), FreeElement.zero())


@lru_cache(maxsize=None)
def _nc_transfer_power(n: int) -> Matrix2:
    if n == 0:
        return _nc_identity()
    return _nc_transfer_power(n - 1) @ nc_transfer()


def nc_sequence(n: int) -> FreeElement:
    """R_n for n >= 0 as (T^n)_{1,1} R0; n = -1, -2 by the backward recursion.

    The path form needs no inverse of a composite R_n. Below zero the
    recursion R_{n-1} = C^-1 R_{n+1}^-1 (R_n^2 + 1) stays division-free only
    while R_{n+1} is a single word.
    """
    if n >= 0:
        return _nc_transfer_power(n).e11 * R0
    return nc_step("ncqsys", n + 1, backward=True)


def nc_step(form: str, n: int, backward: bool = False) -> FreeElement:
    """One step of the recursion in either printed form.

    forward:  konts  R_{n+1} = (R_n + R_n^-1) R_{n-1}^-1 R_n
              ncqsys R_{n+1} = (R_n^2 + 1) R_{n-1}^-1 C^-1
    backward: konts  R_{n-1} = R_n R_{n+1}^-1 (R_n + R_n^-1)
              ncqsys R_{n-1} = C^-1 R_{n+1}^-1 (R_n^2 + 1)
    Raises NonInvertible when an inverse is not a single word.
    """
    rn = nc_sequence(n)
    other = nc_sequence(n + 1 if backward else n - 1)
    if form == "konts":
        if backward:
            return rn * other.inverse() * (rn + rn.inverse())
        return (rn + rn.inverse()) * other.inverse() * rn
    if form == "ncqsys":
        if backward:
            return C_INV * other.inverse() * (rn * rn + 1)
        return (rn * rn + 1) * other.inverse() * C_INV
    raise ValueError(f"unknown form {form!r}")


def nc_network(n: int, start: str = "UV") -> FreeElement:
    U0, V0 = nc_chip("U", R0, R1), nc_chip("V", R1, R0)
    one, zero = FreeElement.one(), FreeElement.zero()
    if start == "UV":
        return (U0 @ V0).power(n, one, zero).e11 * R0
    return (V0 @ U0).power(n - 1, one, zero).e11 * R1


def nc_exchange_sides(p: int = 0) -> dict[str, tuple[FreeElement, FreeElement]]:
    """V(a,b) U(b,c) against U(a,b') V(b',c) for (a,b,c) = (R_{p+1}, R_p, R_{p+1}), b' = R_{p+2}.

    b'^-1 is composite, so the (2,2) entry is compared after multiplying by
    b' C on the left and b' on the right.
    """
    a = c = nc_sequence(p + 1)
    b, bp = nc_sequence(p), nc_sequence(p + 2)
    lhs = nc_chip("V", a, b) @ nc_chip("U", b, c)
    c_inv = c.inverse()
    return {
        "11": (lhs.e11, bp * c_inv),
        "12": (lhs.e12, c_inv),
        "21": (lhs.e21, C_INV * c_inv),
        "22": (bp * C * lhs.e22 * bp, c_inv * bp + bp * C * a),
        "defining": (bp * C * b, a * c + 1),
    }


def nc_conjugation_sides() -> tuple[Matrix2, Matrix2]:
    U0, V0 = nc_chip("U", R0, R1), nc_chip("V", R1, R0)
    one, zero = FreeElement.one(), FreeElement.zero()
    left, right = Matrix2(one, zero, zero, R0), Matrix2(one, zero, zero, R0_INV)
    return U0 @ V0, left @ nc_transfer() @ right


def specialize(x: FreeElement, seed: QSeed = SEED) -> Polynomial:
    """The algebra map R0 -> R0, R1 -> R1 into the quantum torus; it sends C to q."""
    gens = {1: seed.R0(), -1: seed.R0(-1), 2: seed.R1(), -2: seed.R1(-1)}
    total = Polynomial.zero()
    for w, c in x.terms.items():
        term = Polynomial.one()
        for letter in w:
            term = term * gens[letter]
        total = total + term * c
    return total


@dataclass
class IdentityCheck:
    name: str
    n: int
    ok: bool
    lhs: str = ""
    rhs: str = ""


def _check(name: str, n: int, lhs, rhs) -> IdentityCheck:
    ok = lhs == rhs
    return IdentityCheck(name, n, ok, "" if ok else str(lhs), "" if ok else str(rhs))


def nc_verify(n_max: int, specialize_max: int = 5) -> list[IdentityCheck]:
    """All non-commutative checks for 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max = {n_max} < 1")
    out = []
    for n in range(1, n_max + 1):
        rn, rn1 = nc_sequence(n), nc_sequence(n + 1)
        out.append(_check("ncqcom", n, rn * rn1, rn1 * C * rn))
        out.append(_check("ncqsys", n, rn1 * C * nc_sequence(n - 1), rn * rn + 1))
        out.append(_check("network-UV", n, nc_network(n, "UV"), rn))
        out.append(_check("network-VU", n, nc_network(n, "VU"), rn))
        if n <= specialize_max:
            out.append(_check("specialize", n, specialize(rn), qq_solve(SEED, n)))
            out.append(
                _check("specialize-ncqcom", n, specialize(rn * rn1), specialize(rn1 * C * rn))
            )
    # the step forms only where every inverse is a single word
    out.append(_check("konts=ncqsys", 1, nc_step("konts", 1), nc_step("ncqsys", 1)))
    out.append(_check("konts=path", 1, nc_step("konts", 1), nc_sequence(2)))
    out.append(_check("ncqsys=path", 2, nc_step("ncqsys", 2), nc_sequence(3)))
    out.append(
        _check("konts=ncqsys backward", 0, nc_step("konts", 0, True), nc_step("ncqsys", 0, True))
    )
    for key, (lhs, rhs) in nc_exchange_sides(0).items():
        out.append(_check(f"exchange-{key}", 0, lhs, rhs))
    lhs, rhs = nc_conjugation_sides()
    out.append(_check("conjugation", 0, lhs, rhs))
    return out
