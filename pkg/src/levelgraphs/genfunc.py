"""Rational generating functions for the level-count sequences.

The count sequences of every family satisfy linear recurrences with
constant integer coefficients, so their generating functions are rational
with integer coefficients and unit constant term in the denominator.  This
module recovers those generating functions from transfer-matrix series,
certifies them, and carries the small zoo of closed forms and identities
around the ring families: the ell-independent shape of the P fractions,
the explicit resolvent row behind it, and four independent routes to the
three-ring count sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from . import polys
from .families import Family
from .transfer import build_transfer, count_series


class NoCertifiedRecurrenceError(ValueError):
    """The prefix is too short to pin down its minimal recurrence."""


class NoKnownGFError(LookupError):
    """No tabulated closed-form generating function for this instance."""


class RationalGF:
    """num(x)/den(x) over the integers, reduced, with den(0) = +1.

    The constructor canonicalizes: common polynomial factors are removed,
    the denominator is scaled to unit constant term, and both coefficient
    arrays must come out integral, otherwise ValueError.  Equal generating
    functions therefore compare equal componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den) -> None:
        n = polys.trim(list(num))
        d = polys.trim(list(den))
        if not d or d[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")
        n, d = _reduce(n, d)
        object.__setattr__(self, "num", tuple(n))
        object.__setattr__(self, "den", tuple(d))

    def __setattr__(self, name, value):
        raise AttributeError("RationalGF is immutable")

    def series(self, n_max: int) -> list[int]:
        if n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {n_max}")
        num, den = self.num, self.den
        out: list[int] = []
        for k in range(n_max + 1):
            v = num[k] if k < len(num) else 0
            for j in range(1, min(k, len(den) - 1) + 1):
                v -= den[j] * out[k - j]
            out.append(v)
        return out

    def __add__(self, other: "RationalGF") -> "RationalGF":
        if not isinstance(other, RationalGF):
            return NotImplemented
        return RationalGF(
            polys.add(polys.mul(list(self.num), list(other.den)),
                      polys.mul(list(other.num), list(self.den))),
            polys.mul(list(self.den), list(other.den)),
        )

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        if not isinstance(other, RationalGF):
            return NotImplemented
        return RationalGF(
            polys.sub(polys.mul(list(self.num), list(other.den)),
                      polys.mul(list(other.num), list(self.den))),
            polys.mul(list(self.den), list(other.den)),
        )

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        if not isinstance(other, RationalGF):
            return NotImplemented
        return RationalGF(
            polys.mul(list(self.num), list(other.num)),
            polys.mul(list(self.den), list(other.den)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return f"({polys.text(list(self.num))})/({polys.text(list(self.den))})"

    def __repr__(self) -> str:
        return f"RationalGF(num={list(self.num)}, den={list(self.den)})"

    def as_dict(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}


def _reduce(num: list, den: list) -> tuple[list, list]:
    if not num:
        return [], [1]
    g = polys.gcd_frac(num, den)
    fn = [Fraction(c) for c in num]
    fd = [Fraction(c) for c in den]
    if len(g) > 1:
        fn = polys.div_exact_frac(fn, g)
        fd = polys.div_exact_frac(fd, g)
    unit = fd[0]
    fn = [c / unit for c in fn]
    fd = [c / unit for c in fd]
    for c in fn + fd:
        if c.denominator != 1:
            raise ValueError("not reducible to integer coefficients with den(0) = 1")
    return [int(c) for c in fn], [int(c) for c in fd]


def series_of(gf: RationalGF, n_max: int) -> list[int]:
    """Power-series coefficients of gf for exponents 0 .. n_max."""
    return gf.series(n_max)


def min_recurrence(prefix: list) -> list:
    """Minimal certified recurrence of an integer sequence prefix.

    Returns the integer characteristic polynomial c with c(0) = 1 such
    that the convolution of c with the prefix vanishes from index L on,
    where L is the minimal feasible recurrence order.  Certification needs
    at least 2L + 2 terms; shorter prefixes (or any prefix under 4 terms)
    raise NoCertifiedRecurrenceError rather than return a guess.
    """
    terms = [int(v) for v in prefix]
    if len(terms) < 4:
        raise NoCertifiedRecurrenceError(
            f"need at least 4 terms to certify anything, got {len(terms)}"
        )
    s = [Fraction(v) for v in terms]

    # Berlekamp-Massey over the rationals.
    conn = [Fraction(1)]
    prev = [Fraction(1)]
    order = 0
    gap = 1
    prev_delta = Fraction(1)
    for k in range(len(s)):
        delta = s[k]
        for i in range(1, order + 1):
            if i < len(conn):
                delta += conn[i] * s[k - i]
        if delta == 0:
            gap += 1
            continue
        scale = delta / prev_delta
        updated = list(conn)
        need = gap + len(prev)
        if len(updated) < need:
            updated.extend([Fraction(0)] * (need - len(updated)))
        for i, p in enumerate(prev):
            updated[gap + i] -= scale * p
        if 2 * order <= k:
            prev = conn
            prev_delta = delta
            order = k + 1 - order
            gap = 1
        else:
            gap += 1
        conn = updated

    if len(terms) < 2 * order + 2:
        raise NoCertifiedRecurrenceError(
            f"order {order} needs {2 * order + 2} terms to certify, got {len(terms)}"
        )

    scale = lcm(*(c.denominator for c in conn))
    ints = [int(c * scale) for c in conn]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    if ints[0] != 1:
        raise NoCertifiedRecurrenceError(
            "minimal recurrence has no integer form with unit constant term"
        )
    poly = polys.trim(ints)

    # the certificate: the recurrence must hold across the whole prefix
    for k in range(order, len(terms)):
        if sum(poly[j] * terms[k - j] for j in range(len(poly))) != 0:
            raise NoCertifiedRecurrenceError("synthesized recurrence fails on the prefix")
    return poly


def gf_from_transfer(family: Family, ell: int) -> RationalGF:
    """Certified generating function of the count sequence of a family.

    Expands the series to twice the matrix dimension plus a margin, which
    is enough to certify any recurrence a matrix of that size can produce,
    synthesizes the denominator, reconstructs the numerator by convolution
    and verifies the result reproduces every expanded term.
    """
    matrix = build_transfer(family, ell)
    n_terms = 2 * matrix.dim + 8
    prefix = count_series(family, ell, n_terms - 1)
    den = min_recurrence(prefix)
    num = polys.trim(polys.convolve_prefix(den, prefix))
    gf = RationalGF(num, den)
    if gf.series(n_terms - 1) != prefix:
        raise ArithmeticError("reconstructed generating function does not reproduce its series")
    return gf


def p_gf(ell: int) -> RationalGF:
    """(1 + 2x) / (1 - (ell-1)x - 2x^2), valid for every ell >= 3."""
    if ell < 3:
        raise ValueError(f"ell must be >= 3, got {ell}")
    return RationalGF([1, 2], [1, -(ell - 1), -2])


# Tabulated closed forms.  Numerators and denominators that are nicer as
# products are entered as products.
_KNOWN: dict[tuple[Family, int], tuple[list, list]] = {
    (Family.G, 3): ([1], [1, -4, 2]),
    (Family.G, 4): ([1, 4, -1, -2], [1, -3, -14, 15, 7]),
    (Family.G, 5): (polys.mul([1, 1], [1, 5, -8]), [1, -5, -30, 69, 31, -22]),
    (Family.G, 6): ([1, 10, -12, -50, 10, 20, -12], [1, -8, -66, 280, 178, -532, -84, 108]),
    (Family.R, 3): ([1, 2], [1, -2, -2]),
    (Family.R, 4): ([1, 4, -4], [1, -3, -4, 4]),
    (Family.R, 5): ([1, 7, -6], [1, -4, -8, 6]),
    (Family.R, 6): ([1, 12, -24, 0, 8], polys.mul([1, -8, 4, 4], [1, 2, -2])),
    (Family.K, 3): ([1], [1, -4, 2]),
    (Family.K, 4): ([1, 2, 3], [1, -3, -14, 15, 7]),
    (Family.K, 5): ([1, 1, 12, -8], [1, -5, -30, 69, 31, -22]),
    (Family.K, 6): ([1, -1, 38, -72, -8, 30], [1, -8, -66, 280, 178, -532, -84, 108]),
}


def known_gf(family: Family, ell: int) -> RationalGF:
    """The tabulated generating function, canonicalized.

    Families G, R and K are tabulated for ell = 3 .. 6; family P has the
    uniform closed form for every ell >= 3.  Anything else raises
    NoKnownGFError.
    """
    family = Family(family)
    if family is Family.P:
        return p_gf(ell)
    try:
        num, den = _KNOWN[(family, ell)]
    except KeyError:
        raise NoKnownGFError(f"no tabulated generating function for {family.value}, ell={ell}") from None
    return RationalGF(num, den)


def verify_resolvent_row(ell: int) -> bool:
    """Check the closed first row of the resolvent for family P.

    The candidate row is e_1 = (1 - (ell-2)x)/D and e_j = x/D for the ell
    unit-vector columns, with D = 1 - (ell-1)x - 2x^2.  Verifies
    (I - xM) applied to the row gives the first standard basis vector and
    that the row sums to the family's generating function.
    """
    if ell < 3:
        raise ValueError(f"ell must be >= 3, got {ell}")
    den = [1, -(ell - 1), -2]
    row = [RationalGF([1, -(ell - 2)], den)]
    row += [RationalGF([0, 1], den) for _ in range(ell)]
    matrix = build_transfer(Family.P, ell)
    x = RationalGF([0, 1], [1])
    one = RationalGF([1], [1])
    zero = RationalGF([], [1])
    for i in range(matrix.dim):
        acc = zero
        for j in range(matrix.dim):
            if matrix.entry(i, j):
                acc = acc + row[j]
        want = one if i == 0 else zero
        if row[i] - x * acc != want:
            return False
    total = zero
    for e in row:
        total = total + e
    return total == p_gf(ell)


@dataclass(frozen=True)
class QuadIrrational:
    """a + b*sqrt(2) with exact rational components."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: "QuadIrrational") -> "QuadIrrational":
        return QuadIrrational(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadIrrational") -> "QuadIrrational":
        return QuadIrrational(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadIrrational") -> "QuadIrrational":
        return QuadIrrational(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, exponent: int) -> "QuadIrrational":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = QuadIrrational(Fraction(1), Fraction(0))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadIrrational":
        return QuadIrrational(self.a, -self.b)


def g3_closed_form(n: int) -> int:
    """Three-ring count by the conjugate-pair closed form.

    The difference (2 + sqrt 2)^(n+1) - (2 - sqrt 2)^(n+1) is a pure
    sqrt(2) multiple; half its sqrt(2) component is the count.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    plus = QuadIrrational(Fraction(2), Fraction(1)) ** (n + 1)
    diff = plus - plus.conjugate()
    assert diff.a == 0
    half = diff.b / 2
    assert half.denominator == 1
    return int(half)


def g3_order3(n: int) -> int:
    """Three-ring count by the order-3 recurrence with seeds 1, 4, 14."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    window = [1, 4, 14]
    if n < 3:
        return window[n]
    for _ in range(n - 2):
        window.append(2 * window[-1] + 6 * window[-2] - 4 * window[-3])
        window.pop(0)
    return window[-1]


def g3_order2(n: int) -> int:
    """Three-ring count by the minimal order-2 recurrence with seeds 1, 4."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = 1, 4
    for _ in range(n):
        a, b = b, 4 * b - 2 * a
    return a


@dataclass(frozen=True)
class Aux3State:
    """Rolling state of the three-helper recursion for the three-ring counts.

    Holds the helper values for the current index together with the two
    latest counts.  b and c stay equal after every step.
    """

    a: int
    b: int
    c: int
    g_prev: int
    g_prev2: int

    def step(self) -> "Aux3State":
        b = self.g_prev2
        c = self.g_prev2
        a = self.g_prev2 + self.a
        g = self.g_prev + 3 * a + 3 * b + c
        return Aux3State(a=a, b=b, c=c, g_prev=g, g_prev2=self.g_prev)


def g3_via_aux(n: int) -> int:
    """Three-ring count by the three-helper recursion."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    # helper seeds at index 1; a starts at 1 so that index 2 produces 14
    state = Aux3State(a=1, b=0, c=0, g_prev=4, g_prev2=1)
    for _ in range(n - 1):
        state = state.step()
    return state.g_prev


def pell(m: int) -> int:
    """m-th Pell number: 0, 1, 2, 5, 12, 29, .."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    a, b = 0, 1
    for _ in range(m):
        a, b = b, 2 * b + a
    return a


def lucas(m: int) -> int:
    """m-th Lucas number: 2, 1, 3, 4, 7, 11, .."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    a, b = 2, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def binomial_transform(seq: list) -> list:
    """b_m = sum over k of C(m, k) * seq[k], same length as the input."""
    return [sum(comb(m, k) * seq[k] for k in range(m + 1)) for m in range(len(seq))]
