"""Dense polynomial arithmetic on coefficient lists, lowest degree first.

Integer lists are the working representation everywhere; the zero
polynomial is the empty list and trailing zero coefficients are stripped.
Rational-coefficient helpers exist only to run Euclid's algorithm when
reducing a fraction of integer polynomials.
"""

from __future__ import annotations

from fractions import Fraction


def trim(coeffs: list) -> list:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return trim(out)


def convolve_prefix(a: list, s: list) -> list:
    """First len(s) coefficients of a(x) * (s as a power series)."""
    out = []
    for k in range(len(s)):
        acc = 0
        for j in range(min(k, len(a) - 1) + 1):
            acc += a[j] * s[k - j]
        out.append(acc)
    return out


def _divmod_frac(a: list, b: list) -> tuple[list, list]:
    # over Fraction; b must be nonzero
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b) and any(rem):
        rem = trim(rem)
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] -= factor * Fraction(bi)
        rem.pop()
    return trim(quo), trim(rem)


def gcd_frac(a: list, b: list) -> list:
    """Monic gcd over the rationals; [1] when the inputs are coprime."""
    x, y = trim(list(a)), trim(list(b))
    while y:
        _, r = _divmod_frac(x, y)
        x, y = y, r
    if not x:
        return []
    lead = Fraction(x[-1])
    return [Fraction(c) / lead for c in x]


def div_exact_frac(a: list, b: list) -> list:
    quo, rem = _divmod_frac(a, b)
    if rem:
        raise ValueError("division is not exact")
    return quo


def text(coeffs: list) -> str:
    """Render with explicit signs and caret powers, e.g. 1-2x-2x^2."""
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}x" if k == 1 else f"{head}x^{k}"
        parts.append(sign + body)
    return "".join(parts) if parts else "0"
