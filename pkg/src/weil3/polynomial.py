"""Dense univariate polynomials with exact coefficients.

A polynomial c_0 + c_1 t + ... + c_d t^d is a tuple ``(c_0, c_1, ..., c_d)``
of ints or Fractions with nonzero last entry; the zero polynomial is ``()``.
Integer-coefficient polynomials are the same tuples holding only ints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Poly = tuple


def trim(coeffs: Sequence) -> Poly:
    """Drop trailing zero coefficients."""
    k = len(coeffs)
    while k and coeffs[k - 1] == 0:
        k -= 1
    return tuple(coeffs[:k])


def degree(f: Poly) -> int:
    """Degree of f, with -1 for the zero polynomial."""
    return len(f) - 1


def leading(f: Poly):
    return f[-1] if f else 0


def add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    return trim([a + (g[i] if i < len(g) else 0) for i, a in enumerate(f)])


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, c) -> Poly:
    return trim([c * a for a in f])


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def power(f: Poly, e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = mul(out, f)
    return out


def derivative(f: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(f)][1:])


def evaluate(f: Poly, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def compose_linear(f: Poly, a, b) -> Poly:
    """Return f(a + b t)."""
    out: Poly = ()
    lin = trim([a, b])
    for c in reversed(f):
        out = add(mul(out, lin), (c,) if c else ())
    return out


def divmod_poly(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over the rationals."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    lc = Fraction(g[-1])
    if len(r) <= dg:
        return (), trim(_demote(r))
    quot = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] / lc
        if c:
            quot[k - dg] = c
            for j in range(dg + 1):
                r[k - dg + j] -= c * g[j]
    return trim(_demote(quot)), trim(_demote(r[:dg]))


def _demote(cs):
    return [int(c) if c.denominator == 1 else c for c in cs]


def exact_quotient(f: Poly, g: Poly) -> Poly | None:
    """Return f / g when g divides f exactly, else None."""
    quot, rem = divmod_poly(f, g)
    return None if rem else quot


def monic(f: Poly) -> Poly:
    lc = Fraction(f[-1])
    return tuple(_demote([Fraction(c) / lc for c in f]))


def _is_int(f: Poly) -> bool:
    return all(type(c) is int for c in f)


def pseudo_remainder(f: Poly, g: Poly) -> Poly:
    """lc(g)^(deg f - deg g + 1) * (f mod g), computed in integers."""
    r = list(trim(f))
    lc = g[-1]
    e = max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        c = r[-1]
        shift = len(r) - len(g)
        r = [lc * x for x in r]
        for j, b in enumerate(g):
            r[shift + j] -= c * b
        r = list(trim(r))
        e -= 1
    return tuple(lc**e * x for x in r) if e else tuple(r)


def primitive_gcd(f: Poly, g: Poly) -> Poly:
    """gcd of integer polynomials as a primitive polynomial with positive lead."""
    f, g = trim(f), trim(g)
    if not f:
        return primitive(g) if g else ()
    if not g:
        return primitive(f)
    f, g = primitive(f), primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = pseudo_remainder(f, g)
        f, g = g, (primitive(r) if r else ())
    return primitive(f)


def int_quotient(f: Poly, g: Poly) -> Poly:
    """Exact quotient f / g of integer polynomials; ValueError if inexact."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    if len(r) <= dg:
        if trim(r):
            raise ValueError("inexact polynomial division")
        return ()
    quot = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c, rem = divmod(r[k], lc)
        if rem:
            raise ValueError("inexact polynomial division")
        if c:
            quot[k - dg] = c
            for j in range(dg + 1):
                r[k - dg + j] -= c * g[j]
    if trim(r[:dg]):
        raise ValueError("inexact polynomial division")
    return trim(quot)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over the rationals (``()`` when both are zero)."""
    if _is_int(f) and _is_int(g):
        h = primitive_gcd(f, g)
        return monic(h) if h else ()
    while g:
        f, g = g, divmod_poly(f, g)[1]
    return monic(f) if f else ()


def content(f: Poly) -> int:
    """Positive gcd of the coefficients of an integer polynomial."""
    return math.gcd(*f) if f else 0


def primitive(f: Poly) -> Poly:
    """Integer primitive part with positive leading coefficient.

    Rational inputs are first cleared of denominators.
    """
    if not _is_int(f):
        den = math.lcm(*(Fraction(c).denominator for c in f)) if f else 1
        f = tuple(int(Fraction(c) * den) for c in f)
    c = content(f)
    if f and f[-1] < 0:
        c = -c
    return tuple(x // c for x in f)


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f') as a primitive integer polynomial."""
    f = primitive(f)
    h = primitive_gcd(f, derivative(f))
    return primitive(int_quotient(f, h)) if degree(h) > 0 else f


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: pairs (g_i, i) with f = lc * prod g_i^i, g_i monic squarefree."""
    out = []
    a = gcd(f, derivative(f))
    b = divmod_poly(f, a)[0]
    c = divmod_poly(derivative(f), a)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        g = gcd(b, d)
        b = divmod_poly(b, g)[0]
        c = divmod_poly(d, g)[0]
        d = sub(c, derivative(b))
        if degree(g) > 0:
            out.append((g, i))
        i += 1
    return out


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant by the Euclidean recurrence, exact over the rationals."""
    df, dg = degree(f), degree(g)
    if df < 0 or dg < 0:
        return Fraction(0)
    if dg == 0:
        return Fraction(g[0]) ** df
    if df < dg:
        sign = -1 if (df * dg) % 2 else 1
        return sign * resultant(g, f)
    r = divmod_poly(f, g)[1]
    if not r:
        return Fraction(0)
    dr = degree(r)
    sign = -1 if (df * dg) % 2 else 1
    return sign * Fraction(g[-1]) ** (df - dr) * resultant(g, r)


def discriminant(f: Poly) -> Fraction:
    d = degree(f)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) / f[-1]


def to_str(f: Poly, var: str = "t") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c in (1, -1):
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
        terms.append(("-" if c < 0 else "+", body))
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])
