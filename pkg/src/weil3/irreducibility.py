"""Irreducibility of a sextic Weil polynomial over Q through its real cubic.

p(t) = prod (t^2 + x_i t + q) is irreducible exactly when the real Weil
polynomial f(t) = prod (t + x_i) is, and a monic integer cubic is reducible
exactly when it has an integer root. The Cardan quantities r, s, delta are
exposed for inspection; the decision itself uses the root test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P
from .exactmath import integer_kth_root
from .weilcheck import WeilCandidate, special_form_check


@dataclass(frozen=True)
class CardanData:
    r: Fraction
    s: Fraction
    delta: Fraction

    @property
    def u_description(self) -> tuple[Fraction, Fraction]:
        """u = (-s + sqrt(delta)) / 2 as (rational part, radicand)."""
        return (-self.s / 2, self.delta)

    def depressed_cubic(self) -> tuple[Fraction, ...]:
        return (self.s, self.r, Fraction(0), Fraction(1))


def real_weil_cubic(w: WeilCandidate) -> tuple[int, int, int, int]:
    """f(t) = t^3 + a1 t^2 + (a2 - 3q) t + (a3 - 2 q a1)."""
    return (w.a3 - 2 * w.q * w.a1, w.a2 - 3 * w.q, w.a1, 1)


def cardan_quantities(w: WeilCandidate) -> CardanData:
    q, a1, a2, a3 = w.q, Fraction(w.a1), Fraction(w.a2), Fraction(w.a3)
    r = -a1 * a1 / 3 + a2 - 3 * q
    s = 2 * a1**3 / 27 - a1 * a2 / 3 - q * a1 + a3
    return CardanData(r, s, s * s - Fraction(4, 27) * r**3)


def divisors(n: int) -> list[int]:
    """Positive divisors of |n| in increasing order (n != 0)."""
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _root_trials(f: tuple[int, ...]):
    """Candidate integer roots: ascending |x|, positive before negative."""
    if f[0] == 0:
        yield 0
        nz = next(i for i, c in enumerate(f) if c)
        f = f[nz:]
        if len(f) == 1:
            return
    for d in divisors(f[0]):
        yield d
        yield -d


def integer_roots(f) -> list[int]:
    """Distinct integer roots of a monic integer polynomial, ascending."""
    f = P.trim(f)
    if not f or f[-1] != 1:
        raise ValueError("integer_roots needs a monic polynomial")
    return sorted(x for x in _root_trials(f) if P.evaluate(f, x) == 0)


def first_integer_root(f) -> int | None:
    for x in _root_trials(P.trim(f)):
        if P.evaluate(f, x) == 0:
            return x
    return None


def is_irreducible(w: WeilCandidate) -> bool:
    """Is p(t) irreducible over Q?  Meaningful for Weil candidates."""
    if special_form_check(w) is not None:
        return False
    s = integer_kth_root(w.q, 2)
    if s is not None:
        poly = w.polynomial()
        if P.evaluate(poly, s) == 0 or P.evaluate(poly, -s) == 0:
            return False
    return first_integer_root(real_weil_cubic(w)) is None


def quadratic_factor(q: int, root: int) -> tuple[int, int, int]:
    """The factor t^2 + x t + q of p(t) for an integer root -x of f."""
    return (q, -root, 1)


def rational_factors(w: WeilCandidate) -> list[tuple[int, ...]]:
    """Split p(t) along the integer roots of its real cubic.

    Returns one quadratic t^2 + x t + q per integer root (with multiplicity)
    and the remaining cofactor when it is nonconstant.
    """
    f: tuple = real_weil_cubic(w)
    factors = []
    while P.degree(f) > 0:
        root = first_integer_root(f)
        if root is None:
            break
        factors.append(quadratic_factor(w.q, root))
        f = P.exact_quotient(f, (-root, 1))
    rest = w.polynomial()
    for g in factors:
        rest = P.exact_quotient(rest, g)
    if P.degree(rest) > 0:
        factors.append(tuple(int(c) for c in rest))
    return factors
