"""Exact Weil test for symmetric sextics and enumeration of the coefficient box.

A candidate is q = p^n together with (a1, a2, a3), naming

    t^6 + a1 t^5 + a2 t^4 + a3 t^3 + q a2 t^2 + q^2 a1 t + q^3.

The four coefficient conditions are checked as integer inequalities after
clearing radicals. Write r = (r1, r2, r3) and rt = (rt1, rt2, rt3) for the
cubics whose roots are 2 sqrt(q) + x_i and 2 sqrt(q) - x_i; then

    (1) |a1| < 6 sqrt(q)                    <=>  a1^2 < 36 q
    (2) 4 sqrt(q)|a1| - 9q < a2 <= a1^2/3 + 3q
        <=>  a2 + 9q > 0,  (a2 + 9q)^2 > 16 q a1^2,  3 a2 <= a1^2 + 9q
    (3) |27 a3 - 27 C| <= 2 D^(3/2)         <=>  L^2 <= 4 D^3
        with D = a1^2 - 3 a2 + 9q >= 0 and L = 27 a3 + 2 a1^3 - 9 a1 a2 - 27 q a1
    (4) |a3 + 2 q a1| < 2 sqrt(q) (a2 + q)  <=>  a2 + q > 0,  (a3 + 2 q a1)^2 < 4 q (a2 + q)^2

Those strict conditions say both cubics have positive roots. Weil
polynomials with a real root +-sqrt(q) make one of those roots vanish and
land on the boundary. For non-square q the only such boundary triples are
the pattern (b, -q, -2 q b) handled by ``special_form_check``. For square q
other boundary triples exist, e.g. q = 4, (-4, 12, -32) =
(t - 2)^2 (t^2 + 4)^2, so square q also accepts the closed versions of (1),
(2), (4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactmath import SurdValue, integer_kth_root, surd_sign


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, n) with q = p**n, p prime; ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    if q % 2 == 0:
        p = 2
    else:
        d = 3
        while d * d <= q:
            if q % d == 0:
                p = d
                break
            d += 2
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, n


@dataclass(frozen=True)
class WeilCandidate:
    q: int
    p: int
    n: int
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        p, n = prime_power(self.q)
        if (p, n) != (self.p, self.n):
            raise ValueError(f"q={self.q} is not {self.p}^{self.n}")

    @classmethod
    def of(cls, q: int, a1: int, a2: int, a3: int) -> "WeilCandidate":
        p, n = prime_power(q)
        return cls(q, p, n, a1, a2, a3)

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def polynomial(self) -> tuple[int, ...]:
        """Coefficients of p(t) in ascending degree."""
        q, a1, a2, a3 = self.q, self.a1, self.a2, self.a3
        return (q**3, q * q * a1, q * a2, a3, a2, a1, 1)

    def mirror(self) -> "WeilCandidate":
        """The candidate for p(-t), i.e. a1 and a3 negated."""
        return WeilCandidate(self.q, self.p, self.n, -self.a1, self.a2, -self.a3)


@dataclass(frozen=True)
class CubicCoefficients:
    r1: SurdValue
    r2: SurdValue
    r3: SurdValue


def _surd(x) -> SurdValue:
    return x if isinstance(x, SurdValue) else SurdValue(Fraction(x))


def lemma_cubic_all_real_positive(c: CubicCoefficients) -> bool:
    """Do all roots of t^3 + r1 t^2 + r2 t + r3 lie in (0, oo)?

    Bound checks follow the classical three-condition criterion; the
    3/2-power comparison isolates the radical and squares with sign care.
    """
    r1, r2, r3 = _surd(c.r1), _surd(c.r2), _surd(c.r3)
    if surd_sign(r1) >= 0 or surd_sign(r2) <= 0 or surd_sign(r3) >= 0:
        return False
    disc_part = r1 * r1 - 3 * r2  # r1^2 - 3 r2 >= 0
    if surd_sign(disc_part) < 0:
        return False
    # |27 r3 - (9 r1 r2 - 2 r1^3)| <= 2 (r1^2 - 3 r2)^(3/2), squared
    dev = 27 * r3 - (9 * r1 * r2 - 2 * r1 * r1 * r1)
    return surd_sign(4 * disc_part * disc_part * disc_part - dev * dev) >= 0


def associated_cubics(w: WeilCandidate) -> tuple[CubicCoefficients, CubicCoefficients]:
    """The cubics with roots 2 sqrt(q) + x_i and 2 sqrt(q) - x_i, as exact surds."""
    q, a1, a2, a3 = w.q, w.a1, w.a2, w.a3
    s = SurdValue.sqrt(q)
    r = CubicCoefficients(
        -6 * s - a1,
        9 * q + 4 * a1 * s + a2,
        -2 * q * s - 2 * q * a1 - 2 * a2 * s - a3,
    )
    rt = CubicCoefficients(
        -6 * s + a1,
        9 * q - 4 * a1 * s + a2,
        -2 * q * s + 2 * q * a1 - 2 * a2 * s + a3,
    )
    return r, rt


def special_form_check(w: WeilCandidate) -> int | None:
    """beta when p(t) = (t^2 - q)^2 (t^2 + beta t + q) with beta^2 < 4q."""
    beta = w.a1
    if w.a2 == -w.q and w.a3 == -2 * w.q * beta and beta * beta < 4 * w.q:
        return beta
    return None


def condition_values(q: int, a1: int, a2: int, a3: int) -> tuple[bool, bool, bool, bool]:
    """The four strict coefficient conditions, each evaluated independently."""
    c1 = a1 * a1 < 36 * q
    b = a2 + 9 * q
    c2 = b > 0 and b * b > 16 * q * a1 * a1 and 3 * a2 <= a1 * a1 + 9 * q
    d = a1 * a1 - 3 * a2 + 9 * q
    ell = 27 * a3 + 2 * a1**3 - 9 * a1 * a2 - 27 * q * a1
    c3 = d >= 0 and ell * ell <= 4 * d**3
    e = a3 + 2 * q * a1
    c4 = a2 + q > 0 and e * e < 4 * q * (a2 + q) ** 2
    return c1, c2, c3, c4


def closed_conditions(q: int, a1: int, a2: int, a3: int) -> bool:
    """Non-strict (1), (2), (4) with (3): both cubics have roots in [0, oo)."""
    if a1 * a1 > 36 * q:
        return False
    b = a2 + 9 * q
    if b < 0 or b * b < 16 * q * a1 * a1 or 3 * a2 > a1 * a1 + 9 * q:
        return False
    d = a1 * a1 - 3 * a2 + 9 * q
    ell = 27 * a3 + 2 * a1**3 - 9 * a1 * a2 - 27 * q * a1
    if ell * ell > 4 * d**3:
        return False
    e = a3 + 2 * q * a1
    return a2 + q >= 0 and e * e <= 4 * q * (a2 + q) ** 2


def weil_branch(q: int, a1: int, a2: int, a3: int) -> str | None:
    """Which branch accepts the triple: 'special', 'conditions', 'boundary', or None."""
    if a2 == -q and a3 == -2 * q * a1 and a1 * a1 < 4 * q:
        return "special"
    if all(condition_values(q, a1, a2, a3)):
        return "conditions"
    if integer_kth_root(q, 2) is not None and closed_conditions(q, a1, a2, a3):
        return "boundary"
    return None


def theorem1_check(w: WeilCandidate) -> bool:
    """True iff p(t) is a Weil polynomial."""
    return weil_branch(w.q, w.a1, w.a2, w.a3) is not None


def failed_conditions(w: WeilCandidate) -> list[int]:
    """Indices (1..4) of the strict conditions that fail."""
    return [i for i, ok in enumerate(condition_values(w.q, *w.coefficients), 1) if not ok]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def a2_range(q: int, a1: int) -> tuple[int, int]:
    """Closed range for a2: both the condition-(2) and condition-(4) lower bounds."""
    lo = -9 * q
    if a1:
        # smallest a2 with (a2 + 9q)^2 >= 16 q a1^2
        lo += _ceil_sqrt(16 * q * a1 * a1)
    return max(lo, -q), (a1 * a1 + 9 * q) // 3


def _ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def a3_range(q: int, a1: int, a2: int) -> tuple[int, int]:
    """Closed condition (3) interval intersected with closed condition (4).

    Returns (lo, hi) with lo > hi when empty.
    """
    d = a1 * a1 - 3 * a2 + 9 * q
    if d < 0 or a2 + q < 0:
        return 1, 0
    c = 2 * a1**3 - 9 * a1 * a2 - 27 * q * a1
    bound3 = math.isqrt(4 * d**3)
    bound4 = math.isqrt(4 * q * (a2 + q) ** 2)
    lo = max(_ceil_div(-bound3 - c, 27), -bound4 - 2 * q * a1)
    hi = min((bound3 - c) // 27, bound4 - 2 * q * a1)
    return lo, hi


def box_triples(q: int, widen: int = 0) -> Iterator[tuple[int, int, int]]:
    """Lexicographic scan of the closed search box, optionally widened per axis.

    The unwidened box is cut out by the non-strict forms of conditions 1-4,
    which every Weil triple satisfies.
    """
    amax = math.isqrt(36 * q)
    for a1 in range(-amax - widen, amax + widen + 1):
        lo2, hi2 = a2_range(q, a1)
        for a2 in range(lo2 - widen, hi2 + widen + 1):
            lo3, hi3 = a3_range(q, a1, a2)
            if lo3 > hi3:
                if not widen:
                    continue
                # empty slice: probe around the condition-3 centre
                centre = -(2 * a1**3 - 9 * a1 * a2 - 27 * q * a1) // 27
                lo3 = hi3 = centre
            for a3 in range(lo3 - widen, hi3 + widen + 1):
                yield a1, a2, a3


def enumerate_box(q: int, p: int | None = None, n: int | None = None) -> Iterator[WeilCandidate]:
    """All Weil candidates for q, lexicographic in (a1, a2, a3)."""
    if p is None or n is None:
        p, n = prime_power(q)
    elif p**n != q:
        raise ValueError(f"q={q} is not {p}^{n}")
    for a1, a2, a3 in box_triples(q):
        if weil_branch(q, a1, a2, a3) is not None:
            yield WeilCandidate(q, p, n, a1, a2, a3)


def enumerate_a1(q: int, a1: int) -> list[tuple[int, int, int]]:
    """Weil triples with a fixed a1; the unit of parallel work."""
    out = []
    lo2, hi2 = a2_range(q, a1)
    for a2 in range(lo2, hi2 + 1):
        lo3, hi3 = a3_range(q, a1, a2)
        for a3 in range(lo3, hi3 + 1):
            if weil_branch(q, a1, a2, a3) is not None:
                out.append((a1, a2, a3))
    return out


def probe_box_triples(q: int) -> Iterator[tuple[int, int, int]]:
    """Looser probe box: |a1| <= floor(6 sqrt q) + 1, |a2| <= a1^2/3 + 3q + 1,
    a3 over the closed condition-3 interval widened by one."""
    amax = math.isqrt(36 * q) + 1
    for a1 in range(-amax, amax + 1):
        a2max = (a1 * a1 + 9 * q + 3) // 3
        for a2 in range(-a2max, a2max + 1):
            d = a1 * a1 - 3 * a2 + 9 * q
            c = 2 * a1**3 - 9 * a1 * a2 - 27 * q * a1
            if d >= 0:
                b = math.isqrt(4 * d**3)
                lo, hi = _ceil_div(-b - c, 27), (b - c) // 27
            else:
                lo = hi = -c // 27
            for a3 in range(lo - 1, hi + 2):
                yield a1, a2, a3
