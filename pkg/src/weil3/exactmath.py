"""Exact arithmetic substrate: quadratic surds, Sturm sequences, integer roots.

Nothing here touches floating point; every sign is decided with integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import polynomial as P


def integer_kth_root(x: int, k: int) -> int | None:
    """Return r >= 0 with r**k == x, or None if x is not a perfect k-th power."""
    if x < 0 or k < 1:
        raise ValueError("integer_kth_root needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    if k == 2:
        r = math.isqrt(x)
        return r if r * r == x else None
    r = 1 << -(-x.bit_length() // k)  # r**k >= x
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r if r**k == x else None


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _surd_sign_int(a, b, m: int) -> int:
    sa, sb = _sign(a), _sign(b)
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    lhs, rhs = a * a, b * b * m
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


@dataclass(frozen=True)
class SurdValue:
    """The real number a + b*sqrt(m), a and b rational, m a positive integer.

    A perfect-square m is folded into the rational part at construction.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    m: int = 1

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("surd radicand must be positive")
        a, b, m = Fraction(self.a), Fraction(self.b), self.m
        root = integer_kth_root(m, 2)
        if root is not None:
            a, b, m = a + b * root, Fraction(0), 1
        elif b == 0:
            m = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    @classmethod
    def sqrt(cls, m: int, coeff=1) -> "SurdValue":
        return cls(Fraction(0), Fraction(coeff), m)

    def _coerce(self, other) -> "SurdValue":
        if isinstance(other, SurdValue):
            if self.b and other.b and other.m != self.m:
                raise ValueError("surds with different radicands")
            return other
        return SurdValue(Fraction(other), Fraction(0), self.m)

    def _radicand(self, other: "SurdValue") -> int:
        return self.m if self.b else other.m

    def __add__(self, other):
        o = self._coerce(other)
        return SurdValue(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return SurdValue(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        m = self._radicand(o)
        return SurdValue(self.a * o.a + self.b * o.b * m, self.a * o.b + self.b * o.a, m)

    __rmul__ = __mul__

    def sign(self) -> int:
        return surd_sign(self)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        if not isinstance(other, (SurdValue, int, Fraction)):
            return NotImplemented
        return (self - other).sign() == 0

    def __hash__(self):
        return hash((self.a, self.b, self.m))


def surd_sign(v: SurdValue) -> int:
    """Exact sign of a + b*sqrt(m): -1, 0 or +1."""
    return _surd_sign_int(v.a, v.b, v.m)


def _as_surd(x) -> SurdValue:
    return x if isinstance(x, SurdValue) else SurdValue(Fraction(x))


def surd_evaluate(f: Sequence, x) -> SurdValue:
    """Evaluate a rational polynomial at a surd."""
    return _as_surd(P.evaluate(tuple(f), _as_surd(x)))


def poly_sign_at(f: Sequence, x) -> int:
    """Sign of f(x) for a rational polynomial f and a surd or rational x."""
    x = _as_surd(x)
    g = _positive_primitive(P.trim(f))
    if not g:
        return 0
    den = math.lcm(x.a.denominator, x.b.denominator)
    return _integer_surd_sign_at(g, int(x.a * den), int(x.b * den), den, x.m)


def _integer_surd_sign_at(g: Sequence[int], num_a: int, num_b: int, den: int, m: int) -> int:
    # den^deg * g((num_a + num_b*sqrt(m)) / den), accumulated as u + w*sqrt(m)
    u, w = g[-1], 0
    dpow = 1
    for c in reversed(g[:-1]):
        dpow *= den
        u, w = u * num_a + w * num_b * m + c * dpow, u * num_b + w * num_a
    return _surd_sign_int(u, w, m)


def sturm_chain(f: Sequence) -> list[tuple[int, ...]]:
    """Sturm sequence f, f', -rem(f, f'), ... kept as primitive integer polynomials.

    Remainders come from integer pseudo-division; each member is rescaled
    only by a positive constant, which leaves every sign the theorem uses.
    """
    f0 = P.trim(f)
    if not f0:
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [_positive_primitive(f0)]
    f1 = P.derivative(chain[0])
    if f1:
        chain.append(_positive_primitive(f1))
    while len(chain) > 1 and P.degree(chain[-1]) > 0:
        a, b = chain[-2], chain[-1]
        rem = P.pseudo_remainder(a, b)
        if not rem:
            break
        if b[-1] < 0 and (len(a) - len(b) + 1) % 2:
            rem = P.neg(rem)
        chain.append(_positive_primitive(P.neg(rem)))
    return chain


def _positive_primitive(f: Sequence) -> tuple[int, ...]:
    if not all(type(c) is int for c in f):
        den = math.lcm(*(Fraction(c).denominator for c in f))
        f = [int(Fraction(c) * den) for c in f]
    g = math.gcd(*f)
    return tuple(x // g for x in f)


def _variations(chain, x: SurdValue) -> int:
    den = math.lcm(x.a.denominator, x.b.denominator)
    na, nb = int(x.a * den), int(x.b * den)
    count, last = 0, 0
    for g in chain:
        s = _integer_surd_sign_at(g, na, nb, den, x.m)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def sturm_count(f: Sequence, lo, hi) -> int:
    """Number of distinct real roots of a squarefree f in (lo, hi].

    lo and hi may be rationals or SurdValues; all evaluation is exact.
    """
    f = P.trim(f)
    if P.degree(P.primitive_gcd(_positive_primitive(f), P.derivative(_positive_primitive(f)))) > 0:
        raise ValueError("sturm_count needs a squarefree polynomial")
    lo, hi = _as_surd(lo), _as_surd(hi)
    if not lo < hi:
        raise ValueError("sturm_count needs lo < hi")
    chain = sturm_chain(f)
    return _variations(chain, lo) - _variations(chain, hi)


def cauchy_bound(f: Sequence) -> Fraction:
    """1 + max|c_i / lead|; every complex root lies strictly inside it."""
    lc = Fraction(f[-1])
    return 1 + max(abs(Fraction(c) / lc) for c in f[:-1]) if len(f) > 1 else Fraction(1)
