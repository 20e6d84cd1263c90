"""p-adic valuations, Newton polygons and root detection in Z_p / Q_p."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P

INF = math.inf


def valuation(x: int, p: int) -> int | float:
    """Largest v with p^v | x; ``INF`` for x = 0."""
    if x == 0:
        return INF
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def rational_valuation(x: Fraction, p: int) -> int | float:
    x = Fraction(x)
    if x == 0:
        return INF
    return valuation(x.numerator, p) - valuation(x.denominator, p)


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points (i, v_p(c_i)).

    ``segments`` holds (root valuation, horizontal length) pairs ordered by
    increasing root valuation, i.e. reading the hull from the degree side.
    """

    vertices: tuple[tuple[int, int], ...]
    segments: tuple[tuple[Fraction, int], ...]

    @property
    def degree(self) -> int:
        return self.vertices[-1][0]

    def root_valuations(self) -> list[Fraction]:
        out = []
        for slope, length in self.segments:
            out.extend([slope] * length)
        return out


def newton_polygon(f, p: int) -> NewtonPolygon:
    f = P.trim(f)
    if not f:
        raise ValueError("Newton polygon of the zero polynomial")
    pts = [(i, valuation(c, p)) for i, c in enumerate(f) if c]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segs = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segs.append((Fraction(y1 - y2, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(hull), tuple(reversed(segs)))


POLYGON_SHAPES = {
    "Ordinary": {(Fraction(0), 3), (Fraction(1), 3)},
    "PRank2": {(Fraction(0), 2), (Fraction(1, 2), 2), (Fraction(1), 2)},
    "PRank1": {(Fraction(0), 1), (Fraction(1, 2), 4), (Fraction(1), 1)},
    "OneThird": {(Fraction(1, 3), 3), (Fraction(2, 3), 3)},
    "Supersingular": {(Fraction(1, 2), 6)},
}


def polygon_type(g: NewtonPolygon, n: int) -> str:
    """Tag of an admissible sextic polygon; slopes are normalised by n."""
    if g.degree != 6 or g.vertices[0][0] != 0:
        raise ValueError("polygon_type expects the polygon of a sextic with nonzero constant term")
    shape = {(slope / n, length) for slope, length in g.segments}
    for tag, expected in POLYGON_SHAPES.items():
        if shape == expected:
            return tag
    return "Other"


class RecursionDepthError(RuntimeError):
    """The residue recursion went deeper than the discriminant allows."""


def _reduce_content(g: tuple[int, ...], p: int) -> tuple[int, ...]:
    v = min(valuation(c, p) for c in g if c)
    return tuple(c // p**v for c in g)


def _has_root_in_residue_classes(g: tuple[int, ...], p: int, units_only: bool, depth: int, limit: int) -> bool:
    if depth > limit:
        raise RecursionDepthError(f"residue recursion exceeded depth {limit}")
    gbar = [c % p for c in g]
    dgbar = [c % p for c in P.derivative(g)]
    for r in range(1 if units_only else 0, p):
        if P.evaluate(gbar, r) % p:
            continue
        if P.evaluate(dgbar, r) % p:
            return True  # simple residue root, Hensel lifts it
        shifted = _reduce_content(P.compose_linear(g, r, p), p)
        if _has_root_in_residue_classes(shifted, p, False, depth + 1, limit):
            return True
    return False


def _squarefree_monic(f) -> tuple[int, ...]:
    f = P.trim(f)
    if not f or f[-1] != 1 or any(Fraction(c).denominator != 1 for c in f):
        raise ValueError("expected a monic integer polynomial")
    return P.squarefree_part(tuple(int(c) for c in f))


def zp_root_exists(f, p: int, target_valuation) -> bool:
    """Does monic f have a root of exactly the given valuation in Z_p?"""
    g = _squarefree_monic(f)
    v = Fraction(target_valuation)
    if v < 0 or v.denominator != 1:
        return False
    v = int(v)
    if g[0] == 0:
        if g == (0, 1):
            return False  # only root is 0, of infinite valuation
        g = g[1:]  # drop the simple root 0; it has infinite valuation
    limit = _depth_limit(g, p)
    scaled = _reduce_content(P.compose_linear(g, 0, p**v), p)
    return _has_root_in_residue_classes(scaled, p, True, 0, limit)


def _depth_limit(g: tuple[int, ...], p: int) -> int:
    if P.degree(g) < 2:
        return 1
    return int(rational_valuation(P.discriminant(g), p)) + 1


def has_qp_root(f, p: int) -> bool:
    """Does monic f have a root in Q_p?"""
    f = P.trim(f)
    _squarefree_monic(f)
    if f[0] == 0:
        return True
    for slope, _ in newton_polygon(f, p).segments:
        if slope.denominator == 1 and zp_root_exists(f, p, slope):
            return True
    return False
