"""Exact plane geometry over the rationals.

Everything downstream (incidence counts, collinear triple counts, line
statistics) reduces to the primitives here: points with exact rational
coordinates, lines in canonical integer form, and the cross-product
collinearity test.  All functions are pure; no floats are ever involved in a
decision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import DegeneratePair

# Scalars are plain stdlib Fractions: always reduced, exact arithmetic,
# hashable.  The alias exists so signatures read as intent.
ExactScalar = Fraction

# Default work budget for the brute-force counters, measured in elementary
# tuple checks.  Callers can raise or lower it per call.
DEFAULT_BUDGET = 10**9


class PlanePoint(NamedTuple):
    x: Fraction
    y: Fraction


class LineKey(NamedTuple):
    """Line a*x + b*y = c in canonical integer form.

    Canonical means: (a, b) != (0, 0), gcd(|a|, |b|, |c|) == 1, and the first
    nonzero of (a, b) is positive.  Two LineKeys are equal iff the lines are
    equal as point sets, so the tuple is safe to hash on.
    """

    a: int
    b: int
    c: int

    def contains(self, p: PlanePoint) -> bool:
        return self.a * p.x + self.b * p.y == self.c


def canonical_line(a: int, b: int, c: int) -> LineKey:
    """Reduce an integer triple to the canonical LineKey. (a, b) must be nonzero."""
    if a == 0 and b == 0:
        raise DegeneratePair("normal vector (a, b) must be nonzero")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    # Sign rule: first nonzero of (a, b) positive.
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return LineKey(a, b, c)


def line_through(p: PlanePoint, q: PlanePoint) -> LineKey:
    """Canonical line through two distinct points; DegeneratePair if p == q."""
    if p == q:
        raise DegeneratePair(f"coincident points {p}")
    # Normal (a, b) = (qy - py, px - qx); c fixed by passing through p.
    a_f = q.y - p.y
    b_f = p.x - q.x
    c_f = a_f * p.x + b_f * p.y
    # Clear denominators to reach an integer triple.
    from math import lcm

    m = lcm(a_f.denominator, b_f.denominator, c_f.denominator)
    return canonical_line(int(a_f * m), int(b_f * m), int(c_f * m))


def collinear3(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> bool:
    """Cross-product collinearity test; True for triples with coincidences.

    (q - p) x (r - p) == 0, written out so the only operations are exact
    rational multiplies and compares.
    """
    return (q.x - p.x) * (r.y - p.y) == (r.x - p.x) * (q.y - p.y)


def point(x, y) -> PlanePoint:
    """Convenience constructor accepting ints / strings / Fractions."""
    return PlanePoint(Fraction(x), Fraction(y))
