"""Constrained ratio-of-sums counts r(z), level sets, and R(Z; A1, A2).

r(z) counts quadruples (a1, a1', a2, a2') in A1^2 x A2^2 with
a1' + a2' = z * (a1 + a2), in denominator-free equation form, so zero sums
are permitted: the pairs with a1 + a2 = 0 contribute to every z (they
satisfy the equation iff a1' + a2' = 0 as well), which is why the zero-sum
count is carried alongside the profile instead of being silently folded in.
R is defined as the sum of r(z)^2 over z in Z.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidConfig
from .intervals import power_sum_ratio_decimal
from .sets import RatSet, common_scale, scaled_ints


def _sum_hist(A1: RatSet, A2: RatSet):
    # histogram of a1 + a2 over integerized copies; r(z) is invariant under
    # the common rescaling because it multiplies both sides of the equation
    scale = common_scale(A1, A2)
    v1 = scaled_ints(A1, scale)
    v2 = scaled_ints(A2, scale)
    hist: Counter = Counter()
    for a in v1:
        for b in v2:
            hist[a + b] += 1
    return hist


def _r_from_hist(hist, z: Fraction) -> int:
    # r(z) = sum over sums s of h(s) * h(z*s); the s = 0 term contributes
    # h(0)^2 for every z since z*0 = 0
    p, q = z.numerator, z.denominator
    total = 0
    for s, m in hist.items():
        if s % q:
            continue
        other = hist.get(p * (s // q))
        if other:
            total += m * other
    return total


def r_of_z(z, A1: RatSet, A2: RatSet) -> int:
    """Exact count of (a1, a1', a2, a2') with a1' + a2' = z (a1 + a2)."""
    return _r_from_hist(_sum_hist(A1, A2), Fraction(z))


@dataclass(frozen=True)
class RatioProfile:
    """Per-z counts over Z plus the two bound-ratio reports.

    R = sum of r(z)^2; sum_r = sum of r(z); zero_sums = #{(a1,a2): a1+a2=0},
    the diagonal that inflates every r(z) by its square.  The bound ratios
    are outward-rounded decimal intervals and only present when
    |A1| <= |A2| (the shape the bounds are stated for); None otherwise.
    """

    Z: RatSet
    r: dict
    R: int
    sum_r: int
    zero_sums: int
    lemma_ratio: Optional[tuple]
    theorem_ratio: Optional[tuple]

    def to_json(self) -> dict:
        from .sets import format_rational

        data = {
            "Z": [format_rational(z) for z in self.Z],
            "r": {format_rational(z): c for z, c in sorted(self.r.items())},
            "R": self.R,
            "sum_r": self.sum_r,
            "zero_sums": self.zero_sums,
        }
        data["lemma_ratio"] = list(self.lemma_ratio) if self.lemma_ratio else None
        data["theorem_ratio"] = list(self.theorem_ratio) if self.theorem_ratio else None
        return data


def ratio_profile(Z: RatSet, A1: RatSet, A2: RatSet) -> RatioProfile:
    """Full r profile of Z with the sum-bound and R-bound ratio reports.

    The reported denominators are
      sum_r: |Z|^(1/2) |A1|^(5/3) |A2|^(4/3) + |Z|^(2/3) |A1|^(4/3) |A2|^(4/3)
             + |Z| |A1|^2
      R:     |A1|^(10/3) |A2|^(8/3)
    """
    hist = _sum_hist(A1, A2)
    r_map = {z: _r_from_hist(hist, z) for z in Z}
    R = sum(c * c for c in r_map.values())
    sum_r = sum(r_map.values())
    zero_sums = hist.get(0, 0)
    lemma = theorem = None
    if len(A1) <= len(A2) and len(Z) > 0:
        nz, n1, n2 = len(Z), len(A1), len(A2)
        lemma = power_sum_ratio_decimal(
            sum_r,
            [
                [(nz, Fraction(1, 2)), (n1, Fraction(5, 3)), (n2, Fraction(4, 3))],
                [(nz, Fraction(2, 3)), (n1, Fraction(4, 3)), (n2, Fraction(4, 3))],
                [(nz, Fraction(1)), (n1, Fraction(2))],
            ],
        )
        theorem = power_sum_ratio_decimal(
            R, [[(n1, Fraction(10, 3)), (n2, Fraction(8, 3))]]
        )
    return RatioProfile(
        Z=Z, r=r_map, R=R, sum_r=sum_r, zero_sums=zero_sums,
        lemma_ratio=lemma, theorem_ratio=theorem,
    )


def level_set(Z: RatSet, A1: RatSet, A2: RatSet, t: int) -> RatSet:
    """Z_t = {z in Z : r(z) >= t}, antitone in t."""
    if t < 1:
        raise InvalidConfig("level threshold t must be >= 1")
    hist = _sum_hist(A1, A2)
    return RatSet(z for z in Z if _r_from_hist(hist, z) >= t)


def full_ratio_set(A1: RatSet, A2: RatSet) -> RatSet:
    """All quotients of nonzero sums: {s'/s : s, s' in A1+A2, both != 0}.

    These are exactly the z whose r(z) exceeds the ever-present zero-sum
    diagonal contribution; z realized only through 0/0 pairs are excluded
    (every rational would qualify once a zero sum exists).
    """
    sums = [s for s in _sum_hist(A1, A2) if s != 0]
    return RatSet(Fraction(sp, s) for s in sums for sp in sums)


def popular_ratios(A1: RatSet, A2: RatSet, count: Optional[int] = None) -> RatSet:
    """The `count` most popular ratios from the full ratio set.

    Ordered by r(z) descending, then z ascending, so the selection is
    deterministic; default count is |A1|^2.
    """
    if count is None:
        count = len(A1) ** 2
    hist = _sum_hist(A1, A2)
    zs = full_ratio_set(A1, A2)
    ranked = sorted(zs, key=lambda z: (-_r_from_hist(hist, z), z))
    return RatSet(ranked[:count])
