"""Pure-Python integer kernels.

These are the hot inner loops, expressed over plain Python ints so they
also serve as the arbitrary-precision fallback for the compiled backend
(_kernels_cy, built from the same algorithms with int64 arithmetic).
Callers are responsible for clearing denominators first; every routine
here assumes integer inputs.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence


def collinear_six_counts(a: Sequence[int], b: Sequence[int], c: Sequence[int]):
    """Count 6-tuples (a1,a2,b1,b2,c1,c2) with (b1-a1)(c2-a2) == (c1-a1)(b2-a2).

    Returns (total, distinct) where distinct counts only solutions whose
    three points (a1,a2), (b1,b2), (c1,c2) are pairwise distinct.
    Brute force by design: this is the oracle the fast path is checked against.
    """
    total = 0
    distinct = 0
    for a1 in a:
        for a2 in a:
            for b1 in b:
                db1 = b1 - a1
                for b2 in b:
                    db2 = b2 - a2
                    u12 = db1 != 0 or db2 != 0
                    for c1 in c:
                        dc1 = c1 - a1
                        for c2 in c:
                            if db1 * (c2 - a2) == dc1 * db2:
                                total += 1
                                if (
                                    u12
                                    and (dc1 != 0 or c2 != a2)
                                    and (b1 != c1 or b2 != c2)
                                ):
                                    distinct += 1
    return total, distinct


def _count_on_line(a: int, b: int, c: int, vals, members) -> int:
    # points (x, y) of the grid vals x vals on the line a*x + b*y == c
    if b == 0:
        # vertical line x = c/a; every y in the set works
        q, r = divmod(c, a)
        return len(vals) if r == 0 and q in members else 0
    n = 0
    for x in vals:
        q, r = divmod(c - a * x, b)
        if r == 0 and q in members:
            n += 1
    return n


def _canonical_span(px: int, py: int, qx: int, qy: int):
    # line through two distinct integer points, gcd-reduced,
    # first nonzero of (a, b) positive
    a = qy - py
    b = px - qx
    c = a * px + b * py
    g = gcd(a, b)
    if a < 0 or (a == 0 and b < 0):
        g = -g
    return a // g, b // g, c // g


def t_o_linehash(g1: Sequence[int], g2: Sequence[int], g3: Sequence[int]) -> int:
    """Ordered pairwise-distinct collinear triples (u1,u2,u3), ui in gi x gi.

    Spans candidate lines by all distinct point pairs from the first two
    grids (every contributing line contains such a pair), dedupes by
    canonical key, then assembles the per-line count by inclusion-exclusion
    over coincident points shared between grids.  Callers should pass the
    two smallest sets first; the count itself is symmetric in the arguments.
    """
    l1, l2, l3 = list(g1), list(g2), list(g3)
    s1, s2, s3 = set(l1), set(l2), set(l3)
    equal_all = s1 == s2 == s3
    if not equal_all:
        i12 = sorted(s1 & s2)
        i13 = sorted(s1 & s3)
        i23 = sorted(s2 & s3)
        i123 = sorted(set(i12) & s3)
        m12, m13, m23, m123 = set(i12), set(i13), set(i23), set(i123)

    lines = set()
    add = lines.add
    for px in l1:
        for py in l1:
            for qx in l2:
                for qy in l2:
                    if px == qx and py == qy:
                        continue
                    add(_canonical_span(px, py, qx, qy))

    total = 0
    for a, b, c in lines:
        n1 = _count_on_line(a, b, c, l1, s1)
        if n1 == 0 and equal_all:
            continue
        if equal_all:
            # all grids identical: ordered distinct triples from n points
            total += n1 * (n1 - 1) * (n1 - 2)
            continue
        n2 = _count_on_line(a, b, c, l2, s2)
        n3 = _count_on_line(a, b, c, l3, s3)
        if n1 == 0 or n2 == 0 or n3 == 0:
            continue
        n12 = _count_on_line(a, b, c, i12, m12) if i12 else 0
        n13 = _count_on_line(a, b, c, i13, m13) if i13 else 0
        n23 = _count_on_line(a, b, c, i23, m23) if i23 else 0
        n123 = _count_on_line(a, b, c, i123, m123) if i123 else 0
        total += n1 * n2 * n3 - n12 * n3 - n13 * n2 - n23 * n1 + 2 * n123
    return total


def count_incidences(pxs, pys, las, lbs, lcs) -> int:
    """Exact point-line incidence count over parallel coordinate arrays."""
    total = 0
    for a, b, c in zip(las, lbs, lcs):
        for x, y in zip(pxs, pys):
            if a * x + b * y == c:
                total += 1
    return total


def _direction_hist(vals):
    # histogram of primitive direction vectors over all ordered pairs;
    # the zero vector (0,0) is tallied separately
    hist: dict = {}
    zero_pairs = 0
    for u in vals:
        for v in vals:
            if u == 0 and v == 0:
                zero_pairs += 1
                continue
            g = gcd(u, v)
            if u < 0 or (u == 0 and v < 0):
                g = -g
            key = (u // g, v // g)
            hist[key] = hist.get(key, 0) + 1
    return hist, zero_pairs


def mul_pairs_count(x: Sequence[int], y: Sequence[int]) -> int:
    """#{(x1,x2,y1,y2) in x^2 * y^2 : x1*y2 == x2*y1}, zeros allowed.

    Two pairs satisfy the equation iff they are parallel as vectors, so
    hash primitive directions and match; the zero vector matches everything.
    """
    hx, zx = _direction_hist(x)
    hy, zy = _direction_hist(y)
    nx = len(x) * len(x)
    ny = len(y) * len(y)
    total = zx * ny + zy * nx - zx * zy
    if len(hx) > len(hy):
        hx, hy = hy, hx
    get = hy.get
    for key, cnt in hx.items():
        other = get(key)
        if other:
            total += cnt * other
    return total


def _direction_hist_cross(us, vs):
    # like _direction_hist but the two components range over different sets
    hist: dict = {}
    zero_pairs = 0
    for u in us:
        for v in vs:
            if u == 0 and v == 0:
                zero_pairs += 1
                continue
            g = gcd(u, v)
            if u < 0 or (u == 0 and v < 0):
                g = -g
            key = (u // g, v // g)
            hist[key] = hist.get(key, 0) + 1
    return hist, zero_pairs


def mul_pairs_cross(x1, x2, y1, y2) -> int:
    """#{(a,b,c,d) in x1 * x2 * y1 * y2 : a*d == b*c}, zeros allowed.

    Cross-rectangle variant of mul_pairs_count, needed when the two
    components of each vector come from differently shifted sets;
    mul_pairs_count(X, Y) is the diagonal case x1 = x2 = X, y1 = y2 = Y.
    Cold path: no compiled twin.
    """
    hx, zx = _direction_hist_cross(x1, x2)
    hy, zy = _direction_hist_cross(y1, y2)
    nx = len(x1) * len(x2)
    ny = len(y1) * len(y2)
    total = zx * ny + zy * nx - zx * zy
    if len(hx) > len(hy):
        hx, hy = hy, hx
    get = hy.get
    for key, cnt in hx.items():
        other = get(key)
        if other:
            total += cnt * other
    return total
