"""Outward-rounded interval arithmetic for irrational thresholds.

Exact integer/rational comparisons are always preferred; this module exists
for the few quantities that are genuinely irrational (fractional powers such
as x^(2/3) and fourth roots, and logarithm-based constants).  All enclosures
are built with mpmath's interval type, which rounds outward by construction.
Policy: start at 128 bits, widen by doubling to 2048 bits, then either report
the comparison as decided or concede "inconclusive"; an undecided comparison
is never silently converted into a verdict.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

import mpmath
from mpmath import iv
from mpmath.libmp import to_rational

BASE_PREC = 128
MAX_PREC = 2048


def _endpoint_fraction(endpoint) -> Fraction:
    # endpoint is an ivmpf; its _mpi_ holds two identical mpf tuples.
    p, q = to_rational(endpoint._mpi_[0])
    return Fraction(int(p), int(q))


def bounds(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an mpmath interval."""
    return _endpoint_fraction(x.a), _endpoint_fraction(x.b)


def from_fraction(f: Fraction):
    """Enclosure of an exact rational at the current iv precision."""
    return iv.mpf(f.numerator) / iv.mpf(f.denominator)


def from_int(n: int):
    return iv.mpf(n)


def pow_frac(x, num: int, den: int):
    """Enclosure of x^(num/den) for an interval x with positive lower end."""
    return iv.exp(iv.log(x) * iv.mpf(num) / iv.mpf(den))


def root4(x):
    return iv.sqrt(iv.sqrt(x))


def decide_leq(
    lhs_builder: Callable[[], object],
    rhs_builder: Callable[[], object],
) -> Optional[bool]:
    """Decide lhs <= rhs with widening; None means inconclusive at MAX_PREC.

    The builders are called under each candidate precision and must construct
    their intervals from scratch (so they tighten as precision grows).
    """
    prec = BASE_PREC
    saved = iv.prec
    try:
        while prec <= MAX_PREC:
            iv.prec = prec
            lhs = lhs_builder()
            rhs = rhs_builder()
            llo, lhi = bounds(lhs)
            rlo, rhi = bounds(rhs)
            if lhi <= rlo:
                return True
            if llo > rhi:
                return False
            prec *= 2
        return None
    finally:
        iv.prec = saved


def decimal_bounds(x, digits: int = 20) -> tuple[str, str]:
    """Deterministic decimal rendering of interval endpoints, for reports."""
    lo, hi = bounds(x)
    return (_decimal(lo, digits), _decimal(hi, digits))


def _decimal(f: Fraction, digits: int) -> str:
    """Round-half-even fixed-point rendering of an exact rational."""
    sign = "-" if f < 0 else ""
    f = abs(f)
    scaled = f * 10**digits
    whole = scaled.numerator // scaled.denominator
    rem2 = 2 * (scaled.numerator - whole * scaled.denominator)
    if rem2 > scaled.denominator or (rem2 == scaled.denominator and whole % 2 == 1):
        whole += 1
    text = str(whole).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def fraction_decimal(f: Fraction, digits: int = 20) -> str:
    return _decimal(f, digits)


def ratio_interval_decimal(
    numer: int, base: int, exp_num: int, exp_den: int, digits: int = 20
) -> tuple[str, str]:
    """Decimal endpoints of numer / base^(exp_num/exp_den); report plumbing."""
    saved = iv.prec
    try:
        iv.prec = BASE_PREC
        denom = pow_frac(iv.mpf(base), exp_num, exp_den)
        return decimal_bounds(iv.mpf(numer) / denom, digits)
    finally:
        iv.prec = saved


def _power_product(term):
    # term: iterable of (base, Fraction exponent); integer exponents avoid
    # the exp/log detour so they stay tight
    acc = iv.mpf(1)
    for base, exp in term:
        e = Fraction(exp)
        if e.denominator == 1:
            acc = acc * iv.mpf(base) ** int(e)
        else:
            acc = acc * pow_frac(iv.mpf(base), e.numerator, e.denominator)
    return acc


def _power_sum(terms):
    acc = iv.mpf(0)
    for term in terms:
        acc = acc + _power_product(term)
    return acc


def power_sum_ratio_decimal(numer: int, terms, digits: int = 20) -> tuple[str, str]:
    """Decimal endpoints of numer / sum_of_power_products, outward rounded.

    terms is a list of terms, each a list of (base, exponent) factors; the
    denominator is the sum of the term products.  Used for the asymptotic
    report ratios whose denominators mix fractional powers.
    """
    saved = iv.prec
    try:
        iv.prec = BASE_PREC
        return decimal_bounds(iv.mpf(numer) / _power_sum(terms), digits)
    finally:
        iv.prec = saved


def power_sum_decimal(terms, digits: int = 20) -> tuple[str, str]:
    """Decimal endpoints of a sum of power products, outward rounded."""
    saved = iv.prec
    try:
        iv.prec = BASE_PREC
        return decimal_bounds(_power_sum(terms), digits)
    finally:
        iv.prec = saved


def log_squared_fraction_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure of (ln n)^2 at base precision."""
    saved = iv.prec
    try:
        iv.prec = BASE_PREC
        return bounds(iv.log(iv.mpf(n)) ** 2)
    finally:
        iv.prec = saved


def ln2_bounds() -> tuple[Fraction, Fraction]:
    saved = iv.prec
    try:
        iv.prec = BASE_PREC
        return bounds(iv.log(iv.mpf(2)))
    finally:
        iv.prec = saved
