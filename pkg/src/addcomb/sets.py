"""Finite rational sets: construction, algebra, and file I/O.

A RatSet is an immutable, strictly sorted tuple of distinct Fractions.  All
pairwise set operations (sumset, difference set, product set, ratio set) and
the affine image keep exact arithmetic throughout.

Generators
----------
AP(start, step, n)        arithmetic progression
GP(start, ratio, n)       geometric progression
GridExample(S, P)         {(2m-1) * 2^j : 1 <= m <= S, 1 <= j <= P}, the
                          standard multiplicatively-structured example with
                          small product set and large difference set
Random(size, range, seed) distinct integers uniform on [1, range]
Literal(values)           explicit list

Randomness is produced by SplitMix64 (the 64-bit mixer from Steele et al.,
"Fast splittable pseudorandom number generators", OOPSLA 2014), chosen because
its output is fully pinned by the seed across platforms and Python versions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DivisionByZero, InvalidConfig, ZeroScale

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit PRNG; the full algorithm is these ~10 lines."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on the top multiple of n."""
        if n <= 0:
            raise InvalidConfig("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n


class RatSet:
    """Immutable finite set of rationals, stored strictly increasing."""

    __slots__ = ("elements", "_lookup")

    def __init__(self, values: Iterable):
        elems = sorted({Fraction(v) for v in values})
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "_lookup", frozenset(elems))

    def __setattr__(self, *_):
        raise AttributeError("RatSet is immutable")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return Fraction(v) in self._lookup

    def __eq__(self, other) -> bool:
        return isinstance(other, RatSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"RatSet({[str(e) for e in self.elements]})"

    def union(self, other: "RatSet") -> "RatSet":
        return RatSet(self.elements + other.elements)

    def difference(self, other: "RatSet") -> "RatSet":
        return RatSet(e for e in self.elements if e not in other._lookup)

    def intersection(self, other: "RatSet") -> "RatSet":
        return RatSet(e for e in self.elements if e in other._lookup)

    def is_subset(self, other: "RatSet") -> bool:
        return self._lookup <= other._lookup

    def is_disjoint(self, other: "RatSet") -> bool:
        return self._lookup.isdisjoint(other._lookup)

    def require_nonzero(self, context: str = "multiplicative operation"):
        if 0 in self._lookup:
            raise DivisionByZero(f"{context}: set contains 0")


EMPTY = RatSet(())


@dataclass(frozen=True)
class GeneratorConfig:
    """Declarative description of a set; serializes to/from plain JSON."""

    kind: str  # "AP" | "GP" | "GridExample" | "Random" | "Literal"
    start: Fraction | None = None
    step: Fraction | None = None
    ratio: Fraction | None = None
    n: int | None = None
    s: int | None = None
    p: int | None = None
    size: int | None = None
    range: int | None = None
    seed: int | None = None
    values: tuple | None = None

    def label(self) -> str:
        if self.kind == "AP":
            return f"AP(start={self.start},step={self.step},n={self.n})"
        if self.kind == "GP":
            return f"GP(start={self.start},ratio={self.ratio},n={self.n})"
        if self.kind == "GridExample":
            return f"GridExample(S={self.s},P={self.p})"
        if self.kind == "Random":
            return f"Random(size={self.size},range={self.range},seed={self.seed})"
        return f"Literal(n={len(self.values or ())})"

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        for key in ("start", "step", "ratio"):
            v = getattr(self, key)
            if v is not None:
                d[key] = str(v)
        for key in ("n", "s", "p", "size", "range", "seed"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v
        if self.values is not None:
            d["values"] = [str(v) for v in self.values]
        return d

    @staticmethod
    def from_json(d: dict) -> "GeneratorConfig":
        kw = {}
        for key in ("start", "step", "ratio"):
            if key in d:
                kw[key] = Fraction(d[key])
        for key in ("n", "s", "p", "size", "range", "seed"):
            if key in d:
                kw[key] = int(d[key])
        if "values" in d:
            kw["values"] = tuple(Fraction(v) for v in d["values"])
        return GeneratorConfig(kind=d["kind"], **kw)


def ap(start, step, n: int) -> GeneratorConfig:
    return GeneratorConfig(kind="AP", start=Fraction(start), step=Fraction(step), n=n)


def gp(start, ratio, n: int) -> GeneratorConfig:
    return GeneratorConfig(kind="GP", start=Fraction(start), ratio=Fraction(ratio), n=n)


def grid_example(s: int, p: int) -> GeneratorConfig:
    return GeneratorConfig(kind="GridExample", s=s, p=p)


def random_set(size: int, rng: int, seed: int) -> GeneratorConfig:
    return GeneratorConfig(kind="Random", size=size, range=rng, seed=seed)


def literal(values) -> GeneratorConfig:
    return GeneratorConfig(kind="Literal", values=tuple(Fraction(v) for v in values))


def generate(config: GeneratorConfig) -> RatSet:
    """Materialize a GeneratorConfig.  InvalidConfig on bad parameters."""
    k = config.kind
    if k == "AP":
        if config.n is None or config.n < 1 or config.start is None or config.step is None:
            raise InvalidConfig("AP needs start, step, n >= 1")
        if config.step == 0:
            raise InvalidConfig("AP step must be nonzero")
        return RatSet(config.start + i * config.step for i in range(config.n))
    if k == "GP":
        if config.n is None or config.n < 1 or config.start is None or config.ratio is None:
            raise InvalidConfig("GP needs start, ratio, n >= 1")
        if config.start == 0 or config.ratio == 0:
            raise InvalidConfig("GP start and ratio must be nonzero")
        vals, v = [], config.start
        for _ in range(config.n):
            vals.append(v)
            v *= config.ratio
        return RatSet(vals)  # ratio == 1 or +-1 cycles collapse via dedup
    if k == "GridExample":
        if not config.s or not config.p or config.s < 1 or config.p < 1:
            raise InvalidConfig("GridExample needs S >= 1, P >= 1")
        return RatSet(
            Fraction((2 * m - 1) * 2**j)
            for m in range(1, config.s + 1)
            for j in range(1, config.p + 1)
        )
    if k == "Random":
        if (
            config.size is None
            or config.range is None
            or config.seed is None
            or config.size < 1
            or config.range < config.size
        ):
            raise InvalidConfig("Random needs size >= 1, range >= size, seed")
        rng = SplitMix64(config.seed)
        chosen: set[int] = set()
        while len(chosen) < config.size:
            chosen.add(1 + rng.below(config.range))
        return RatSet(Fraction(v) for v in chosen)
    if k == "Literal":
        if config.values is None or len(config.values) == 0:
            raise InvalidConfig("Literal needs at least one value")
        return RatSet(config.values)
    raise InvalidConfig(f"unknown generator kind {k!r}")


def set_op(a: RatSet, b: RatSet, op: str) -> RatSet:
    """Pairwise sumset / difference set / product set / ratio set."""
    if op == "sum":
        return RatSet(x + y for x in a for y in b)
    if op == "diff":
        return RatSet(x - y for x in a for y in b)
    if op == "prod":
        return RatSet(x * y for x in a for y in b)
    if op == "ratio":
        b.require_nonzero("ratio set")
        return RatSet(x / y for x in a for y in b)
    raise InvalidConfig(f"unknown set operation {op!r}")


def affine(a: RatSet, scale, shift) -> RatSet:
    """Image under x -> scale*x + shift; ZeroScale if scale == 0."""
    scale, shift = Fraction(scale), Fraction(shift)
    if scale == 0:
        raise ZeroScale("affine scale must be nonzero")
    return RatSet(scale * x + shift for x in a)


# ---------------------------------------------------------------------------
# Set files: UTF-8 text, one element per line ("p/q" or integer), '#' comments.

def format_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    v = Fraction(text.strip())
    return v


def write_set_file(path, a: RatSet, header: str | None = None):
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}")
    lines.extend(format_rational(v) for v in a)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def read_set_file(path) -> RatSet:
    vals = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                vals.append(parse_rational(line))
    if not vals:
        raise InvalidConfig(f"set file {path} contains no elements")
    return RatSet(vals)


def read_corpus_file(path) -> list[GeneratorConfig]:
    """Corpus file: JSON list of generator configs."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not data:
        raise InvalidConfig("corpus file must be a nonempty JSON list")
    return [GeneratorConfig.from_json(d) for d in data]


# ---------------------------------------------------------------------------
# Integerization: clear denominators so hot kernels can run on plain ints.

def common_scale(*sets: Iterable[Fraction]) -> int:
    """Least common multiple of all denominators across the given iterables."""
    from math import lcm

    m = 1
    for s in sets:
        for v in s:
            m = lcm(m, v.denominator)
    return m


def scaled_ints(a: Iterable[Fraction], scale: int) -> list[int]:
    out = []
    for v in a:
        w = v * scale
        out.append(int(w))
    return out
