"""Integer partitions with multiplicities and automorphism weights."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvalidParams


@dataclass(frozen=True)
class Partition:
    parts: tuple  # non-decreasing

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts):
            raise InvalidParams(f"not a canonical partition: {self.parts}")

    @property
    def g(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def multiplicities(self):
        return dict(sorted(Counter(self.parts).items()))


@lru_cache(maxsize=None)
def _partitions(g, smallest):
    if g == 0:
        return [()]
    out = []
    for first in range(smallest, g + 1):
        for rest in _partitions(g - first, first):
            out.append((first,) + rest)
    return out


def enumerate_partitions(g: int):
    """All partitions of g, parts non-decreasing, in lexicographic order."""
    if not isinstance(g, int) or g < 1:
        raise InvalidParams(f"g must be a positive integer, got {g!r}")
    return [Partition(p) for p in sorted(_partitions(g, 1))]


def multiplicity(i: int, sigma: Partition) -> int:
    return sigma.parts.count(i)


def symmetry_factor(sigma: Partition) -> Fraction:
    """prod_i 1 / mul(i, sigma)!"""
    den = 1
    for m in Counter(sigma.parts).values():
        den *= factorial(m)
    return Fraction(1, den)
