"""
Pretentious distance D(f, g; y)² = Σ_{p <= y} (1 - Re f(p)·conj(g(p))) / p
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from numtheory.arithmetic import primes_up_to
from numtheory.characters import MultiplicativeFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceResult:
    cutoff: float
    squared: float
    prime_count: int

    @property
    def distance(self) -> float:
        return math.sqrt(self.squared)


def distance_squared(f: MultiplicativeFunction, g: MultiplicativeFunction, y: float) -> DistanceResult:
    """
    Sum in ascending prime order with exact-rounded accumulation;
    a prime where f or g vanishes contributes exactly 1/p
    """
    primes = primes_up_to(y).primes
    if primes.size == 0:
        return DistanceResult(cutoff=y, squared=0.0, prime_count=0)
    fp, gp = f.prime_values(primes), g.prime_values(primes)
    # Re f(p)conj(g(p)) written symmetrically so D(f,g) and D(g,f) agree bit for bit
    overlap = fp.real * gp.real + fp.imag * gp.imag
    terms = (1.0 - overlap) / primes
    squared = max(math.fsum(terms.tolist()), 0.0)
    return DistanceResult(cutoff=y, squared=squared, prime_count=int(primes.size))


def distance(f: MultiplicativeFunction, g: MultiplicativeFunction, y: float) -> float:
    return distance_squared(f, g, y).distance


def triangle_check(f: MultiplicativeFunction, g: MultiplicativeFunction,
                   h: MultiplicativeFunction, y: float) -> Tuple[float, float]:
    """(D(f,g;y) + D(g,h;y), D(f,h;y)); the first never falls below the second"""
    lhs = distance(f, g, y) + distance(g, h, y)
    rhs = distance(f, h, y)
    return lhs, rhs


def prime_reciprocal_sum(y: float) -> float:
    """Σ_{p <= y} 1/p, the largest possible value of D²/2"""
    primes = primes_up_to(y).primes
    return math.fsum((1.0 / primes).tolist())
