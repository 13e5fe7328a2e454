"""
Truncated Dirichlet series and Euler products at s = 1 + δ, δ = log log y / log y
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from numtheory.arithmetic import primes_between, primes_up_to
from numtheory.characters import ConstantOne, MultiplicativeFunction
from numtheory.errors import DomainError
from numtheory.pretense import distance_squared

logger = logging.getLogger(__name__)

MIN_CUTOFF = 16


def _require_cutoff(y: float, what: str) -> None:
    if y < MIN_CUTOFF:
        raise DomainError(f"{what} needs y >= {MIN_CUTOFF} so that log log y > 1, got {y}")


def shift_for(y: float) -> float:
    return math.log(math.log(y)) / math.log(y)


@dataclass(frozen=True)
class ShiftedSeries:
    """Σ_{n <= y} f(n)/n^{1+δ} and the O(1/(δ y^δ)) tail bound"""
    cutoff: float
    delta: float
    value: complex
    tail_bound: float


@dataclass(frozen=True)
class EulerComparison:
    cutoff: float
    delta: float
    log_abs_product: float
    prime_sum: float
    gap: float
    tail_prime_sum: float
    triple_log: float


def harmonic_partial_max(f: MultiplicativeFunction, y: float) -> float:
    """max_{N <= y} |Σ_{n <= N} f(n)/n|"""
    if y < 2:
        raise DomainError(f"harmonic_partial_max needs y >= 2, got {y}")
    N = int(math.floor(y))
    n = np.arange(1, N + 1)
    return float(np.max(np.abs(np.cumsum(f.values_upto(N)[1:] / n))))


def shifted_series(f: MultiplicativeFunction, y: float) -> ShiftedSeries:
    _require_cutoff(y, "shifted_series")
    delta = shift_for(y)
    N = int(math.floor(y))
    n = np.arange(1, N + 1, dtype=float)
    value = complex(np.sum(f.values_upto(N)[1:] * n ** (-1.0 - delta)))
    return ShiftedSeries(cutoff=y, delta=delta, value=value, tail_bound=1.0 / (delta * y**delta))


def euler_log_comparison(f: MultiplicativeFunction, y: float) -> EulerComparison:
    """log|Π_{p <= y} (1 - f(p)p^{-1-δ})^{-1}| against Σ_{p <= y} Re f(p)/p"""
    _require_cutoff(y, "euler_log_comparison")
    delta = shift_for(y)
    primes = primes_up_to(y).primes
    fp = f.prime_values(primes)
    local = 1.0 - fp * primes.astype(float) ** (-1.0 - delta)
    log_abs_product = -math.fsum(np.log(np.abs(local)).tolist())
    prime_sum = math.fsum((np.real(fp) / primes).tolist())

    # Primes beyond e^{1/δ} are where the shift stops being negligible
    tail = primes_between(math.exp(1.0 / delta), y)
    tail_prime_sum = math.fsum((1.0 / tail).tolist()) if tail.size else 0.0
    return EulerComparison(
        cutoff=y,
        delta=delta,
        log_abs_product=log_abs_product,
        prime_sum=prime_sum,
        gap=abs(log_abs_product - prime_sum),
        tail_prime_sum=tail_prime_sum,
        triple_log=math.log(math.log(math.log(y))),
    )


def lemma21_ratio(f: MultiplicativeFunction, y: float) -> float:
    """
    [max_{N <= y} |Σ f(n)/n| + 1/log log y] / [(log y / log log y)·exp(-D(f,1;y)²)]
    """
    _require_cutoff(y, "lemma21_ratio")
    loglog = math.log(math.log(y))
    lhs = harmonic_partial_max(f, y) + 1.0 / loglog
    rhs = (math.log(y) / loglog) * math.exp(-distance_squared(f, ConstantOne(), y).squared)
    return lhs / rhs


def mertens_discrepancy(y1: float, y2: float) -> float:
    """Σ_{y1 < p <= y2} 1/p - (log log y2 - log log y1)"""
    if not 2 < y1 < y2:
        raise DomainError(f"mertens_discrepancy needs 2 < y1 < y2, got ({y1}, {y2})")
    primes = primes_between(y1, y2)
    return math.fsum((1.0 / primes).tolist()) - (math.log(math.log(y2)) - math.log(math.log(y1)))
