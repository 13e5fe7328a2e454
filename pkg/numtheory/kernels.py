"""
Fejér kernel smoothing of theta sums

Maximizing the unsmoothed sums Σ_{1 <= |n| <= N} (a(n)/n) e(nθ) over both N and θ
costs only O(1) more than the full-length sum at N = x, because the Cesàro-weighted
sum is a convolution of the full sum with the nonnegative, unit-mass kernel F_N.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config import Tolerances
from numtheory.characters import Character
from numtheory.errors import DomainError
from numtheory.trigpoly import ThetaMax, TrigPolynomial

logger = logging.getLogger(__name__)


def fejer(N: int, theta: float) -> float:
    """F_N(θ) = Σ_{|n| <= N} (1 - |n|/N) e(nθ) = (1/N)(sin πNθ / sin πθ)²"""
    if N < 1:
        raise DomainError(f"Fejér kernel needs N >= 1, got {N}")
    s = math.sin(math.pi * theta)
    if abs(s) > Tolerances.FEJER_SIN_CUTOFF:
        return math.sin(math.pi * N * theta) ** 2 / (N * s * s)
    return fejer_coefficient_sum(N, theta)


def fejer_coefficient_sum(N: int, theta: float) -> float:
    n = np.arange(1, N)
    return float(1.0 + 2.0 * np.sum((1.0 - n / N) * np.cos(2 * np.pi * n * theta)))


def fejer_many(N: int, thetas: np.ndarray) -> np.ndarray:
    thetas = np.asarray(thetas, dtype=float)
    s = np.sin(np.pi * thetas)
    out = np.empty_like(thetas)
    closed = np.abs(s) > Tolerances.FEJER_SIN_CUTOFF
    out[closed] = np.sin(np.pi * N * thetas[closed]) ** 2 / (N * s[closed] ** 2)
    for i in np.flatnonzero(~closed):
        out[i] = fejer_coefficient_sum(N, thetas[i])
    return out


@dataclass(frozen=True)
class CoefficientSequence:
    """a(n) for 1 <= |n| <= x, stored at index n + x (index x holds 0)"""
    bound: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.values) != 2 * self.bound + 1:
            raise ValueError("coefficient array must cover -x..x")
        if np.any(np.abs(self.values) > 1 + Tolerances.COEFFICIENT_BOUND):
            raise DomainError("coefficients must satisfy |a(n)| <= 1")

    def __getitem__(self, n: int) -> complex:
        return complex(self.values[n + self.bound])

    @classmethod
    def from_function(cls, bound: int, fn) -> "CoefficientSequence":
        n = np.arange(-bound, bound + 1)
        values = np.array([0 if k == 0 else fn(int(k)) for k in n], dtype=complex)
        return cls(bound=bound, values=values)

    @classmethod
    def constant(cls, bound: int, value: complex = 1.0) -> "CoefficientSequence":
        values = np.full(2 * bound + 1, value, dtype=complex)
        values[bound] = 0
        return cls(bound=bound, values=values)

    @classmethod
    def random(cls, bound: int, seed: int) -> "CoefficientSequence":
        """Independent uniform points on the unit circle"""
        rng = np.random.default_rng(seed)
        values = np.exp(2j * np.pi * rng.random(2 * bound + 1))
        values[bound] = 0
        return cls(bound=bound, values=values)

    @classmethod
    def from_character(cls, chi: Character, bound: int) -> "CoefficientSequence":
        n = np.arange(-bound, bound + 1)
        values = chi.values(n)
        values[bound] = 0
        return cls(bound=bound, values=values)

    def weighted(self, N: Optional[int] = None, smoothing: bool = False) -> TrigPolynomial:
        """Σ_{1 <= |n| <= N} (a(n)/n)·w(n) e(nθ) with w = 1 or the Fejér weight 1 - |n|/N"""
        N = self.bound if N is None else N
        if not 1 <= N <= self.bound:
            raise DomainError(f"sum length must satisfy 1 <= N <= {self.bound}, got {N}")
        n = np.arange(-N, N + 1)
        safe = np.where(n == 0, 1, n)
        coeffs = np.where(n == 0, 0, self.values[n + self.bound] / safe)
        if smoothing:
            coeffs = coeffs * (1.0 - np.abs(n) / N)
        return TrigPolynomial(coeffs)


def theta_sum(a: CoefficientSequence, N: int, alpha: float) -> complex:
    """Unsmoothed Σ_{1 <= |n| <= N} (a(n)/n) e(nα)"""
    return a.weighted(N)(alpha)


def smoothed_theta_sum(a: CoefficientSequence, N: int, alpha: float) -> complex:
    """Σ_{1 <= |n| <= N} (a(n)/n) e(nα)(1 - |n|/N)"""
    return a.weighted(N, smoothing=True)(alpha)


def fejer_convolution_check(a: CoefficientSequence, N: int, alpha: float, K: int) -> float:
    """
    |smoothed sum - (1/K) Σ_j T(α - j/K) F_N(j/K)|, T the full sum at bound x.
    Uniform K-point sampling integrates the degree < K integrand exactly.
    """
    x = a.bound
    if K <= 2 * (x + N):
        raise DomainError(f"quadrature needs K > 2(x + N) = {2 * (x + N)}, got {K}")
    nodes = np.arange(K) / K
    full = a.weighted(x).evaluate_many(alpha - nodes)
    quadrature = np.sum(full * fejer_many(N, nodes)) / K
    return float(abs(smoothed_theta_sum(a, N, alpha) - quadrature))


@dataclass(frozen=True)
class GapReport:
    bound: int
    lhs: ThetaMax
    lhs_length: int
    rhs: ThetaMax

    @property
    def gap(self) -> float:
        return self.lhs.value - self.rhs.value


def lemma22_report(a: CoefficientSequence, x: float, oversampling: Optional[int] = None) -> GapReport:
    """Both maxima on the same θ-grid; the N = x row is shared so the gap is never negative"""
    if x < 2:
        raise DomainError(f"lemma22_gap needs x >= 2, got {x}")
    D = min(int(math.floor(x)), a.bound)
    full = a.weighted(D)
    K = full.grid_size(x, oversampling)

    n = np.arange(1, D + 1)
    pos = a.values[a.bound + n] / n
    neg = -a.values[a.bound - n] / n
    phase = np.exp(2j * np.pi * np.outer(n, np.arange(K)) / K)
    partial = np.cumsum(pos[:, None] * phase + neg[:, None] * np.conj(phase), axis=0)
    magnitudes = np.abs(partial)

    rhs_j = int(np.argmax(magnitudes[-1]))
    rhs = full.refine(rhs_j / K, K)
    rhs = rhs if rhs.value >= magnitudes[-1, rhs_j] else ThetaMax(rhs_j / K, float(magnitudes[-1, rhs_j]))

    row, col = np.unravel_index(int(np.argmax(magnitudes)), magnitudes.shape)
    length = int(row) + 1
    lhs = a.weighted(length).refine(col / K, K)
    if lhs.value < magnitudes[row, col]:
        lhs = ThetaMax(col / K, float(magnitudes[row, col]))
    if lhs.value < rhs.value:
        lhs, length = rhs, D
    logger.debug("lemma22 x=%s K=%d lhs=%.6g (N=%d) rhs=%.6g", x, K, lhs.value, length, rhs.value)
    return GapReport(bound=D, lhs=lhs, lhs_length=length, rhs=rhs)


def lemma22_gap(a: CoefficientSequence, x: float) -> float:
    """max_θ max_{N <= x} |S_N(θ)| - max_θ |S_x(θ)|"""
    return lemma22_report(a, x).gap
