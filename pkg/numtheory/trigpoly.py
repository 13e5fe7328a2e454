"""
Trigonometric polynomials P(θ) = Σ_{|n| <= D} c_n e(nθ) on the circle [0, 1)
Grid evaluation by FFT and maximization of |P| by grid search plus local refinement
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import config, Grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaMax:
    """Location and value of max |P(θ)|"""
    theta: float
    value: float

    def __iter__(self):
        return iter((self.theta, self.value))


class TrigPolynomial:
    """
    Coefficients c_n for n = -D..D, stored at index n + D
    """

    def __init__(self, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 1 or len(coeffs) % 2 == 0:
            raise ValueError("coefficient array must have odd length 2D + 1")
        self.coeffs = coeffs
        self.degree = (len(coeffs) - 1) // 2
        self.frequencies = np.arange(-self.degree, self.degree + 1)

    @classmethod
    def from_halves(cls, positive: np.ndarray, negative: np.ndarray) -> "TrigPolynomial":
        """Build from c_1..c_D and c_{-1}..c_{-D}; c_0 = 0"""
        return cls(np.concatenate([np.asarray(negative)[::-1], [0], np.asarray(positive)]))

    def __call__(self, theta: float) -> complex:
        return complex(np.dot(self.coeffs, np.exp(2j * np.pi * self.frequencies * theta)))

    def evaluate_many(self, thetas: np.ndarray) -> np.ndarray:
        phases = np.exp(2j * np.pi * np.outer(thetas, self.frequencies))
        return phases @ self.coeffs

    def grid_values(self, K: int) -> np.ndarray:
        """P(j/K) for j = 0..K-1; needs K > 2D to avoid aliasing"""
        if K <= 2 * self.degree:
            raise ValueError(f"grid size {K} aliases a degree-{self.degree} polynomial")
        folded = np.zeros(K, dtype=complex)
        np.add.at(folded, self.frequencies % K, self.coeffs)
        return K * np.fft.ifft(folded)

    def grid_size(self, x: float, oversampling: Optional[int] = None) -> int:
        """⌈oversampling·x⌉ points and at least 2D + 1"""
        oversampling = config.oversampling if oversampling is None else oversampling
        return max(math.ceil(oversampling * x), 2 * self.degree + 1)

    def refine(self, theta: float, K: int, rel_tol: Optional[float] = None) -> ThetaMax:
        """Ternary search for max |P| within one grid step of theta"""
        rel_tol = config.refine_tolerance if rel_tol is None else rel_tol
        lo, hi = theta - 1.0 / K, theta + 1.0 / K
        f = lambda t: abs(self(t))
        for _ in range(Grid.REFINE_MAX_STEPS):
            m1 = lo + (hi - lo) / 3
            m2 = hi - (hi - lo) / 3
            f1, f2 = f(m1), f(m2)
            if f1 < f2:
                lo = m1
            else:
                hi = m2
            if abs(f1 - f2) <= rel_tol * max(f1, f2, 1e-300) and hi - lo < rel_tol:
                break
        best = (lo + hi) / 2
        return ThetaMax(theta=best % 1.0, value=f(best))

    def maximize(self, x: float, oversampling: Optional[int] = None,
                 rel_tol: Optional[float] = None) -> ThetaMax:
        """max over θ of |P(θ)|: ⌈oversampling·x⌉-point grid, then local refinement"""
        K = self.grid_size(x, oversampling)
        values = np.abs(self.grid_values(K))
        j = int(np.argmax(values))
        grid_best = ThetaMax(theta=j / K, value=float(values[j]))
        refined = self.refine(j / K, K, rel_tol)
        logger.debug("maximize degree=%d K=%d grid=%.12g refined=%.12g",
                     self.degree, K, grid_best.value, refined.value)
        return refined if refined.value >= grid_best.value else grid_best

