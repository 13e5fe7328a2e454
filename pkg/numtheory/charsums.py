"""
Character sums: prefix sums and M(χ), Gauss sums, theta sums over the circle,
and twisted harmonic sums
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config import Tolerances
from numtheory.characters import Character, MultiplicativeFunction
from numtheory.errors import DomainError
from numtheory.trigpoly import ThetaMax, TrigPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumTrace:
    """Prefix sums S(t) = Σ_{n <= t} χ(n) for t = 1..bound"""
    label: str
    bound: int
    prefix: np.ndarray = field(repr=False)

    def __getitem__(self, t: int) -> complex:
        if t == 0:
            return 0j
        return complex(self.prefix[t - 1])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.prefix)))

    def argmax_abs(self) -> int:
        return int(np.argmax(np.abs(self.prefix))) + 1


@dataclass(frozen=True)
class GaussSum:
    label: str
    value: complex

    @property
    def norm_squared(self) -> float:
        return abs(self.value) ** 2


def partial_sums(chi: MultiplicativeFunction, T: int) -> SumTrace:
    """One cumulative pass over χ(1..T)"""
    if T < 1:
        raise DomainError(f"partial_sums requires T >= 1, got {T}")
    values = chi.values_at(np.arange(1, T + 1))
    return SumTrace(label=chi.label, bound=T, prefix=np.cumsum(values))


def max_character_sum(chi: Character) -> float:
    """
    M(χ) = max_t |Σ_{n <= t} χ(n)|; S is q-periodic with S(q) = 0, so t in [1, q] suffices
    """
    if chi.is_principal:
        raise DomainError("M(χ) is unbounded for the principal character")
    return partial_sums(chi, chi.q).max_abs()


M = max_character_sum


def gauss_sum(chi: Character) -> GaussSum:
    """τ(χ) = Σ_{b mod q} χ(b) e(b/q), with the two angles combined exactly before summing"""
    q, L = chi.q, chi.group.exponent
    angles = chi.angle_table()
    residues = np.flatnonzero(angles >= 0)
    modulus = L * q
    numerators = (angles[residues] * q + residues * L) % modulus
    value = complex(np.sum(np.exp(2j * np.pi * numerators / modulus)))
    return GaussSum(label=chi.label, value=value)


def _sign_at_minus_one(chi: Character) -> int:
    return 1 if chi.is_even else -1


def theta_polynomial(chi: Character, x: float) -> TrigPolynomial:
    """Σ_{1 <= |n| <= x} (χ(n)/n) e(nθ) as a trigonometric polynomial"""
    if x < 1:
        raise DomainError(f"theta sums need x >= 1, got {x}")
    D = int(math.floor(x))
    n = np.arange(1, D + 1)
    positive = chi.values_at(n) / n
    negative = -_sign_at_minus_one(chi) * positive
    return TrigPolynomial.from_halves(positive, negative)


def theta_sum(chi: Character, theta: float, x: float) -> complex:
    """Σ_{n <= x} (χ(n)/n)(e(nθ) - χ(-1)e(-nθ))"""
    if x < 1:
        raise DomainError(f"theta sums need x >= 1, got {x}")
    n = np.arange(1, int(math.floor(x)) + 1)
    coeffs = chi.values_at(n) / n
    phases = np.exp(2j * np.pi * n * theta)
    return complex(np.sum(coeffs * (phases - _sign_at_minus_one(chi) * np.conj(phases))))


def theta_sum_grid(chi: Character, x: float, K: int) -> np.ndarray:
    """theta_sum at θ_j = j/K for all j, in one FFT"""
    return theta_polynomial(chi, x).grid_values(K)


def max_theta_sum(chi: Character, x: float, oversampling: Optional[int] = None) -> ThetaMax:
    """max over θ in [0, 1] of |theta_sum(χ, θ, x)|"""
    return theta_polynomial(chi, x).maximize(x, oversampling)


def twisted_harmonic_prefix(chi: MultiplicativeFunction, psi: MultiplicativeFunction, N: int) -> np.ndarray:
    """Σ_{n <= k} χ(n)·conj(ψ(n))/n for k = 1..N"""
    if N < 1:
        raise DomainError(f"twisted harmonic sums need N >= 1, got {N}")
    n = np.arange(1, N + 1)
    return np.cumsum(chi.values_at(n) * np.conj(psi.values_at(n)) / n)


def twisted_harmonic_sum(chi: MultiplicativeFunction, psi: MultiplicativeFunction, N: int) -> complex:
    return complex(twisted_harmonic_prefix(chi, psi, N)[-1])


def max_twisted_harmonic(chi: MultiplicativeFunction, psi: MultiplicativeFunction, bound: int) -> float:
    return float(np.max(np.abs(twisted_harmonic_prefix(chi, psi, bound))))


def conjugate_gauss_identity(psi: Character, n: int) -> float:
    """|Σ_{b mod m} ψ(b)e(bn/m) - conj(ψ(n))τ(ψ)|; zero for primitive ψ"""
    m = psi.q
    b = np.arange(m)
    lhs = np.sum(psi.values(b) * np.exp(2j * np.pi * ((b * n) % m) / m))
    rhs = np.conj(psi.value(n)) * gauss_sum(psi).value
    return float(abs(lhs - rhs))


def conjugate_gauss_errors(psi: Character) -> np.ndarray:
    """conjugate_gauss_identity for every n mod m at once"""
    m = psi.q
    lhs = m * np.fft.ifft(psi.values(np.arange(m)))
    rhs = np.conj(psi.values(np.arange(m))) * gauss_sum(psi).value
    return np.abs(lhs - rhs)


def polya_vinogradov_ratio(chi: Character) -> float:
    """M(χ) / (√q log q)"""
    return max_character_sum(chi) / (math.sqrt(chi.q) * math.log(chi.q))


def period_sum_vanishes(chi: Character, tol: float = Tolerances.PERIOD_SUM) -> bool:
    return abs(partial_sums(chi, chi.q)[chi.q]) < tol
