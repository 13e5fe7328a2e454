"""
Pólya's Fourier expansion of character sums and the identity chain behind the
lower bound M(χ) + √q ≫ (√(qm)/φ(m))·(log log q / log log log q)·exp(-D(χ,ψ;log q)²)
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

from config import Scan
from numtheory.arithmetic import euler_phi
from numtheory.characters import Character
from numtheory.charsums import gauss_sum, max_character_sum, max_theta_sum, partial_sums
from numtheory.errors import DomainError
from numtheory.pretense import distance_squared

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpansionReport:
    label: str
    t: int
    lhs: complex
    rhs: complex
    error: float
    error_over_log_q: float


@dataclass(frozen=True)
class LowerBoundRatio:
    chi_label: str
    psi_label: str
    dist_sq: float
    lhs: float
    rhs0: float
    ratio: float


def _require_primitive(chi: Character, what: str) -> None:
    if not chi.is_primitive:
        raise DomainError(f"{what} needs a primitive character; {chi.label} has conductor {chi.conductor}")


def _expansion_coefficients(chi: Character) -> np.ndarray:
    """conj(χ)(n)/n for n = 1..q; the value at -n is χ(-1)·conj(χ)(n)/(-n)"""
    n = np.arange(1, chi.q + 1)
    return np.conj(chi.values(n)) / n


def _expansion_prefactor(chi: Character) -> complex:
    return gauss_sum(chi).value / (2j * math.pi)


def polya_error(chi: Character, t: int) -> ExpansionReport:
    """
    S(t) against (τ(χ)/2πi)·Σ_{1 <= |n| <= q} (conj(χ)(n)/n)(1 - e(-nt/q)), directly in O(q)
    """
    _require_primitive(chi, "polya_error")
    q = chi.q
    if not 1 <= t <= q:
        raise DomainError(f"t must lie in [1, {q}], got {t}")
    n = np.arange(1, q + 1)
    c = _expansion_coefficients(chi)
    sign = 1 if chi.is_even else -1
    phase = np.exp(-2j * np.pi * ((n * t) % q) / q)
    # -n terms: χ(-1)·conj(χ)(n)/(-n)·(1 - e(nt/q))
    series = np.sum(c * (1 - phase)) - sign * np.sum(c * (1 - np.conj(phase)))
    rhs = _expansion_prefactor(chi) * series
    lhs = partial_sums(chi, t)[t]
    error = abs(lhs - rhs)
    return ExpansionReport(chi.label, t, lhs, complex(rhs), error, error / math.log(q))


def polya_sweep(chi: Character, ts: Optional[Sequence[int]] = None) -> np.ndarray:
    """Expansion errors for many t at once; the Fourier side is one length-q FFT"""
    _require_primitive(chi, "polya_sweep")
    q = chi.q
    c = _expansion_coefficients(chi)
    sign = 1 if chi.is_even else -1
    folded = np.zeros(q, dtype=complex)
    np.add.at(folded, np.arange(1, q + 1) % q, c)
    # Σ_n c_n e(-nt/q) and Σ_n c_n e(nt/q) for t = 0..q-1
    forward = np.fft.fft(folded)
    backward = q * np.fft.ifft(folded)
    total = np.sum(c)
    series = (total - forward) - sign * (total - backward)
    rhs = _expansion_prefactor(chi) * series
    lhs = np.concatenate([[0], np.cumsum(chi.values(np.arange(1, q)))])
    errors = np.abs(lhs - rhs)
    # t = q is t = 0 mod q on both sides
    errors = np.append(errors[1:], errors[0])
    if ts is None:
        return errors
    return errors[np.asarray(ts, dtype=np.int64) - 1]


def stratified_ts(q: int, full_sweep_max: int = Scan.POLYA_FULL_SWEEP_MAX,
                  samples: int = Scan.POLYA_SAMPLE_POINTS) -> np.ndarray:
    """All t in [1, q] for small q, otherwise one t per equal-width stratum"""
    if q <= full_sweep_max:
        return np.arange(1, q + 1)
    edges = np.linspace(1, q + 1, samples + 1)
    return np.unique(np.floor((edges[:-1] + edges[1:]) / 2).astype(np.int64))


def even_polya_max(chi: Character) -> float:
    """max over θ of |Σ_{1 <= |n| <= q} (χ(n)/n) e(nθ)| for primitive even χ"""
    _require_primitive(chi, "even_polya_max")
    if not chi.is_even:
        raise DomainError(f"even_polya_max needs an even character; {chi.label} is odd")
    return max_theta_sum(chi, chi.q).value


def twist_identity_check(chi: Character, psi: Character, N: int) -> float:
    """
    |Σ_{b mod m} ψ(b)·Σ_{1 <= |n| <= N} (χ(n)/n) e(nb/m) - 2τ(ψ)·Σ_{n <= N} χ(n)conj(ψ)(n)/n|
    for even χ and primitive odd ψ
    """
    _require_primitive(psi, "twist_identity_check")
    if not psi.is_odd:
        raise DomainError(f"twist_identity_check needs an odd ψ; {psi.label} is even")
    if not chi.is_even:
        raise DomainError(f"twist_identity_check needs an even χ; {chi.label} is odd")
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    m = psi.q
    n = np.arange(1, N + 1)
    b = np.arange(m)
    coeffs = chi.values(n) / n
    phase = np.exp(2j * np.pi * (np.outer(b, n) % m) / m)
    inner = phase @ coeffs - np.conj(phase) @ coeffs
    lhs = np.sum(psi.values(b) * inner)
    rhs = 2 * gauss_sum(psi).value * np.sum(coeffs * np.conj(psi.values(n)))
    return float(abs(lhs - rhs))


def theorem1_ratio(chi: Character, psi: Character) -> LowerBoundRatio:
    """
    LHS = M(χ) + √q, RHS₀ = (√(qm)/φ(m))·(log log q / max(log log log q, 1))·exp(-D(χ,ψ;log q)²)
    """
    _require_primitive(chi, "theorem1_ratio")
    _require_primitive(psi, "theorem1_ratio")
    if not chi.is_even:
        raise DomainError(f"theorem1_ratio needs an even χ; {chi.label} is odd")
    if not psi.is_odd:
        raise DomainError(f"theorem1_ratio needs an odd ψ; {psi.label} is even")
    q, m = chi.q, psi.q
    if q < 3:
        raise DomainError(f"theorem1_ratio needs q >= 3 so that log log q > 0, got {q}")

    dist_sq = distance_squared(chi, psi, math.log(q)).squared
    loglog = math.log(math.log(q))
    triple = max(math.log(loglog), 1.0) if loglog > 0 else 1.0
    lhs = max_character_sum(chi) + math.sqrt(q)
    rhs0 = (math.sqrt(q * m) / euler_phi(m)) * (loglog / triple) * math.exp(-dist_sq)
    return LowerBoundRatio(chi.label, psi.label, dist_sq, lhs, rhs0, lhs / rhs0)


def odd_order_is_even(characters: Iterable[Character]) -> List[Character]:
    """Characters of odd order that fail to be even (always empty)"""
    return [chi for chi in characters if chi.order % 2 == 1 and not chi.is_even]
