"""
Verification suites for the character-sum lab
Each suite runs one family of module properties at its documented scale and
reports how many cases held, the worst statistic seen, and a trend slope where
the property is asymptotic.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import mpmath
import numpy as np

from config import Scan, Suites, Tolerances, config
from numtheory.characters import RandomUnimodular, enumerate_characters, primitive_characters
from numtheory.charsums import conjugate_gauss_errors, gauss_sum, max_character_sum
from numtheory.errors import DomainError, UsageError
from numtheory.euler import harmonic_partial_max, lemma21_ratio, shifted_series
from numtheory.kernels import (
    CoefficientSequence, fejer, fejer_coefficient_sum, fejer_convolution_check,
    fejer_many, lemma22_report,
)
from numtheory.polya import even_polya_max, polya_sweep, stratified_ts, twist_identity_check
from numtheory.pretense import distance, distance_squared
from services.experiments import delta, paley_running_max, paley_scan, scan_odd_order
from utils.trend import bucket_minimum_trend, fit_slope

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """Outcome of one suite; `worst` is a maximum error or, for ratio suites, a minimum"""
    name: str
    run: int = 0
    passed: int = 0
    worst: Optional[float] = None
    slope: Optional[float] = None
    trend_ok: bool = True
    statistic: str = "max error"
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.run and self.trend_ok

    def record(self, ok: bool, value: float, minimum: bool = False) -> None:
        self.run += 1
        self.passed += int(bool(ok))
        if self.worst is None:
            self.worst = float(value)
        else:
            self.worst = min(self.worst, value) if minimum else max(self.worst, value)

    def merge(self, other: "SuiteReport") -> None:
        self.run += other.run
        self.passed += other.passed
        self.trend_ok = self.trend_ok and other.trend_ok
        self.notes.append(f"{other.name}: {other.passed}/{other.run}")


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def gauss_suite(seed: int, q_max: int = Suites.GAUSS_Q_MAX) -> SuiteReport:
    """|τ(χ)|² = q for every primitive χ mod q <= q_max"""
    report = SuiteReport("gauss", statistic="max relative error")
    for q in range(3, q_max + 1):
        for chi in primitive_characters(q):
            err = abs(gauss_sum(chi).norm_squared / q - 1.0)
            report.record(err < Tolerances.GAUSS_RELATIVE, err)
    return report


def orthogonality_suite(seed: int, q_max: int = Suites.ORTHOGONALITY_Q_MAX) -> SuiteReport:
    """Row and column orthogonality of the character table mod q, for every q <= q_max"""
    report = SuiteReport("orthogonality")
    for q in range(1, q_max + 1):
        chars = enumerate_characters(q)
        units = chars[0].group.units()
        table = np.array([chi.values(units) for chi in chars])
        phi = len(units)
        rows = np.max(np.abs(table @ table.conj().T - phi * np.eye(len(chars))))
        cols = np.max(np.abs(table.conj().T @ table - len(chars) * np.eye(phi)))
        err = float(max(rows, cols))
        report.record(err < Tolerances.ORTHOGONALITY, err)
    return report


def polya_suite(seed: int, primes=Suites.POLYA_PRIMES) -> SuiteReport:
    """
    Expansion error / log q over all primitive χ and the t sample; the per-q maxima
    must not grow with log q
    """
    report = SuiteReport("polya", statistic="max error/log q")
    maxima, even_ratio = [], math.inf
    for q in primes:
        worst_q = 0.0
        ts = stratified_ts(q)
        for chi in primitive_characters(q):
            scaled = float(np.max(polya_sweep(chi, ts))) / math.log(q)
            report.record(math.isfinite(scaled), scaled)
            worst_q = max(worst_q, scaled)
            if chi.is_even:
                ratio = (max_character_sum(chi) + math.log(q)) / (math.sqrt(q) * even_polya_max(chi))
                even_ratio = min(even_ratio, ratio)
        maxima.append(worst_q)
        logger.info("polya q=%d max error/log q=%.6g", q, worst_q)

    trend = fit_slope([math.log(q) for q in primes], maxima)
    report.slope = trend.slope
    report.trend_ok = trend.within(config.trend_tolerance)
    report.notes.append(f"min (M + log q)/(√q·max theta sum) over even χ: {even_ratio:.6g}")
    return report


def fejer_suite(seed: int, n_max: int = Suites.FEJER_N_MAX, thetas: int = Suites.FEJER_RANDOM_THETAS) -> SuiteReport:
    """Nonnegativity, unit mean and agreement of the two Fejér formulas"""
    report = SuiteReport("fejer")
    rng = _rng(seed)
    samples = rng.random(thetas)
    for N in range(1, n_max + 1):
        lowest = float(np.min(fejer_many(N, samples)))
        report.record(lowest >= -Tolerances.FEJER_NEGATIVE, max(-lowest, 0.0))

        K = 2 * N + 1
        mean = float(np.mean(fejer_many(N, np.arange(K) / K)))
        report.record(abs(mean - 1.0) < Tolerances.FEJER_FORMULAS, abs(mean - 1.0))

        theta = float(samples[N % thetas])
        gap = abs(fejer(N, theta) - fejer_coefficient_sum(N, theta))
        report.record(gap < Tolerances.FEJER_FORMULAS, gap)
    return report


def lemma21_suite(seed: int, functions: int = Suites.LEMMA21_RANDOM_FUNCTIONS,
                  q_max: int = Suites.LEMMA21_CHARACTER_Q_MAX,
                  cutoffs=Suites.LEMMA21_CUTOFFS) -> SuiteReport:
    """
    |Σ f(n)/n^{1+δ}| <= max_N |Σ_{n<=N} f(n)/n| for random f and all characters mod q <= q_max;
    the minimum of lemma21_ratio must not decay with y
    """
    report = SuiteReport("lemma21", statistic="max excess of shifted series")
    family = [RandomUnimodular(seed + i) for i in range(functions)]
    for q in range(1, q_max + 1):
        family.extend(enumerate_characters(q))

    minima = []
    for y in cutoffs:
        lowest = math.inf
        for f in family:
            partial_max = harmonic_partial_max(f, y)
            excess = abs(shifted_series(f, y).value) - partial_max
            report.record(excess <= Tolerances.INEQUALITY_SLACK * max(1.0, partial_max), excess)
            lowest = min(lowest, lemma21_ratio(f, y))
        minima.append(lowest)
        logger.info("lemma21 y=%g min ratio=%.6g", y, lowest)

    trend = fit_slope([math.log(y) for y in cutoffs], minima)
    report.slope = trend.slope
    report.trend_ok = trend.not_decaying(config.trend_tolerance)
    report.notes.append("min ratios: " + ", ".join(f"{m:.4g}" for m in minima))
    return report


def lemma22_suite(seed: int, bounds=Suites.LEMMA22_BOUNDS, seeds: int = Suites.LEMMA22_SEEDS) -> SuiteReport:
    """Gap between the two maxima is nonnegative and does not grow with log x"""
    report = SuiteReport("lemma22", statistic="max gap")
    means = []
    for x in bounds:
        gaps = []
        for i in range(seeds):
            gap = lemma22_report(CoefficientSequence.random(x, seed + i), x).gap
            report.record(gap >= 0, gap)
            gaps.append(gap)
        means.append(float(np.mean(gaps)))

    trend = fit_slope([math.log(x) for x in bounds], means)
    report.slope = trend.slope
    report.trend_ok = trend.not_growing(config.trend_tolerance)
    return report


def theorem1_suite(seed: int, q_max: int = Suites.THEOREM1_Q_MAX) -> SuiteReport:
    """
    Minimum lower-bound ratio over cubic characters must not decay: minima over
    equal-count q buckets may shrink no faster than q^-trend_tolerance
    """
    report = SuiteReport("theorem1", statistic="min ratio")
    records = scan_odd_order(3, Scan.THEOREM1_TREND_Q_MIN, q_max, Scan.PSI_CONDUCTOR_MAX)
    for record in records:
        report.record(record.t1_ratio > 0 and record.parity == "even", record.t1_ratio, minimum=True)

    trend = bucket_minimum_trend([r.t1_ratio for r in records], [r.q for r in records])
    report.slope = trend.slope
    report.trend_ok = trend.not_decaying(config.trend_tolerance)
    return report


def identities_suite(seed: int, twist_cases: int = Suites.TWIST_CASES,
                     convolution_cases: int = Suites.CONVOLUTION_CASES,
                     m_max: int = Suites.GAUSS_IDENTITY_M_MAX) -> SuiteReport:
    """The exact finite identities: ψ-twisting, Fejér convolution and the conjugate Gauss sum"""
    report = SuiteReport("identities")
    rng = _rng(seed)

    evens = [chi for q in range(3, Suites.TWIST_CHI_Q_MAX + 1)
             for chi in primitive_characters(q) if chi.is_even]
    odds = [psi for m in range(3, Suites.TWIST_PSI_M_MAX + 1)
            for psi in primitive_characters(m) if psi.is_odd]
    for _ in range(twist_cases):
        chi = evens[int(rng.integers(len(evens)))]
        psi = odds[int(rng.integers(len(odds)))]
        N = int(rng.integers(1, 201))
        diff = twist_identity_check(chi, psi, N)
        report.record(diff < Tolerances.TWIST_PER_TERM * N, diff / N)

    for _ in range(convolution_cases):
        x = int(rng.integers(2, 51))
        N = int(rng.integers(1, x + 1))
        a = CoefficientSequence.random(x, int(rng.integers(2**31)))
        err = fejer_convolution_check(a, N, float(rng.random()), 2 * (x + N) + 1)
        report.record(err < Tolerances.CONVOLUTION, err)

    for m in range(3, m_max + 1):
        for psi in primitive_characters(m):
            err = float(np.max(conjugate_gauss_errors(psi)))
            report.record(err < Tolerances.ORTHOGONALITY, err)
    return report


def pretense_suite(seed: int, triples: int = Suites.TRIANGLE_TRIPLES, cutoffs=Suites.TRIANGLE_CUTOFFS) -> SuiteReport:
    """D is symmetric exactly and satisfies the triangle inequality"""
    report = SuiteReport("pretense", statistic="max triangle violation")
    for y in cutoffs:
        for i in range(triples):
            f, g, h = (RandomUnimodular(seed + 3 * i + k) for k in range(3))
            symmetric = distance_squared(f, g, y).squared == distance_squared(g, f, y).squared
            violation = distance(f, h, y) - distance(f, g, y) - distance(g, h, y)
            report.record(symmetric and violation <= Tolerances.INEQUALITY_SLACK, violation)
    return report


def delta_suite(seed: int, g_max: int = 99) -> SuiteReport:
    """δ_g against a 50-digit evaluation, and strict decrease towards 0"""
    report = SuiteReport("delta")
    with mpmath.workdps(50):
        previous = math.inf
        for g in range(3, g_max + 1, 2):
            exact = 1 - (mpmath.mpf(g) / mpmath.pi) * mpmath.sin(mpmath.pi / g)
            value = delta(g)
            err = abs(value - float(exact))
            report.record(err < 1e-12 and 0 < value < previous, err)
            previous = value
    report.record(abs(delta(3) - 0.1730067) < 1e-6, abs(delta(3) - 0.1730067))
    return report


def paley_suite(seed: int, q_max: int = Suites.PALEY_Q_MAX,
                reference_q: int = Suites.PALEY_REFERENCE_Q) -> SuiteReport:
    """M/(√q log log q) somewhere in reference_q < q <= q_max reaches half the running max at reference_q"""
    if q_max <= reference_q:
        raise DomainError(f"paley suite needs q_max > reference_q, got {q_max} <= {reference_q}")
    report = SuiteReport("paley", statistic="max past reference")
    records = paley_scan(q_max)
    running = paley_running_max(records)
    values = [v for _, v in running]
    nondecreasing = all(b >= a for a, b in zip(values, values[1:]))
    at_reference = max((v for q, v in running if q <= reference_q), default=0.0)
    beyond = max((r.paley_norm for r in records if r.q > reference_q), default=0.0)
    report.record(nondecreasing, values[-1], minimum=True)
    report.record(beyond >= 0.5 * at_reference, beyond, minimum=True)
    report.notes.append(f"running max at q <= {reference_q}: {at_reference:.6g}")
    report.notes.append(f"max over {reference_q} < q <= {q_max}: {beyond:.6g}")
    return report


SUITES: Dict[str, Callable[[int], SuiteReport]] = {
    "polya": polya_suite,
    "fejer": fejer_suite,
    "lemma21": lemma21_suite,
    "lemma22": lemma22_suite,
    "theorem1": theorem1_suite,
    "orthogonality": orthogonality_suite,
    "gauss": gauss_suite,
    "identities": identities_suite,
    "pretense": pretense_suite,
    "delta": delta_suite,
    "paley": paley_suite,
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, seed: Optional[int] = None) -> SuiteReport:
    """Run one suite by name; "all" runs every suite and aggregates the counts"""
    seed = config.seed if seed is None else seed
    if name == "all":
        combined = SuiteReport("all", statistic="suites")
        for report in run_all(seed):
            combined.merge(report)
        return combined
    if name not in SUITES:
        raise UsageError(f"unknown suite '{name}'; choose from {', '.join(suite_names())}")
    logger.info("running suite %s with seed %d", name, seed)
    return SUITES[name](seed)


def run_all(seed: Optional[int] = None) -> List[SuiteReport]:
    seed = config.seed if seed is None else seed
    return [SUITES[name](seed) for name in SUITES]
