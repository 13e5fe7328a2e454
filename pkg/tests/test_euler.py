import math

import pytest
import sympy

from numtheory.characters import ConstantOne, RandomUnimodular, enumerate_characters
from numtheory.errors import DomainError
from numtheory.euler import (
    euler_log_comparison, harmonic_partial_max, lemma21_ratio, mertens_discrepancy,
    shift_for, shifted_series,
)
from numtheory.pretense import prime_reciprocal_sum


def test_harmonic_partial_max_examples(odd_mod3):
    assert harmonic_partial_max(ConstantOne(), 10) == pytest.approx(sum(1 / n for n in range(1, 11)))
    assert harmonic_partial_max(odd_mod3, 3) == pytest.approx(1.0)
    for seed in range(10):
        assert harmonic_partial_max(RandomUnimodular(seed), 2) >= 0.5


def test_harmonic_partial_max_rejects_small_y():
    with pytest.raises(DomainError):
        harmonic_partial_max(ConstantOne(), 1)


def test_shift_is_positive():
    for y in (16, 100, 10**6):
        assert shift_for(y) > 0


def test_shifted_series_constant_one():
    series = shifted_series(ConstantOne(), 100)
    assert 0 < series.value.real < sum(1 / n for n in range(1, 101))
    assert abs(series.value) <= 1 + 1 / series.delta
    assert series.tail_bound > 0


def test_shifted_series_matches_direct_sum(quadratic_mod5):
    y = 10**4
    delta = math.log(math.log(y)) / math.log(y)
    direct = math.fsum(int(sympy.jacobi_symbol(n, 5)) * n ** (-1 - delta) for n in range(1, y + 1))
    assert shifted_series(quadratic_mod5, y).value == pytest.approx(direct, abs=1e-12)


def test_shifted_series_rejects_small_cutoff():
    with pytest.raises(DomainError):
        shifted_series(ConstantOne(), 15)


def test_shifted_series_bounded_by_partial_sums():
    family = [RandomUnimodular(seed) for seed in range(30)] + enumerate_characters(12)
    for f in family:
        for y in (100, 1000):
            partial = harmonic_partial_max(f, y)
            assert abs(shifted_series(f, y).value) <= partial * (1 + 1e-12)


def test_prime_sums():
    assert euler_log_comparison(ConstantOne(), 100).prime_sum == pytest.approx(1.80282, abs=1e-5)
    assert prime_reciprocal_sum(10) == pytest.approx(1 / 2 + 1 / 3 + 1 / 5 + 1 / 7)


def test_euler_gap_tracks_triple_log():
    for f in [ConstantOne()] + [RandomUnimodular(seed) for seed in range(5)]:
        for y in (100, 1000, 10**4):
            comparison = euler_log_comparison(f, y)
            assert comparison.gap == pytest.approx(abs(comparison.log_abs_product - comparison.prime_sum))
            assert comparison.gap < comparison.triple_log + 3
            assert 0 <= comparison.tail_prime_sum <= prime_reciprocal_sum(y)


def test_euler_log_product_direct(quadratic_mod5):
    y = 200
    comparison = euler_log_comparison(quadratic_mod5, y)
    delta = shift_for(y)
    product = 1.0
    for p in sympy.primerange(2, y + 1):
        product *= 1 / (1 - int(sympy.jacobi_symbol(p, 5)) * p ** (-1 - delta))
    assert comparison.log_abs_product == pytest.approx(math.log(abs(product)), abs=1e-10)


def test_lemma21_ratio_constant_one():
    for y in (100, 1000, 10**4):
        assert lemma21_ratio(ConstantOne(), y) >= 1


def test_lemma21_ratio_positive_for_characters():
    for chi in enumerate_characters(15):
        assert lemma21_ratio(chi, 500) > 0


def test_mertens_discrepancy():
    assert abs(mertens_discrepancy(10, 10**4)) < 0.2
    with pytest.raises(DomainError):
        mertens_discrepancy(2, 100)
    with pytest.raises(DomainError):
        mertens_discrepancy(100, 50)
