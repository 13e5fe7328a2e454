import math

import pytest

from utils.trend import Trend, bucket_minimum_trend, equal_count_buckets, fit_slope


def test_fit_slope_line():
    trend = fit_slope([0, 1, 2, 3], [1, 3, 5, 7])
    assert trend.slope == pytest.approx(2.0)
    assert trend.intercept == pytest.approx(1.0)
    assert trend.points == 4


def test_fit_slope_degenerate():
    assert fit_slope([1.0], [5.0]) == Trend(slope=0.0, intercept=5.0, points=1)
    assert fit_slope([2, 2, 2], [1, 2, 3]).slope == 0.0


def test_trend_predicates():
    assert Trend(0.05, 0, 3).within()
    assert not Trend(-0.5, 0, 3).not_decaying()
    assert Trend(0.5, 0, 3).not_decaying()
    assert not Trend(0.5, 0, 3).not_growing()
    assert Trend(0.5, 0, 3).within(tolerance=1.0)


def test_equal_count_buckets():
    keys = [1000, 1, 2, 10, 20, 100, 5000, 7]
    buckets = equal_count_buckets([float(k) for k in keys], keys, count=3)
    assert [len(v) for v in buckets.values()] == [3, 3, 2]
    assert list(buckets.values())[0] == [1.0, 2.0, 7.0]
    assert list(buckets)[0] == pytest.approx((1 * 2 * 7) ** (1 / 3))
    assert equal_count_buckets([], []) == {}
    assert sum(len(v) for v in equal_count_buckets([1.0, 2.0], [3, 4], count=8).values()) == 2


def test_bucket_minimum_trend_flat():
    keys = list(range(100, 10000, 37))
    trend = bucket_minimum_trend([1.0] * len(keys), keys)
    assert abs(trend.slope) < 1e-9


def test_bucket_minimum_trend_rising():
    keys = list(range(100, 10000, 37))
    values = [math.log(math.log(k)) for k in keys]
    assert bucket_minimum_trend(values, keys).slope > 0


def test_bucket_minimum_trend_measures_power_decay():
    keys = [100 * 1.01 ** i for i in range(700)]
    trend = bucket_minimum_trend([k ** -0.5 for k in keys], keys)
    assert -0.6 < trend.slope < -0.4
    assert not trend.not_decaying()


def test_bucket_minimum_trend_vanishing_minimum():
    trend = bucket_minimum_trend([1.0, 0.0, 1.0, 1.0], [10, 20, 30, 40], count=2)
    assert trend.slope == -math.inf
    assert not trend.not_decaying()
