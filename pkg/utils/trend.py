"""
Least-squares trend slopes for desk-scale growth checks
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from config import Tolerances


@dataclass(frozen=True)
class Trend:
    slope: float
    intercept: float
    points: int

    def within(self, tolerance: float = Tolerances.TREND_SLOPE) -> bool:
        return abs(self.slope) <= tolerance

    def not_decaying(self, tolerance: float = Tolerances.TREND_SLOPE) -> bool:
        return self.slope >= -tolerance

    def not_growing(self, tolerance: float = Tolerances.TREND_SLOPE) -> bool:
        return self.slope <= tolerance


def fit_slope(xs: Sequence[float], ys: Sequence[float]) -> Trend:
    """Degree-1 least-squares fit of ys against xs"""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size < 2 or np.ptp(xs) == 0:
        return Trend(slope=0.0, intercept=float(ys.mean()) if ys.size else 0.0, points=int(xs.size))
    slope, intercept = np.polyfit(xs, ys, 1)
    return Trend(slope=float(slope), intercept=float(intercept), points=int(xs.size))


def equal_count_buckets(values: Sequence[float], keys: Sequence[float],
                        count: int = 8) -> Dict[float, List[float]]:
    """
    Sort by key and cut into `count` runs whose lengths differ by at most one,
    so every bucket statistic sees the same number of values.
    Each bucket is labelled by the geometric mean of its keys.
    """
    keys = np.asarray(keys, dtype=float)
    if keys.size == 0:
        return {}
    order = np.argsort(keys, kind="stable")
    keys, values = keys[order], np.asarray(values, dtype=float)[order]
    buckets: Dict[float, List[float]] = {}
    for key_run, value_run in zip(np.array_split(keys, count), np.array_split(values, count)):
        if key_run.size:
            label = float(np.exp(np.log(key_run).mean()))
            buckets.setdefault(label, []).extend(value_run.tolist())
    return buckets


def bucket_minimum_trend(values: Sequence[float], keys: Sequence[float], count: int = 8) -> Trend:
    """
    Slope of log(bucket minimum) against log(bucket key).
    A slope of -s means the minima shrink like key^-s; a non-positive minimum has vanished.
    """
    buckets = equal_count_buckets(values, keys, count)
    minima = [min(members) for members in buckets.values()]
    if any(m <= 0 for m in minima):
        return Trend(slope=-math.inf, intercept=0.0, points=len(minima))
    return fit_slope([math.log(k) for k in buckets], [math.log(m) for m in minima])
