import numpy as np
import pytest

from config import config
from numtheory.trigpoly import TrigPolynomial


def test_odd_length_required():
    with pytest.raises(ValueError):
        TrigPolynomial(np.ones(4))


def test_grid_values_match_direct_evaluation(rng):
    coeffs = rng.normal(size=21) + 1j * rng.normal(size=21)
    poly = TrigPolynomial(coeffs)
    K = 50
    assert np.allclose(poly.grid_values(K), [poly(j / K) for j in range(K)], atol=1e-10)
    assert np.allclose(poly.evaluate_many(np.arange(K) / K), poly.grid_values(K), atol=1e-10)


def test_grid_rejects_aliasing():
    with pytest.raises(ValueError):
        TrigPolynomial(np.ones(11)).grid_values(10)


def test_from_halves_layout():
    poly = TrigPolynomial.from_halves(np.array([1.0, 2.0]), np.array([3.0, 4.0]))
    assert poly.coeffs.tolist() == [4, 3, 0, 1, 2]
    assert poly.degree == 2


def test_maximize_cosine():
    # 2cos(2πθ) peaks at θ = 0 with value 2
    best = TrigPolynomial(np.array([1.0, 0.0, 1.0])).maximize(1)
    assert best.value == pytest.approx(2.0, rel=1e-9)
    assert min(best.theta, 1 - best.theta) < 1e-3


def test_maximize_never_below_grid(rng):
    for _ in range(20):
        poly = TrigPolynomial(rng.normal(size=31) + 1j * rng.normal(size=31))
        K = poly.grid_size(15)
        assert poly.maximize(15).value >= np.max(np.abs(poly.grid_values(K))) - 1e-12


def test_theta_max_unpacks():
    theta, value = TrigPolynomial(np.array([0.0, 1.0, 0.0])).maximize(1)
    assert value == pytest.approx(1.0)


def test_grid_settings_come_from_config(rng, monkeypatch):
    poly = TrigPolynomial(rng.normal(size=31) + 1j * rng.normal(size=31))
    assert poly.grid_size(100) == 800
    monkeypatch.setitem(config.config["grid"], "oversampling", 3)
    monkeypatch.setitem(config.config["grid"], "refine_tolerance", 1e-2)
    assert poly.grid_size(100) == 300
    assert poly.maximize(15) == poly.maximize(15, oversampling=3, rel_tol=1e-2)
    assert poly.refine(0.25, 90) == poly.refine(0.25, 90, rel_tol=1e-2)
