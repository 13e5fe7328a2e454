import math

import mpmath
import pytest

from numtheory.characters import character
from numtheory.errors import DomainError
from services.experiments import (
    ScanRecord, build_record, delta, nearest_odd_character, odd_order_moduli, paley_running_max,
    paley_scan, quadratic_character, recompute_record, scan_odd_order,
)
from ui.report_writer import ReportWriter


def test_delta_three():
    assert delta(3) == pytest.approx(0.1730067, abs=1e-6)


def test_delta_matches_high_precision():
    with mpmath.workdps(40):
        for g in (3, 5, 7, 21, 99):
            exact = 1 - (mpmath.mpf(g) / mpmath.pi) * mpmath.sin(mpmath.pi / g)
            assert delta(g) == pytest.approx(float(exact), abs=1e-14)


def test_delta_decreases():
    values = [delta(g) for g in range(3, 101, 2)]
    assert all(0 < b < a for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("g", [1, 2, 4, 10])
def test_delta_rejects_even_or_small(g):
    with pytest.raises(DomainError):
        delta(g)


def test_odd_order_moduli():
    assert odd_order_moduli(3, 7, 13) == [7, 13]
    assert odd_order_moduli(3, 5, 5) == []
    assert odd_order_moduli(5, 2, 61) == [11, 31, 41, 61]


def test_scan_small_range():
    records = scan_odd_order(3, 7, 13, 25, threads=1)
    assert len(records) == 4
    assert [r.q for r in records] == [7, 7, 13, 13]
    for record in records:
        assert record.order == 3
        assert record.parity == "even"
        assert record.conductor == record.q
        assert record.t1_ratio > 0
        assert record.gs_norm is not None


def test_scan_empty_range():
    assert scan_odd_order(3, 5, 5, 25, threads=1) == []


def test_scan_is_deterministic_across_workers():
    serial = scan_odd_order(3, 7, 40, 25, threads=1)
    parallel = scan_odd_order(3, 7, 40, 25, threads=2)
    assert serial == parallel
    writer = ReportWriter("csv")
    assert writer.render(serial) == writer.render(parallel)


def test_records_are_recomputable():
    for record in scan_odd_order(3, 7, 31, 25, threads=1):
        again = recompute_record(record.q, record.char_exps, record.psi_modulus, record.psi_exps)
        assert again == record


def test_nearest_odd_character_ties_go_to_smallest(quadratic_mod5):
    # log 5 < 2, so every distance is zero
    psi, d2 = nearest_odd_character(quadratic_mod5, 25)
    assert d2 == 0
    assert psi.q == 3 and psi.is_odd


def test_nearest_odd_character_needs_a_pool(quadratic_mod5):
    with pytest.raises(DomainError):
        nearest_odd_character(quadratic_mod5, 2)


def test_build_record_without_psi(odd_mod3):
    record = build_record(odd_mod3)
    assert record.psi_modulus is None and record.t1_ratio is None
    assert record.M == pytest.approx(1.0)
    assert record.gs_norm is None


def test_growth_normalization_uses_delta(cubic_mod7):
    record = build_record(cubic_mod7)
    expected = record.M / (math.sqrt(7) * math.log(math.log(7)) ** (1 - delta(3)))
    assert record.gs_norm == pytest.approx(expected)
    assert record.gs_eps_norm == pytest.approx(
        record.M / (math.sqrt(7) * math.log(math.log(7)) ** (1 - delta(3) - record.epsilon)))


def test_quadratic_character():
    chi = quadratic_character(11)
    assert chi.order == 2 and chi.is_primitive
    for bad in (2, 9, 15):
        with pytest.raises(DomainError):
            quadratic_character(bad)


def test_paley_scan_small():
    records = paley_scan(30, threads=1)
    assert [r.q for r in records] == [5, 7, 11, 13, 17, 19, 23, 29]
    five = records[0]
    assert five.M == pytest.approx(1.0)
    assert five.M_over_sqrtq == pytest.approx(0.4472, abs=1e-4)
    for record in records:
        assert record.gs_norm is None
        assert (record.t1_ratio is not None) == (record.parity == "even")
        assert (record.q % 4 == 1) == (record.parity == "even")


def test_paley_running_max_nondecreasing():
    running = paley_running_max(paley_scan(200, threads=1))
    values = [v for _, v in running]
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert [q for q, _ in running] == sorted(q for q, _ in running)


def test_paley_running_max_skips_tiny_moduli():
    three = build_record(quadratic_character(3))
    assert three.paley_norm > 6
    records = paley_scan(60, threads=1)
    running = paley_running_max([three] + records)
    assert running == paley_running_max(records)
    assert running[0][0] == 5
    assert running[-1][1] < 2


def test_to_dict_column_order():
    record = build_record(character(7, (2,)))
    data = record.to_dict()
    assert list(data)[:6] == ["q", "char_exps", "order", "parity", "conductor", "M"]
    assert data["char_exps"] == [2]
    assert "gs_eps_norm" in data
    assert isinstance(record, ScanRecord)
