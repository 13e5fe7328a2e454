import json
import os

from config import Config, Grid, Output, Performance, Scan, Suites, Tolerances
from utils.parallel import resolve_threads


def test_defaults_without_file(tmp_path):
    settings = Config(str(tmp_path / "missing.json"))
    assert settings.get('scan.order') == Scan.ORDER
    assert settings.scan_range == (Scan.Q_MIN, Scan.Q_MAX)
    assert settings.seed == Suites.SEED
    assert settings.threads == 1
    assert settings.get('output.significant_digits') == Output.SIGNIFICANT_DIGITS


def test_missing_key_returns_default(tmp_path):
    settings = Config(str(tmp_path / "missing.json"))
    assert settings.get('scan.nothing', 17) == 17
    assert settings.get('scan.order.deeper', "x") == "x"


def test_set_and_persist(tmp_path):
    path = tmp_path / "charlab.json"
    settings = Config(str(path))
    assert settings.set('suites.seed', 7, persist=True)
    assert json.loads(path.read_text())["suites"]["seed"] == 7
    assert Config(str(path)).seed == 7


def test_partial_file_is_merged_with_defaults(tmp_path):
    path = tmp_path / "charlab.json"
    path.write_text(json.dumps({"scan": {"q_max": 500}}))
    settings = Config(str(path))
    assert settings.scan_range == (Scan.Q_MIN, 500)
    assert settings.get('scan.order') == Scan.ORDER


def test_malformed_file_falls_back(tmp_path):
    path = tmp_path / "charlab.json"
    path.write_text("{not json")
    assert Config(str(path)).get('scan.q_max') == Scan.Q_MAX


def test_zero_threads_is_kept_for_all_cpus(tmp_path):
    settings = Config(str(tmp_path / "missing.json"))
    settings.set('performance.threads', 0)
    assert settings.threads == 0
    assert resolve_threads(settings.threads) == (os.cpu_count() or 1)
    settings.set('performance.threads', -3)
    assert settings.threads == 0


def test_grid_and_pool_settings(tmp_path):
    settings = Config(str(tmp_path / "missing.json"))
    assert settings.oversampling == Grid.OVERSAMPLING
    assert settings.refine_tolerance == Tolerances.REFINE_RELATIVE
    assert settings.chunk_size == Performance.CHUNK_SIZE
    settings.set('grid.oversampling', 3)
    settings.set('performance.chunk_size', 0)
    assert settings.oversampling == 3
    assert settings.chunk_size == 1


def test_defaults_are_not_shared(tmp_path):
    first = Config(str(tmp_path / "a.json"))
    first.set('scan.order', 5)
    assert Config(str(tmp_path / "b.json")).get('scan.order') == Scan.ORDER
