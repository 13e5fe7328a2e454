import math
import os

from config import config
from utils.parallel import ordered_map, resolve_threads


def test_resolve_threads():
    assert resolve_threads(3) == 3
    assert resolve_threads(None) == resolve_threads(config.threads)
    assert resolve_threads(0) == (os.cpu_count() or 1)


def test_ordered_map_inline():
    assert ordered_map(math.isqrt, range(20), threads=1) == [math.isqrt(n) for n in range(20)]
    assert ordered_map(math.isqrt, [], threads=4) == []


def test_ordered_map_keeps_order_across_workers():
    items = list(range(200, 0, -1))
    assert ordered_map(math.isqrt, items, threads=2, chunk_size=3) == [math.isqrt(n) for n in items]


def test_chunk_size_comes_from_config(monkeypatch):
    seen = {}

    class RecordingExecutor:
        def __init__(self, max_workers):
            seen["workers"] = max_workers

        def __enter__(self):
            return self

        def __exit__(self, *exc):
            return False

        def map(self, fn, items, chunksize):
            seen["chunksize"] = chunksize
            return map(fn, items)

    monkeypatch.setattr("utils.parallel.ProcessPoolExecutor", RecordingExecutor)
    monkeypatch.setitem(config.config["performance"], "chunk_size", 5)
    assert ordered_map(math.isqrt, range(10), threads=2) == [math.isqrt(n) for n in range(10)]
    assert seen == {"workers": 2, "chunksize": 5}
