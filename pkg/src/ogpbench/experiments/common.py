from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np


def map_trials(fn: Callable, items: Sequence, workers: int = 1) -> list:
    """Ordered map over independent trials, optionally in a process pool.

    Results are returned in input order, so the output never depends on the
    worker count.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def mean_se(values: Iterable[float]) -> tuple[float, float]:
    """Sample mean and its standard error (ddof=1); se is 0 for one value."""
    v = np.asarray(list(values), dtype=np.float64)
    if v.size == 0:
        return math.nan, math.nan
    if v.size == 1:
        return float(v[0]), 0.0
    return float(v.mean()), float(v.std(ddof=1) / math.sqrt(v.size))


def is_benchmark(d: float) -> float:
    """Large-d maximum independent set density 2 log(d) / d."""
    return 2.0 * math.log(d) / d
