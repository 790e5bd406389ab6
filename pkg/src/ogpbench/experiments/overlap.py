"""Overlap histograms of near-optimal independent sets.

Solutions come either from a randomized algorithm run repeatedly with fresh
seeds, or (``sampler="exhaustive"``, small n only) from a direct scan of all
2^n subsets.  A solution is kept when its size reaches the theta threshold,
measured against the exact optimum for small graphs and against
``2 log(d)/d * n`` otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..algorithms import degree_greedy_is, greedy_is, random_priority_is
from ..errors import CapExceededError, HostMismatchError
from ..generators import Graph
from ..oracle import BRUTE_CAP, exact_max_is, theta_threshold
from ..problems import IndependentSet
from ..rng import SeededRng
from .common import is_benchmark

SMALL_N = 20

SAMPLERS = {
    "greedy": greedy_is,
    "degree_greedy": degree_greedy_is,
    "random_priority": random_priority_is,
}


def pairwise_overlap(I1: IndependentSet, I2: IndependentSet, n: int) -> float:
    if I1.host != I2.host:
        raise HostMismatchError("independent sets belong to different graphs")
    inter = np.intersect1d(I1.members, I2.members, assume_unique=True)
    return len(inter) / n


@dataclass
class OverlapHistogram:
    edges: np.ndarray
    counts: np.ndarray
    samples: int
    support: tuple[Fraction, ...]
    provenance: dict = field(default_factory=dict)
    gap: tuple[float, float] | None = None
    insufficient_yield: bool = False

    @property
    def nu1(self) -> float | None:
        return None if self.gap is None else self.gap[0]

    @property
    def nu2(self) -> float | None:
        return None if self.gap is None else self.gap[1]


def widest_gap(counts: np.ndarray, edges: np.ndarray, min_bins: int = 2) -> tuple[float, float] | None:
    """Widest run of empty bins strictly between the first and last occupied
    bins, as (left edge, right edge); None if no run reaches ``min_bins``."""
    occupied = np.flatnonzero(counts)
    if len(occupied) < 2:
        return None
    best, best_len = None, 0
    for a, b in zip(occupied[:-1], occupied[1:]):
        run = b - a - 1
        if run >= min_bins and run > best_len:
            best, best_len = (float(edges[a + 1]), float(edges[b])), run
    return best


def build_histogram(inter_counts: np.ndarray, n: int, bins: int, provenance: dict,
                    insufficient: bool = False) -> OverlapHistogram:
    inter_counts = np.asarray(inter_counts, dtype=np.int64)
    values = inter_counts / n if n else np.zeros(0)
    counts, edges = np.histogram(values, bins=bins, range=(0.0, 1.0))
    support = tuple(sorted({Fraction(int(k), n) for k in np.unique(inter_counts)})) if n else ()
    return OverlapHistogram(edges, counts, int(len(values)), support, provenance,
                            widest_gap(counts, edges), insufficient)


def _pair_indices(s: int, pairs: int | None, include_diagonal: bool,
                  rng: SeededRng) -> tuple[np.ndarray, np.ndarray]:
    i, j = np.triu_indices(s, 0 if include_diagonal else 1)
    if pairs is not None and len(i) > pairs:
        pick = np.sort(rng.generator.choice(len(i), pairs, replace=False))
        i, j = i[pick], j[pick]
    return i, j


def _exhaustive_sets(g: Graph, theta) -> tuple[np.ndarray, int, int]:
    """All independent-set bitmasks of size >= threshold, by scanning 2^n."""
    if g.n > BRUTE_CAP:
        raise CapExceededError(f"exhaustive sampler needs n <= {BRUTE_CAP}, got {g.n}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    for u, v in g.edges.tolist():
        ok &= ((masks >> u) & (masks >> v) & 1) == 0
    masks = masks[ok]
    sizes = np.bitwise_count(masks)
    optimum = int(sizes.max())
    k = theta_threshold(theta, optimum)
    return masks[sizes >= k], optimum, k


def overlap_probe(g: Graph, theta, sampler: str, pairs: int | None, rng: SeededRng,
                  runs: int = 200, bins: int = 50, include_diagonal: bool = True,
                  d: float | None = None) -> OverlapHistogram:
    """Histogram of |I1 & I2| / n over pairs of theta-optimal solutions.

    ``pairs=None`` uses every pair of retained solutions.  ``d`` is the degree
    used for the benchmark-relative threshold when n > 20 (defaults to the
    mean degree of ``g``).
    """
    n = g.n
    prov = {"n": n, "m": g.m, "theta": float(theta), "sampler": sampler}
    if sampler == "exhaustive":
        masks, optimum, k = _exhaustive_sets(g, theta)
        prov.update(threshold_mode="oracle-relative", optimum=optimum, threshold=k,
                    retained=int(len(masks)), runs=int(len(masks)))
        i, j = _pair_indices(len(masks), pairs, include_diagonal, rng.child(1))
        inter = np.bitwise_count(masks[i] & masks[j])
        return build_histogram(inter, n, bins, prov, insufficient=len(masks) == 0)

    try:
        algo = SAMPLERS[sampler]
    except KeyError:
        raise ValueError(f"unknown sampler {sampler!r}; available: exhaustive, "
                         + ", ".join(SAMPLERS)) from None
    if n <= SMALL_N:
        optimum = exact_max_is(g).optimum
        k = theta_threshold(theta, optimum)
        prov.update(threshold_mode="oracle-relative", optimum=optimum)
    else:
        deg = float(d) if d is not None else 2.0 * g.m / n
        target = Fraction(str(float(theta))) * Fraction(is_benchmark(deg)) * n
        k = math.ceil(target)
        prov.update(threshold_mode="benchmark-relative", benchmark=is_benchmark(deg), degree=deg)
    prov["threshold"] = k

    kept = []
    for r in range(runs):
        I = algo(g, rng.child(0, r))
        if len(I) >= k:
            kept.append(I.indicator())
    prov.update(runs=runs, retained=len(kept), yield_fraction=len(kept) / runs if runs else 0.0)
    if len(kept) < (1 if include_diagonal else 2):
        return build_histogram(np.zeros(0), n, bins, prov, insufficient=True)
    A = np.array(kept, dtype=np.int64)
    i, j = _pair_indices(len(kept), pairs, include_diagonal, rng.child(1))
    inter = np.einsum("pk,pk->p", A[i], A[j])
    return build_histogram(inter, n, bins, prov)


def ogp_scan(g: Graph, thetas, sampler: str, pairs: int | None, rng: SeededRng,
             **kwargs) -> list[OverlapHistogram]:
    return [overlap_probe(g, th, sampler, pairs, rng.child(i), **kwargs)
            for i, th in enumerate(thetas)]
