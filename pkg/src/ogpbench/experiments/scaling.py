"""MAXCUT on random K-uniform hypergraphs: cut density against degree.

The fit is  cut/n - d/(2K) = a + gamma * sqrt(d)  by unweighted least squares
over per-trial points.  ``gamma`` here is an algorithmic estimate for the
chosen algorithm, nothing more.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..algorithms import local_flip_cut, random_assignment
from ..errors import FitError
from ..generators import gen_hypergraph
from ..problems import hyper_maxcut_cost
from ..rng import SeededRng
from .common import map_trials, mean_se

ALGORITHMS = ("random", "local_flip")
DEFAULT_DEGREES = (8, 16, 32, 64)


@dataclass
class ScalingFitResult:
    K: int
    points: list[tuple[float, int, float, float]]  # (d, n, mean cut, se)
    intercept: float
    gamma: float
    intercept_se: float
    gamma_se: float
    residuals: np.ndarray = field(repr=False)
    per_trial: list[tuple[float, int, float]] = field(default_factory=list, repr=False)


def fit_scaling(K: int, samples) -> ScalingFitResult:
    """Least-squares fit from ``(d, n, cut)`` samples."""
    samples = [(float(d), int(n), float(c)) for d, n, c in samples]
    ds = np.array([s[0] for s in samples])
    if len(np.unique(ds)) < 2:
        raise FitError("scaling fit needs at least two distinct degrees")
    ns = np.array([s[1] for s in samples], dtype=np.float64)
    cuts = np.array([s[2] for s in samples])
    x = np.sqrt(ds)
    y = cuts / ns - ds / (2 * K)
    xm, ym = x.mean(), y.mean()
    sxx = float(((x - xm) ** 2).sum())
    gamma = float(((x - xm) * (y - ym)).sum() / sxx)
    a = float(ym - gamma * xm)
    resid = y - (a + gamma * x)
    dof = len(y) - 2
    if dof > 0:
        s2 = float((resid ** 2).sum() / dof)
        gamma_se = math.sqrt(s2 / sxx)
        a_se = math.sqrt(s2 * (1 / len(y) + xm ** 2 / sxx))
    else:
        gamma_se = a_se = 0.0
    points = []
    for d in np.unique(ds):
        sel = ds == d
        mean, se = mean_se(cuts[sel])
        points.append((float(d), int(ns[sel][0]), mean, se))
    return ScalingFitResult(K, points, a, gamma, a_se, gamma_se, resid, samples)


def _cut_trial(args) -> tuple[int, int, int]:
    K, d, n, algorithm, max_rounds, trng = args
    h = gen_hypergraph(n, d, K, trng.child(0))
    sigma = random_assignment(n, trng.child(1))
    if algorithm == "local_flip":
        sigma = local_flip_cut(h, sigma, max_rounds, trng.child(2))
    return hyper_maxcut_cost(h, sigma), h.m, n


def cut_trials(K: int, d: float, n: int, trials: int, algorithm: str, rng: SeededRng,
               max_rounds: int = 1000, workers: int = 1) -> list[tuple[int, int, int]]:
    """Per-trial ``(cut, hyperedge count, n)`` on fresh G(n, d; K) samples."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown cut algorithm {algorithm!r}; available: {', '.join(ALGORITHMS)}")
    args = [(K, d, n, algorithm, max_rounds, rng.child(t)) for t in range(trials)]
    return map_trials(_cut_trial, args, workers)


def maxcut_scaling_experiment(K: int, d_list, n: int, trials: int, algorithm: str,
                              rng: SeededRng, max_rounds: int = 1000,
                              workers: int = 1) -> ScalingFitResult:
    d_list = list(d_list)
    if len(set(d_list)) < 2:
        raise FitError("scaling fit needs at least two distinct degrees")
    samples = []
    for i, d in enumerate(d_list):
        for cut, _, nn in cut_trials(K, d, n, trials, algorithm, rng.child(i), max_rounds, workers):
            samples.append((d, nn, cut))
    return fit_scaling(K, samples)
