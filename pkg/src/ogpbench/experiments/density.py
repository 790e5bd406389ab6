"""Independent-set density experiments on random regular graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algorithms import degree_greedy_is, greedy_is, make_rule, run_pipeline
from ..errors import RangeError
from ..generators import gen_regular
from ..rng import SeededRng
from .common import is_benchmark, map_trials, mean_se


@dataclass
class DensityEstimate:
    d: int
    n: int
    trials: int
    mean: float
    se: float
    benchmark: float
    ratio: float
    ratio_se: float
    per_trial: list[float] = field(default_factory=list)


def _greedy_trial(args) -> float:
    n, d, trng = args
    g = gen_regular(n, d, trng.child(0))
    return len(greedy_is(g, trng.child(1))) / n


def greedy_ratio_experiment(d: int, n: int, trials: int, rng: SeededRng,
                            workers: int = 1) -> DensityEstimate:
    """Mean greedy density on G_d(n) and its ratio to 2 log(d)/d."""
    if d < 1:
        raise RangeError(f"degree must be >= 1, got {d}")
    per = map_trials(_greedy_trial, [(n, d, rng.child(t)) for t in range(trials)], workers)
    mean, se = mean_se(per)
    bench = is_benchmark(d)
    return DensityEstimate(d, n, trials, mean, se, bench, mean / bench, se / bench, per)


@dataclass
class ComparisonRow:
    algorithm: str
    depth: int | None
    mean: float
    se: float
    per_trial: list[float]

    @property
    def label(self) -> str:
        return self.algorithm if self.depth is None else f"{self.algorithm}@R={self.depth}"


@dataclass
class ComparisonTable:
    d: int
    n: int
    R: int
    trials: int
    rows: list[ComparisonRow]

    def row(self, label: str) -> ComparisonRow:
        return next(r for r in self.rows if r.label == label)

    def local_rows(self) -> list[ComparisonRow]:
        return [r for r in self.rows if r.depth is not None]

    def best_local(self) -> ComparisonRow:
        return max(self.local_rows(), key=lambda r: r.mean)


def _comparison_trial(args) -> dict[str, float]:
    n, d, R, rules, trng = args
    g = gen_regular(n, d, trng.child(0))
    out = {
        "greedy": len(greedy_is(g, trng.child(1))) / n,
        "degree_greedy": len(degree_greedy_is(g, trng.child(2))) / n,
    }
    for i, (name, coeffs) in enumerate(rules):
        rule = make_rule(name, coeffs)
        for r in range(R + 1):
            I = run_pipeline(g, rule, r, trng.child(3, i, r))
            out[f"{name}@R={r}"] = len(I) / n
    return out


def local_vs_greedy_experiment(d: int, n: int, R: int, rules, trials: int, rng: SeededRng,
                               workers: int = 1) -> ComparisonTable:
    """Densities of every rule at every depth <= R next to both greedy
    baselines, all on the same graphs.

    ``rules`` is a list of ``(name, coefficients)``.
    """
    rules = [(name, tuple(coeffs)) for name, coeffs in rules]
    per = map_trials(_comparison_trial,
                     [(n, d, R, rules, rng.child(t)) for t in range(trials)], workers)
    rows = []
    for key in per[0]:
        vals = [p[key] for p in per]
        mean, se = mean_se(vals)
        if "@R=" in key:
            name, r = key.split("@R=")
            rows.append(ComparisonRow(name, int(r), mean, se, vals))
        else:
            rows.append(ComparisonRow(key, None, mean, se, vals))
    return ComparisonTable(d, n, R, trials, rows)
