"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed even when output capture is on.
"""
import csv
import math

import numpy as np
import pytest

from helpers import GlobalAggregateRule
from ogpbench.algorithms import (
    degree_greedy_is,
    gnn_forward,
    greedy_is,
    make_rule,
    project_to_is,
    random_priority_is,
    shipped_rules,
)
from ogpbench.cli.main import main
from ogpbench.experiments import (
    cut_trials,
    fit_scaling,
    local_vs_greedy_experiment,
    locality_perturbation_test,
    maxcut_scaling_experiment,
    mean_se,
    overlap_probe,
)
from ogpbench.generators import gen_er, gen_regular
from ogpbench.oracle import brute_force_max_is, exact_max_is, overlap_spectrum_exact
from ogpbench.problems import is_feasible
from ogpbench.rng import SeededRng

pytestmark = pytest.mark.slow


@pytest.fixture
def verdict(capsys):
    def emit(num: int, title: str, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} | {detail}")
        assert ok, detail
    return emit


def test_c1_oracle_equivalence(verdict):
    base = SeededRng(1001)
    mismatches, bad_algo = 0, 0
    for i in range(200):
        rng = base.child(i)
        n = int(rng.integers(2, 17))
        if i % 2 == 0:
            d = int(rng.integers(1, min(n - 1, 8) + 1))
            if n * d % 2:
                d -= 1
            g = gen_regular(n, d, rng.child(0))
        else:
            g = gen_er(n, float(rng.random() * min(n, 8)), rng.child(0))
        opt = exact_max_is(g).optimum
        mismatches += opt != brute_force_max_is(g)
        for algo in (greedy_is, degree_greedy_is, random_priority_is):
            I = algo(g, rng.child(1))
            bad_algo += not is_feasible(g, I.indicator()) or len(I) > opt
    verdict(1, "branch-and-bound equals 2^n enumeration", mismatches == 0 and bad_algo == 0,
            f"200 instances, {mismatches} mismatches, {bad_algo} infeasible/over-optimal outputs")


def test_c2_feasibility_and_maximality(verdict):
    base = SeededRng(1002)
    rules = shipped_rules()
    runs = infeasible = nonmaximal = 0
    for i in range(2500):
        rng = base.child(i)
        d = 3 + i % 18
        n = int(rng.integers(d + 1, 201))
        if n * d % 2:
            n += 1
        g = gen_regular(n, d, rng.child(0))
        for j, algo in enumerate((greedy_is, degree_greedy_is)):
            I = algo(g, rng.child(1, j))
            infeasible += not is_feasible(g, I.indicator())
            nonmaximal += not I.is_maximal()
        I = random_priority_is(g, rng.child(2))
        infeasible += not is_feasible(g, I.indicator())
        rule = rules[i % len(rules)]
        I = project_to_is(g, gnn_forward(g, rule, i % 4, rng.child(3)), rule)
        infeasible += not is_feasible(g, I.indicator())
        runs += 4
    verdict(2, "feasibility and greedy maximality", infeasible == 0 and nonmaximal == 0,
            f"{runs} runs over d=3..20, {infeasible} infeasible, {nonmaximal} non-maximal greedy sets")


def test_c3_random_priority_density(verdict):
    base = SeededRng(1003)
    n, d = 100_000, 9
    dens = [len(random_priority_is(gen_regular(n, d, base.child(t, 0)), base.child(t, 1))) / n
            for t in range(20)]
    mean, se = mean_se(dens)
    z = (mean - 0.1) / se
    verdict(3, "random-priority density is 1/(d+1)", abs(z) <= 5,
            f"d=9 n=1e5 20 trials: mean {mean:.6f} se {se:.6f}, z = {z:+.2f} (need |z| <= 5)")


@pytest.fixture(scope="module")
def greedy_runs(tmp_path_factory):
    """The d=100, n=1e5, seed=7 greedy run, then its replay from the config echo."""
    root = tmp_path_factory.mktemp("greedy")
    cfg = root / "greedy.cfg"
    cfg.write_text("kind = greedy_ratio\nd = 100\nn = 100000\ntrials = 20\nseed = 7\n")
    first, replay = root / "first", root / "replay"
    code1 = main(["run", "--config", str(cfg), "--out", str(first), "--workers", "1"])
    echo = next(first.glob("*.config"))
    code2 = main(["run", "--config", str(echo), "--out", str(replay), "--workers", "4"])
    return code1, code2, first, replay


def _rows(path):
    rows = list(csv.reader(path.open()))
    return [r[:-1] for r in rows[1:]]


def test_c4_greedy_ratio(verdict, greedy_runs):
    code, _, first, _ = greedy_runs
    dens = [float(r[7]) for r in _rows(next(first.glob("*.csv")))]
    mean, se = mean_se(dens)
    bench = 2 * math.log(100) / 100
    ratio = mean / bench
    verdict(4, "greedy ratio in [0.4, 0.65]", code == 0 and len(dens) == 20 and 0.4 <= ratio <= 0.65,
            f"d=100 n=1e5 20 trials: density {mean:.5f} +/- {se:.5f}, ratio {ratio:.4f} +/- {se / bench:.4f}")


def test_c5_locality(verdict):
    base = SeededRng(1005)
    g = gen_regular(600, 3, base.child(0))
    failures = []
    for i, name in enumerate(r.name for r in shipped_rules()):
        for R in range(4):
            rep = locality_perturbation_test(g, make_rule(name), R, 0, 50, base.child(1, i, R))
            if not rep.passed:
                failures.append(f"{name}@R={R}")
    # negative control: non-local readout must be caught at some probed node
    control = [locality_perturbation_test(g, GlobalAggregateRule(), 1, u, 50, base.child(2, u))
               for u in range(10)]
    caught = any(not r.passed for r in control)
    verdict(5, "locality perturbation test", not failures and caught,
            f"{len(shipped_rules())} rules x R in 0..3 x 50 trials: failures {failures or 'none'}; "
            f"global-aggregate control {'FAILS as required' if caught else 'was not caught'}")


def test_c6_local_below_degree_greedy(verdict):
    rules = [(r.name, ()) for r in shipped_rules()]
    table = local_vs_greedy_experiment(20, 100_000, 3, rules, 10, SeededRng(1006))
    best = table.best_local()
    dg = table.row("degree_greedy")
    z = (best.mean - dg.mean) / math.hypot(best.se, dg.se)
    verdict(6, "best local rule <= degree-greedy", z <= 3,
            f"d=20 n=1e5 10 trials: best {best.label} {best.mean:.5f} +/- {best.se:.5f}, "
            f"degree_greedy {dg.mean:.5f} +/- {dg.se:.5f}, z = {z:+.2f} (fail only if z > 3)")


def test_c7_overlap_probe_exactness(verdict):
    base = SeededRng(1007)
    bad = []
    for i in range(50):
        rng = base.child(i)
        n = int(rng.integers(4, 17))
        g = gen_er(n, float(1 + 3 * rng.random()), rng.child(0))
        for theta in (0.8, 0.9, 1.0):
            exact = set(overlap_spectrum_exact(g, theta))
            probe = set(overlap_probe(g, theta, "exhaustive", None, rng.child(1), bins=n).support)
            if exact != probe:
                bad.append((i, theta))
    verdict(7, "probe support equals exact spectrum support", not bad,
            f"50 graphs n<=16 x theta in (0.8, 0.9, 1.0): {len(bad)} mismatches")


def test_c8_maxcut_leading_order(verdict):
    base = SeededRng(1008)
    parts, ok = [], True
    for K in (2, 4):
        res = cut_trials(K, 16, 10_000, 40, "random", base.child(K))
        diff = np.array([c - m / 2 for c, m, _ in res], dtype=float)
        mean, se = mean_se(diff)
        z = mean / se
        ok &= abs(z) <= 4
        parts.append(f"K={K} cut-m/2 {mean:+.2f} +/- {se:.2f} (z={z:+.2f})")
    a, gamma = -0.123456789, 0.987654321
    synth = [(d, 1000, 1000 * (d / 4 + a + gamma * math.sqrt(d))) for d in (8, 16, 32, 64)]
    fit = fit_scaling(2, synth)
    rel = max(abs(fit.intercept - a) / abs(a), abs(fit.gamma - gamma) / abs(gamma))
    ok &= rel <= 1e-12
    parts.append(f"synthetic fit rel. error {rel:.1e}")
    flip = maxcut_scaling_experiment(2, (8, 16, 32, 64), 2000, 5, "local_flip", base.child(9))
    ok &= flip.gamma > 3 * flip.gamma_se
    parts.append(f"local_flip K=2 gamma_hat {flip.gamma:.4f} +/- {flip.gamma_se:.4f}")
    verdict(8, "MAXCUT leading order and scaling fit", ok, "; ".join(parts))


def test_c9_determinism_and_replay(verdict, greedy_runs, tmp_path):
    code1, code2, first, replay = greedy_runs
    a, b = next(first.glob("*.csv")), next(replay.glob("*.csv"))
    same_greedy = code1 == code2 == 0 and a.name == b.name and _rows(a) == _rows(b)
    # a second kind with per-trial parallelism: local search on hypergraphs
    cfg = tmp_path / "cut.cfg"
    cfg.write_text("kind = maxcut_scaling\nK = 3\nn = 1000\nd_list = 4, 8, 16\ntrials = 4\n"
                   "algorithm = local_flip\nseed = 99\n")
    main(["run", "--config", str(cfg), "--out", str(tmp_path / "x"), "--workers", "1"])
    echo = next((tmp_path / "x").glob("*.config"))
    main(["run", "--config", str(echo), "--out", str(tmp_path / "y"), "--workers", "3"])
    same_cut = _rows(next((tmp_path / "x").glob("*.csv"))) == _rows(next((tmp_path / "y").glob("*.csv")))
    verdict(9, "replay from config echo is byte-exact across worker counts", same_greedy and same_cut,
            f"greedy_ratio workers 1 vs 4: {'identical' if same_greedy else 'DIFFERENT'}; "
            f"maxcut_scaling workers 1 vs 3: {'identical' if same_cut else 'DIFFERENT'}")
