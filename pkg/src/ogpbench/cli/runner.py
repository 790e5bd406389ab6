"""Dispatch a validated config to its experiment and persist the results.

Artifacts per run, in the output directory:

``<id>.csv``           per-trial metrics (header below, appended if present)
``<id>.summary.json``  config echo, summary statistics, version, duration
``<id>.config``        the config echo in key = value form, replayable
``<id>[-k].svg``       histogram or scaling plot, where applicable

``<id>`` is ``<kind>-<hash>`` with the hash taken over every result-relevant
config key, so reruns of the same config land on the same files.
"""
from __future__ import annotations

import csv
import hashlib
import json
import math
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .. import __version__
from ..algorithms import make_rule, shipped_rules
from ..experiments import (
    greedy_ratio_experiment,
    local_vs_greedy_experiment,
    locality_perturbation_test,
    maxcut_scaling_experiment,
    ogp_scan,
    overlap_probe,
)
from ..generators import gen_er, gen_regular
from ..rng import SeededRng
from . import svg
from .config import ExperimentConfig, format_config

CSV_SCHEMA = "ogpbench-csv-v1"
CSV_HEADER = ["schema", "experiment_id", "kind", "params", "master_seed", "trial",
              "metric", "value", "timestamp"]


@dataclass
class Outcome:
    rows: list[tuple[int, str, float]]
    summary: dict
    plots: list[str] = field(default_factory=list)


def experiment_id(cfg: ExperimentConfig) -> str:
    text = format_config(cfg, include_runtime=False)
    return f"{cfg.kind}-{hashlib.sha256(text.encode()).hexdigest()[:12]}"


def _instance(cfg: ExperimentConfig, rng: SeededRng):
    if cfg.graph == "regular":
        return gen_regular(cfg.n, int(cfg.d), rng)
    return gen_er(cfg.n, cfg.d, rng)


def _hist_summary(h) -> dict:
    return {
        "samples": h.samples,
        "counts": h.counts.tolist(),
        "edges": h.edges.tolist(),
        "support": [str(x) for x in h.support],
        "nu1": h.nu1,
        "nu2": h.nu2,
        "insufficient_yield": h.insufficient_yield,
        "provenance": h.provenance,
    }


def _hist_rows(h, tag: str = "") -> list[tuple[int, str, float]]:
    rows = []
    i = 0
    for left, c in zip(h.edges[:-1].tolist(), h.counts.tolist()):
        rows.append((i, f"bin_count{tag}@{left!r}", float(c)))
        i += 1
    for j, x in enumerate(h.support):
        rows.append((j, f"support{tag}", float(x)))
    return rows


def run_experiment(cfg: ExperimentConfig) -> Outcome:
    master = SeededRng(cfg.seed)
    inst_rng, exp_rng = master.child(0), master.child(1)
    kind = cfg.kind

    if kind == "greedy_ratio":
        est = greedy_ratio_experiment(int(cfg.d), cfg.n, cfg.trials, exp_rng, cfg.workers)
        rows = [(t, "density", v) for t, v in enumerate(est.per_trial)]
        summary = {k: v for k, v in asdict(est).items() if k != "per_trial"}
        return Outcome(rows, summary)

    if kind == "local_vs_greedy":
        rules = cfg.rules or tuple((r.name, ()) for r in shipped_rules())
        table = local_vs_greedy_experiment(int(cfg.d), cfg.n, cfg.R, rules, cfg.trials,
                                           exp_rng, cfg.workers)
        rows = [(t, f"density:{r.label}", v) for r in table.rows for t, v in enumerate(r.per_trial)]
        best = table.best_local()
        summary = {
            "d": table.d, "n": table.n, "R": table.R, "trials": table.trials,
            "rows": [{"algorithm": r.label, "mean": r.mean, "se": r.se} for r in table.rows],
            "best_local": best.label,
            "benchmark": 2 * math.log(cfg.d) / cfg.d,
        }
        return Outcome(rows, summary)

    if kind in ("overlap_probe", "ogp_scan"):
        g = _instance(cfg, inst_rng)
        thetas = [cfg.theta] if kind == "overlap_probe" else list(cfg.thetas)
        kw = dict(runs=cfg.runs, bins=cfg.bins, include_diagonal=cfg.include_diagonal,
                  d=cfg.d if cfg.d > 0 else None)
        if kind == "overlap_probe":
            hists = [overlap_probe(g, cfg.theta, cfg.sampler, cfg.pairs, exp_rng, **kw)]
        else:
            hists = ogp_scan(g, thetas, cfg.sampler, cfg.pairs, exp_rng, **kw)
        rows, plots = [], []
        for th, h in zip(thetas, hists):
            tag = "" if kind == "overlap_probe" else f"[theta={th!r}]"
            rows += _hist_rows(h, tag)
            plots.append(svg.histogram_svg(h, title=f"overlaps, n={cfg.n}, d={cfg.d}, theta={th}"))
        summary = {"histograms": [dict(theta=th, **_hist_summary(h)) for th, h in zip(thetas, hists)]}
        return Outcome(rows, summary, plots)

    if kind == "locality":
        g = _instance(cfg, inst_rng)
        rule = make_rule(cfg.rule, cfg.coeffs)
        rep = locality_perturbation_test(g, rule, cfg.R, cfg.node, cfg.trials, exp_rng)
        rows = [(t, "member", float(o)) for t, o in enumerate(rep.outcomes)]
        summary = {"passed": rep.passed, "radius": rep.radius, "changes": rep.changes,
                   "base_member": rep.base_member, "rule": cfg.rule, "R": cfg.R}
        return Outcome(rows, summary)

    if kind == "maxcut_scaling":
        fit = maxcut_scaling_experiment(cfg.K, cfg.d_list, cfg.n, cfg.trials, cfg.algorithm,
                                        exp_rng, cfg.max_rounds, cfg.workers)
        rows = [(t, f"cut@d={d!r}", c) for t, (d, _, c) in enumerate(fit.per_trial)]
        summary = {
            "K": fit.K, "algorithm": cfg.algorithm,
            "points": [list(p) for p in fit.points],
            "intercept": fit.intercept, "intercept_se": fit.intercept_se,
            "gamma_hat": fit.gamma, "gamma_hat_se": fit.gamma_se,
        }
        return Outcome(rows, summary, [svg.scaling_svg(fit)])

    raise ValueError(f"unknown experiment kind {kind!r}")


def _params_string(cfg: ExperimentConfig) -> str:
    return ";".join(ln.replace(" = ", "=") for ln in
                    format_config(cfg, include_runtime=False).splitlines()
                    if not ln.startswith(("seed ", "kind ")))


def write_artifacts(cfg: ExperimentConfig, outcome: Outcome, duration: float) -> dict[str, Path]:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    eid = experiment_id(cfg)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    csv_path = out / f"{eid}.csv"
    fresh = not csv_path.exists()
    params = _params_string(cfg)
    with open(csv_path, "a", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if fresh:
            w.writerow(CSV_HEADER)
        for trial, metric, value in outcome.rows:
            w.writerow([CSV_SCHEMA, eid, cfg.kind, params, cfg.seed, trial, metric,
                        repr(float(value)), stamp])
    config_path = out / f"{eid}.config"
    config_path.write_text(format_config(cfg))
    summary_path = out / f"{eid}.summary.json"
    record = {
        "schema": CSV_SCHEMA,
        "experiment_id": eid,
        "kind": cfg.kind,
        "config": format_config(cfg),
        "summary": outcome.summary,
        "version": __version__,
        "duration_s": duration,
        "timestamp": stamp,
    }
    summary_path.write_text(json.dumps(record, indent=2, sort_keys=True, default=str) + "\n")
    paths = {"csv": csv_path, "summary": summary_path, "config": config_path}
    for i, doc in enumerate(outcome.plots):
        p = out / (f"{eid}.svg" if len(outcome.plots) == 1 else f"{eid}-{i}.svg")
        p.write_text(doc)
        paths[f"svg{i}"] = p
    return paths


def run(cfg: ExperimentConfig) -> dict[str, Path]:
    t0 = time.perf_counter()
    outcome = run_experiment(cfg)
    return write_artifacts(cfg, outcome, time.perf_counter() - t0)
