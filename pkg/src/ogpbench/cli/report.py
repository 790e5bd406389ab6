"""Human-readable summaries of a results directory."""
from __future__ import annotations

import json
from pathlib import Path


def _fmt(x, spec=".5f"):
    return "-" if x is None else format(x, spec)


def _greedy(s):
    return [f"  d={s['d']} n={s['n']} trials={s['trials']}: density {_fmt(s['mean'])} "
            f"+/- {_fmt(s['se'])}, 2log(d)/d = {_fmt(s['benchmark'])}, "
            f"ratio {_fmt(s['ratio'], '.4f')} +/- {_fmt(s['ratio_se'], '.4f')}"]


def _comparison(s):
    out = [f"  d={s['d']} n={s['n']} R<={s['R']} trials={s['trials']} "
           f"(2log(d)/d = {_fmt(s['benchmark'])})"]
    for r in s["rows"]:
        out.append(f"    {r['algorithm']:<28} {_fmt(r['mean'])} +/- {_fmt(r['se'])}")
    out.append(f"    best local rule: {s['best_local']}")
    return out


def _hists(s):
    out = []
    for h in s["histograms"]:
        p = h["provenance"]
        gap = ("none" if h["nu1"] is None
               else f"({_fmt(h['nu1'], '.3f')}, {_fmt(h['nu2'], '.3f')})")
        flag = "  [insufficient yield]" if h["insufficient_yield"] else ""
        out.append(f"  theta={h['theta']}: {h['samples']} pairs, {p.get('retained')} solutions "
                   f"({p.get('threshold_mode')}), gap candidate nu1,nu2 = {gap}{flag}")
    return out


def _locality(s):
    verdict = "PASS" if s["passed"] else "FAIL"
    return [f"  rule={s['rule']} R={s['R']} radius={s['radius']}: {verdict} "
            f"({s['changes']} membership changes)"]


def _scaling(s):
    out = [f"  K={s['K']} algorithm={s['algorithm']}: cut/n - d/(2K) = "
           f"{_fmt(s['intercept'])} + {_fmt(s['gamma_hat'])} sqrt(d)  "
           f"(se {_fmt(s['intercept_se'])}, {_fmt(s['gamma_hat_se'])})"]
    for d, n, mean, se in s["points"]:
        out.append(f"    d={d:g} n={n}: mean cut {mean:.2f} +/- {se:.2f}")
    return out


FORMATTERS = {
    "greedy_ratio": _greedy,
    "local_vs_greedy": _comparison,
    "overlap_probe": _hists,
    "ogp_scan": _hists,
    "locality": _locality,
    "maxcut_scaling": _scaling,
}


def summarize(directory) -> tuple[list[str], list[tuple[str, str]]]:
    """Return (report lines, [(file, error)]) for every summary record."""
    lines, bad = [], []
    files = sorted(Path(directory).glob("*.summary.json"))
    for path in files:
        try:
            rec = json.loads(path.read_text())
            body = FORMATTERS[rec["kind"]](rec["summary"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            bad.append((path.name, f"{type(exc).__name__}: {exc}"))
            continue
        lines.append(f"{rec['experiment_id']} [{rec['kind']}]")
        lines.extend(body)
    return lines, bad
