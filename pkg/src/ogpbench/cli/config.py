"""key = value experiment configs.

Blank lines and ``#`` comments are ignored.  Unknown keys are errors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from ..algorithms.local import RULES, make_rule
from ..errors import ValidationError
from ..experiments.overlap import SAMPLERS
from ..experiments.scaling import ALGORITHMS, DEFAULT_DEGREES

KINDS = ("greedy_ratio", "local_vs_greedy", "overlap_probe", "ogp_scan", "locality",
         "maxcut_scaling")

DEFAULT_THETAS = (0.5, 0.6, 0.7, 0.8, 0.85, 0.9, 0.95, 1.0)


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    graph: str = "regular"
    n: int = 0
    d: float = 0
    K: int = 2
    R: int = 1
    rule: str = "label_broadcast"
    coeffs: tuple[float, ...] = ()
    rules: tuple[tuple[str, tuple[float, ...]], ...] = ()
    sampler: str = "greedy"
    algorithm: str = "random"
    theta: float = 1.0
    thetas: tuple[float, ...] = DEFAULT_THETAS
    d_list: tuple[float, ...] = DEFAULT_DEGREES
    trials: int = 1
    runs: int = 200
    pairs: int | None = None
    bins: int = 50
    include_diagonal: bool = True
    node: int = 0
    max_rounds: int = 1000
    seed: int = 0
    workers: int = 1
    out: str = "results"


# keys that never influence results
NON_RESULT_KEYS = ("workers", "out")


def _parse_bool(s: str) -> bool:
    low = s.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValidationError(f"not a boolean: {s!r}")


def _floats(s: str) -> tuple[float, ...]:
    s = s.strip()
    return tuple(float(x) for x in s.replace(",", " ").split()) if s else ()


def _rules(s: str) -> tuple[tuple[str, tuple[float, ...]], ...]:
    out = []
    for item in s.split(";"):
        item = item.strip()
        if not item:
            continue
        name, _, coeffs = item.partition(":")
        out.append((name.strip(), _floats(coeffs)))
    return tuple(out)


def _num(s: str) -> int | float:
    v = float(s)
    return int(v) if v.is_integer() else v


def _nums(s: str) -> tuple[int | float, ...]:
    s = s.strip()
    return tuple(_num(x) for x in s.replace(",", " ").split()) if s else ()


def _int(s: str) -> int:
    v = float(s)
    if v != int(v):
        raise ValueError(f"not an integer: {s!r}")
    return int(v)


_PARSERS = {
    "kind": str.strip, "graph": str.strip, "rule": str.strip, "sampler": str.strip,
    "algorithm": str.strip, "out": str.strip,
    "n": _int, "K": _int, "R": _int, "trials": _int, "runs": _int, "bins": _int,
    "node": _int, "max_rounds": _int, "seed": _int, "workers": _int,
    "d": _num, "theta": float,
    "pairs": lambda s: None if s.strip().lower() in ("", "all", "none") else _int(s),
    "coeffs": _floats, "thetas": _floats, "d_list": _nums,
    "rules": _rules, "include_diagonal": _parse_bool,
}


def parse_config(text: str, **overrides) -> ExperimentConfig:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, val = (x.strip() for x in line.partition("="))
        if key not in _PARSERS:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _PARSERS[key](val)
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: bad value for {key}: {exc}") from None
    if "kind" not in values:
        raise ValidationError("config must set kind")
    values.update({k: v for k, v in overrides.items() if v is not None})
    cfg = ExperimentConfig(**values)
    validate(cfg)
    return cfg


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "all"
    if isinstance(v, tuple):
        if v and isinstance(v[0], tuple):
            return "; ".join(name + (":" + ",".join(map(repr, c)) if c else "") for name, c in v)
        return ", ".join(repr(x) for x in v)
    return str(v) if not isinstance(v, float) else repr(v)


def format_config(cfg: ExperimentConfig, include_runtime: bool = True) -> str:
    """Canonical key = value echo; parsing it reproduces ``cfg`` exactly."""
    lines = []
    for f in fields(cfg):
        if not include_runtime and f.name in NON_RESULT_KEYS:
            continue
        lines.append(f"{f.name} = {_fmt(getattr(cfg, f.name))}")
    return "\n".join(lines) + "\n"


def _need(cond: bool, msg: str):
    if not cond:
        raise ValidationError(msg)


def _check_graph(cfg: ExperimentConfig):
    _need(cfg.graph in ("regular", "er"), f"graph must be 'regular' or 'er', got {cfg.graph!r}")
    _need(cfg.n >= 1, "n must be >= 1")
    if cfg.graph == "regular":
        _need(cfg.d == int(cfg.d) and cfg.d >= 0, "regular graphs need an integer degree d >= 0")
        _need(cfg.d < cfg.n, f"regular graph needs d < n (got d={cfg.d}, n={cfg.n})")
        _need((cfg.n * int(cfg.d)) % 2 == 0,
              f"parity rule violated: n*d must be even for a d-regular graph (n={cfg.n}, d={cfg.d})")
    else:
        _need(0 <= cfg.d <= cfg.n, f"Erdos-Renyi graphs need 0 <= d <= n (got d={cfg.d})")


def _check_theta(th: float):
    _need(0 < th <= 1, f"theta must lie in (0, 1], got {th}")


def validate(cfg: ExperimentConfig) -> None:
    """Check every precondition that can be checked before any work starts."""
    _need(cfg.kind in KINDS, f"unknown experiment kind {cfg.kind!r}; known: {', '.join(KINDS)}")
    _need(0 <= cfg.seed < 1 << 64, "seed must be an unsigned 64-bit integer")
    _need(cfg.workers >= 1, "workers must be >= 1")
    _need(cfg.trials >= 1, "trials must be >= 1")
    if cfg.kind in ("greedy_ratio", "local_vs_greedy"):
        _need(cfg.graph == "regular", f"{cfg.kind} runs on random regular graphs")
        _check_graph(cfg)
        _need(cfg.d >= 1, "degree must be >= 1")
    if cfg.kind == "local_vs_greedy":
        _need(cfg.R >= 0, "R must be >= 0")
        for name, coeffs in cfg.rules:
            try:
                make_rule(name, coeffs)
            except ValueError as exc:
                raise ValidationError(str(exc)) from None
    if cfg.kind in ("overlap_probe", "ogp_scan"):
        _check_graph(cfg)
        _need(cfg.sampler in ("exhaustive",) + tuple(SAMPLERS),
              f"unknown sampler {cfg.sampler!r}")
        _need(cfg.bins >= 1, "bins must be >= 1")
        _need(cfg.runs >= 1, "runs must be >= 1")
        _need(cfg.pairs is None or cfg.pairs >= 1, "pairs must be >= 1 or 'all'")
        if cfg.sampler == "exhaustive":
            _need(cfg.n <= 20, "exhaustive sampler needs n <= 20")
        if cfg.kind == "overlap_probe":
            _check_theta(cfg.theta)
        else:
            _need(len(cfg.thetas) >= 1, "thetas must be non-empty")
            for th in cfg.thetas:
                _check_theta(th)
    if cfg.kind == "locality":
        _check_graph(cfg)
        _need(cfg.R >= 0, "R must be >= 0")
        _need(0 <= cfg.node < cfg.n, "node must be a valid node id")
        _need(cfg.rule in RULES, f"unknown rule {cfg.rule!r}")
        try:
            make_rule(cfg.rule, cfg.coeffs)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    if cfg.kind == "maxcut_scaling":
        _need(cfg.K >= 2, "K must be >= 2")
        _need(cfg.K <= cfg.n, f"arity K={cfg.K} exceeds n={cfg.n}")
        _need(cfg.algorithm in ALGORITHMS, f"unknown algorithm {cfg.algorithm!r}")
        _need(len(set(cfg.d_list)) >= 2, "d_list needs at least two distinct degrees")
        cap = math.comb(cfg.n - 1, cfg.K - 1)
        for d in cfg.d_list:
            _need(0 <= d <= cap, f"degree {d} outside [0, C(n-1, K-1)]")
        _need(cfg.max_rounds >= 0, "max_rounds must be >= 0")


def with_overrides(cfg: ExperimentConfig, **kw) -> ExperimentConfig:
    cfg = replace(cfg, **{k: v for k, v in kw.items() if v is not None})
    validate(cfg)
    return cfg
