"""ogpbench command line: gen, run, report, ogp-scan, rules."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..algorithms.local import RULES
from ..errors import OgpBenchError
from ..generators import gen_er, gen_hypergraph, gen_pspin, gen_regular
from ..io import format_graph, format_hypergraph, format_tensor
from ..rng import SeededRng
from . import report as report_mod
from .config import parse_config
from .runner import run

EXIT_OK, EXIT_VALIDATION, EXIT_RUNTIME = 0, 2, 3


def _u64(s: str) -> int:
    v = int(s)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ogpbench")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a random instance in the text format")
    g.add_argument("ensemble", choices=["regular", "er", "hypergraph", "pspin"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=float, default=None)
    g.add_argument("--K", type=int, default=None)
    g.add_argument("--p", type=int, default=None)
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("--out", type=Path, default=None, help="file path (default: stdout)")

    for name, helptext in (("run", "run an experiment config"),
                           ("ogp-scan", "theta-grid sweep of the overlap probe")):
        r = sub.add_parser(name, help=helptext)
        r.add_argument("--config", type=Path, required=True)
        r.add_argument("--seed", type=_u64, default=None)
        r.add_argument("--workers", type=int, default=None)
        r.add_argument("--out", type=str, default=None)
        if name == "ogp-scan":
            r.add_argument("--thetas", type=str, default=None,
                           help="comma-separated theta grid (overrides the config)")

    rp = sub.add_parser("report", help="summarize a results directory")
    rp.add_argument("directory", type=Path)

    sub.add_parser("rules", help="list the local rule library")
    return ap


def _gen(args) -> str:
    rng = SeededRng(args.seed)
    if args.ensemble == "regular":
        if args.d is None or not float(args.d).is_integer():
            raise OgpBenchError("regular graphs need an integer --d")
        return format_graph(gen_regular(args.n, int(args.d), rng))
    if args.ensemble == "er":
        if args.d is None:
            raise OgpBenchError("--d is required")
        return format_graph(gen_er(args.n, args.d, rng))
    if args.ensemble == "hypergraph":
        if args.d is None or args.K is None:
            raise OgpBenchError("--d and --K are required")
        return format_hypergraph(gen_hypergraph(args.n, args.d, args.K, rng))
    if args.p is None:
        raise OgpBenchError("--p is required")
    return format_tensor(gen_pspin(args.n, args.p, rng))


def _load(args, **extra):
    try:
        text = args.config.read_text()
    except OSError as exc:
        raise OgpBenchError(f"cannot read config: {exc}") from None
    return parse_config(text, seed=args.seed, workers=args.workers, out=args.out, **extra)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "rules":
            for name, spec in RULES.items():
                print(f"{name:<16} coefficients: {spec.arity:<11} {spec.doc}")
            return EXIT_OK
        if args.command == "report":
            lines, bad = report_mod.summarize(args.directory)
            if not lines and not bad:
                print(f"no records in {args.directory}")
            for ln in lines:
                print(ln)
            for name, err in bad:
                print(f"malformed record {name}: {err}")
            return EXIT_OK
        if args.command == "gen":
            text = _gen(args)
            if args.out is None:
                sys.stdout.write(text)
            else:
                args.out.write_text(text)
            return EXIT_OK
        if args.command == "ogp-scan":
            extra = {"kind": "ogp_scan"}
            if args.thetas:
                extra["thetas"] = tuple(float(x) for x in args.thetas.split(","))
            cfg = _load(args, **extra)
        else:
            cfg = _load(args)
        try:
            out = Path(cfg.out)
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OgpBenchError(f"unwritable output path {cfg.out}: {exc}") from None
    except OgpBenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        paths = run(cfg)
    except OgpBenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001 - any runtime failure maps to exit 3
        print(f"runtime error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    for key, p in paths.items():
        print(f"{key}: {p}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
