"""Fit cut/n - d/(2K) = a + gamma * sqrt(d) for random and local-search cuts.

    python3 scripts/maxcut_scaling.py --K 2 3 4 --n 4000 --trials 5
"""
import argparse

from ogpbench.experiments.scaling import DEFAULT_DEGREES, maxcut_scaling_experiment
from ogpbench.rng import SeededRng


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--K", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--degrees", type=float, nargs="+", default=list(DEFAULT_DEGREES))
    ap.add_argument("--n", type=int, default=4000)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    root = SeededRng(args.seed)
    for K in args.K:
        for j, algo in enumerate(("random", "local_flip")):
            fit = maxcut_scaling_experiment(K, args.degrees, args.n, args.trials, algo,
                                            root.child(K, j), workers=args.workers)
            print(f"K={K} {algo:<10} a = {fit.intercept:+.4f} +/- {fit.intercept_se:.4f}   "
                  f"gamma_hat = {fit.gamma:+.4f} +/- {fit.gamma_se:.4f}")


if __name__ == "__main__":
    main()
