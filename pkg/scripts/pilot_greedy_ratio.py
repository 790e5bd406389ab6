"""Pilot runs of the greedy density ratio against 2 log(d)/d.

Used to calibrate the acceptance band for d=100, n=1e5.  Prints one row
per degree.

    python3 scripts/pilot_greedy_ratio.py --degrees 20 50 100 --n 100000 --trials 5
"""
import argparse

from ogpbench.experiments import greedy_ratio_experiment
from ogpbench.rng import SeededRng


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degrees", type=int, nargs="+", default=[20, 50, 100])
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'d':>5} {'density':>10} {'se':>9} {'ratio':>8} {'ratio_se':>9}")
    for i, d in enumerate(args.degrees):
        est = greedy_ratio_experiment(d, args.n, args.trials, SeededRng(args.seed).child(i),
                                      args.workers)
        print(f"{d:>5} {est.mean:>10.5f} {est.se:>9.5f} {est.ratio:>8.4f} {est.ratio_se:>9.4f}")


if __name__ == "__main__":
    main()
