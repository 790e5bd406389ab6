"""Small named graphs and test-only rules shared by the test modules."""
import itertools

import numpy as np

from ogpbench.algorithms import LocalRule
from ogpbench.generators import Graph


def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty(n):
    return Graph.from_edges(n, np.empty((0, 2), dtype=np.int64))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def brute_is_sets(g):
    """Every independent set of g as a frozenset, by checking all 2^n subsets."""
    edges = g.edge_set()
    out = []
    for r in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if not any((a, b) in edges for a, b in itertools.combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


class GlobalAggregateRule(LocalRule):
    """Deliberately non-local: the readout depends on the sum of every label.

    Negative control for the locality test; never ship this.
    """

    name = "global_aggregate"

    def init(self, labels):
        return np.stack([labels, np.full_like(labels, labels.sum())], axis=1)

    def update(self, own, nbrs, t):
        return own

    def readout(self, features):
        # mixes own label with the global sum so readouts differ across nodes
        return (np.floor(features[:, 0] * 1000) + np.floor(features[:, 1] * 1000)) % 2 == 0


class ScalarSumRule(LocalRule):
    """h0 = 1, h' = h + sum of neighbor h (used for hand-computed examples)."""

    name = "scalar_sum"

    def init(self, labels):
        return np.ones((len(labels), 1))

    def update(self, own, nbrs, t):
        return own + nbrs.sum()

    def readout(self, features):
        return features[:, 0] > 0
