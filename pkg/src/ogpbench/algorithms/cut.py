"""Single-flip local search for (hyper)graph MAXCUT."""
from __future__ import annotations

import numpy as np

from ..generators import Graph, Hypergraph
from ..rng import SeededRng


def random_assignment(n: int, rng: SeededRng) -> np.ndarray:
    return np.where(rng.random(n) < 0.5, 1, -1).astype(np.int8)


def local_flip_cut(inst: Graph | Hypergraph, sigma0, max_rounds: int, rng: SeededRng,
                   trace: list | None = None) -> np.ndarray:
    """Flip any spin whose flip strictly increases the cut, sweeping nodes in
    a fresh random order each round, until a sweep makes no flip or
    ``max_rounds`` sweeps are done.

    If ``trace`` is a list, the cut value after every accepted flip is
    appended to it (starting with the initial value).
    """
    h = inst.as_hypergraph() if isinstance(inst, Graph) else inst
    sigma = np.array(sigma0, dtype=np.int8).reshape(-1)
    if len(sigma) != h.n:
        raise ValueError(f"assignment has length {len(sigma)}, instance has {h.n} nodes")
    if h.m == 0:
        return sigma
    indptr, inc = h.incidence()
    # +1 for uncut hyperedges, -1 for cut ones; flipping a node negates all
    # products it touches, so its gain is the sum over incident products
    prod = np.prod(sigma[h.edges].astype(np.int64), axis=1)
    cut = int(np.count_nonzero(prod == -1))
    if trace is not None:
        trace.append(cut)
    for _ in range(int(max_rounds)):
        flipped = False
        for u in rng.permutation(h.n).tolist():
            es = inc[indptr[u]:indptr[u + 1]]
            gain = int(prod[es].sum())
            if gain > 0:
                prod[es] *= -1
                sigma[u] = -sigma[u]
                cut += gain
                flipped = True
                if trace is not None:
                    trace.append(cut)
        if not flipped:
            break
    return sigma
