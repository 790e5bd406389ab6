"""Sequential greedy baselines for independent sets."""
from __future__ import annotations

import numpy as np

from ..generators import Graph
from ..problems import IndependentSet
from ..rng import SeededRng


def greedy_is(g: Graph, rng: SeededRng) -> IndependentSet:
    """Scan nodes in uniformly random order, adding any node with no
    previously added neighbor."""
    order = rng.permutation(g.n)
    blocked = np.zeros(g.n, dtype=bool)
    members = []
    indptr, indices = g.indptr, g.indices
    for u in order.tolist():
        if not blocked[u]:
            members.append(u)
            blocked[indices[indptr[u]:indptr[u + 1]]] = True
    return IndependentSet(np.array(members, dtype=np.int64), g)


def degree_greedy_is(g: Graph, rng: SeededRng) -> IndependentSet:
    """Repeatedly take a node of minimum residual degree (uniform among
    ties), then delete it together with its neighbors."""
    n = g.n
    adj = [g.indices[g.indptr[u]:g.indptr[u + 1]].tolist() for u in range(n)]
    deg = [len(a) for a in adj]
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    pos = [0] * n
    for u in range(n):
        pos[u] = len(buckets[deg[u]])
        buckets[deg[u]].append(u)
    alive = [True] * n
    draws = rng.random(n).tolist()

    def take_out(u):
        b = buckets[deg[u]]
        last = b.pop()
        if last != u:
            i = pos[u]
            b[i] = last
            pos[last] = i

    members = []
    lowest = 0
    picks = 0
    remaining = n
    while remaining:
        while not buckets[lowest]:
            lowest += 1
        b = buckets[lowest]
        u = b[int(draws[picks] * len(b))]
        picks += 1
        members.append(u)
        doomed = [u] + [w for w in adj[u] if alive[w]]
        for w in doomed:
            take_out(w)
            alive[w] = False
        remaining -= len(doomed)
        for w in doomed[1:]:
            for x in adj[w]:
                if alive[x]:
                    take_out(x)
                    deg[x] -= 1
                    pos[x] = len(buckets[deg[x]])
                    buckets[deg[x]].append(x)
                    if deg[x] < lowest:
                        lowest = deg[x]
    return IndependentSet(np.array(members, dtype=np.int64), g)
