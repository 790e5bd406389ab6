"""Perturbation test for the locality radius of a rule pipeline."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..algorithms import run_pipeline
from ..errors import PreconditionError
from ..generators import Graph
from ..rng import SeededRng


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get -1."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x).tolist():
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@dataclass
class LocalityReport:
    passed: bool
    radius: int
    trials: int
    changes: int
    base_member: bool
    outcomes: list[bool] = field(default_factory=list)


def perturb_outside(g: Graph, far: np.ndarray, rng: SeededRng, swaps: int = 8) -> Graph:
    """Rewire edges whose endpoints are all in ``far``.

    Performs up to ``swaps`` double-edge swaps among far-far edges, then deletes
    one far-far edge and adds one new far-far edge when possible.
    """
    edges = g.edge_set()
    far_nodes = np.flatnonzero(far)
    gen = rng.generator
    for _ in range(swaps):
        cand = sorted(e for e in edges if far[e[0]] and far[e[1]])
        if len(cand) < 2:
            break
        i, j = gen.choice(len(cand), 2, replace=False)
        (a, b), (c, e) = cand[i], cand[j]
        if gen.random() < 0.5:
            c, e = e, c
        new1, new2 = tuple(sorted((a, c))), tuple(sorted((b, e)))
        if a == c or b == e or new1 == new2 or new1 in edges or new2 in edges:
            continue
        edges -= {cand[i], cand[j]}
        edges |= {new1, new2}
    cand = sorted(e for e in edges if far[e[0]] and far[e[1]])
    if cand:
        edges.discard(cand[int(gen.integers(len(cand)))])
    if len(far_nodes) >= 2:
        for _ in range(20):
            a, b = (int(x) for x in gen.choice(far_nodes, 2, replace=False))
            e = (min(a, b), max(a, b))
            if e not in edges:
                edges.add(e)
                break
    return Graph.from_edges(g.n, sorted(edges))


def locality_perturbation_test(g: Graph, rule, R: int, u: int, trials: int,
                               rng: SeededRng) -> LocalityReport:
    """Change edges and labels only beyond distance R+1 from ``u`` and check
    that u's membership in the projected set never changes."""
    radius = R + 1
    dist = bfs_distances(g, u)
    far = (dist < 0) | (dist > radius)
    if not far.any():
        raise PreconditionError(f"the radius-{radius} ball around node {u} covers the graph")
    labels = rng.child(0).random(g.n)
    base = bool(u in set(run_pipeline(g, rule, R, rng.child(1), labels).members.tolist()))
    outcomes = []
    for t in range(trials):
        trng = rng.child(2, t)
        g2 = perturb_outside(g, far, trng.child(0))
        labels2 = labels.copy()
        labels2[far] = trng.child(1).random(int(far.sum()))
        I = run_pipeline(g2, rule, R, trng.child(2), labels2)
        outcomes.append(bool(u in set(I.members.tolist())))
    changes = sum(o != base for o in outcomes)
    return LocalityReport(changes == 0, radius, trials, changes, base, outcomes)
