"""Exact solvers for small instances.

These are the ground truth for every optimality and overlap test: a
bitmask branch-and-bound for maximum independent set, exhaustive scans for
MAXCUT and p-spin ground states, and enumeration of all near-optimal
independent sets together with their exact overlap spectrum.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapExceededError, RangeError
from .generators import Graph, Hypergraph, SpinTensor
from .problems import IndependentSet

IS_CAP = 60
ENUM_CAP = 24
BRUTE_CAP = 20
PAIR_BUDGET = 5 * 10**7

_CHUNK = 1 << 18


@dataclass
class ExactResult:
    optimum: int | float
    witnesses: list = field(default_factory=list)
    explored: int = 0


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges.tolist():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _greedy_bound(adj: list[int], cand: int) -> int:
    """Min-degree greedy on the candidate set; returns the chosen mask."""
    chosen = 0
    while cand:
        v = min(_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        chosen |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    return chosen


def exact_max_is(g: Graph, cap: int = IS_CAP) -> ExactResult:
    """Branch-and-bound maximum independent set.

    Lower bound from a min-degree greedy solution, upper bound
    ``|chosen| + |candidates|``; degree <= 1 candidates are taken without
    branching.
    """
    if g.n > cap:
        raise CapExceededError(f"n={g.n} exceeds branch-and-bound cap {cap}")
    adj = _adjacency_masks(g)
    full = (1 << g.n) - 1
    best = _greedy_bound(adj, full)
    best_size = best.bit_count()
    explored = 0

    def search(cand: int, chosen: int):
        nonlocal best, best_size, explored
        explored += 1
        # forced moves: isolated and pendant candidates
        while cand:
            forced = next((v for v in _bits(cand) if (adj[v] & cand).bit_count() <= 1), None)
            if forced is None:
                break
            chosen |= 1 << forced
            cand &= ~(adj[forced] | (1 << forced))
        size = chosen.bit_count()
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + cand.bit_count() <= best_size:
            return
        v = max(_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        search(cand & ~(adj[v] | (1 << v)), chosen | (1 << v))
        search(cand & ~(1 << v), chosen)

    search(full, 0)
    return ExactResult(best_size, [IndependentSet(np.array(_bits(best), dtype=np.int64), g)], explored)


def brute_force_max_is(g: Graph, cap: int = BRUTE_CAP) -> int:
    """Maximum independent set size by scanning all 2^n subsets."""
    if g.n > cap:
        raise CapExceededError(f"n={g.n} exceeds full-enumeration cap {cap}")
    best = 0
    for start in range(0, 1 << g.n, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << g.n), dtype=np.int64)
        ok = np.ones(len(masks), dtype=bool)
        for u, v in g.edges.tolist():
            ok &= ((masks >> u) & (masks >> v) & 1) == 0
        if ok.any():
            best = max(best, int(np.bitwise_count(masks[ok]).max()))
    return best


def _edge_masks(inst: Graph | Hypergraph) -> np.ndarray:
    edges = inst.edges
    return np.array([sum(1 << int(v) for v in row) for row in edges.tolist()], dtype=np.int64)


def _spins_from_mask(mask: int, n: int) -> np.ndarray:
    return np.array([-1 if (mask >> i) & 1 else 1 for i in range(n)], dtype=np.int8)


def exact_max_cut(inst: Graph | Hypergraph, all_witnesses: bool = False,
                  cap: int = ENUM_CAP) -> ExactResult:
    """Exhaustive MAXCUT over sign patterns; a set bit means spin -1.

    For graphs and even K the last spin is pinned to +1 (global flip
    symmetry) and witnesses are completed with their flips.
    """
    n = inst.n
    if n > cap:
        raise CapExceededError(f"n={n} exceeds exhaustive cap {cap}")
    K = 2 if isinstance(inst, Graph) else inst.K
    symmetric = K % 2 == 0 and n > 0
    total = 1 << (n - 1) if symmetric else 1 << n
    em = _edge_masks(inst)
    best, wit = -1, []
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        cut = np.zeros(len(masks), dtype=np.int64)
        for e in em:
            cut += np.bitwise_count(masks & e) & 1
        top = int(cut.max())
        if top > best:
            best, wit = top, []
        if top == best:
            hits = masks[cut == best]
            wit.extend(hits.tolist() if all_witnesses else hits[:1].tolist())
            if not all_witnesses:
                wit = wit[:1]
    full = (1 << n) - 1
    if symmetric and all_witnesses:
        wit = sorted(set(wit) | {full ^ w for w in wit})
    return ExactResult(best, [_spins_from_mask(w, n) for w in wit], total)


def _all_spins(n: int, start: int, stop: int) -> np.ndarray:
    masks = np.arange(start, stop, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    return (1 - 2 * bits).astype(np.float64)


def _contract(T: np.ndarray, S: np.ndarray) -> np.ndarray:
    """sum over all index tuples of T[i1..ip] * S[b,i1] ... S[b,ip]."""
    n = S.shape[1]
    X = T.reshape(-1, n) @ S.T  # (n^(p-1), B)
    while X.shape[0] > 1:
        X = np.einsum("inb,bn->ib", X.reshape(-1, n, X.shape[1]), S)
    return X[0]


def exact_ground_state(J: SpinTensor, all_witnesses: bool = False,
                       cap: int = ENUM_CAP) -> ExactResult:
    """Maximum of the p-spin energy over all 2^n spin vectors."""
    n = J.n
    if n > cap:
        raise CapExceededError(f"n={n} exceeds exhaustive cap {cap}")
    T = J.dense()
    chunk = max(1, (1 << 22) // max(1, n ** (J.p - 1)))
    best, wit = -np.inf, []
    for start in range(0, 1 << n, chunk):
        stop = min(start + chunk, 1 << n)
        E = _contract(T, _all_spins(n, start, stop))
        top = float(E.max())
        if top > best:
            best, wit = top, []
        if top == best:
            hits = np.flatnonzero(E == best) + start
            wit.extend(hits.tolist() if all_witnesses else hits[:1].tolist())
            if not all_witnesses:
                wit = wit[:1]
    return ExactResult(best, [_spins_from_mask(w, n) for w in wit], 1 << n)


def theta_threshold(theta, optimum: int) -> int:
    """Smallest size counted as theta-optimal: ceil(theta * optimum), exact."""
    th = Fraction(str(theta)) if isinstance(theta, float) else Fraction(theta)
    if not 0 < th <= 1:
        raise RangeError(f"theta must lie in (0, 1], got {theta}")
    return math.ceil(th * optimum)


def _enumerate_masks(adj: list[int], n: int, k: int) -> list[int]:
    found = []

    def rec(cand: int, chosen: int, size: int):
        if size + cand.bit_count() < k:
            return
        if not cand:
            found.append(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~(adj[v] | low), chosen | low, size + 1)
        rec(cand & ~low, chosen, size)

    rec((1 << n) - 1, 0, 0)
    return found


def enumerate_theta_optimal_is(g: Graph, theta, cap: int = ENUM_CAP) -> list[IndependentSet]:
    """All independent sets of size >= ceil(theta * |I*|), sorted by members."""
    if g.n > cap:
        raise CapExceededError(f"n={g.n} exceeds enumeration cap {cap}")
    k = theta_threshold(theta, exact_max_is(g).optimum)
    masks = _enumerate_masks(_adjacency_masks(g), g.n, k)
    sets = [tuple(_bits(m)) for m in masks]
    sets.sort()
    return [IndependentSet(np.array(s, dtype=np.int64), g) for s in sets]


def overlap_spectrum_exact(g: Graph, theta, include_diagonal: bool = True,
                           budget: int = PAIR_BUDGET) -> Counter:
    """Multiset {|I1 & I2| / n} over unordered pairs of theta-optimal sets,
    returned as a Counter keyed by Fraction."""
    sets = enumerate_theta_optimal_is(g, theta)
    s = len(sets)
    pairs = s * (s + 1) // 2 if include_diagonal else s * (s - 1) // 2
    if pairs > budget:
        raise CapExceededError(f"{pairs} pairs exceed the budget of {budget}")
    if g.n == 0 or s == 0:
        return Counter()
    A = np.array([x.indicator() for x in sets], dtype=np.int64)
    inter = A @ A.T
    iu = np.triu_indices(s, 0 if include_diagonal else 1)
    counts = Counter(inter[iu].tolist())
    return Counter({Fraction(k, g.n): c for k, c in counts.items()})
