"""Random instance ensembles: regular graphs, Erdos-Renyi graphs, K-uniform
hypergraphs and Gaussian p-spin coupling tensors.

All samplers take a :class:`~ogpbench.rng.SeededRng` and are deterministic
given it.  Generated objects are immutable (their numpy buffers are marked
read-only) and can be shared between trials.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ArityError, CapacityError, InfeasibleError, ParityError, RangeError
from .rng import SeededRng

# dense n**p entries; 64**3 == 512**2 == 2**18
DEFAULT_TENSOR_CAP = 1 << 18

# enumerate every candidate K-subset when there are at most this many
_ENUMERATE_LIMIT = 1 << 21

# pairing with full restart is used while the asymptotic acceptance
# probability exp(-(d^2-1)/4) stays above this
_RESTART_MIN_ACCEPT = 1e-3


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _csr(n: int, rows: np.ndarray, cols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    width = int(cols.max()) + 1 if len(cols) else 1
    keys = np.sort(rows.astype(np.int64) * width + cols)
    counts = np.bincount(rows, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, keys % width


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    ``edges`` is an ``(m, 2)`` array with ``u < v`` per row, rows sorted.
    Neighbor lists are kept in CSR form (``indptr``, ``indices``), each list
    sorted ascending.
    """

    n: int
    edges: np.ndarray
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges, check: bool = True) -> "Graph":
        n = int(n)
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size:
            e = np.sort(e, axis=1)
            if check:
                if e.min() < 0 or e.max() >= n:
                    raise ValueError("edge endpoint out of range")
                if np.any(e[:, 0] == e[:, 1]):
                    raise ValueError("self-loop")
            keys = np.sort(e[:, 0] * n + e[:, 1])
            if check and np.any(keys[1:] == keys[:-1]):
                raise ValueError("duplicate edge")
            e = np.stack([keys // n, keys % n], axis=1)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        indptr, indices = _csr(n, rows, cols)
        return cls(n, _frozen(e), _frozen(indptr), _frozen(indices))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def as_hypergraph(self) -> "Hypergraph":
        return Hypergraph.from_edges(self.n, 2, self.edges)


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """K-uniform hypergraph; ``edges`` is ``(m, K)`` with each row sorted."""

    n: int
    K: int
    edges: np.ndarray

    @classmethod
    def from_edges(cls, n: int, K: int, edges, check: bool = True) -> "Hypergraph":
        if K < 2:
            raise ArityError(f"hyperedge arity must be >= 2, got {K}")
        e = np.sort(np.asarray(edges, dtype=np.int64).reshape(-1, K), axis=1)
        if len(e):
            e = e[np.lexsort(e.T[::-1])]
            if check:
                if e.min() < 0 or e.max() >= n:
                    raise ValueError("hyperedge node out of range")
                if np.any(e[:, 1:] == e[:, :-1]):
                    raise ValueError("hyperedge with repeated node")
                if len(e) > 1 and np.any(np.all(e[1:] == e[:-1], axis=1)):
                    raise ValueError("duplicate hyperedge")
        return cls(int(n), int(K), _frozen(e))

    @property
    def m(self) -> int:
        return len(self.edges)

    def incidence(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR map node -> ids of the hyperedges containing it."""
        rows = self.edges.ravel()
        cols = np.repeat(np.arange(self.m, dtype=np.int64), self.K)
        return _csr(self.n, rows, cols)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.K) == (other.n, other.K) and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.K, self.edges.tobytes()))


@dataclass(frozen=True, eq=False)
class SpinTensor:
    """Order-p couplings stored on sorted index tuples only.

    ``index`` is ``(s, p)`` with non-decreasing rows in lexicographic order;
    diagonal tuples (repeated indices) are included.
    """

    n: int
    p: int
    index: np.ndarray
    values: np.ndarray

    @classmethod
    def from_entries(cls, n: int, p: int, index, values) -> "SpinTensor":
        idx = np.asarray(index, dtype=np.int64).reshape(-1, p)
        val = np.asarray(values, dtype=np.float64).reshape(-1)
        if len(idx) != len(val):
            raise ValueError("index/value length mismatch")
        if len(idx):
            if np.any(idx[:, 1:] < idx[:, :-1]):
                raise ValueError("tensor index tuples must be sorted")
            order = np.lexsort(idx.T[::-1])
            idx, val = idx[order], val[order]
        return cls(int(n), int(p), _frozen(idx), _frozen(val))

    @classmethod
    def zeros(cls, n: int, p: int) -> "SpinTensor":
        idx = sorted_tuples(n, p)
        return cls.from_entries(n, p, idx, np.zeros(len(idx)))

    def multiplicities(self) -> np.ndarray:
        """Number of ordered tuples that sort to each stored tuple."""
        return np.array([_arrangements(row) for row in self.index], dtype=np.float64)

    def dense(self) -> np.ndarray:
        """Full ordered tensor with every permutation filled in."""
        full = np.zeros((self.n,) * self.p)
        for row, val in zip(self.index, self.values):
            for perm in set(itertools.permutations(row.tolist())):
                full[perm] = val
        return full

    def __eq__(self, other):
        if not isinstance(other, SpinTensor):
            return NotImplemented
        return ((self.n, self.p) == (other.n, other.p)
                and np.array_equal(self.index, other.index)
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.n, self.p, self.index.tobytes(), self.values.tobytes()))


def _arrangements(row) -> int:
    counts = np.unique(np.asarray(row), return_counts=True)[1]
    out = math.factorial(len(row))
    for c in counts:
        out //= math.factorial(int(c))
    return out


def sorted_tuples(n: int, p: int) -> np.ndarray:
    """All non-decreasing p-tuples over ``0..n-1`` in lexicographic order."""
    rows = list(itertools.combinations_with_replacement(range(n), p))
    return np.array(rows, dtype=np.int64).reshape(-1, p)


# ---------------------------------------------------------------- regular


def _pairing_attempt(stubs: np.ndarray, rng: SeededRng) -> np.ndarray:
    pairs = rng.permutation(stubs).reshape(-1, 2)
    return np.sort(pairs, axis=1)


def _is_simple(n: int, pairs: np.ndarray) -> bool:
    if np.any(pairs[:, 0] == pairs[:, 1]):
        return False
    keys = pairs[:, 0] * n + pairs[:, 1]
    return len(np.unique(keys)) == len(keys)


def _repair_by_switching(n: int, pairs: np.ndarray, rng: SeededRng) -> np.ndarray:
    """Remove loops and multi-edges from a pairing by double-edge switches.

    Each bad pair (a, b) is switched with a uniformly chosen good edge (x, y)
    into (a, x), (b, y) when both new edges are new and loop-free.  Degrees are
    preserved.
    """
    keys = pairs[:, 0] * n + pairs[:, 1]
    loop = pairs[:, 0] == pairs[:, 1]
    _, first = np.unique(keys, return_index=True)
    good = np.zeros(len(pairs), dtype=bool)
    good[first] = True
    good &= ~loop
    bad_pairs = [tuple(map(int, p)) for p in pairs[~good]]
    good_edges = pairs[good].copy()
    base_keys = np.sort(good_edges[:, 0] * n + good_edges[:, 1])
    added: set[int] = set()
    removed: set[int] = set()

    def present(key: int) -> bool:
        if key in added:
            return True
        if key in removed:
            return False
        i = np.searchsorted(base_keys, key)
        return i < len(base_keys) and base_keys[i] == key

    extra: list[tuple[int, int]] = []
    gen = rng.generator
    pending = bad_pairs
    stall = 0
    while pending:
        nxt = []
        for a, b in pending:
            j = int(gen.integers(len(good_edges)))
            x, y = (int(v) for v in good_edges[j])
            if x < 0:  # slot already switched away
                nxt.append((a, b))
                continue
            if gen.random() < 0.5:
                x, y = y, x
            if a == x or b == y:
                nxt.append((a, b))
                continue
            k1 = min(a, x) * n + max(a, x)
            k2 = min(b, y) * n + max(b, y)
            if k1 == k2 or present(k1) or present(k2):
                nxt.append((a, b))
                continue
            old = min(x, y) * n + max(x, y)
            removed.add(old)
            added.discard(old)
            for k in (k1, k2):
                added.add(k)
                removed.discard(k)
            good_edges[j] = (-1, -1)
            extra.append((min(a, x), max(a, x)))
            extra.append((min(b, y), max(b, y)))
        stall = stall + 1 if len(nxt) == len(pending) else 0
        if stall > 1000:
            raise RuntimeError("switching repair failed to converge")
        pending = nxt
    kept = good_edges[good_edges[:, 0] >= 0]
    if extra:
        kept = np.concatenate([kept, np.array(extra, dtype=np.int64)])
    return kept


def gen_regular(n: int, d: int, rng: SeededRng) -> Graph:
    """Random simple d-regular graph on n nodes.

    Uses the pairing model with full restart while the restart cost is
    moderate (uniform over simple graphs).  For larger d the pairing is
    repaired by double-edge switches instead, which is close to uniform but
    not exactly so.  Dense cases are generated via the complement.
    """
    n, d = int(n), int(d)
    if d < 0:
        raise RangeError(f"degree must be nonnegative, got {d}")
    if d >= n:
        raise InfeasibleError(f"degree d={d} requires n >= d+1, got n={n}")
    if (n * d) % 2:
        raise ParityError(f"parity rule violated: n*d must be even for a d-regular graph (n={n}, d={d})")
    if d == 0:
        return Graph.from_edges(n, np.empty((0, 2), dtype=np.int64))
    if d == n - 1:
        return Graph.from_edges(n, np.array(list(itertools.combinations(range(n), 2))))
    if 2 * d > n - 1 and n <= 4096:
        comp = gen_regular(n, n - 1 - d, rng)
        adj = np.ones((n, n), dtype=bool)
        np.fill_diagonal(adj, False)
        adj[comp.edges[:, 0], comp.edges[:, 1]] = False
        adj[comp.edges[:, 1], comp.edges[:, 0]] = False
        u, v = np.nonzero(np.triu(adj))
        return Graph.from_edges(n, np.stack([u, v], axis=1), check=False)

    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    if math.exp(-(d * d - 1) / 4) >= _RESTART_MIN_ACCEPT:
        while True:
            pairs = _pairing_attempt(stubs, rng)
            if _is_simple(n, pairs):
                return Graph.from_edges(n, pairs, check=False)
    pairs = _pairing_attempt(stubs, rng)
    if not _is_simple(n, pairs):
        pairs = _repair_by_switching(n, pairs, rng)
    return Graph.from_edges(n, pairs, check=False)


# ------------------------------------------------------- Erdos-Renyi family


def _sample_subsets(n: int, K: int, p: float, rng: SeededRng) -> np.ndarray:
    """Each K-subset of ``0..n-1`` independently with probability p."""
    total = math.comb(n, K)
    if p <= 0 or total == 0:
        return np.empty((0, K), dtype=np.int64)
    if total <= _ENUMERATE_LIMIT:
        if K == 2:
            u, v = np.triu_indices(n, 1)
            cand = np.stack([u, v], axis=1).astype(np.int64)
        else:
            cand = np.array(list(itertools.combinations(range(n), K)), dtype=np.int64)
        keep = rng.random(len(cand)) < p
        return cand[keep]
    if total >= 1 << 62:
        raise CapacityError(f"C({n},{K}) candidate hyperedges exceed sampler range")
    # conditional on the count, the edge set is a uniform M-subset; draw it by
    # sequential rejection of repeated nodes and repeated subsets
    M = int(rng.binomial(total, p))
    chosen: dict[tuple, None] = {}
    gen = rng.generator
    while len(chosen) < M:
        need = M - len(chosen)
        batch = gen.integers(0, n, size=(int(need * 1.2) + 16, K))
        batch.sort(axis=1)
        ok = np.all(batch[:, 1:] != batch[:, :-1], axis=1)
        for row in map(tuple, batch[ok].tolist()):
            if row not in chosen:
                chosen[row] = None
                if len(chosen) == M:
                    break
    return np.array(list(chosen), dtype=np.int64).reshape(-1, K)


def gen_er(n: int, d: float, rng: SeededRng) -> Graph:
    """Erdos-Renyi graph: each pair present independently with prob d/n."""
    n = int(n)
    if n < 0:
        raise RangeError("node count must be nonnegative")
    if not 0 <= d <= n:
        raise RangeError(f"average degree must satisfy 0 <= d <= n, got d={d}, n={n}")
    if n == 0:
        return Graph.from_edges(0, np.empty((0, 2)))
    e = _sample_subsets(n, 2, d / n, rng)
    return Graph.from_edges(n, e, check=False)


def gen_hypergraph(n: int, d: float, K: int, rng: SeededRng) -> Hypergraph:
    """K-uniform hypergraph: each K-subset present with prob d / C(n-1, K-1)."""
    n, K = int(n), int(K)
    if K < 2:
        raise ArityError(f"arity must be >= 2, got K={K}")
    if K > n:
        raise ArityError(f"arity K={K} exceeds node count n={n}")
    denom = math.comb(n - 1, K - 1)
    if not 0 <= d <= denom:
        raise RangeError(f"average degree must satisfy 0 <= d <= C(n-1,K-1)={denom}, got {d}")
    e = _sample_subsets(n, K, d / denom, rng)
    return Hypergraph.from_edges(n, K, e, check=False)


def gen_pspin(n: int, p: int, rng: SeededRng, cap: int = DEFAULT_TENSOR_CAP) -> SpinTensor:
    """Standard normal couplings on every sorted index tuple."""
    n, p = int(n), int(p)
    if p < 2:
        raise RangeError(f"tensor order must be >= 2, got p={p}")
    if n < 1:
        raise RangeError("node count must be positive")
    if n ** p > cap:
        raise CapacityError(f"dense tensor of {n}^{p} entries exceeds cap {cap}")
    idx = sorted_tuples(n, p)
    vals = rng.normal(len(idx))
    return SpinTensor.from_entries(n, p, idx, vals)
