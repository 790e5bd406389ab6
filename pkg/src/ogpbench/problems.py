"""Cost functions: independent set, graph and hypergraph MAXCUT, p-spin energy."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError
from .generators import Graph, Hypergraph, SpinTensor


def _indicator(sigma, n: int) -> np.ndarray:
    s = np.asarray(sigma, dtype=np.int64).reshape(-1)
    if len(s) != n:
        raise LengthMismatchError(f"assignment has length {len(s)}, instance has {n} nodes")
    if s.size and not np.all((s == 0) | (s == 1)):
        raise ValueError("indicator assignment must be over {0,1}")
    return s


def _spins(sigma, n: int) -> np.ndarray:
    s = np.asarray(sigma, dtype=np.int64).reshape(-1)
    if len(s) != n:
        raise LengthMismatchError(f"assignment has length {len(s)}, instance has {n} nodes")
    if s.size and not np.all(np.abs(s) == 1):
        raise ValueError("spin assignment must be over {-1,+1}")
    return s


@dataclass(frozen=True, eq=False)
class IndependentSet:
    members: np.ndarray
    host: Graph

    def __post_init__(self):
        m = np.unique(np.asarray(self.members, dtype=np.int64))
        m.setflags(write=False)
        object.__setattr__(self, "members", m)
        if m.size and (m[0] < 0 or m[-1] >= self.host.n):
            raise ValueError("member out of range")
        if not is_feasible(self.host, self.indicator()):
            raise ValueError("members are not independent in the host graph")

    def __len__(self):
        return len(self.members)

    def indicator(self) -> np.ndarray:
        s = np.zeros(self.host.n, dtype=np.int8)
        s[self.members] = 1
        return s

    def is_maximal(self) -> bool:
        covered = self.indicator().astype(bool)
        for u in self.members:
            covered[self.host.neighbors(u)] = True
        return bool(covered.all())

    def __eq__(self, other):
        if not isinstance(other, IndependentSet):
            return NotImplemented
        return self.host == other.host and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash(self.members.tobytes())


def is_feasible(g: Graph, sigma) -> bool:
    s = _indicator(sigma, g.n)
    if g.m == 0:
        return True
    return not np.any(s[g.edges[:, 0]] & s[g.edges[:, 1]])


def is_cost(g: Graph, sigma) -> int:
    s = _indicator(sigma, g.n)
    return int(s.sum()) if is_feasible(g, s) else 0


def to_independent_set(g: Graph, sigma) -> IndependentSet:
    s = _indicator(sigma, g.n)
    return IndependentSet(np.flatnonzero(s), g)


def maxcut_cost(g: Graph, sigma) -> int:
    s = _spins(sigma, g.n)
    if g.m == 0:
        return 0
    return int(np.count_nonzero(s[g.edges[:, 0]] != s[g.edges[:, 1]]))


def hyper_maxcut_cost(h: Hypergraph, sigma) -> int:
    s = _spins(sigma, h.n)
    if h.m == 0:
        return 0
    return int(np.count_nonzero(np.prod(s[h.edges], axis=1) == -1))


def cut_cost(inst: Graph | Hypergraph, sigma) -> int:
    if isinstance(inst, Graph):
        return maxcut_cost(inst, sigma)
    return hyper_maxcut_cost(inst, sigma)


def pspin_energy(J: SpinTensor, sigma) -> float:
    """Sum over all ordered index tuples, evaluated from sorted storage.

    Each stored coupling is weighted by the number of ordered arrangements of
    its index tuple.
    """
    s = _spins(sigma, J.n).astype(np.float64)
    if len(J.values) == 0:
        return 0.0
    prods = np.prod(s[J.index], axis=1)
    return float(np.dot(J.values * J.multiplicities(), prods))
