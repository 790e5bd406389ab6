"""Message-passing local algorithms.

A rule evolves per-node feature vectors in synchronous rounds,

    h[u, t+1] = update(h[u, t], {h[v, t] : v in N(u)}, t),

starting from ``init`` applied to iid uniform node labels.  After R rounds a
readout marks nodes for tentative inclusion, and :func:`project_to_is`
repairs conflicts by label priority.  The decision for node u then depends
only on the radius-(R+1) ball around u.

Two rule flavours exist.  :class:`LocalRule` works on all nodes at once with
a fixed feature width per round; the update sees its own row block and a
:class:`Neighborhood` of gathered neighbor rows, never the graph.
:class:`NodeRule` is called once per node and allows node-dependent update
functions and per-node feature dimensions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RangeError
from ..generators import Graph
from ..problems import IndependentSet
from ..rng import SeededRng


def segment_reduce(ufunc, values: np.ndarray, indptr: np.ndarray, empty: float) -> np.ndarray:
    """Reduce consecutive row blocks ``values[indptr[i]:indptr[i+1]]``."""
    n = len(indptr) - 1
    out = np.full((n,) + values.shape[1:], empty, dtype=np.float64)
    nonempty = indptr[:-1] < indptr[1:]
    if values.shape[0]:
        out[nonempty] = ufunc.reduceat(values, indptr[:-1][nonempty], axis=0)
    return out


class Neighborhood:
    """Neighbor feature rows for every node (what an update may look at)."""

    def __init__(self, values: np.ndarray, indptr: np.ndarray):
        self.values = values
        self.indptr = indptr

    def count(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.float64)

    def sum(self) -> np.ndarray:
        return segment_reduce(np.add, self.values, self.indptr, 0.0)

    def min(self) -> np.ndarray:
        return segment_reduce(np.minimum, self.values, self.indptr, np.inf)

    def max(self) -> np.ndarray:
        return segment_reduce(np.maximum, self.values, self.indptr, -np.inf)

    def mean(self) -> np.ndarray:
        c = self.count()
        s = self.sum()
        return np.divide(s, c[:, None], out=np.zeros_like(s), where=c[:, None] > 0)

    def of(self, u: int) -> np.ndarray:
        return self.values[self.indptr[u]:self.indptr[u + 1]]


@dataclass
class FeatureState:
    """Round-t features plus the iid labels they were grown from.

    ``features`` is an ``(n, k)`` array for :class:`LocalRule` runs and a list
    of 1-d arrays (possibly of different lengths) for :class:`NodeRule` runs.
    """

    t: int
    features: np.ndarray | list
    labels: np.ndarray

    @property
    def dims(self) -> list[int]:
        if isinstance(self.features, np.ndarray):
            return [self.features.shape[1]] * self.features.shape[0]
        return [len(h) for h in self.features]


class LocalRule:
    name = "abstract"
    params: tuple[float, ...] = ()

    def init(self, labels: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def update(self, own: np.ndarray, nbrs: Neighborhood, t: int) -> np.ndarray:
        raise NotImplementedError

    def readout(self, features: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}{self.params}"


class NodeRule:
    """Per-node rule; ``u`` is passed so the functions may depend on it."""

    name = "node-rule"

    def init_node(self, u: int, label: float) -> np.ndarray:
        raise NotImplementedError

    def update_node(self, u: int, t: int, own: np.ndarray, nbrs: list[np.ndarray]) -> np.ndarray:
        raise NotImplementedError

    def readout_node(self, u: int, h: np.ndarray) -> bool:
        raise NotImplementedError


def _check_depth(R) -> int:
    if int(R) != R or R < 0:
        raise RangeError(f"depth must be a nonnegative integer, got {R}")
    return int(R)


def gnn_forward(g: Graph, rule: LocalRule | NodeRule, R: int, rng: SeededRng,
                labels: np.ndarray | None = None) -> FeatureState:
    """Initialize from iid uniform labels and run R synchronous rounds."""
    R = _check_depth(R)
    if labels is None:
        labels = rng.random(g.n)
    labels = np.asarray(labels, dtype=np.float64)
    if isinstance(rule, NodeRule):
        return _forward_nodes(g, rule, R, labels)
    h = np.asarray(rule.init(labels), dtype=np.float64).reshape(g.n, -1)
    for t in range(R):
        nbrs = Neighborhood(h[g.indices], g.indptr)
        h = np.asarray(rule.update(h, nbrs, t), dtype=np.float64).reshape(g.n, -1)
    return FeatureState(R, h, labels)


def _forward_nodes(g: Graph, rule: NodeRule, R: int, labels: np.ndarray) -> FeatureState:
    h = [np.atleast_1d(np.asarray(rule.init_node(u, float(labels[u])), dtype=np.float64))
         for u in range(g.n)]
    for t in range(R):
        h = [np.atleast_1d(np.asarray(
                rule.update_node(u, t, h[u], [h[v] for v in g.neighbors(u)]), dtype=np.float64))
             for u in range(g.n)]
    return FeatureState(R, h, labels)


def readout_mask(s: FeatureState, rule: LocalRule | NodeRule) -> np.ndarray:
    if isinstance(rule, NodeRule):
        return np.array([bool(rule.readout_node(u, h)) for u, h in enumerate(s.features)],
                        dtype=bool).reshape(-1)
    return np.asarray(rule.readout(s.features), dtype=bool).reshape(-1)


def project_to_is(g: Graph, s: FeatureState, rule: LocalRule | NodeRule) -> IndependentSet:
    """Keep a tentatively included node iff its label is strictly below the
    labels of all tentatively included neighbors."""
    tentative = readout_mask(s, rule)
    nbr_labels = np.where(tentative[g.indices], s.labels[g.indices], np.inf)
    lowest = segment_reduce(np.minimum, nbr_labels, g.indptr, np.inf)
    keep = tentative & (s.labels < lowest)
    return IndependentSet(np.flatnonzero(keep), g)


def project_to_cut(s: FeatureState, rule: LocalRule | NodeRule) -> np.ndarray:
    """Spin readout: included -> +1, excluded -> -1."""
    return np.where(readout_mask(s, rule), 1, -1).astype(np.int8)


def run_pipeline(g: Graph, rule: LocalRule | NodeRule, R: int, rng: SeededRng,
                 labels: np.ndarray | None = None) -> IndependentSet:
    return project_to_is(g, gnn_forward(g, rule, R, rng, labels), rule)


# ------------------------------------------------------------ rule library


class IdentityRule(LocalRule):
    """Feature is the label, never updated; include iff label < threshold."""

    name = "identity"

    def __init__(self, threshold: float = 1.0):
        self.params = (float(threshold),)

    def init(self, labels):
        return labels[:, None].copy()

    def update(self, own, nbrs, t):
        return own

    def readout(self, features):
        return features[:, 0] < self.params[0]


class LabelBroadcastRule(LocalRule):
    """Carries (own label, smallest neighbor label); include iff own is the
    local minimum.  One round plus projection is the random-priority rule."""

    name = "label_broadcast"

    def init(self, labels):
        return np.stack([labels, np.full_like(labels, np.inf)], axis=1)

    def update(self, own, nbrs, t):
        return np.stack([own[:, 0], nbrs.min()[:, 0]], axis=1)

    def readout(self, features):
        return features[:, 0] < features[:, 1]


class NeighborSumRule(LocalRule):
    """Walk-weighted label average: s' = s + sum_nbr s, w' = w + sum_nbr w.

    Include iff label < c * s / w.
    """

    name = "neighbor_sum"

    def __init__(self, c: float = 1.0):
        self.params = (float(c),)

    def init(self, labels):
        return np.stack([labels, labels, np.ones_like(labels)], axis=1)

    def update(self, own, nbrs, t):
        total = nbrs.sum()
        return np.stack([own[:, 0], own[:, 1] + total[:, 1], own[:, 2] + total[:, 2]], axis=1)

    def readout(self, features):
        return features[:, 0] < self.params[0] * features[:, 1] / features[:, 2]


class NeighborMinRule(LocalRule):
    """Tracks the smallest label within the current radius; include iff own
    label <= that minimum + slack."""

    name = "neighbor_min"

    def __init__(self, slack: float = 0.0):
        self.params = (float(slack),)

    def init(self, labels):
        return np.stack([labels, labels], axis=1)

    def update(self, own, nbrs, t):
        return np.stack([own[:, 0], np.minimum(own[:, 1], nbrs.min()[:, 1])], axis=1)

    def readout(self, features):
        return features[:, 0] <= features[:, 1] + self.params[0]


class ThresholdRule(LocalRule):
    """Linear recursion x' = a_t x + b_t mean_nbr(x) from x_0 = label; include
    iff x_R < threshold.

    Coefficients are ``(threshold, a_0, b_0, a_1, b_1, ...)``; rounds beyond the
    given pairs reuse the last pair.
    """

    name = "threshold"

    def __init__(self, threshold: float = 0.0, *pairs: float):
        if not pairs:
            pairs = (1.0, -1.0)
        if len(pairs) % 2:
            raise ValueError("threshold rule needs (a, b) coefficient pairs")
        self.params = (float(threshold),) + tuple(float(x) for x in pairs)
        self._pairs = [(self.params[i], self.params[i + 1]) for i in range(1, len(self.params), 2)]

    def init(self, labels):
        return np.stack([labels, labels], axis=1)

    def update(self, own, nbrs, t):
        a, b = self._pairs[min(t, len(self._pairs) - 1)]
        return np.stack([own[:, 0], a * own[:, 1] + b * nbrs.mean()[:, 1]], axis=1)

    def readout(self, features):
        return features[:, 1] < self.params[0]


class GreedyRoundsRule(LocalRule):
    """Label-order greedy cut off after R rounds.

    State per node: (label, status, label if undecided else inf) with status
    0 undecided, 1 in, -1 out.  Each round an undecided node drops out if a
    neighbor is in, otherwise joins if its label beats every undecided
    neighbor.  Include iff status is 1.
    """

    name = "greedy_rounds"

    def init(self, labels):
        return np.stack([labels, np.zeros_like(labels), labels], axis=1)

    def update(self, own, nbrs, t):
        label, status = own[:, 0], own[:, 1]
        undecided = status == 0
        blocked = nbrs.max()[:, 1] == 1
        joins = undecided & ~blocked & (label < nbrs.min()[:, 2])
        new = np.where(undecided & blocked, -1.0, np.where(joins, 1.0, status))
        return np.stack([label, new, np.where(new == 0, label, np.inf)], axis=1)

    def readout(self, features):
        return features[:, 1] == 1


@dataclass(frozen=True)
class RuleSpec:
    cls: type
    arity: str
    doc: str


RULES: dict[str, RuleSpec] = {
    "identity": RuleSpec(IdentityRule, "0 or 1", "threshold on own label (default 1: include all)"),
    "label_broadcast": RuleSpec(LabelBroadcastRule, "0", "own label vs. smallest neighbor label"),
    "neighbor_sum": RuleSpec(NeighborSumRule, "0 or 1", "label vs. c * walk-weighted ball average"),
    "neighbor_min": RuleSpec(NeighborMinRule, "0 or 1", "label vs. ball minimum + slack"),
    "threshold": RuleSpec(ThresholdRule, "0 or 1+2k", "linear recursion, per-round (a_t, b_t)"),
    "greedy_rounds": RuleSpec(GreedyRoundsRule, "0", "label-order greedy truncated at R rounds"),
}


def make_rule(name: str, coeffs=()) -> LocalRule:
    try:
        spec = RULES[name]
    except KeyError:
        raise ValueError(f"unknown rule {name!r}; available: {', '.join(RULES)}") from None
    coeffs = tuple(float(c) for c in coeffs)
    if spec.arity == "0" and coeffs:
        raise ValueError(f"rule {name!r} takes no coefficients")
    if spec.arity == "0 or 1" and len(coeffs) > 1:
        raise ValueError(f"rule {name!r} takes at most one coefficient")
    if spec.arity == "0 or 1+2k" and coeffs and len(coeffs) % 2 == 0:
        raise ValueError(f"rule {name!r} takes a threshold followed by (a, b) pairs")
    return spec.cls(*coeffs)


def shipped_rules() -> list[LocalRule]:
    return [make_rule(name) for name in RULES]


def random_priority_is(g: Graph, rng: SeededRng) -> IndependentSet:
    """Node joins iff its iid label is below every neighbor's label."""
    rule = LabelBroadcastRule()
    return run_pipeline(g, rule, 1, rng)
