"""Plain-text instance and assignment formats.

Graph:       ``n m`` then m lines ``u v`` (u < v)
Hypergraph:  ``n m K`` then m lines of K sorted node ids
Tensor:      ``n p`` then lines ``i1 ... ip value`` for sorted tuples, value
             with 17 significant digits (round-trips float64 exactly)
Assignment:  one line over ``{0,1}`` or ``{+,-}``
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .generators import Graph, Hypergraph, SpinTensor


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges.tolist()]
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m} {h.K}"]
    lines += [" ".join(map(str, row)) for row in h.edges.tolist()]
    return "\n".join(lines) + "\n"


def format_tensor(J: SpinTensor) -> str:
    lines = [f"{J.n} {J.p}"]
    for row, val in zip(J.index.tolist(), J.values.tolist()):
        lines.append(" ".join(map(str, row)) + " " + format(val, ".17g"))
    return "\n".join(lines) + "\n"


def _rows(text: str) -> list[list[str]]:
    return [ln.split() for ln in text.splitlines() if ln.strip()]


def parse_graph(text: str) -> Graph:
    rows = _rows(text)
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges, found {len(body)}")
    edges = np.array([[int(a), int(b)] for a, b in body], dtype=np.int64).reshape(-1, 2)
    return Graph.from_edges(n, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    rows = _rows(text)
    n, m, K = (int(x) for x in rows[0])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} hyperedges, found {len(body)}")
    edges = np.array([[int(x) for x in r] for r in body], dtype=np.int64).reshape(-1, K)
    return Hypergraph.from_edges(n, K, edges)


def parse_tensor(text: str) -> SpinTensor:
    rows = _rows(text)
    n, p = int(rows[0][0]), int(rows[0][1])
    idx = np.array([[int(x) for x in r[:p]] for r in rows[1:]], dtype=np.int64).reshape(-1, p)
    vals = np.array([float(r[p]) for r in rows[1:]], dtype=np.float64)
    return SpinTensor.from_entries(n, p, idx, vals)


def format_assignment(sigma) -> str:
    s = np.asarray(sigma)
    if s.size and np.any(s < 0):
        return "".join("+" if x > 0 else "-" for x in s.tolist())
    return "".join("1" if x else "0" for x in s.tolist())


def parse_assignment(line: str, alphabet: str | None = None) -> np.ndarray:
    """Parse a 0/1 or +/- string.  ``alphabet`` forces ``"01"`` or ``"+-"``."""
    line = line.strip()
    chars = set(line)
    if alphabet is None:
        alphabet = "+-" if chars & {"+", "-"} else "01"
    if not chars <= set(alphabet):
        raise ValueError(f"assignment characters {sorted(chars)} outside alphabet {alphabet!r}")
    if alphabet == "01":
        return np.array([c == "1" for c in line], dtype=np.int8)
    return np.array([1 if c == "+" else -1 for c in line], dtype=np.int8)


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
