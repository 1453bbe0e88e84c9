"""Simple undirected graphs, the standard families, BFS distances and edge-list I/O.

Vertex ids are dense integers ``0..n-1``. The family generators fix their
labeling so that other modules can name vertices deterministically:

* ``make_path(n)``: ids in path order.
* ``make_cycle(n)``: cycle ``0-1-...-(n-1)-0``.
* ``make_complete(k)``: ``v_j`` has id ``j-1``.
* ``make_prism(p)``: rim ``u_1..u_p`` has ids ``0..p-1``, rim ``v_1..v_p``
  has ids ``p..2p-1``; spokes join ``u_j`` and ``v_j``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import InvalidParameter, NotConnected, ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"edge ({u}, {v}) has an id outside 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in normalized:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``d`` is a read-only ``n x n`` integer array."""

    n: int
    d: np.ndarray

    def __getitem__(self, key):
        return self.d[key]


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_complete(k: int) -> Graph:
    if k < 1:
        raise InvalidParameter(f"complete graph needs k >= 1, got {k}")
    return Graph.from_edges(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def make_prism(p: int) -> Graph:
    if p < 3:
        raise InvalidParameter(f"prism needs p >= 3, got {p}")
    edges = []
    for i in range(p):
        j = (i + 1) % p
        edges.append((i, j))  # u rim
        edges.append((p + i, p + j))  # v rim
        edges.append((i, p + i))  # spoke
    return Graph.from_edges(2 * p, edges)


def random_connected_graph(n: int, rng: random.Random, extra_p: float = 0.3) -> Graph:
    """Random spanning tree (each vertex joins an earlier one) plus independent extra edges."""
    if n < 1:
        raise InvalidParameter(f"need n >= 1, got {n}")
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return min(_bfs(g, 0)) >= 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Per-source BFS. Raises NotConnected as soon as a BFS misses a vertex."""
    if g.n == 0:
        raise InvalidParameter("empty graph has no distances")
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if min(row) < 0:
            raise NotConnected(f"vertex {row.index(-1)} unreachable from {s}")
        d[s] = row
    d.setflags(write=False)
    return DistanceMatrix(g.n, d)


# -- edge-list text format ---------------------------------------------------
#   c <comment>
#   p <n> <m>
#   e <u> <v>      (0-based, u < v)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = m = None
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: second header line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: header must be 'p <n> <m>'")
            n, m = _ints(parts[1:], lineno)
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative counts")
        elif tag == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: edge must be 'e <u> <v>'")
            u, v = _ints(parts[1:], lineno)
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: id out of range 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"line {lineno}: duplicate edge {key}")
            seen.add(key)
        else:
            raise ParseError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(seen) != m:
        raise ParseError(f"header declares {m} edges, found {len(seen)}")
    return Graph.from_edges(n, seen)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {tokens}") from None


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_edge_list(g, comments))
