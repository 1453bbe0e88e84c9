"""Metric representations, resolving-set checks and distance-similar classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidParameter
from .graph_core import DistanceMatrix

VertexSet = tuple[int, ...]
Representation = tuple[int, ...]


def vertex_set(dm: DistanceMatrix, ids: Iterable[int]) -> VertexSet:
    """Validate ids against ``dm`` and return them in increasing order."""
    s = tuple(sorted(int(i) for i in ids))
    if len(set(s)) != len(s):
        raise InvalidParameter(f"repeated vertex in {s}")
    for v in s:
        if not 0 <= v < dm.n:
            raise InvalidParameter(f"vertex {v} outside 0..{dm.n - 1}")
    return s


def _nonempty(dm: DistanceMatrix, s: Iterable[int]) -> VertexSet:
    s = vertex_set(dm, s)
    if not s:
        raise InvalidParameter("representations need a non-empty vertex set")
    return s


def representation(dm: DistanceMatrix, v: int, s: Iterable[int]) -> Representation:
    s = _nonempty(dm, s)
    if not 0 <= v < dm.n:
        raise InvalidParameter(f"vertex {v} outside 0..{dm.n - 1}")
    return tuple(int(x) for x in dm.d[v, list(s)])


def find_collision(dm: DistanceMatrix, s: Iterable[int]) -> tuple[int, int] | None:
    """Lexicographically smallest pair ``u < v`` with ``r(u|S) == r(v|S)``, or None."""
    s = _nonempty(dm, s)
    first_seen: dict[Representation, int] = {}
    best = None
    for v, row in enumerate(dm.d[:, list(s)].tolist()):
        key = tuple(row)
        u = first_seen.get(key)
        if u is None:
            first_seen[key] = v
        elif best is None or (u, v) < best:
            # v scans upward, so the first collision for a given u is its smallest partner
            best = (u, v)
    return best


def is_resolving(dm: DistanceMatrix, s: Iterable[int]) -> bool:
    return find_collision(dm, s) is None


@dataclass(frozen=True)
class DistanceSimilarPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)


def distance_similar(dm: DistanceMatrix, u: int, v: int) -> bool:
    if u == v:
        return True
    mask = np.ones(dm.n, dtype=bool)
    mask[[u, v]] = False
    return bool(np.array_equal(dm.d[u, mask], dm.d[v, mask]))


def distance_similar_partition(dm: DistanceMatrix) -> DistanceSimilarPartition:
    label = [-1] * dm.n
    classes: list[list[int]] = []
    for u in range(dm.n):
        if label[u] >= 0:
            continue
        label[u] = len(classes)
        members = [u]
        for v in range(u + 1, dm.n):
            if label[v] < 0 and distance_similar(dm, u, v):
                label[v] = label[u]
                members.append(v)
        classes.append(members)
    return DistanceSimilarPartition(tuple(tuple(c) for c in classes))


def class_lower_bound(p: DistanceSimilarPartition) -> int:
    """Every resolving set misses at most one vertex per class, hence ``|V| - k``."""
    return p.n - p.k


def forced_vertices(p: DistanceSimilarPartition) -> VertexSet:
    """All members of every class except its largest id."""
    return tuple(sorted(v for c in p.classes for v in c[:-1]))
