"""Exact metric dimension.

``metric_dimension_naive`` is the reference oracle: plain enumeration of
subsets by increasing size, lexicographic within a size, checked through
``resolving.is_resolving``.

``metric_dimension_exact`` forces all but the largest id of every
distance-similar class into the set and enumerates only the remainder. A
candidate is tested as an OR of per-vertex bitmasks over vertex pairs, and a
branch is cut once the remaining candidates cannot cover every pair. Both
solvers return the lexicographically smallest basis: the smallest basis
always contains the forced vertices (swap a class member for any smaller
one), and appending a fixed disjoint set preserves lexicographic order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetExceeded, InvalidParameter
from .graph_core import DistanceMatrix, Graph, all_pairs_distances
from .resolving import (
    VertexSet,
    class_lower_bound,
    distance_similar_partition,
    forced_vertices,
    is_resolving,
)


@dataclass(frozen=True)
class SolveStats:
    subsets_examined: int
    elapsed_s: float


@dataclass(frozen=True)
class SolveResult:
    dim: int
    basis: VertexSet
    stats: SolveStats
    lower_bound: int = 0


class _Counter:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.budget is not None and self.count > self.budget:
            raise BudgetExceeded(self.budget)


def _require_order(dm: DistanceMatrix) -> None:
    if dm.n < 2:
        raise InvalidParameter("metric dimension is only computed for n >= 2")


def metric_dimension_naive(dm: DistanceMatrix, budget: int | None = None) -> SolveResult:
    _require_order(dm)
    start = time.perf_counter()
    counter = _Counter(budget)
    for k in range(1, dm.n + 1):
        for s in combinations(range(dm.n), k):
            counter.tick()
            if is_resolving(dm, s):
                return SolveResult(k, s, SolveStats(counter.count, time.perf_counter() - start))
    raise AssertionError("the full vertex set always resolves")


def pair_masks(dm: DistanceMatrix) -> tuple[list[int], int]:
    """Bit ``p`` of ``masks[s]`` is set when ``s`` separates the ``p``-th pair ``x < y``."""
    iu, ju = np.triu_indices(dm.n, k=1)
    masks = []
    for s in range(dm.n):
        row = dm.d[s]
        bits = np.packbits(row[iu] != row[ju], bitorder="little")
        masks.append(int.from_bytes(bits.tobytes(), "little"))
    return masks, (1 << len(iu)) - 1


def metric_dimension_exact(
    g: Graph | DistanceMatrix, budget: int | None = None
) -> SolveResult:
    dm = g if isinstance(g, DistanceMatrix) else all_pairs_distances(g)
    _require_order(dm)
    start = time.perf_counter()
    counter = _Counter(budget)

    partition = distance_similar_partition(dm)
    forced = forced_vertices(partition)
    masks, full = pair_masks(dm)
    base = 0
    for f in forced:
        base |= masks[f]
    forced_set = set(forced)
    rest = [v for v in range(dm.n) if v not in forced_set]
    # suffix[i]: everything rest[i:] can still separate
    suffix = [0] * (len(rest) + 1)
    for i in range(len(rest) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[rest[i]]

    def search(first: int, need: int, acc: int, chosen: list[int]) -> list[int] | None:
        counter.tick()
        if need == 0:
            return chosen if acc == full else None
        for i in range(first, len(rest) - need + 1):
            if acc | suffix[i] != full:
                break  # suffix only shrinks as i grows
            found = search(i + 1, need - 1, acc | masks[rest[i]], chosen + [rest[i]])
            if found is not None:
                return found
        return None

    for t in range(len(rest) + 1):
        found = search(0, t, base, [])
        if found is not None:
            basis = tuple(sorted(forced_set.union(found)))
            return SolveResult(
                len(basis),
                basis,
                SolveStats(counter.count, time.perf_counter() - start),
                lower_bound=class_lower_bound(partition),
            )
    raise AssertionError("the full vertex set always resolves")


def greedy_upper_bound(dm: DistanceMatrix) -> VertexSet:
    """Add the vertex separating the most still-unseparated pairs (ties: smallest id)."""
    _require_order(dm)
    masks, full = pair_masks(dm)
    chosen: list[int] = []
    covered = 0
    while covered != full:
        gains = [(masks[v] & ~covered).bit_count() for v in range(dm.n)]
        best = max(range(dm.n), key=lambda v: (gains[v], -v))
        chosen.append(best)
        covered |= masks[best]
    return tuple(sorted(chosen))
