"""Closed-form dimension formulas for amalgamated families and their witness sets.

Each ``thm_*`` function returns a :class:`FormulaResult` carrying the proof
case that fired. Each ``witness_*`` constructor maps the resolving set built
in the corresponding proof onto the global ids of an amalgam produced by
:func:`build_amalgam`.

Block vertex names follow the family labelings in ``graph_core``: for
``K_k`` the vertex ``v_j`` is local id ``j-1``; for ``Pr_p`` the vertex
``u_j`` is ``j-1`` and ``v_j`` is ``p+j-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Callable, Sequence

from .amalgam import AmalgamLabeling, amalgamate, family_block
from .errors import InvalidParameter, SingleBlockError
from .graph_core import Graph
from .resolving import VertexSet

# Fixed by exact search over p = 3..8 (see tests); not given as a formula upstream.
PRISM_BASE_DIM = {"odd": 2, "even": 3}

_MIN_SIZE = {("K", "vertex"): 2, ("K", "edge"): 3, ("C", "vertex"): 3, ("C", "edge"): 3,
             ("Pr", "vertex"): 3, ("Pr", "edge"): 3}


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    mode: str
    sizes: tuple[int, ...]

    @classmethod
    def create(cls, family: str, mode: str, sizes: Sequence[int]) -> "FamilyInstance":
        key = (family, mode)
        if key not in _MIN_SIZE:
            raise InvalidParameter(f"unsupported family/mode {family}/{mode}")
        sizes = tuple(sorted(int(s) for s in sizes))
        if len(sizes) < 2:
            raise SingleBlockError(f"{family} {mode}-amalgam formulas need n >= 2 blocks, got {len(sizes)}")
        if sizes[0] < _MIN_SIZE[key]:
            raise InvalidParameter(f"{family}{sizes[0]} is not a valid {mode}-mode block")
        return cls(family, mode, sizes)

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def n2(self) -> int:
        return self.sizes.count(2)

    @property
    def n3(self) -> int:
        return self.sizes.count(3)

    @property
    def ne(self) -> int:
        return sum(1 for s in self.sizes if s % 2 == 0)

    @property
    def no(self) -> int:
        return sum(1 for s in self.sizes if s % 2 == 1)

    @property
    def label(self) -> str:
        return "+".join(map(str, self.sizes))

    def order(self) -> int:
        """Vertex count of the amalgam, without building it."""
        per_block = {"K": lambda s: s, "C": lambda s: s, "Pr": lambda s: 2 * s}[self.family]
        shared = 1 if self.mode == "vertex" else 2
        return shared + sum(per_block(s) - shared for s in self.sizes)


@dataclass(frozen=True)
class FormulaResult:
    kind: str  # "exact" | "bounds"
    lower: int
    upper: int
    case: str

    @property
    def value(self) -> int:
        if self.kind != "exact":
            raise InvalidParameter("bounds result has no single value")
        return self.lower

    def admits(self, d: int) -> bool:
        return self.lower <= d <= self.upper


def _exact(value: int, case: str) -> FormulaResult:
    return FormulaResult("exact", value, value, case)


def dim_formula_base(family: str, size: int) -> int:
    if family == "K":
        if size < 2:
            raise InvalidParameter(f"K{size}: need k >= 2")
        return size - 1
    if family == "P":
        if size < 2:
            raise InvalidParameter(f"P{size}: need n >= 2")
        return 1
    if family == "C":
        if size < 3:
            raise InvalidParameter(f"C{size}: need n >= 3")
        return 2
    if family == "Pr":
        if size < 3:
            raise InvalidParameter(f"Pr{size}: need p >= 3")
        return PRISM_BASE_DIM["odd" if size % 2 else "even"]
    raise InvalidParameter(f"unknown family {family!r}")


def poisson_zhang_lower_bound(d1: int, d2: int) -> int:
    if d1 < 1 or d2 < 1:
        raise InvalidParameter("block dimensions are at least 1")
    return d1 + d2 - 2


def _base_sum(inst: FamilyInstance) -> int:
    return sum(dim_formula_base(inst.family, s) for s in inst.sizes)


def thm_vertex_amal_cycle(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("C", "vertex", sizes)
    total = _base_sum(inst)
    if inst.ne == 0:
        return _exact(total - inst.n, "ne=0")
    return _exact(total - inst.n + inst.ne - 1, "ne>=1")


def bounds_edge_amal_cycle(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("C", "edge", sizes)
    hi = _base_sum(inst) - inst.n
    return FormulaResult("bounds", max(1, hi - 2), hi, "bounds")


def thm_vertex_amal_complete(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("K", "vertex", sizes)
    total = _base_sum(inst)
    if inst.n2 >= 2:
        return _exact(total - inst.n + inst.n2 - 1, "n2>=2")
    return _exact(total - inst.n, "n2=1" if inst.n2 == 1 else "n2=0")


def thm_edge_amal_complete(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("K", "edge", sizes)
    total = _base_sum(inst)
    n, n3 = inst.n, inst.n3
    if n3 == 0:
        return _exact(total - 2 * n + 1, "n3=0")
    if n3 == 1 and n == 2:
        return _exact(total - 2 * n + 2, "n3=1,n=2")
    return _exact(total - 2 * n + n3, "n3=n" if n3 == n else "otherwise")


def thm_vertex_amal_prism(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("Pr", "vertex", sizes)
    total = _base_sum(inst)
    if inst.no == 0:
        return _exact(total - inst.n, "no=0")
    return _exact(total - inst.n + inst.no - 1, "no>=1")


def thm_edge_amal_prism(sizes: Sequence[int]) -> FormulaResult:
    inst = FamilyInstance.create("Pr", "edge", sizes)
    return _exact(_base_sum(inst) - inst.n + inst.no - 1, "no=0" if inst.no == 0 else "no>=1")


# -- witness sets --------------------------------------------------------------


def build_amalgam(inst: FamilyInstance) -> tuple[Graph, AmalgamLabeling]:
    return amalgamate([family_block(inst.family, s, inst.mode) for s in inst.sizes], inst.mode)


def _check_labeling(inst: FamilyInstance, labeling: AmalgamLabeling) -> None:
    width = 2 if inst.family == "Pr" else 1
    got = tuple(len(m) // width for m in labeling.block_map)
    if labeling.mode != inst.mode or got != inst.sizes:
        raise InvalidParameter(f"labeling does not describe {inst.family} {inst.mode} {inst.label}")


def _kv(labeling: AmalgamLabeling, block: int, j: int) -> int:
    """Global id of ``v_j`` in complete block ``block`` (0-based block index)."""
    return labeling.block_map[block][j - 1]


def _pu(labeling: AmalgamLabeling, block: int, j: int) -> int:
    return labeling.block_map[block][j - 1]


def _pv(labeling: AmalgamLabeling, inst: FamilyInstance, block: int, j: int) -> int:
    return labeling.block_map[block][inst.sizes[block] + j - 1]


def witness_vertex_amal_complete(inst: FamilyInstance, labeling: AmalgamLabeling) -> VertexSet:
    _check_labeling(inst, labeling)
    k, n2 = inst.sizes, inst.n2
    s = set()
    if n2 >= 2:
        s.update(_kv(labeling, i, 1) for i in range(n2 - 1))
    for i in range(n2, inst.n):
        s.update(_kv(labeling, i, j) for j in range(1, k[i] - 1))
    return tuple(sorted(s))


def witness_edge_amal_complete(inst: FamilyInstance, labeling: AmalgamLabeling) -> VertexSet:
    _check_labeling(inst, labeling)
    k, n, n3 = inst.sizes, inst.n, inst.n3
    c1 = labeling.shared[0]
    s = {c1}
    case = thm_edge_amal_complete(k).case
    if case == "n3=0":
        for i in range(n):
            s.update(_kv(labeling, i, j) for j in range(1, k[i] - 2))
    elif case == "n3=1,n=2":
        s.add(_kv(labeling, 0, 1))
        s.update(_kv(labeling, 1, j) for j in range(1, k[1] - 2))
    elif case == "n3=n":
        s.update(_kv(labeling, i, 1) for i in range(n3 - 1))
    else:
        # v_1 of the last order-3 block stays out; its representation starts (1, 2, ...)
        s.update(_kv(labeling, i, 1) for i in range(n3 - 1))
        for i in range(n3, n):
            s.update(_kv(labeling, i, j) for j in range(1, k[i] - 2))
    return tuple(sorted(s))


def _min_odd_block(inst: FamilyInstance) -> int | None:
    odd = [i for i, p in enumerate(inst.sizes) if p % 2]
    return min(odd, key=lambda i: (inst.sizes[i], i)) if odd else None


def witness_vertex_amal_prism(inst: FamilyInstance, labeling: AmalgamLabeling) -> VertexSet:
    _check_labeling(inst, labeling)
    io = _min_odd_block(inst)
    s = set()
    for i, p in enumerate(inst.sizes):
        j = ceil(p / 2)
        if i != io:
            s.add(_pu(labeling, i, j))
        s.add(_pv(labeling, inst, i, j))
    return tuple(sorted(s))


def witness_edge_amal_prism(inst: FamilyInstance, labeling: AmalgamLabeling) -> VertexSet | None:
    """None when every block is even: the construction needs an odd block."""
    _check_labeling(inst, labeling)
    io = _min_odd_block(inst)
    if io is None:
        return None
    s = set()
    for i, p in enumerate(inst.sizes):
        if p % 2 == 0:
            s.update((_pu(labeling, i, p // 2), _pv(labeling, inst, i, p // 2)))
        elif i != io:
            s.update((_pv(labeling, inst, i, (p + 1) // 2), _pu(labeling, i, 1)))
        else:
            s.add(_pv(labeling, inst, i, (p + 1) // 2))
    return tuple(sorted(s))


# -- registry used by the verification sweeps ----------------------------------


@dataclass(frozen=True)
class Theorem:
    key: str
    family: str
    mode: str
    formula: Callable[[Sequence[int]], FormulaResult]
    witness: Callable[[FamilyInstance, AmalgamLabeling], VertexSet | None] | None


THEOREMS = {
    t.key: t
    for t in (
        Theorem("cycle-vertex", "C", "vertex", thm_vertex_amal_cycle, None),
        Theorem("cycle-edge", "C", "edge", bounds_edge_amal_cycle, None),
        Theorem("complete-vertex", "K", "vertex", thm_vertex_amal_complete, witness_vertex_amal_complete),
        Theorem("complete-edge", "K", "edge", thm_edge_amal_complete, witness_edge_amal_complete),
        Theorem("prism-vertex", "Pr", "vertex", thm_vertex_amal_prism, witness_vertex_amal_prism),
        Theorem("prism-edge", "Pr", "edge", thm_edge_amal_prism, witness_edge_amal_prism),
    )
}


def is_complete_vertex_boundary(inst: FamilyInstance) -> bool:
    """One K_2 block plus exactly one larger block: the proof's set misses c vs v_{k-1}."""
    return (
        inst.family == "K"
        and inst.mode == "vertex"
        and inst.n2 == 1
        and sum(1 for k in inst.sizes if k >= 3) == 1
    )
