"""Vertex- and edge-amalgamation of block graphs.

Global ids are assigned shared vertices first (``c = 0`` in vertex mode,
``c1 = 0, c2 = 1`` in edge mode), then the non-terminal vertices of each
block in input order, preserving local order inside a block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import InvalidParameter, ParseError
from .graph_core import Graph, is_connected, make_complete, make_cycle, make_prism

Terminal = Union[int, tuple[int, int]]

FAMILIES = ("K", "C", "Pr")


@dataclass(frozen=True)
class BlockSpec:
    graph: Graph
    terminal: Terminal
    names: tuple[str, ...] | None = None

    @property
    def mode(self) -> str:
        return "edge" if isinstance(self.terminal, tuple) else "vertex"

    def local_name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)


@dataclass(frozen=True)
class AmalgamLabeling:
    mode: str
    shared: tuple[int, ...]
    block_map: tuple[tuple[int, ...], ...]
    names: tuple[tuple[str, ...], ...]
    inverse: dict[int, tuple[tuple[int, int], ...]] = field(repr=False, compare=False)

    @property
    def blocks(self) -> int:
        return len(self.block_map)

    def global_id(self, block: int, local: int | str) -> int:
        """Global id of a block-local vertex given by local id or name."""
        if isinstance(local, str):
            local = self.names[block].index(local)
        return self.block_map[block][local]

    def block_vertices(self, block: int, include_shared: bool = True) -> frozenset[int]:
        ids = set(self.block_map[block])
        if not include_shared:
            ids.difference_update(self.shared)
        return frozenset(ids)


def _check_block(i: int, block: BlockSpec, mode: str) -> None:
    g = block.graph
    if block.mode != mode:
        raise InvalidParameter(f"block {i}: {block.mode}-mode terminal given to {mode}-amalgamation")
    if mode == "vertex":
        if g.n < 2:
            raise InvalidParameter(f"block {i}: vertex mode needs >= 2 vertices")
        if not 0 <= block.terminal < g.n:
            raise InvalidParameter(f"block {i}: terminal {block.terminal} out of range")
    else:
        if g.n < 3:
            raise InvalidParameter(f"block {i}: edge mode needs >= 3 vertices")
        a, b = block.terminal
        if a == b or not g.has_edge(a, b):
            raise InvalidParameter(f"block {i}: terminal endpoints {a}, {b} are not adjacent")
    if not is_connected(g):
        raise InvalidParameter(f"block {i}: graph is not connected")
    if block.names is not None and len(block.names) != g.n:
        raise InvalidParameter(f"block {i}: {len(block.names)} names for {g.n} vertices")


def _amalgamate(blocks: Sequence[BlockSpec], mode: str) -> tuple[Graph, AmalgamLabeling]:
    if not blocks:
        raise InvalidParameter("amalgamation needs at least one block")
    for i, block in enumerate(blocks):
        _check_block(i, block, mode)

    shared = (0,) if mode == "vertex" else (0, 1)
    next_id = len(shared)
    block_map = []
    edges = set()
    for block in blocks:
        terminals = (block.terminal,) if mode == "vertex" else block.terminal
        local_to_global = [-1] * block.graph.n
        for t, gid in zip(terminals, shared):
            local_to_global[t] = gid
        for v in range(block.graph.n):
            if local_to_global[v] < 0:
                local_to_global[v] = next_id
                next_id += 1
        for u, v in block.graph.edges:
            a, b = local_to_global[u], local_to_global[v]
            edges.add((min(a, b), max(a, b)))
        block_map.append(tuple(local_to_global))

    inverse: dict[int, list[tuple[int, int]]] = {}
    for i, mapping in enumerate(block_map):
        for local, gid in enumerate(mapping):
            inverse.setdefault(gid, []).append((i, local))

    labeling = AmalgamLabeling(
        mode=mode,
        shared=shared,
        block_map=tuple(block_map),
        names=tuple(tuple(b.local_name(v) for v in range(b.graph.n)) for b in blocks),
        inverse={k: tuple(v) for k, v in inverse.items()},
    )
    return Graph.from_edges(next_id, edges), labeling


def vertex_amalgamate(blocks: Sequence[BlockSpec]) -> tuple[Graph, AmalgamLabeling]:
    """Identify every block's terminal vertex into the single vertex ``c``."""
    return _amalgamate(blocks, "vertex")


def edge_amalgamate(blocks: Sequence[BlockSpec]) -> tuple[Graph, AmalgamLabeling]:
    """Identify every block's ordered terminal edge ``(a_i, b_i)`` into ``c1 c2``.

    All first endpoints become ``c1`` and all second endpoints ``c2``; the
    orientation matters for blocks without a suitable automorphism.
    """
    return _amalgamate(blocks, "edge")


def amalgamate(blocks: Sequence[BlockSpec], mode: str) -> tuple[Graph, AmalgamLabeling]:
    if mode not in ("vertex", "edge"):
        raise InvalidParameter(f"unknown mode {mode!r}")
    return _amalgamate(blocks, mode)


# -- standard families ----------------------------------------------------


def canonical_terminal(family: str, size: int, mode: str) -> Terminal:
    if family == "K":
        if size < 2:
            raise InvalidParameter(f"K{size} cannot be a block")
        if mode == "vertex":
            return size - 1  # v_k
        if size < 3:
            raise InvalidParameter("K2 has no edge terminal that leaves anything to amalgamate")
        return (size - 2, size - 1)  # v_{k-1} v_k
    if family == "C":
        if size < 3:
            raise InvalidParameter(f"C{size} is not a cycle")
        return 0 if mode == "vertex" else (0, 1)
    if family == "Pr":
        if size < 3:
            raise InvalidParameter(f"Pr{size} is not a prism")
        return size if mode == "vertex" else (size, 2 * size - 1)  # v_1 / v_1 v_p
    raise InvalidParameter(f"unknown family {family!r}")


def family_graph(family: str, size: int) -> Graph:
    if family == "K":
        return make_complete(size)
    if family == "C":
        return make_cycle(size)
    if family == "Pr":
        return make_prism(size)
    raise InvalidParameter(f"unknown family {family!r}")


def family_names(family: str, size: int) -> tuple[str, ...]:
    if family == "Pr":
        return tuple(f"u{j}" for j in range(1, size + 1)) + tuple(f"v{j}" for j in range(1, size + 1))
    return tuple(f"v{j}" for j in range(1, size + 1))


def family_block(family: str, size: int, mode: str) -> BlockSpec:
    terminal = canonical_terminal(family, size, mode)
    return BlockSpec(family_graph(family, size), terminal, family_names(family, size))


_DSL_TOKEN = re.compile(r"^(K|C|Pr)(\d+)$")


def parse_block_dsl(text: str) -> list[tuple[str, int]]:
    """``"K3,K4,Pr5"`` -> ``[("K", 3), ("K", 4), ("Pr", 5)]``."""
    out = []
    for token in text.split(","):
        match = _DSL_TOKEN.match(token.strip())
        if match is None:
            raise ParseError(f"bad block token {token!r}; expected K<k>, C<n> or Pr<p>")
        out.append((match.group(1), int(match.group(2))))
    return out


def parse_terminal(text: str) -> Terminal:
    try:
        if ":" in text:
            a, b = text.split(":")
            return (int(a), int(b))
        return int(text)
    except ValueError:
        raise ParseError(f"bad terminal {text!r}; expected <v> or <a>:<b>") from None


# -- labeling sidecar: one line per block-local vertex, "i.<name> <global>" ----


def format_labels(labeling: AmalgamLabeling) -> str:
    lines = []
    for i, mapping in enumerate(labeling.block_map, 1):
        for local, gid in enumerate(mapping):
            lines.append(f"{i}.{labeling.names[i - 1][local]} {gid}")
    return "\n".join(lines) + "\n"


def parse_labels(text: str) -> dict[str, int]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            name, gid = line.split()
            out[name] = int(gid)
        except ValueError:
            raise ParseError(f"line {lineno}: expected '<block>.<name> <id>'") from None
    return out
