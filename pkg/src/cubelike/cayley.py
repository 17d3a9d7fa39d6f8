"""Cubelike graphs Cay(Z_2^n, S) on bitmask vertices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import gf2


class LoopError(ValueError):
    """The connection set contains 0, so every vertex carries a loop."""


@dataclass(frozen=True)
class ConnectionSet:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        gf2.check_width(self.n)
        elems = tuple(sorted({int(s) for s in self.elements}))
        for s in elems:
            if not 0 <= s < (1 << self.n):
                raise ValueError(f"element {s} is not in Z_2^{self.n}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def parse(cls, n: int, text: str) -> ConnectionSet:
        """Parse a comma-separated list of bitmask integers, e.g. ``"1,2,4,8,15"``."""
        text = text.strip()
        if not text:
            return cls(n, ())
        try:
            elems = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"connection set {text!r} is not a list of integers") from None
        return cls(n, elems)

    @property
    def has_loop(self) -> bool:
        return bool(self.elements) and self.elements[0] == 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.elements)

    def encode(self) -> str:
        return ",".join(map(str, self.elements))


@dataclass(frozen=True)
class CubelikeGraph:
    set: ConnectionSet

    @property
    def n(self) -> int:
        return self.set.n

    @property
    def vertex_count(self) -> int:
        return 1 << self.set.n

    @property
    def has_loop(self) -> bool:
        return self.set.has_loop

    @property
    def degree(self) -> int:
        return len(self.set)

    def adjacent(self, u: int, v: int) -> bool:
        return (u ^ v) in self.set

    def neighbors(self, u: int) -> list[int]:
        return [u ^ s for s in self.set]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once as ``(u, v)`` with ``u <= v``; loops appear as ``(u, u)``."""
        for u in range(self.vertex_count):
            for s in self.set:
                v = u ^ s
                if u <= v:
                    yield u, v

    @cached_property
    def rank(self) -> int:
        return gf2.rank(self.set.elements)

    @cached_property
    def component(self) -> list[int]:
        """Vertices of the identity component, i.e. the span of S, ascending."""
        return gf2.span(self.set.elements)

    @cached_property
    def _coset_basis(self) -> list[int]:
        return gf2.reduced_basis_high(self.set.elements)

    def coset_rep(self, v: int) -> int:
        """Minimum vertex of the component containing ``v``."""
        return gf2.coset_min(v, self._coset_basis)

    def component_count(self) -> int:
        return 1 << (self.n - self.rank)

    def component_neighbors(self) -> np.ndarray:
        """Neighbor table of the identity component, indexed by position in :attr:`component`."""
        index = {v: i for i, v in enumerate(self.component)}
        table = np.empty((len(self.component), len(self.set)), dtype=np.int32)
        for i, v in enumerate(self.component):
            for j, s in enumerate(self.set):
                table[i, j] = index[v ^ s]
        return table


def build_graph(n: int, S: ConnectionSet | Iterable[int]) -> CubelikeGraph:
    if not isinstance(S, ConnectionSet):
        S = ConnectionSet(n, tuple(S))
    elif S.n != n:
        raise ValueError(f"connection set has dimension {S.n}, expected {n}")
    return CubelikeGraph(S)


def cube_with_diagonals(n: int) -> CubelikeGraph:
    """Q^d_n: the n-cube plus an edge between every pair of antipodes."""
    gens = [gf2.unit(j, n) for j in range(1, n + 1)] + [gf2.all_ones(n)]
    return build_graph(n, gens)


def is_bipartite_bfs(g: CubelikeGraph) -> bool:
    if g.has_loop:
        return False
    side = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if side[v] < 0:
                    side[v] = side[u] ^ 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def bipartition_functional(n: int, S: ConnectionSet | Iterable[int]) -> int | None:
    """A functional ``f`` with ``f . s = 1`` for every ``s`` in S, if one exists."""
    S = S if isinstance(S, ConnectionSet) else ConnectionSet(n, tuple(S))
    if S.has_loop:
        raise LoopError("connection set contains 0: the graph has loops and no proper coloring")
    return gf2.solve_all_ones(gf2.Gf2Matrix(n, S.elements))


def is_bipartite_parity(n: int, S: ConnectionSet | Iterable[int]) -> bool:
    """Bipartite iff some linear functional sends every element of S to 1."""
    return bipartition_functional(n, S) is not None
