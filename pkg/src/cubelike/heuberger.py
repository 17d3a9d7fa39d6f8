"""Heuberger matrices ``(A | 2I_m)`` of cubelike graphs and the Cayley graphs they present.

Generator ``i`` of Z^m maps to the ``i``-th element of the sorted connection
set; the columns of ``A`` span the relations among those elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import gf2
from .cayley import ConnectionSet, build_graph, cube_with_diagonals


@dataclass(frozen=True)
class HeubergerMatrix:
    m: int
    a_columns: tuple[tuple[int, ...], ...]
    includes_2I: bool = True
    source: tuple[int, tuple[int, ...]] | None = field(default=None, compare=False)

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.a_columns)
        for c in cols:
            if len(c) != self.m:
                raise ValueError(f"column {c} has length {len(c)}, expected {self.m}")
        object.__setattr__(self, "a_columns", cols)

    @property
    def is_reduced(self) -> bool:
        return all(x in (0, 1) for c in self.a_columns for x in c)

    def column_masks(self) -> list[int]:
        """Columns mod 2 as bitmasks over generator indices."""
        return [sum(1 << i for i, x in enumerate(c) if x % 2) for c in self.a_columns]

    def to_json(self) -> dict:
        return {"m": self.m, "a_columns": [list(c) for c in self.a_columns], "two_identity": self.includes_2I}

    @classmethod
    def from_json(cls, data: dict) -> HeubergerMatrix:
        return cls(int(data["m"]), tuple(tuple(c) for c in data["a_columns"]), bool(data["two_identity"]))


def _mask_to_column(mask: int, m: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(m))


def heuberger_matrix(n: int, S: ConnectionSet | Sequence[int]) -> HeubergerMatrix:
    S = S if isinstance(S, ConnectionSet) else ConnectionSet(n, tuple(S))
    if not len(S):
        raise ValueError("Heuberger matrix needs a nonempty connection set")
    m = len(S)
    kernel = sorted(gf2.kernel_basis(gf2.Gf2Matrix(n, S.elements)))
    return HeubergerMatrix(m, tuple(_mask_to_column(v, m) for v in kernel), True, (n, S.elements))


def reduce_columns_mod2(M: HeubergerMatrix) -> HeubergerMatrix:
    """Entries mod 2, zero columns dropped. Sound only alongside the 2I block."""
    cols = []
    for c in M.a_columns:
        r = tuple(x % 2 for x in c)
        if any(r):
            cols.append(r)
    return HeubergerMatrix(M.m, tuple(cols), M.includes_2I, M.source)


@dataclass(frozen=True)
class SacgGraph:
    """Cayley graph of Z_2^m modulo the span of the relation columns.

    Vertices are minimum coset representatives. ``generators[i]`` is the
    representative of the coset of ``e_i``.
    """

    m: int
    relations: tuple[int, ...]
    vertices: tuple[int, ...]
    generators: tuple[int, ...]
    _basis: tuple[int, ...] = field(repr=False, compare=False)

    def canonical(self, x: int) -> int:
        return gf2.coset_min(x, self._basis)

    def neighbors(self, u: int) -> list[int]:
        """With multiplicity, one per generator."""
        return [self.canonical(u ^ (1 << i)) for i in range(self.m)]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


def sacg_build(M: HeubergerMatrix) -> SacgGraph:
    if not M.includes_2I:
        raise ValueError("only matrices containing the 2I block are supported")
    if not M.is_reduced:
        raise ValueError("reduce the matrix to 0/1 entries first")
    rel = M.column_masks()
    basis = gf2.reduced_basis_high(rel)
    verts = sorted({gf2.coset_min(x, basis) for x in range(1 << M.m)})
    gens = tuple(gf2.coset_min(1 << i, basis) for i in range(M.m))
    return SacgGraph(M.m, tuple(rel), tuple(verts), gens, tuple(basis))


def _linear_image(x: int, images: Sequence[int]) -> int:
    acc = 0
    i = 0
    while x:
        if x & 1:
            acc ^= images[i]
        x >>= 1
        i += 1
    return acc


def verify_canonical_iso(M: HeubergerMatrix, n: int, S: ConnectionSet | Sequence[int]) -> bool:
    """Check that ``e_i -> s_i`` induces an isomorphism from the SACG of ``M``
    onto the identity component of Cay(Z_2^n, S)."""
    S = S if isinstance(S, ConnectionSet) else ConnectionSet(n, tuple(S))
    if M.m != len(S):
        return False
    M = reduce_columns_mod2(M)
    elems = S.elements
    # well defined: every relation column must map to 0
    for r in M.column_masks():
        if _linear_image(r, elems) != 0:
            return False
    Y = sacg_build(M)
    X = build_graph(n, S)
    phi = {u: _linear_image(u, elems) for u in Y.vertices}
    if sorted(phi.values()) != X.component:
        return False
    for u in Y.vertices:
        nbrs = set(Y.neighbors(u))
        for v in Y.vertices:
            if (v in nbrs) != X.adjacent(phi[u], phi[v]):
                return False
    return True


def qd_coordinates(x: int, z: int) -> int:
    """(x_1 + x_z, ..., x_{z-1} + x_z): the identification Z_2^z / <w_z> -> Z_2^(z-1)."""
    low = x & ((1 << (z - 1)) - 1)
    return low ^ ((1 << (z - 1)) - 1) if (x >> (z - 1)) & 1 else low


def all_ones_matrix(z: int) -> HeubergerMatrix:
    """``(w_z^t | 2I_z)``."""
    return HeubergerMatrix(z, ((1,) * z,), True)


def verify_qd_iso(z: int) -> bool:
    """Check that the SACG of ``(w_z^t | 2I_z)`` is isomorphic to Q^d_{z-1} via :func:`qd_coordinates`."""
    if z < 3 or z % 2 == 0:
        raise ValueError(f"z must be odd and at least 3, got {z}")
    Y = sacg_build(all_ones_matrix(z))
    Q = cube_with_diagonals(z - 1)
    image = {u: qd_coordinates(u, z) for u in Y.vertices}
    if sorted(image.values()) != list(range(Q.vertex_count)):
        return False
    for u in Y.vertices:
        nbrs = set(Y.neighbors(u))
        for v in Y.vertices:
            if (v in nbrs) != Q.adjacent(image[u], image[v]):
                return False
    return True


@dataclass(frozen=True)
class OddColumn:
    index: int
    support: tuple[int, ...]  # 0-based generator indices

    @property
    def z(self) -> int:
        return len(self.support)


def odd_columns(M: HeubergerMatrix) -> list[OddColumn]:
    if not M.is_reduced:
        raise ValueError("reduce the matrix to 0/1 entries first")
    out = []
    for idx, c in enumerate(M.a_columns):
        supp = tuple(i for i, x in enumerate(c) if x)
        if len(supp) % 2:
            out.append(OddColumn(idx, supp))
    return out


def find_odd_column(M: HeubergerMatrix) -> OddColumn | None:
    """The lowest-index column with an odd number of ones."""
    found = odd_columns(M)
    return found[0] if found else None


def smallest_odd_column(M: HeubergerMatrix) -> OddColumn | None:
    """Smallest support, ties broken by lowest column index."""
    found = odd_columns(M)
    return min(found, key=lambda oc: (oc.z, oc.index)) if found else None


