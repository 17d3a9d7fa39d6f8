"""GF(2) linear algebra on int bitmasks.

Vectors are little-endian: bit ``j`` (value ``1 << j``) holds coordinate ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_WIDTH = 24


def check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {width}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def unit(j: int, width: int) -> int:
    """Standard basis vector e_j (1-based coordinate)."""
    check_width(width)
    if not 1 <= j <= width:
        raise ValueError(f"coordinate {j} out of range for width {width}")
    return 1 << (j - 1)


def all_ones(width: int) -> int:
    check_width(width)
    return (1 << width) - 1


@dataclass(frozen=True)
class BitVec:
    bits: int
    width: int

    def __post_init__(self):
        check_width(self.width)
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits:#x} do not fit in width {self.width}")

    def __xor__(self, other: BitVec) -> BitVec:
        if self.width != other.width:
            raise ValueError("width mismatch")
        return BitVec(self.bits ^ other.bits, self.width)

    __add__ = __xor__

    def __int__(self) -> int:
        return self.bits

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> j) & 1 for j in range(self.width))


@dataclass(frozen=True)
class Gf2Matrix:
    """A ``rows x len(columns)`` matrix stored column-wise as bitmasks."""

    rows: int
    columns: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        for c in self.columns:
            if c < 0 or c >> self.rows:
                raise ValueError(f"column {c:#x} does not fit in {self.rows} rows")

    @property
    def cols(self) -> int:
        return len(self.columns)

    def row_masks(self) -> list[int]:
        """Row ``i`` as a bitmask over column indices."""
        out = []
        for i in range(self.rows):
            r = 0
            for j, c in enumerate(self.columns):
                if (c >> i) & 1:
                    r |= 1 << j
            out.append(r)
        return out

    def apply(self, v: int) -> int:
        """B @ v, with ``v`` a bitmask over column indices."""
        acc = 0
        j = 0
        while v:
            if v & 1:
                acc ^= self.columns[j]
            v >>= 1
            j += 1
        return acc


def _rref(rows: Iterable[int]) -> list[tuple[int, int]]:
    """Reduced row echelon form; returns (pivot_bit, row) sorted by pivot ascending."""
    basis: list[tuple[int, int]] = []
    for r in rows:
        for p, b in basis:
            if (r >> p) & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        basis = [(q, b ^ r if (b >> p) & 1 else b) for q, b in basis]
        basis.append((p, r))
    basis.sort()
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(_rref(vectors))


def kernel_basis(B: Gf2Matrix) -> list[int]:
    """Canonical basis of the null space of ``B``.

    One vector per free column (ascending), each equal to that free column's
    unit vector plus the pivot columns needed to cancel it.
    """
    ech = _rref(B.row_masks())
    pivots = {p for p, _ in ech}
    out = []
    for f in range(B.cols):
        if f in pivots:
            continue
        v = 1 << f
        for p, row in ech:
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def solve_all_ones(B: Gf2Matrix) -> int | None:
    """Some ``x`` with ``x . b = 1`` for every column ``b``, or None."""
    # equations: one per column, unknowns are the B.rows coordinates of x
    aug_bit = 1 << B.rows
    ech = _rref(c | aug_bit for c in B.columns)
    x = 0
    for p, row in ech:
        if p == B.rows:
            return None  # 0 = 1
        if row & aug_bit:
            x |= 1 << p
    return x


def span(generators: Sequence[int]) -> list[int]:
    """All elements of the span, ascending."""
    elems = [0]
    for _, b in _rref(generators):
        elems += [e ^ b for e in elems]
    return sorted(elems)


def reduced_basis_high(vectors: Iterable[int]) -> list[int]:
    """Basis with distinct leading (highest) bits, fully reduced, leading bit descending.

    Greedily xoring these into ``x`` whenever its leading bit is set yields the
    minimum element of ``x + span``.
    """
    basis: dict[int, int] = {}
    for v in vectors:
        for h in sorted(basis, reverse=True):
            if (v >> h) & 1:
                v ^= basis[h]
        if not v:
            continue
        h = v.bit_length() - 1
        for q in basis:
            if (basis[q] >> h) & 1:
                basis[q] ^= v
        basis[h] = v
    return [basis[h] for h in sorted(basis, reverse=True)]


def coset_min(x: int, basis_high: Sequence[int]) -> int:
    for b in basis_high:
        if x ^ b < x:
            x ^= b
    return x
