"""Homomorphisms Q^d_{z-1} -> Cay(Z_2^n, S) built from an odd relation, and coloring pullback."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Sequence

from . import gf2
from .cayley import ConnectionSet
from .coloring import Coloring


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class HomWitness:
    """``e_j -> images[j]`` for ``j < z - 1``; the diagonal goes to ``images[-1]``.

    ``support`` holds 0-based indices into the sorted connection set.
    """

    z: int
    n: int
    target: tuple[int, ...]
    support: tuple[int, ...]
    images: tuple[int, ...]

    @property
    def source_dim(self) -> int:
        return self.z - 1

    def psi(self, x: int) -> int:
        acc = 0
        j = 0
        while x:
            if x & 1:
                acc ^= self.images[j]
            x >>= 1
            j += 1
        return acc

    def to_json(self, verified: bool | None = None) -> dict:
        if verified is None:
            verified = verify_witness(self)
        return {
            "z": self.z,
            "support": [i + 1 for i in self.support],
            "images": list(self.images),
            "verified": bool(verified),
        }

    @classmethod
    def from_json(cls, data: dict, n: int, target: Sequence[int]) -> HomWitness:
        return cls(
            int(data["z"]),
            n,
            tuple(int(s) for s in target),
            tuple(int(i) - 1 for i in data["support"]),
            tuple(int(x) for x in data["images"]),
        )


def build_witness(n: int, S: ConnectionSet | Sequence[int], support: Sequence[int]) -> HomWitness:
    S = S if isinstance(S, ConnectionSet) else ConnectionSet(n, tuple(S))
    support = tuple(support)
    z = len(support)
    if z % 2 == 0:
        raise WitnessError(f"support size z={z} must be odd")
    if z < 3:
        raise WitnessError(f"support size z={z} must be at least 3 (z=1 means a loop)")
    if list(support) != sorted(set(support)):
        raise WitnessError("support indices must be strictly increasing")
    if support[0] < 0 or support[-1] >= len(S):
        raise WitnessError(f"support indices must lie in [0, {len(S)})")
    images = tuple(S.elements[i] for i in support)
    if reduce(xor, images) != 0:
        raise WitnessError("support elements do not sum to zero, so they are not a relation")
    return HomWitness(z, n, S.elements, support, images)


def verify_witness(w: HomWitness) -> bool:
    """Exhaustive edge check of psi over Q^d_{z-1}, plus consistency of the recorded data."""
    if w.z < 3 or w.z % 2 == 0 or len(w.images) != w.z or len(w.support) != w.z:
        return False
    target = set(w.target)
    if any(not 0 <= i < len(w.target) for i in w.support):
        return False
    if any(w.target[i] != img for i, img in zip(w.support, w.images)):
        return False
    d = w.source_dim
    gens = [1 << j for j in range(d)] + [gf2.all_ones(d)]
    for u in range(1 << d):
        pu = w.psi(u)
        for g in gens:
            v = u ^ g
            if u < v and (pu ^ w.psi(v)) not in target:
                return False
    # the diagonal image is forced by the relation
    return w.psi(gf2.all_ones(d)) == w.images[-1]


def pull_back_coloring(w: HomWitness, c: Coloring) -> Coloring:
    """``c . psi``: a coloring of Q^d_{z-1}, proper whenever ``c`` is."""
    if not verify_witness(w):
        raise WitnessError("witness does not verify")
    if len(c.colors) != 1 << w.n or any(x is None or x < 0 for x in c.colors):
        raise ValueError(f"coloring must assign a color to all {1 << w.n} target vertices")
    return Coloring(tuple(c.colors[w.psi(x)] for x in range(1 << w.source_dim)), c.k)
