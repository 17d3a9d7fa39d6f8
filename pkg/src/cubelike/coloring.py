"""Exact coloring of cubelike graphs, the 4-coloring of Q^d_n, and the
3-coloring reduction Q^d_{n+2} -> Q^d_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from . import _kernels, gf2
from .cayley import CubelikeGraph, LoopError, cube_with_diagonals


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError(f"colors must lie in [0, {self.k})")

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        return cls(tuple(data["colors"]), int(data["k"]))


@dataclass(frozen=True)
class SolveResult:
    status: str  # "colorable", "uncolorable" or "has_loop"
    k: int | None = None
    chi: int | None = None
    coloring: Coloring | None = None
    lower_bound: int | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "k": self.k,
            "chi": self.chi,
            "lower_bound": self.lower_bound,
            "coloring": self.coloring.to_json() if self.coloring else None,
        }


def greedy_clique(table: np.ndarray) -> list[int]:
    """A clique through vertex 0 of a neighbor table, grown greedily from each neighbor."""
    if table.shape[0] == 0:
        return []
    adj = [set(row.tolist()) for row in table]
    best = [0]
    for start in adj[0]:
        clique = [0, start]
        for v in sorted(adj[0] & adj[start]):
            if all(v in adj[c] for c in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _spread(g: CubelikeGraph, comp_colors: Sequence[int]) -> list[int]:
    # translate the component coloring to every coset
    index = {v: i for i, v in enumerate(g.component)}
    if len(index) == g.vertex_count:
        return list(comp_colors)
    return [comp_colors[index[v ^ g.coset_rep(v)]] for v in range(g.vertex_count)]


def k_colorable(g: CubelikeGraph, k: int) -> Coloring | None:
    """A proper ``k``-coloring of ``g``, or None if none exists."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.has_loop:
        raise LoopError("graph has loops and is not properly colorable")
    if not len(g.set):
        return Coloring((0,) * g.vertex_count, k)
    table = g.component_neighbors()
    clique = greedy_clique(table)
    if len(clique) > k:
        return None
    colors, _ = _kernels.search_coloring(
        table, np.full(table.shape[0], table.shape[1], np.int32), k,
        clique, list(range(len(clique))), len(clique),
    )
    if colors is None:
        return None
    return Coloring(tuple(_spread(g, colors)), k)


def chromatic_number(g: CubelikeGraph) -> SolveResult:
    """Exact chromatic number by increasing ``k`` from a clique lower bound."""
    if g.has_loop:
        return SolveResult("has_loop")
    if not len(g.set):
        return SolveResult("colorable", 1, 1, Coloring((0,) * g.vertex_count, 1), 1)
    lb = len(greedy_clique(g.component_neighbors()))
    k = lb
    while True:
        c = k_colorable(g, k)
        if c is not None:
            return SolveResult("colorable", k, k, c, lb)
        k += 1


def verify_coloring(g: CubelikeGraph, c: Coloring | Sequence[int]) -> bool:
    """No monochromatic edge; a loop always makes this false."""
    colors = np.asarray(c.colors if isinstance(c, Coloring) else c)
    if colors.shape != (g.vertex_count,):
        raise ValueError(f"coloring must cover all {g.vertex_count} vertices")
    if g.has_loop:
        return False
    idx = np.arange(g.vertex_count)
    return not any((colors == colors[idx ^ s]).any() for s in g.set)


def sokolova_coloring(n: int) -> Coloring:
    """``x -> 2*x_1 + (x_2 + ... + x_n mod 2)``, a proper 4-coloring of Q^d_n."""
    if n < 2:
        raise ValueError("the 4-coloring of Q^d_n needs n >= 2")
    gf2.check_width(n)
    x = np.arange(1 << n)
    rest = np.zeros_like(x)
    for j in range(1, n):
        rest ^= (x >> j) & 1
    return Coloring(tuple((2 * (x & 1) + rest).tolist()), 4)


def pair_to_color(a: int, b: int) -> int:
    """The unique ``k`` in Z_3 with ``{a, b}`` equal to ``{k}`` or ``{k, k+1}``."""
    if a == b or b == (a + 1) % 3:
        return a
    return b


def lift(v: int, n: int, a: int, b: int) -> int:
    """``v * (a, b)``: append two coordinates above the ``n`` existing ones."""
    return v | (a << n) | (b << (n + 1))


def reduce_coloring(c: Coloring) -> Coloring:
    """Collapse a 3-coloring of Z_2^(n+2) to a 3-coloring of Z_2^n.

    ``c'(v)`` is read off the pair ``c(v*(0,0))``, ``c((v + w_n)*(1,0))``.
    """
    if c.k != 3:
        raise ValueError(f"reduction needs a 3-color palette, got {c.k}")
    size = len(c.colors)
    n = size.bit_length() - 3
    if n < 1 or size != 1 << (n + 2):
        raise ValueError(f"coloring of {size} vertices is not a coloring of Z_2^(n+2) with n >= 1")
    w = (1 << n) - 1
    return Coloring(tuple(pair_to_color(c.colors[v], c.colors[lift(v ^ w, n, 1, 0)]) for v in range(1 << n)), 3)


def contrapositive_check(n: int, samples: int, seed: int = 0, batch: int = 20000, backend=None) -> dict:
    """Sample uniform 3-colorings ``c`` of Q^d_{n+2} and test the reduction.

    ``counterexamples`` counts samples whose reduction is proper on Q^d_n while
    ``c`` is proper on Q^d_{n+2}. Since Q^d_n has no proper 3-coloring for even
    ``n``, the edge-local form is also counted: ``local_counterexamples`` are
    (sample, edge ``uv``) pairs with ``c'(u) == c'(v)`` but no monochromatic edge
    of ``c`` inside the 16-point lift of ``uv``.
    """
    big = cube_with_diagonals(n + 2)
    small = cube_with_diagonals(n)
    eu_b, ev_b = np.array(list(big.edges())).T
    eu_s, ev_s = np.array(list(small.edges())).T
    local = []
    for u, v in zip(eu_s.tolist(), ev_s.tolist()):
        L = set(_lift_set(u, v, n, 0, big))
        pairs = [(x, y) for x, y in big.edges() if x in L and y in L]
        local.append((u, v, *np.array(pairs).T))
    rng = np.random.default_rng(seed)
    done = reduced_proper = counterexamples = mono_reduced_edges = local_counterexamples = 0
    while done < samples:
        b = min(batch, samples - done)
        cols = rng.integers(0, 3, size=(b, big.vertex_count), dtype=np.int8)
        red = _kernels.reduce_batch(cols, n, backend=backend)
        ok_small = ~_kernels.mono_edge_any(red, eu_s, ev_s, backend=backend)
        ok_big = ~_kernels.mono_edge_any(cols, eu_b, ev_b, backend=backend)
        reduced_proper += int(ok_small.sum())
        counterexamples += int((ok_small & ok_big).sum())
        for u, v, lu, lv in local:
            mono = red[:, u] == red[:, v]
            mono_reduced_edges += int(mono.sum())
            local_counterexamples += int((mono & ~_kernels.mono_edge_any(cols, lu, lv, backend=backend)).sum())
        done += b
    return {
        "n": n, "samples": done, "seed": seed,
        "reduced_proper": reduced_proper, "counterexamples": counterexamples,
        "mono_reduced_edges": mono_reduced_edges, "local_counterexamples": local_counterexamples,
    }


@dataclass
class EdgeClassReport:
    label: str
    generator: int
    passed_radius: int | None = None
    lift_size: int | None = None
    vacuous: bool = False
    edges_checked: int = 0
    patterns_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "class": self.label,
            "generator": self.generator,
            "passed_radius": self.passed_radius,
            "lift_size": self.lift_size,
            "vacuous": self.vacuous,
            "edges_checked": self.edges_checked,
            "patterns_checked": self.patterns_checked,
            "failures": self.failures,
        }


@dataclass
class LemmaReport:
    n: int
    classes: list[EdgeClassReport]

    @property
    def passed(self) -> bool:
        return all(c.passed_radius is not None for c in self.classes)

    @property
    def radius(self) -> int | None:
        """Radius at which every edge class passes."""
        if not self.passed:
            return None
        return max(c.passed_radius for c in self.classes)

    def to_json(self) -> dict:
        return {"n": self.n, "passed": self.passed, "radius": self.radius, "classes": [c.to_json() for c in self.classes]}

    def render(self) -> str:
        lines = [f"local check of the reduction Q^d_{self.n + 2} -> Q^d_{self.n}"]
        lines.append(f"{'class':<6} {'radius':>6} {'|L|':>5} {'vacuous':>8} {'edges':>6} {'patterns':>9}")
        for c in self.classes:
            r = "-" if c.passed_radius is None else str(c.passed_radius)
            lines.append(f"{c.label:<6} {r:>6} {c.lift_size or '-':>5} {str(c.vacuous):>8} "
                         f"{c.edges_checked:>6} {c.patterns_checked:>9}")
            for f in c.failures:
                lines.append(f"       radius {f['radius']} fails at edge {f['edge']} (|L|={f['lift_size']})")
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'} at radius {self.radius}")
        return "\n".join(lines)


def _lift_set(u: int, v: int, n: int, radius: int, big: CubelikeGraph) -> list[int]:
    w = (1 << n) - 1
    L = {lift(x, n, a, b) for x in (u, u ^ w, v, v ^ w) for a in (0, 1) for b in (0, 1)}
    for _ in range(radius):
        L |= {y for x in L for y in big.neighbors(x)}
    return sorted(L)


def _induced(L: list[int], big: CubelikeGraph):
    index = {x: i for i, x in enumerate(L)}
    rows = [[index[y] for y in big.neighbors(x) if y in index] for x in L]
    D = max(len(r) for r in rows)
    table = np.zeros((len(L), max(D, 1)), np.int32)
    for i, r in enumerate(rows):
        table[i, : len(r)] = r
    return index, table, np.array([len(r) for r in rows], np.int32)


def _edge_counterexample(u: int, v: int, n: int, radius: int, big: CubelikeGraph):
    """Search for a proper 3-coloring of the lift set with ``c'(u) == c'(v)``.

    Returns ``(lift_size, vacuous, patterns, counterexample_or_None)``.
    """
    L = _lift_set(u, v, n, radius, big)
    index, table, deg = _induced(L, big)
    if _kernels.search_coloring(table, deg, 3)[0] is None:
        return len(L), True, 0, None
    w = (1 << n) - 1
    keys = [index[lift(u, n, 0, 0)], index[lift(u ^ w, n, 1, 0)], index[lift(v, n, 0, 0)], index[lift(v ^ w, n, 1, 0)]]
    patterns = 0
    for a, b, c, d in product(range(3), repeat=4):
        if pair_to_color(a, b) != pair_to_color(c, d):
            continue
        patterns += 1
        colors, _ = _kernels.search_coloring(table, deg, 3, keys, [a, b, c, d], 3)
        if colors is not None:
            return len(L), False, patterns, {x: colors[i] for x, i in index.items()}
    return len(L), False, patterns, None


def lemma_local_check(n: int, radius: int | None = None, max_radius: int = 4) -> LemmaReport:
    """For every edge ``(u, u+s)`` of Q^d_n, check that every proper 3-coloring of
    the lifted neighborhood in Q^d_{n+2} reduces to different colors at ``u`` and ``u+s``.

    The lift set starts at ``{u, u+w, v, v+w} x Z_2^2`` and grows by graph distance
    ``radius`` in Q^d_{n+2}. With ``radius=None`` the smallest passing radius per
    edge class is searched up to ``max_radius``.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and at least 2, got {n}")
    if n > 6:
        raise ValueError("local check is limited to n <= 6")
    big = cube_with_diagonals(n + 2)
    small = cube_with_diagonals(n)
    radii = [radius] if radius is not None else list(range(max_radius + 1))
    classes = []
    for s in small.set:
        label = "w" if s == (1 << n) - 1 else f"e{s.bit_length()}"
        rep = EdgeClassReport(label, s)
        edges = [(u, u ^ s) for u in range(small.vertex_count) if u < u ^ s]
        for r in radii:
            ok = True
            vacuous_all = True
            patterns = 0
            size = 0
            for u, v in edges:
                size, vac, pats, cex = _edge_counterexample(u, v, n, r, big)
                patterns += pats
                vacuous_all &= vac
                if cex is not None:
                    rep.failures.append({
                        "radius": r, "edge": [u, v], "lift_size": size,
                        "coloring": {str(x): col for x, col in sorted(cex.items())},
                    })
                    ok = False
                    break
            if ok:
                rep.passed_radius = r
                rep.lift_size = size
                rep.vacuous = vacuous_all
                rep.edges_checked = len(edges)
                rep.patterns_checked = patterns
                break
        classes.append(rep)
    return LemmaReport(n, classes)
