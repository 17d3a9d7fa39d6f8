from itertools import product

import numpy as np
import pytest

from cubelike import _kernels
from cubelike.cayley import LoopError, build_graph, cube_with_diagonals
from cubelike.coloring import (
    Coloring,
    chromatic_number,
    contrapositive_check,
    k_colorable,
    lemma_local_check,
    pair_to_color,
    reduce_coloring,
    sokolova_coloring,
    verify_coloring,
)
from oracles import brute_colorable, edge_list

K4 = build_graph(2, [1, 2, 3])


def test_k4_not_3_colorable():
    assert k_colorable(K4, 3) is None


def test_k4_4_colorable():
    c = k_colorable(K4, 4)
    assert c is not None and verify_coloring(K4, c)


def test_qd3_bipartite_coloring():
    g = cube_with_diagonals(3)
    c = k_colorable(g, 2)
    assert verify_coloring(g, c)
    # the classes are the level sets of the functional (1,1,1)
    parity = [bin(v).count("1") & 1 for v in range(8)]
    assert all((c.colors[u] == c.colors[v]) == (parity[u] == parity[v]) for u in range(8) for v in range(8))


def test_loop_raises():
    with pytest.raises(LoopError):
        k_colorable(build_graph(2, [0, 1]), 3)
    assert chromatic_number(build_graph(2, [0, 1])).status == "has_loop"


def test_edgeless_chi_one():
    r = chromatic_number(build_graph(3, []))
    assert r.chi == 1 and r.coloring.used == 1


@pytest.mark.parametrize("n,chi", [(2, 4), (3, 2), (4, 4), (5, 2), (6, 4)])
def test_chi_qd(n, chi):
    r = chromatic_number(cube_with_diagonals(n))
    assert r.chi == chi
    assert r.coloring.used == chi
    assert verify_coloring(cube_with_diagonals(n), r.coloring)


def test_disconnected_graph_coloring_covers_all_cosets():
    g = build_graph(4, [1, 2, 3])  # four copies of K4
    r = chromatic_number(g)
    assert r.chi == 4 and len(r.coloring.colors) == 16
    assert verify_coloring(g, r.coloring)


def test_solver_matches_brute_force_on_small_graphs():
    rng = np.random.default_rng(7)
    for _ in range(60):
        n = int(rng.integers(1, 4))
        S = sorted({int(x) for x in rng.integers(1, 1 << n, size=rng.integers(1, 1 << n))})
        g = build_graph(n, S)
        for k in (1, 2, 3, 4):
            c = k_colorable(g, k)
            assert (c is not None) == brute_colorable(1 << n, edge_list(n, S), k)
            if c is not None:
                assert verify_coloring(g, c)


def test_sokolova_k4():
    assert sokolova_coloring(2).colors == (0, 2, 1, 3)


def test_sokolova_antipodes_n4():
    c = sokolova_coloring(4)
    assert c.colors[0] == 0 and c.colors[0b1111] == 3


@pytest.mark.parametrize("n", range(2, 17))
def test_sokolova_proper(n):
    c = sokolova_coloring(n)
    assert verify_coloring(cube_with_diagonals(n), c)
    assert c.used == 4


def test_sokolova_rejects_n1():
    with pytest.raises(ValueError):
        sokolova_coloring(1)


def test_verify_coloring_basic():
    assert verify_coloring(K4, [0, 1, 2, 3])
    assert not verify_coloring(K4, [0, 0, 0, 0])
    assert not verify_coloring(build_graph(1, [0]), [0, 1])
    with pytest.raises(ValueError):
        verify_coloring(K4, [0, 1])


def test_pair_to_color_table():
    table = {(a, b): pair_to_color(a, b) for a, b in product(range(3), repeat=2)}
    assert table[(2, 2)] == 2
    for pair, k in [((0, 1), 0), ((1, 2), 1), ((0, 2), 2)]:
        assert table[pair] == table[pair[::-1]] == k
    # each value k is hit by {k} and {k, k+1} only
    for (a, b), k in table.items():
        assert {a, b} in ({k}, {k, (k + 1) % 3})


def test_reduce_coloring_reads_lifted_pair():
    # n = 1: c'(v) from c(v*(0,0)) = c(v) and c((v+1)*(1,0)) = c((v^1) | 2)
    c = Coloring((0, 2, 1, 1, 0, 0, 0, 0), 3)
    assert reduce_coloring(c).colors == (pair_to_color(0, 1), pair_to_color(2, 1))


def test_reduce_coloring_rejects_palette():
    with pytest.raises(ValueError):
        reduce_coloring(Coloring((0,) * 16, 4))


def test_reduce_coloring_total_n1():
    for colors in product(range(3), repeat=8):
        out = reduce_coloring(Coloring(colors, 3))
        assert len(out.colors) == 2


def test_reduce_coloring_total_random_n4():
    rng = np.random.default_rng(1)
    for _ in range(200):
        c = Coloring(tuple(rng.integers(0, 3, 64).tolist()), 3)
        out = reduce_coloring(c)
        assert len(out.colors) == 16
        batch = _kernels.reduce_batch(np.array([c.colors], np.int8), 4, backend="numpy")
        assert tuple(batch[0].tolist()) == out.colors


def test_contrapositive_small():
    r = contrapositive_check(2, 5000, seed=3)
    assert r["counterexamples"] == 0 and r["local_counterexamples"] == 0
    assert r["mono_reduced_edges"] > 0


def test_lemma_check_n2():
    rep = lemma_local_check(2)
    assert rep.passed
    labels = {c.label: c for c in rep.classes}
    assert set(labels) == {"e1", "e2", "w"}
    # for n = 2 the lift of a generator edge is all of Q^d_4, so the check is vacuous
    assert labels["e1"].vacuous and labels["e1"].lift_size == 16


def test_lemma_check_rejects_odd():
    with pytest.raises(ValueError):
        lemma_local_check(3)


def test_lemma_check_n4_is_not_vacuous():
    rep = lemma_local_check(4, radius=0)
    assert rep.passed and rep.radius == 0
    assert not any(c.vacuous for c in rep.classes)
    assert all(c.lift_size in (8, 16) for c in rep.classes)


def test_lemma_check_detects_a_broken_reduction(monkeypatch):
    import cubelike.coloring as mod

    monkeypatch.setattr(mod, "pair_to_color", lambda a, b: a)
    rep = lemma_local_check(4, radius=0)
    assert not rep.passed
    # c'(v) = c(v) is trivially sound on generator edges; the diagonal class breaks
    failed = [c for c in rep.classes if c.passed_radius is None]
    assert [c.label for c in failed] == ["w"]
    failure = failed[0].failures[0]
    assert failure["radius"] == 0 and len(failure["coloring"]) == failure["lift_size"]
