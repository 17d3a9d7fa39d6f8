"""Exit criteria. Run ``pytest tests/test_acceptance.py`` for one PASS/FAIL line per criterion."""

import subprocess
import sys
import time
from itertools import product

import numpy as np
import pytest

from cubelike.cayley import build_graph, cube_with_diagonals, is_bipartite_bfs, is_bipartite_parity
from cubelike.coloring import (
    Coloring,
    chromatic_number,
    contrapositive_check,
    k_colorable,
    lemma_local_check,
    pair_to_color,
    reduce_coloring,
    verify_coloring,
)
from cubelike.heuberger import heuberger_matrix, verify_canonical_iso, verify_qd_iso
from cubelike.homomorphism import pull_back_coloring, verify_witness
from cubelike.payan import NON_BIPARTITE, classify, decode_set, random_codes, sweep
from oracles import all_sets, brute_colorable, edge_list, two_colorable_by_components

SOLVE_LIMIT_S = 30.0
SWEEP_LIMIT_S = 300.0
RANDOM_SETS = 1000
RANDOM_COLORINGS = 100_000


# 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1, "chi(Q^d_n) = 4 for n in {2,4,6}, = 2 for n in {3,5}; each solve < 30 s")
@pytest.mark.parametrize("n,chi", [(2, 4), (4, 4), (6, 4), (3, 2), (5, 2)])
def test_c1_cube_with_diagonals(n, chi):
    g = cube_with_diagonals(n)
    t = time.perf_counter()
    res = chromatic_number(g)
    elapsed = time.perf_counter() - t
    assert res.chi == chi
    assert verify_coloring(g, res.coloring) and res.coloring.used == chi
    assert k_colorable(g, chi - 1) is None
    assert is_bipartite_bfs(g) == (chi == 2)
    assert elapsed < SOLVE_LIMIT_S


# 2 -------------------------------------------------------------------------

@pytest.fixture(scope="module")
def sweeps():
    t = time.perf_counter()
    out = {n: sweep(n) for n in (2, 3, 4)}
    return out, time.perf_counter() - t


@pytest.mark.criterion(2, "exhaustive sweeps n=2,3,4: 7+127+32767 sets, no chi = 3, < 5 min; brute force agrees n <= 3")
def test_c2_sweeps(sweeps):
    out, elapsed = sweeps
    assert [out[n].sets_examined for n in (2, 3, 4)] == [7, 127, 32767]
    for s in out.values():
        assert s.violations == [] and s.disagreements == [] and s.certificate_failures == []
        assert s.three_colorability_checked == s.classifications.get(NON_BIPARTITE, 0)
    assert out[3].certificates_rechecked == 127
    assert out[4].certificates_rechecked >= 327  # 1% sample
    assert elapsed < SWEEP_LIMIT_S


@pytest.mark.criterion(2, "exhaustive sweeps n=2,3,4: 7+127+32767 sets, no chi = 3, < 5 min; brute force agrees n <= 3")
@pytest.mark.parametrize("n", [2, 3])
def test_c2_brute_force_oracle(n):
    for S in all_sets(n):
        edges = edge_list(n, S)
        three = brute_colorable(1 << n, edges, 3)
        two = brute_colorable(1 << n, edges, 2)
        assert not (three and not two), f"chi = 3 for {S}"
        cert = classify(n, S)
        assert (cert.classification == NON_BIPARTITE) == (not three)
        assert (k_colorable(build_graph(n, S), 3) is not None) == three


# 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3, "every nonbipartite instance n <= 4: odd z >= 3 witness verifies, pullback coloring proper")
@pytest.mark.parametrize("n", [2, 3, 4])
def test_c3_certificates(n):
    checked = 0
    for S in all_sets(n):
        cert = classify(n, S)
        if cert.classification != NON_BIPARTITE:
            continue
        w = cert.witness
        assert w.z >= 3 and w.z % 2 == 1
        assert verify_witness(w)
        g = build_graph(n, S)
        res = chromatic_number(g)
        assert res.chi >= 4
        pulled = pull_back_coloring(w, res.coloring)
        assert verify_coloring(cube_with_diagonals(w.z - 1), pulled)
        assert pulled.used <= res.chi
        checked += 1
    assert checked == {2: 1, 3: 64, 4: 29887}[n]


# 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4, "parity criterion <=> BFS: exhaustive n <= 4, 1000 random sets at n = 5 and 6")
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_c4_exhaustive(n):
    for S in all_sets(n):
        assert is_bipartite_parity(n, S) == is_bipartite_bfs(build_graph(n, S))


@pytest.mark.criterion(4, "parity criterion <=> BFS: exhaustive n <= 4, 1000 random sets at n = 5 and 6")
@pytest.mark.parametrize("n", [5, 6])
def test_c4_random(n):
    codes = random_codes(n, RANDOM_SETS, seed=n)
    assert len(codes) == RANDOM_SETS
    kinds = set()
    for code in codes:
        S = decode_set(code)
        parity = is_bipartite_parity(n, S)
        assert parity == is_bipartite_bfs(build_graph(n, S))
        kinds.add(parity)
    assert kinds == {True, False}
    for code in codes[::50]:
        S = decode_set(code)
        assert is_bipartite_parity(n, S) == two_colorable_by_components(n, S)


# 5 -------------------------------------------------------------------------

@pytest.mark.criterion(5, "canonical SACG isomorphism for all S at n <= 3; (w_z | 2I) ~ Q^d_{z-1} for z = 3,5,7")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c5_canonical_iso(n):
    count = 0
    for code in range(1, 1 << (1 << n)):
        S = [x for x in range(1 << n) if (code >> x) & 1]  # includes sets containing 0
        assert verify_canonical_iso(heuberger_matrix(n, S), n, S), S
        count += 1
    assert count == (1 << (1 << n)) - 1


@pytest.mark.criterion(5, "canonical SACG isomorphism for all S at n <= 3; (w_z | 2I) ~ Q^d_{z-1} for z = 3,5,7")
@pytest.mark.parametrize("z", [3, 5, 7])
def test_c5_qd_iso(z):
    assert verify_qd_iso(z)


# 6 -------------------------------------------------------------------------

@pytest.mark.criterion(6, "reduction total on 9 pairs; 1e5 random colorings of Q^d_4, Q^d_6 give no counterexample; local check radius")
def test_c6_pairs_total():
    seen = {}
    for a, b in product(range(3), repeat=2):
        k = pair_to_color(a, b)
        matches = [j for j in range(3) if {a, b} in ({j}, {j, (j + 1) % 3})]
        assert matches == [k]
        seen[(a, b)] = k
    assert len(seen) == 9
    c = reduce_coloring(Coloring(tuple(np.random.default_rng(0).integers(0, 3, 64).tolist()), 3))
    assert len(c.colors) == 16


@pytest.mark.criterion(6, "reduction total on 9 pairs; 1e5 random colorings of Q^d_4, Q^d_6 give no counterexample; local check radius")
@pytest.mark.parametrize("n", [2, 4])
def test_c6_contrapositive(n):
    r = contrapositive_check(n, RANDOM_COLORINGS, seed=n)
    assert r["samples"] >= RANDOM_COLORINGS
    assert r["counterexamples"] == 0
    assert r["local_counterexamples"] == 0
    assert r["mono_reduced_edges"] > 0


@pytest.mark.criterion(6, "reduction total on 9 pairs; 1e5 random colorings of Q^d_4, Q^d_6 give no counterexample; local check radius")
@pytest.mark.parametrize("n", [2, 4])
def test_c6_local_check(n):
    rep = lemma_local_check(n)
    assert rep.passed
    assert rep.radius is not None
    print(f"\nlemma_local_check n={n}: radius {rep.radius}, "
          + ", ".join(f"{c.label}:|L|={c.lift_size}{' vacuous' if c.vacuous else ''}" for c in rep.classes))


# 7 -------------------------------------------------------------------------

@pytest.mark.criterion(7, "k_colorable == exhaustive k^|V| enumeration, all graphs <= 8 vertices, k = 2,3,4")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c7_solver_oracle(n):
    for S in all_sets(n):
        g = build_graph(n, S)
        edges = edge_list(n, S)
        for k in (2, 3, 4):
            c = k_colorable(g, k)
            assert (c is not None) == brute_colorable(1 << n, edges, k), (S, k)
            if c is not None:
                assert verify_coloring(g, c)


# 8 -------------------------------------------------------------------------

def _cli_bytes(tmp_path, name, *argv):
    out = tmp_path / name
    subprocess.run([sys.executable, "-m", "cubelike", *argv, "--format", "json", "--output", str(out)], check=True)
    return out.read_bytes()


@pytest.mark.criterion(8, "identical sweep invocations give byte-identical JSON")
@pytest.mark.parametrize("argv", [
    ("verify-payan", "--n", "3", "--exact-chi"),
    ("verify-payan", "--n", "5", "--random", "300", "--seed", "17"),
    ("verify-payan", "--n", "6", "--random", "200", "--seed", "4"),
    ("verify-payan", "--n", "4", "--exact-chi"),
])
def test_c8_determinism(tmp_path, argv):
    a = _cli_bytes(tmp_path, "a.json", *argv)
    b = _cli_bytes(tmp_path, "b.json", *argv)
    assert a == b and len(a) > 100


@pytest.mark.criterion(8, "identical sweep invocations give byte-identical JSON")
def test_c8_in_process(sweeps):
    out, _ = sweeps
    assert sweep(4).dumps() == out[4].dumps()
