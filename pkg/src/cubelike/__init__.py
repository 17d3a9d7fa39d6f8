"""Cubelike Cayley graphs on Z_2^n: Heuberger matrices, homomorphism certificates,
exact coloring, and an exhaustive check that chromatic number 3 never occurs."""

from .cayley import (
    ConnectionSet,
    CubelikeGraph,
    LoopError,
    build_graph,
    cube_with_diagonals,
    is_bipartite_bfs,
    is_bipartite_parity,
)
from .coloring import Coloring, SolveResult, chromatic_number, k_colorable, sokolova_coloring, verify_coloring
from .heuberger import HeubergerMatrix, find_odd_column, heuberger_matrix, sacg_build
from .homomorphism import HomWitness, build_witness, pull_back_coloring, verify_witness
from .payan import PayanCertificate, SweepSummary, classify, sweep, verify_certificate

__version__ = "0.1.0"
