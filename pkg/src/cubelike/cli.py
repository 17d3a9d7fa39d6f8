"""Command-line front end.

Exit codes: 0 success, 1 negative domain outcome (loop, failed check), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gf2
from .cayley import ConnectionSet, LoopError, build_graph, cube_with_diagonals, is_bipartite_bfs, is_bipartite_parity
from .coloring import chromatic_number, lemma_local_check, sokolova_coloring, verify_coloring
from .heuberger import verify_qd_iso
from .payan import EXHAUSTIVE_MAX_N, RANDOM_MAX_N, CertificateSchemaError, classify, sweep, verify_certificate


class UsageError(Exception):
    pass


def _graph(args):
    try:
        gf2.check_width(args.n)
        S = ConnectionSet.parse(args.n, args.set)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return S, build_graph(args.n, S)


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.format == "json" else text.rstrip("\n") + "\n"
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def cmd_chi(args) -> int:
    S, g = _graph(args)
    res = chromatic_number(g)
    payload = {"n": args.n, "set": list(S), **res.to_json()}
    if res.status == "has_loop":
        _emit(args, payload, "graph has loops: not properly colorable")
        return 1
    text = f"chi = {res.chi}  (clique lower bound {res.lower_bound}, witness verified: {verify_coloring(g, res.coloring)})"
    _emit(args, payload, text)
    return 0


def cmd_bipartite(args) -> int:
    S, g = _graph(args)
    bfs = is_bipartite_bfs(g)
    try:
        parity = is_bipartite_parity(args.n, S)
    except LoopError:
        parity = False
    payload = {"n": args.n, "set": list(S), "has_loop": S.has_loop, "bipartite_bfs": bfs, "bipartite_parity": parity}
    _emit(args, payload, f"bipartite: bfs={bfs} parity={parity}" + ("  (loop)" if S.has_loop else ""))
    return 0


def cmd_certify(args) -> int:
    S, _ = _graph(args)
    cert = classify(args.n, S, exact_chi=args.exact_chi)
    payload = cert.to_json()
    lines = [f"classification: {cert.classification}"]
    if cert.z is not None:
        lines.append(f"odd column {cert.odd_column}, support {payload['support']}, z = {cert.z}")
    if cert.chi_lower_bound:
        lines.append(f"chi >= {cert.chi_lower_bound} via Q^d_{cert.z - 1}")
    if cert.chi is not None:
        lines.append(f"chi = {cert.chi}")
    _emit(args, payload, "\n".join(lines))
    return 1 if cert.classification == "HasLoop" else 0


def cmd_verify_certificate(args) -> int:
    src = sys.stdin.read() if args.path == "-" else Path(args.path).read_text(encoding="utf-8")
    try:
        ok = verify_certificate(src)
    except CertificateSchemaError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"valid": ok}, "certificate valid" if ok else "certificate INVALID")
    return 0 if ok else 1


def cmd_verify_payan(args) -> int:
    if args.random is None and args.n > EXHAUSTIVE_MAX_N:
        raise UsageError(f"exhaustive sweep needs n <= {EXHAUSTIVE_MAX_N} "
                         f"(2^{(1 << args.n) - 1} - 1 sets); pass --random COUNT")
    if args.n > RANDOM_MAX_N or args.n < 1:
        raise UsageError(f"n must be in [1, {RANDOM_MAX_N}]")
    if args.random is not None:
        summary = sweep(args.n, "random", count=args.random, seed=args.seed, exact_chi=args.exact_chi)
    else:
        summary = sweep(args.n, exact_chi=args.exact_chi)
    _emit(args, summary.to_json(), summary.render())
    return 0 if summary.ok else 1


def cmd_sokolova(args) -> int:
    if args.n < 2 or args.n > gf2.MAX_WIDTH:
        raise UsageError(f"n must be in [2, {gf2.MAX_WIDTH}]")
    c = sokolova_coloring(args.n)
    ok = verify_coloring(cube_with_diagonals(args.n), c)
    payload = {**c.to_json(), "n": args.n, "verified": ok}
    text = f"4-coloring of Q^d_{args.n}: verified={ok}"
    if args.n <= 6:
        text += "\ncolors: " + " ".join(map(str, c.colors))
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_lemma_check(args) -> int:
    if args.n < 2 or args.n % 2 or args.n > 6:
        raise UsageError("n must be even, in [2, 6]")
    report = lemma_local_check(args.n, radius=args.radius)
    _emit(args, report.to_json(), report.render())
    return 0 if report.passed else 1


def cmd_qd_iso(args) -> int:
    if args.z < 3 or args.z % 2 == 0 or args.z > gf2.MAX_WIDTH:
        raise UsageError("z must be odd and at least 3")
    ok = verify_qd_iso(args.z)
    _emit(args, {"z": args.z, "isomorphic": ok}, f"(w_{args.z}^t | 2I) presents Q^d_{args.z - 1}: {ok}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubelike", description="Cubelike Cayley graphs on Z_2^n.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--n", type=int, required=True, help="dimension")
    graph.add_argument("--set", required=True, help="comma-separated bitmasks, e.g. 1,2,4,8,15")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("chi", parents=[common, graph], help="exact chromatic number").set_defaults(func=cmd_chi)
    sub.add_parser("bipartite", parents=[common, graph], help="BFS and parity bipartiteness").set_defaults(
        func=cmd_bipartite)
    c = sub.add_parser("certify", parents=[common, graph], help="emit a classification certificate")
    c.add_argument("--exact-chi", action="store_true")
    c.set_defaults(func=cmd_certify)
    v = sub.add_parser("verify-certificate", parents=[common], help="re-check a certificate JSON file")
    v.add_argument("path", help="certificate file, or - for stdin")
    v.set_defaults(func=cmd_verify_certificate)
    s = sub.add_parser("verify-payan", parents=[common], help="sweep connection sets; fail on chi = 3")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--random", type=int, metavar="COUNT", help="sample COUNT sets instead of enumerating")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exact-chi", action="store_true")
    s.set_defaults(func=cmd_verify_payan)
    k = sub.add_parser("sokolova", parents=[common], help="explicit 4-coloring of Q^d_n")
    k.add_argument("--n", type=int, required=True)
    k.set_defaults(func=cmd_sokolova)
    m = sub.add_parser("lemma-check", parents=[common], help="local case analysis of the 3-coloring reduction")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--radius", type=int, default=None)
    m.set_defaults(func=cmd_lemma_check)
    q = sub.add_parser("qd-iso", parents=[common], help="check (w_z^t | 2I) presents Q^d_{z-1}")
    q.add_argument("--z", type=int, required=True)
    q.set_defaults(func=cmd_qd_iso)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cubelike {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
