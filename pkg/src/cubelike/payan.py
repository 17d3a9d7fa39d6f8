"""Certified classification of cubelike graphs and sweeps showing that
chromatic number 3 never occurs."""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from operator import xor
from typing import Any, Iterable, Sequence

import jsonschema
import numpy as np

from . import gf2
from .cayley import ConnectionSet, bipartition_functional, build_graph
from .coloring import chromatic_number, k_colorable
from .heuberger import HeubergerMatrix, heuberger_matrix, smallest_odd_column
from .homomorphism import HomWitness, build_witness, verify_witness

BIPARTITE = "Bipartite"
HAS_LOOP = "HasLoop"
NON_BIPARTITE = "NonBipartite"

EXHAUSTIVE_MAX_N = 4
RANDOM_MAX_N = 6


class CertificateSchemaError(ValueError):
    pass


_INT_OR_NULL = {"type": ["integer", "null"]}
CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["n", "set", "classification"],
    "properties": {
        "n": {"type": "integer", "minimum": 1, "maximum": gf2.MAX_WIDTH},
        "set": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "classification": {"enum": [BIPARTITE, HAS_LOOP, NON_BIPARTITE]},
        "heuberger": {
            "type": ["object", "null"],
            "required": ["m", "a_columns", "two_identity"],
            "properties": {
                "m": {"type": "integer", "minimum": 1},
                "a_columns": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                "two_identity": {"type": "boolean"},
            },
        },
        "bipartition_functional": _INT_OR_NULL,
        "odd_column": _INT_OR_NULL,
        "support": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 1}},
        "z": _INT_OR_NULL,
        "witness": {
            "type": ["object", "null"],
            "required": ["z", "support", "images", "verified"],
            "properties": {
                "z": {"type": "integer"},
                "support": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                "images": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "verified": {"type": "boolean"},
            },
        },
        "chi_lower_bound": _INT_OR_NULL,
        "chi": _INT_OR_NULL,
    },
}


@dataclass(frozen=True)
class PayanCertificate:
    n: int
    set: tuple[int, ...]
    classification: str
    heuberger: HeubergerMatrix | None = None
    bipartition_functional: int | None = None
    odd_column: int | None = None
    support: tuple[int, ...] | None = None  # 0-based
    witness: HomWitness | None = None
    chi_lower_bound: int | None = None
    chi: int | None = None

    @property
    def z(self) -> int | None:
        return None if self.support is None else len(self.support)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "set": list(self.set),
            "classification": self.classification,
            "heuberger": self.heuberger.to_json() if self.heuberger else None,
            "bipartition_functional": self.bipartition_functional,
            "odd_column": self.odd_column,
            "support": None if self.support is None else [i + 1 for i in self.support],
            "z": self.z,
            "witness": self.witness.to_json() if self.witness else None,
            "chi_lower_bound": self.chi_lower_bound,
            "chi": self.chi,
        }


def classify(n: int, S: ConnectionSet | Sequence[int], exact_chi: bool = False) -> PayanCertificate:
    """Loop, bipartite (with a separating functional) or nonbipartite (with a
    verified homomorphism from Q^d_{z-1}, hence chi >= 4)."""
    S = S if isinstance(S, ConnectionSet) else ConnectionSet(n, tuple(S))
    elems = S.elements
    M = heuberger_matrix(n, S) if elems else None
    chi = None
    if exact_chi:
        chi = chromatic_number(build_graph(n, S)).chi
    if S.has_loop:
        oc = smallest_odd_column(M)  # the zero element gives a weight-1 relation
        return PayanCertificate(n, elems, HAS_LOOP, M, odd_column=oc.index, support=oc.support)
    f = bipartition_functional(n, S)
    if f is not None:
        return PayanCertificate(n, elems, BIPARTITE, M, bipartition_functional=f, chi=chi)
    oc = smallest_odd_column(M)
    if oc is None:  # pragma: no cover - excluded by duality
        raise AssertionError(f"nonbipartite set {elems} has no odd relation")
    w = build_witness(n, S, oc.support)
    if not verify_witness(w):  # pragma: no cover
        raise AssertionError(f"witness for {elems} does not verify")
    return PayanCertificate(n, elems, NON_BIPARTITE, M, odd_column=oc.index, support=oc.support,
                            witness=w, chi_lower_bound=4, chi=chi)


def _load(cert) -> dict:
    if isinstance(cert, PayanCertificate):
        return cert.to_json()
    if isinstance(cert, (str, bytes)):
        try:
            cert = json.loads(cert)
        except json.JSONDecodeError as exc:
            raise CertificateSchemaError(f"certificate is not valid JSON: {exc}") from None
    try:
        jsonschema.validate(cert, CERTIFICATE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise CertificateSchemaError(f"certificate does not match the schema: {exc.message}") from None
    return cert


def verify_certificate(cert: PayanCertificate | dict | str) -> bool:
    """Re-check a certificate from its JSON form alone.

    Raises :class:`CertificateSchemaError` on malformed input; returns False
    when the data is well formed but does not prove its claim.
    """
    d = _load(cert)
    n, elems, cls = d["n"], d["set"], d["classification"]
    if elems != sorted(set(elems)) or any(s >> n for s in elems):
        return False
    if d.get("chi") is not None and d["chi"] < 1:
        return False

    H = d.get("heuberger")
    if H is not None:
        if H["m"] != len(elems) or not H["two_identity"]:
            return False
        for col in H["a_columns"]:
            if len(col) != len(elems) or any(x not in (0, 1) for x in col):
                return False
            if reduce(xor, (s for s, x in zip(elems, col) if x), 0) != 0:
                return False

    if cls == HAS_LOOP:
        if 0 not in elems:
            return False
        if d.get("support") is not None:
            return len(d["support"]) == 1 and elems[d["support"][0] - 1] == 0
        return True
    if 0 in elems:
        return False

    if cls == BIPARTITE:
        f = d.get("bipartition_functional")
        if f is None or f < 0:
            return False
        if any(bin(f & s).count("1") % 2 == 0 for s in elems):
            return False
        return d.get("chi") is None or d["chi"] <= 2

    # NonBipartite: an odd relation column plus a homomorphism from Q^d_{z-1}
    if H is None or d.get("odd_column") is None or d.get("support") is None:
        return False
    idx = d["odd_column"]
    if not 0 <= idx < len(H["a_columns"]):
        return False
    col = H["a_columns"][idx]
    support = d["support"]
    if [i + 1 for i, x in enumerate(col) if x] != support:
        return False
    z = len(support)
    if d.get("z") != z or z < 3 or z % 2 == 0:
        return False
    wj = d.get("witness")
    if wj is None or not wj["verified"] or wj["z"] != z or wj["support"] != support:
        return False
    if d.get("chi_lower_bound") != 4:
        return False
    if d.get("chi") is not None and d["chi"] < 4:
        return False
    try:
        w = HomWitness.from_json(wj, n, elems)
    except (IndexError, ValueError):
        return False
    return verify_witness(w)


# ---------------------------------------------------------------- sweeps


@dataclass
class SweepSummary:
    n: int
    mode: str
    seed: int | None = None
    sets_examined: int = 0
    classifications: dict[str, int] = field(default_factory=dict)
    z_histogram: dict[int, int] = field(default_factory=dict)
    chi_histogram: dict[int, int] | None = None
    three_colorability_checked: int = 0
    certificates_rechecked: int = 0
    certificate_failures: list[list[int]] = field(default_factory=list)
    disagreements: list[list[int]] = field(default_factory=list)
    violations: list[list[int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.violations or self.disagreements or self.certificate_failures)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "sets_examined": self.sets_examined,
            "classifications": {k: self.classifications.get(k, 0) for k in (BIPARTITE, HAS_LOOP, NON_BIPARTITE)},
            "z_histogram": {str(k): v for k, v in sorted(self.z_histogram.items())},
            "chi_histogram": None if self.chi_histogram is None
            else {str(k): v for k, v in sorted(self.chi_histogram.items())},
            "three_colorability_checked": self.three_colorability_checked,
            "certificates_rechecked": self.certificates_rechecked,
            "certificate_failures": self.certificate_failures,
            "disagreements": self.disagreements,
            "violations": self.violations,
        }
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render(self) -> str:
        rows = [("dimension n", self.n), ("mode", self.mode)]
        if self.seed is not None:
            rows.append(("seed", self.seed))
        rows.append(("sets examined", self.sets_examined))
        for k in (BIPARTITE, NON_BIPARTITE, HAS_LOOP):
            rows.append((k, self.classifications.get(k, 0)))
        for z, c in sorted(self.z_histogram.items()):
            rows.append((f"witness z={z}", c))
        if self.chi_histogram is not None:
            for chi, c in sorted(self.chi_histogram.items()):
                rows.append((f"chi={chi}", c))
        rows += [
            ("3-colorability checks", self.three_colorability_checked),
            ("certificates rechecked", self.certificates_rechecked),
            ("certificate failures", len(self.certificate_failures)),
            ("disagreements", len(self.disagreements)),
            ("violations (chi = 3)", len(self.violations)),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{k:<{width}}  {v:>8}" for k, v in rows) + "\n"


def decode_set(code: int) -> list[int]:
    """Subset code -> connection set: bit ``i`` of ``code`` selects element ``i + 1``."""
    out = []
    i = 0
    while code:
        if code & 1:
            out.append(i + 1)
        code >>= 1
        i += 1
    return out


def encode_set(elems: Iterable[int]) -> int:
    return sum(1 << (s - 1) for s in elems if s)


def exhaustive_codes(n: int) -> range:
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive sweep is limited to n <= {EXHAUSTIVE_MAX_N}: "
            f"n={n} has 2^{(1 << n) - 1} - 1 connection sets"
        )
    return range(1, 1 << ((1 << n) - 1))


def random_codes(n: int, count: int, seed: int = 0) -> list[int]:
    """``count`` loop-free nonempty sets: size uniform in [1, 2^n - 1], then a uniform subset."""
    if n > RANDOM_MAX_N:
        raise ValueError(f"random sweep is limited to n <= {RANDOM_MAX_N}")
    rng = np.random.default_rng(seed)
    top = (1 << n) - 1
    codes = []
    for _ in range(count):
        size = int(rng.integers(1, top + 1))
        elems = rng.choice(np.arange(1, top + 1), size=size, replace=False)
        codes.append(encode_set(int(s) for s in elems))
    return sorted(codes)


def _examine(n: int, code: int, exact_chi: bool, recheck: bool) -> dict[str, Any]:
    elems = decode_set(code)
    cert = classify(n, elems, exact_chi=exact_chi)
    rec: dict[str, Any] = {"code": code, "set": elems, "class": cert.classification, "z": cert.z,
                           "chi": cert.chi, "checked3": False, "violation": False,
                           "disagree": False, "recheck": None}
    if cert.classification == NON_BIPARTITE:
        rec["checked3"] = True
        if k_colorable(build_graph(n, elems), 3) is not None:
            rec["violation"] = True
        if cert.witness is None or not verify_witness(cert.witness):
            rec["disagree"] = True
    if cert.chi is not None:
        if cert.chi == 3:
            rec["violation"] = True
        if (cert.chi <= 2) != (cert.classification == BIPARTITE):
            rec["disagree"] = True
    if recheck:
        rec["recheck"] = verify_certificate(json.loads(json.dumps(cert.to_json())))
    return rec


def _examine_chunk(args) -> list[dict[str, Any]]:
    n, codes, exact_chi, recheck_every, offset = args
    return [_examine(n, c, exact_chi, bool(recheck_every) and (offset + i) % recheck_every == 0)
            for i, c in enumerate(codes)]


def worker_count() -> int:
    cap = os.environ.get("CUBELIKE_THREADS")
    if cap:
        return max(1, int(cap))
    return os.cpu_count() or 1


def sweep(
    n: int,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int = 0,
    exact_chi: bool = False,
    recheck_every: int | None = None,
    workers: int | None = None,
) -> SweepSummary:
    """Classify every connection set (exhaustive) or a seeded sample (random).

    Nonbipartite instances are additionally run through the exact solver at
    ``k = 3``; any 3-colorable one is a violation. Every ``recheck_every``-th
    certificate is round-tripped through JSON and re-verified (default: all of
    them for ``n <= 3``, one in a hundred above).
    """
    if mode == "exhaustive":
        codes: Sequence[int] = exhaustive_codes(n)
        seed_out = None
    elif mode == "random":
        if count is None or count < 1:
            raise ValueError("random sweep needs a positive count")
        codes = random_codes(n, count, seed)
        seed_out = seed
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")
    if recheck_every is None:
        recheck_every = 1 if n <= 3 else 100
    workers = workers or worker_count()

    if workers > 1 and len(codes) > 256:
        step = -(-len(codes) // (workers * 4))
        chunks = [(n, list(codes[i:i + step]), exact_chi, recheck_every, i) for i in range(0, len(codes), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [r for part in pool.map(_examine_chunk, chunks) for r in part]
    else:
        records = _examine_chunk((n, codes, exact_chi, recheck_every, 0))
    records.sort(key=lambda r: r["code"])

    summary = SweepSummary(n, mode, seed_out, chi_histogram={} if exact_chi else None)
    cls_counts: Counter = Counter()
    z_counts: Counter = Counter()
    chi_counts: Counter = Counter()
    for r in records:
        summary.sets_examined += 1
        cls_counts[r["class"]] += 1
        if r["class"] == NON_BIPARTITE:
            z_counts[r["z"]] += 1
        if r["chi"] is not None:
            chi_counts[r["chi"]] += 1
        summary.three_colorability_checked += r["checked3"]
        if r["recheck"] is not None:
            summary.certificates_rechecked += 1
            if not r["recheck"]:
                summary.certificate_failures.append(r["set"])
        if r["disagree"]:
            summary.disagreements.append(r["set"])
        if r["violation"]:
            summary.violations.append(r["set"])
    summary.classifications = dict(cls_counts)
    summary.z_histogram = dict(z_counts)
    if exact_chi:
        summary.chi_histogram = dict(chi_counts)
    return summary
