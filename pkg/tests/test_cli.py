import json

import pytest

from cubelike.cli import main
from cubelike.payan import verify_certificate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("n,S,chi", [(4, "1,2,4,8,15", 4), (2, "1", 2), (3, "1,2,4,7", 2)])
def test_chi(capsys, n, S, chi):
    code, out, _ = run(capsys, "chi", "--n", str(n), "--set", S, "--format", "json")
    assert code == 0 and json.loads(out)["chi"] == chi


def test_chi_parse_error(capsys):
    code, _, err = run(capsys, "chi", "--n", "2", "--set", "1,x")
    assert code == 2 and "not a list of integers" in err


def test_chi_out_of_range(capsys):
    assert run(capsys, "chi", "--n", "2", "--set", "4")[0] == 2


def test_certify_nonbipartite(capsys):
    code, out, _ = run(capsys, "certify", "--n", "2", "--set", "1,2,3", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["classification"] == "NonBipartite" and d["z"] == 3
    assert verify_certificate(d)


def test_certify_bipartite(capsys):
    code, out, _ = run(capsys, "certify", "--n", "3", "--set", "1,2,4,7", "--format", "json")
    assert code == 0 and json.loads(out)["classification"] == "Bipartite"


def test_certify_loop(capsys):
    code, out, _ = run(capsys, "certify", "--n", "1", "--set", "0", "--format", "json")
    assert code == 1 and json.loads(out)["classification"] == "HasLoop"


def test_verify_certificate_file(capsys, tmp_path):
    path = tmp_path / "cert.json"
    assert main(["certify", "--n", "3", "--set", "1,2,3,4", "--format", "json", "--output", str(path)]) == 0
    capsys.readouterr()
    assert run(capsys, "verify-certificate", str(path))[0] == 0
    d = json.loads(path.read_text())
    d["support"] = [1, 2]
    path.write_text(json.dumps(d))
    assert run(capsys, "verify-certificate", str(path))[0] == 1
    path.write_text("{")
    assert run(capsys, "verify-certificate", str(path))[0] == 2


def test_verify_payan_n3(capsys):
    code, out, _ = run(capsys, "verify-payan", "--n", "3", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["sets_examined"] == 127 and d["violations"] == []


def test_verify_payan_text(capsys):
    code, out, _ = run(capsys, "verify-payan", "--n", "2")
    assert code == 0 and "violations (chi = 3)" in out


def test_verify_payan_n5_needs_random(capsys):
    code, _, err = run(capsys, "verify-payan", "--n", "5")
    assert code == 2 and "--random" in err


def test_verify_payan_random(capsys):
    code, out, _ = run(capsys, "verify-payan", "--n", "5", "--random", "40", "--seed", "3", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["seed"] == 3 and d["sets_examined"] == 40


@pytest.mark.parametrize("n", [2, 6])
def test_sokolova(capsys, n):
    code, out, _ = run(capsys, "sokolova", "--n", str(n), "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["verified"] and d["k"] == 4 and len(d["colors"]) == 1 << n
    if n == 2:
        assert d["colors"] == [0, 2, 1, 3]


def test_sokolova_n1(capsys):
    assert run(capsys, "sokolova", "--n", "1")[0] == 2


def test_lemma_check(capsys):
    code, out, _ = run(capsys, "lemma-check", "--n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_qd_iso(capsys):
    code, out, _ = run(capsys, "qd-iso", "--z", "5")
    assert code == 0 and "True" in out
    assert run(capsys, "qd-iso", "--z", "4")[0] == 2


def test_bipartite(capsys):
    code, out, _ = run(capsys, "bipartite", "--n", "2", "--set", "1,2,3", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["bipartite_bfs"] is False and d["bipartite_parity"] is False


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
