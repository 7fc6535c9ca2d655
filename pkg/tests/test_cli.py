import json

import pytest

from polynomial_zsigmondy import cli
from polynomial_zsigmondy.formats import TermArchive, WitnessArchive


def run(capsys, *argv: str) -> tuple[int, str]:
    code = cli.run(list(argv))
    return code, capsys.readouterr().out


def test_phi(capsys):
    code, out = run(capsys, "phi", "--n", "6", "--field", "q", "--f", "T", "--g", "1")

    assert code == cli.EXIT_OK
    assert out == "T^2 - T + 1\n"


def test_phi_lucas_json(capsys):
    code, out = run(capsys, "phi", "--n", "2", "--field", "q-sqrt:2", "--P", "T + (0+1*w)", "--format", "json")

    assert code == cli.EXIT_OK
    assert json.loads(out) == {"n": 2, "field": "q", "phi": "2*T"}


def test_verify_zsigmondy(capsys):
    code, out = run(
        capsys,
        "verify",
        "--statement",
        "thm-1.3",
        "--field",
        "fp:7",
        "--f",
        "T^2",
        "--g",
        "T+1",
        "--max-n",
        "60",
        "--seed",
        "1",
        "--format",
        "json",
    )

    assert code == cli.EXIT_OK
    report = json.loads(out)
    assert report["statement"] == "thm-1.3"
    assert report["verdict"] == "verified-in-range"
    assert report["failures"] == []
    assert report["ms"] == 0


def test_verify_degenerate_lucas(capsys, tmp_path):
    archive = tmp_path.joinpath("lucas.zwit")
    code, out = run(
        capsys,
        "verify",
        "--statement",
        "lemma-2.2",
        "--field",
        "q-sqrt:2",
        "--P",
        "T^2+(1+1*w)*T+(0+1*w)",
        "--max-n",
        "3",
        "--archive",
        str(archive),
    )

    assert code == cli.EXIT_COUNTEREXAMPLE
    report = json.loads(out)
    assert report["verdict"] == "counterexample"
    assert report["failures"][0]["indices"] == [2, 3]
    assert report["failures"][0]["polys"] == {"gcd": "T + 1", "expected": "1"}

    (archived,) = WitnessArchive.read(archive).reports()
    assert archived.statement == "lemma-2.2"
    assert archived.failures[0].indices == (2, 3)


def test_verify_text(capsys):
    argv = ["verify", "--statement", "lemma-1.4", "--field", "fp:2", "--f", "T^2 + T + 1", "--max-n", "6"]
    code, out = run(capsys, *argv, "--format", "text")

    assert code == cli.EXIT_OK
    assert out.startswith("lemma-1.4 on bang fp:2 f=T^2 + T + 1\n  range 1..6, ")


def test_verify_campaign(capsys):
    argv = ["verify", "--statement", "cor-1.5", "--field", "fp:3", "--random", "3", "--max-degree", "2"]
    code, out = run(capsys, *argv, "--max-n", "8", "--seed", "5")

    assert code == cli.EXIT_OK
    reports = json.loads(out)
    assert len(reports) == 3
    assert {r["statement"] for r in reports} == {"cor-1.5"}

    assert run(capsys, *argv, "--max-n", "8", "--seed", "5")[1] == out


def test_seed_from_environment(capsys, monkeypatch):
    argv = ["verify", "--statement", "lemma-1.1", "--field", "fp:5", "--f", "T^2 + 1", "--g", "T", "--max-n", "6"]

    monkeypatch.setenv(cli.SEED_ENV, "3")
    assert json.loads(run(capsys, *argv)[1])["seed"] == 3

    monkeypatch.setenv(cli.SEED_ENV, "-3")
    assert run(capsys, *argv)[0] == cli.EXIT_USAGE


def test_seq(capsys):
    code, out = run(capsys, "seq", "--field", "fp:7", "--f", "T^2", "--g", "T + 1", "--max-n", "2")

    assert code == cli.EXIT_OK
    assert out == "1\tT^2 + 6*T + 6\n2\tT^4 + 6*T^2 + 5*T + 6\n"


def test_seq_lucas_json(capsys):
    code, out = run(capsys, "seq", "--field", "q-sqrt:2", "--P", "T + (0+1*w)", "--n", "2", "--format", "json")

    assert code == cli.EXIT_OK
    assert json.loads(out) == {
        "spec": "lucas q-sqrt:2 P=T + (0+1*w)",
        "terms": [{"n": 2, "term": "2*T", "l_hat": "2*T^2 + 4"}],
    }


def test_factor(capsys):
    code, out = run(capsys, "factor", "--field", "fp:3", "--f", "T^3 - T")

    assert code == cli.EXIT_OK
    assert out == "(T)*(T + 1)*(T + 2)\n"


def test_factor_json(capsys):
    code, out = run(capsys, "factor", "--field", "fp:5", "--f", "2*T^2 + 4", "--format", "json")

    assert code == cli.EXIT_OK
    assert json.loads(out) == {
        "field": "fp:5",
        "poly": "2*T^2 + 4",
        "unit": "2",
        "factors": [{"poly": "T^2 + 2", "multiplicity": 1}],
    }


def test_primitive(capsys):
    code, out = run(capsys, "primitive", "--field", "fp:2", "--f", "T^2 + T + 1", "--n", "3", "--format", "text")

    assert code == cli.EXIT_OK
    assert out.splitlines() == [
        "term 3: T^6 + T^5 + T^3 + T",
        "primitive part: T^4 + T + 1",
        "primitive divisors: (T^4 + T + 1)",
        "equals monic Φ_3: True",
    ]


def test_survey(capsys, tmp_path):
    out_path = tmp_path.joinpath("survey.tsv")
    code, out = run(
        capsys, "survey", "--field", "fp:2", "--f", "T^2 + T + 1", "--max-n", "3", "--out", str(out_path)
    )

    assert code == cli.EXIT_OK
    assert out == ""
    assert out_path.read_text().splitlines() == [
        "n\tskipped\tdeg_term\tdeg_primitive_part\thas_primitive\tmatches_phi",
        "1\t0\t2\t2\t1\t1",
        "2\t1\t4\t0\t0\t-",
        "3\t0\t6\t4\t1\t1",
    ]


def test_char2_search(capsys):
    code, out = run(capsys, "char2-search", "--max-degree", "2", "--count", "10", "--max-n", "9", "--seed", "1")

    assert code == cli.EXIT_OK
    report = json.loads(out)
    assert report["statement"] == "char2-remark"
    assert report["verdict"] == "recorded-only"
    assert report["seed"] == 1


def test_terms_archive_and_decode(capsys, tmp_path):
    archive = tmp_path.joinpath("zsig.ztrm")
    argv = ["seq", "--field", "fp:7", "--f", "T^2", "--g", "T + 1", "--max-n", "5"]
    assert run(capsys, *argv, "--archive", str(archive))[0] == cli.EXIT_OK
    assert TermArchive.read(archive).indices == [1, 2, 3, 4, 5]

    code, out = run(capsys, "seq", "--terms", str(archive), "--n", "1")
    assert code == cli.EXIT_OK
    assert out == "1\tT^2 + 6*T + 6\n"

    code, out = run(capsys, "decode", str(archive), "--re-encode")
    assert code == cli.EXIT_OK
    decoded = json.loads(out)
    assert decoded["body"]["kind"] == "zsigmondy"
    assert len(decoded["body"]["terms"]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["phi", "--n", "6"],
        ["phi", "--n", "0", "--field", "q", "--f", "T"],
        ["seq", "--field", "fp:4", "--f", "T"],
        ["seq", "--field", "fp:7"],
        ["seq", "--field", "fp:7", "--f", "T^"],
        ["seq", "--field", "fp:7", "--f", "T", "--P", "T"],
        ["verify", "--statement", "thm-9"],
        ["verify", "--statement", "thm-1.3", "--field", "fp:2", "--f", "T^2 + T + 1"],
        ["factor", "--field", "q", "--f", "T^2 - 1"],
        ["seq", "--field", "fp:7", "--f", "T", "--seed", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.run(argv) == cli.EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_missing_archive(capsys, tmp_path):
    assert cli.run(["decode", str(tmp_path.joinpath("missing.zwit"))]) == cli.EXIT_USAGE
    assert "error" in capsys.readouterr().err
