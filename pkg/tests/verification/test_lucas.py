import pytest
from tests.test_lib import poly

from polynomial_zsigmondy.errors import SequenceKindError
from polynomial_zsigmondy.sequences import SequenceSpec
from polynomial_zsigmondy.verification.lucas import CLAUSES, frobenius_power, verify_lucas_identities
from polynomial_zsigmondy.verification.report import Report, Verdict


@pytest.fixture(name="lucas_f9")
def _lucas_f9(f9):
    """P = T + w over F_9 = F_3(w), w^2 = -1: P + P_σ = 2T and P·P_σ = T^2 + 1."""
    return SequenceSpec.lucas(poly("T + (0+1*w)", f9))


def test_suite_over_q(admissible_lucas):
    report = verify_lucas_identities(admissible_lucas, 8)

    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    assert "Frobenius clause needs positive characteristic" in report.notes
    assert "valuation clause skipped: primes cannot be listed in characteristic 0" in report.notes
    # the suite folds in strong divisibility and the existence theorem
    assert any(note.startswith("thm-2.6: ") for note in report.notes)


@pytest.mark.parametrize("statement", sorted(CLAUSES))
def test_every_statement_over_f9(lucas_f9, statement):
    report = verify_lucas_identities(lucas_f9, 9, statement, seed=5)

    assert report.statement == statement
    assert report.seed == 5
    assert report.failures == []


def test_frobenius_clause_over_f9(lucas_f9):
    report = verify_lucas_identities(lucas_f9, 9, "lemma-2.3")

    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    assert "n = p = 3: primitive divisor False" in report.notes


def test_frobenius_clause_in_characteristic_2(f4):
    spec = SequenceSpec.lucas(poly("T + (0+1*w)", f4))
    report = verify_lucas_identities(spec, 8, "lemma-2.3")

    assert report.failures == []
    assert report.verdict == Verdict.RECORDED_ONLY
    assert "recorded only: characteristic 2" in report.notes
    assert "Frobenius clause recorded only in characteristic 2" in report.notes

    # as a clause of the suite it records without downgrading the other clauses
    clause = Report("lucas-suite", spec.describe(), (1, 8))
    frobenius_power(clause, spec, 8)
    assert clause.failures == []
    assert not clause.recorded_only


def test_valuation_clause_over_f9(lucas_f9):
    report = verify_lucas_identities(lucas_f9, 12, "lemma-2.5")

    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    # L_2 = 2T, so valuations are taken at T along 2, 4, ..., 12; L_6 and L_12 pick up a cube
    # and are recorded only
    assert [note for note in report.notes if note.startswith("lemma-2.5: m = ")] == [
        "lemma-2.5: m = 3: ord 3 against 1 (p divides m, recorded)",
        "lemma-2.5: m = 6: ord 3 against 1 (p divides m, recorded)",
    ]


def test_inadmissible_parameter(degenerate_lucas):
    report = verify_lucas_identities(degenerate_lucas, 6, "lemma-2.1")

    assert report.failures == []
    assert report.observations[0].indices == (2,)
    assert report.notes == ["P is not admissible: gcd = T + 1; coprimality is recorded only"]


def test_bad_arguments(admissible_lucas, zsig_q):
    with pytest.raises(ValueError):
        verify_lucas_identities(admissible_lucas, 5, "lemma-9.9")
    with pytest.raises(SequenceKindError):
        verify_lucas_identities(zsig_q, 5)
