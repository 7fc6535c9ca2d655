import pytest
from tests.test_lib import poly

from polynomial_zsigmondy.sequences import SequenceSpec
from polynomial_zsigmondy.verification.divisibility import (
    bezout_identities,
    strong_divisibility_grid,
    verify_strong_divisibility,
)
from polynomial_zsigmondy.verification.report import Report, Verdict


@pytest.mark.parametrize(
    ("fixture", "statement"),
    [
        ("zsig_f7", "lemma-1.2"),
        ("zsig_q", "lemma-1.2"),
        ("bang_f2", "lemma-1.4"),
        ("admissible_lucas", "lemma-2.2"),
    ],
)
def test_holds(request, fixture, statement):
    spec = request.getfixturevalue(fixture)
    report = verify_strong_divisibility(spec, 12)

    assert report.statement == statement
    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    # 66 grid pairs and 45 identities
    assert report.cases == 66 + 45


def test_degenerate_lucas_is_caught(degenerate_lucas, q):
    report = verify_strong_divisibility(degenerate_lucas, 3)

    assert report.verdict == Verdict.COUNTEREXAMPLE
    first = report.failures[0]
    assert first.indices == (2, 3)
    assert first.poly("gcd") == poly("T + 1", q)
    assert first.poly("expected") == poly("1", q)
    assert report.notes == ["P is not admissible: gcd(P + P_σ, P·P_σ) = T + 1"]


def test_characteristic_2_is_recorded(f2):
    spec = SequenceSpec.zsigmondy(poly("T^2 + T + 1", f2), poly("T", f2))
    report = verify_strong_divisibility(spec, 9)

    assert report.recorded_only
    assert report.failures == []
    assert report.verdict == Verdict.RECORDED_ONLY


def test_odd_only_grid(bang_f2):
    report = Report("x", "y", (1, 9))
    strong_divisibility_grid(report, bang_f2, 9, odd_only=True)
    # pairs among 1, 3, 5, 7, 9
    assert report.cases == 10


def test_identities_for_constant_g(f5):
    spec = SequenceSpec.zsigmondy(poly("T^2 + 2", f5), poly("3", f5))
    report = Report("x", "y", (1, 8))
    bezout_identities(report, spec, 8)

    assert report.cases == 28
    assert report.failures == []
