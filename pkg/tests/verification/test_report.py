from tests.test_lib import poly

from polynomial_zsigmondy.verification.report import Report, Verdict, Witness


def _witness(n: int) -> Witness:
    return Witness((n,), (), f"case {n}")


def test_verdicts():
    report = Report("lemma-1.2", "some spec", (1, 5))
    assert report.verdict == Verdict.VERIFIED_IN_RANGE

    assert report.record(True, lambda: _witness(1))
    assert not report.record(False, lambda: _witness(2), asserted=False)
    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    assert report.observations == [_witness(2)]

    report.record(False, lambda: _witness(3))
    assert report.verdict == Verdict.COUNTEREXAMPLE
    assert report.cases == 3


def test_downgrade_moves_failures_to_observations():
    report = Report("thm-1.3", "some spec", (1, 5))
    report.downgrade("characteristic 2")
    report.record(False, lambda: _witness(4))

    assert report.failures == []
    assert report.observations == [_witness(4)]
    assert report.verdict == Verdict.RECORDED_ONLY
    assert report.notes == ["recorded only: characteristic 2"]


def test_witness_is_built_lazily():
    def explode():
        raise AssertionError("witness built for a passing case")

    Report("x", "y", (1, 1)).record(True, explode)


def test_merge():
    report = Report("lucas-suite", "spec", (1, 4))
    other = Report("lemma-2.2", "spec", (1, 4), cases=2, failures=[_witness(3)], notes=["gcd differs"])
    report.merge(other)

    assert report.cases == 2
    assert report.failures == [_witness(3)]
    assert report.notes == ["lemma-2.2: gcd differs"]


def test_timing_is_off_by_default():
    report = Report("x", "y", (1, 1))
    with report.timed(False):
        sum(range(10_000))
    assert report.ms == 0


def test_json_and_text(q):
    report = Report("lemma-2.2", "lucas q-sqrt:2 P=...", (1, 3), seed=7, cases=3)
    report.record(False, lambda: Witness((2, 3), (("gcd", poly("T + 1", q)),), "gcd differs"))

    assert report.to_json() == {
        "statement": "lemma-2.2",
        "spec": "lucas q-sqrt:2 P=...",
        "range": [1, 3],
        "cases": 4,
        "failures": [{"indices": [2, 3], "polys": {"gcd": "T + 1"}, "note": "gcd differs"}],
        "observations": [],
        "notes": [],
        "verdict": "counterexample",
        "seed": 7,
        "ms": 0,
    }
    assert report.to_text() == (
        "lemma-2.2 on lucas q-sqrt:2 P=...\n"
        "  range 1..3, 4 cases: counterexample\n"
        "  failure at [2, 3]: gcd differs gcd = T + 1"
    )
    assert report.failures[0].poly("gcd") == poly("T + 1", q)
