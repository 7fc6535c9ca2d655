import pytest
from tests.test_lib import poly

from polynomial_zsigmondy.errors import UnsupportedFieldError
from polynomial_zsigmondy.formats.witness_archive import WitnessArchive
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceKind
from polynomial_zsigmondy.verification.char2 import CONTROL_COUNT, Char2Case, char2_cases, explore_char2
from polynomial_zsigmondy.verification.report import Verdict


def test_cases(f2):
    cases = char2_cases(f2, 2, 30, RngState(4), 9)
    pairs = [case for case in cases if not case.is_control]
    controls = [case for case in cases if case.is_control]

    assert len(pairs) == 30
    assert all(not case.g.is_one for case in pairs)
    assert 0 < len(controls) <= CONTROL_COUNT
    assert len({c.f for c in controls}) == len(controls)
    assert all(c.spec().kind == SequenceKind.BANG for c in controls)
    assert cases == char2_cases(f2, 2, 30, RngState(4), 9)


def test_exploration_is_recorded_only(f2):
    report = explore_char2(f2, 2, 12, RngState(1), 9)

    assert report.statement == "char2-remark"
    assert report.seed == 1
    assert report.spec == "zsigmondy fp:2 deg<=2 pairs=12"
    assert report.failures == []
    assert report.verdict == Verdict.RECORDED_ONLY
    assert report.notes[0] == "recorded only: characteristic 2 with g != 1 has no proof"
    assert report.notes[-1] == f"{len(report.observations)} counterexamples among pairs with g != 1"


def test_exploration_is_deterministic(f4):
    first = explore_char2(f4, 1, 8, RngState(77), 7)
    again = explore_char2(f4, 1, 8, RngState(77), 7)
    assert first.to_json() == again.to_json()


def test_observations_name_the_pair(f2):
    report = explore_char2(f2, 3, 40, RngState(9), 9)
    for witness in report.observations:
        assert witness.polys[0][0] == "f"
        assert witness.polys[1][0] == "g"


def test_control_case(f2):
    case = Char2Case(poly("T^2 + T + 1", f2), None, 9)
    assert case.is_control
    assert case.spec().kind == SequenceKind.BANG


def test_needs_characteristic_2(f3):
    with pytest.raises(UnsupportedFieldError):
        explore_char2(f3, 2, 5, RngState(0), 9)


def test_archive(f2, tmp_path):
    path = tmp_path.joinpath("char2.zwit")
    report = explore_char2(f2, 2, 10, RngState(3), 9, archive=path)

    archived = WitnessArchive.read(path).reports()
    assert len(archived) == 1
    assert archived[0].statement == "char2-remark"
    assert archived[0].verdict == report.verdict.value
    assert archived[0].seed == 3
