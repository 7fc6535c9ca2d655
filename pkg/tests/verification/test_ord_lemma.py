import pytest
from tests.test_lib import poly

from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceSpec
from polynomial_zsigmondy.verification.ord_lemma import default_pi, predicted_multiplier, verify_ord_lemma
from polynomial_zsigmondy.verification.report import Verdict


@pytest.fixture(name="bang_t_f3")
def _bang_t_f3(f3):
    # h_n = T^n - 1
    return SequenceSpec.bang(poly("T", f3))


@pytest.mark.parametrize(
    ("m", "p", "expected"),
    [
        (9, 3, 9),
        (18, 3, 9),
        (10, 3, 1),
        (10, 5, 5),
        (12, 0, 1),
    ],
)
def test_predicted_multiplier(m, p, expected):
    assert predicted_multiplier(m, p) == expected


def test_valuations_jump_at_multiples_of_p(bang_t_f3, f3):
    report = verify_ord_lemma(bang_t_f3, poly("T + 2", f3), 1, 27)

    assert report.statement == "lemma-1.1"
    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    assert report.failures == []
    # 27 valuations and 27 divisibility checks
    assert report.cases == 54


def test_valuations_along_multiples_of_two(bang_t_f3, f3):
    # π = T + 1 divides h_2 = T^2 - 1; ord_π(h_6) = 3
    report = verify_ord_lemma(bang_t_f3, poly("T + 1", f3), 2, 9)
    assert report.verdict == Verdict.VERIFIED_IN_RANGE


def test_characteristic_0(zsig_q, q):
    pi = poly("T^2 - T + 1", q)  # f_1, irreducible over Q
    report = verify_ord_lemma(zsig_q, pi, 1, 12)

    assert report.verdict == Verdict.VERIFIED_IN_RANGE
    assert report.range == (1, 12)


def test_invalid_prime(bang_t_f3, f3, f5):
    with pytest.raises(ValueError, match="does not divide"):
        verify_ord_lemma(bang_t_f3, poly("T^2 + 1", f3), 1, 3)
    with pytest.raises(ValueError, match="not irreducible"):
        verify_ord_lemma(bang_t_f3, poly("T^2 + 2", f3), 2, 3)
    with pytest.raises(ValueError, match="constant"):
        verify_ord_lemma(bang_t_f3, poly("2", f3), 1, 3)
    with pytest.raises(ValueError):
        verify_ord_lemma(bang_t_f3, poly("T + 2", f5), 1, 3)


def test_default_pi(bang_t_f3, zsig_q, f3, q):
    assert default_pi(bang_t_f3, 2, RngState(0)) == poly("T + 1", f3)
    assert default_pi(zsig_q, 1, RngState(0)) == poly("T^2 - T + 1", q)

    with pytest.raises(ValueError):
        default_pi(SequenceSpec.zsigmondy(poly("T + 1", q), poly("T", q)), 1, RngState(0))
