import pytest

from polynomial_zsigmondy.fields import FieldDescriptor, make_field
from polynomial_zsigmondy.poly_text import parse_poly
from polynomial_zsigmondy.sequences import SequenceSpec

_RUN_SLOW = False


def skip_unless_slow():
    if not _RUN_SLOW:
        pytest.skip("Desk-scale sweep; pass --slow to run it")


@pytest.fixture(name="slow")
def _slow():
    skip_unless_slow()


@pytest.fixture(scope="session")
def f2() -> FieldDescriptor:
    return make_field("fp:2")


@pytest.fixture(scope="session")
def f3() -> FieldDescriptor:
    return make_field("fp:3")


@pytest.fixture(scope="session")
def f5() -> FieldDescriptor:
    return make_field("fp:5")


@pytest.fixture(scope="session")
def f7() -> FieldDescriptor:
    return make_field("fp:7")


@pytest.fixture(scope="session")
def q() -> FieldDescriptor:
    return make_field("q")


@pytest.fixture(scope="session")
def q_sqrt2() -> FieldDescriptor:
    return make_field("q-sqrt:2")


@pytest.fixture(scope="session")
def f4() -> FieldDescriptor:
    """F_2(w) with w^2 = w + 1."""
    return make_field("fp2:2:1:1")


@pytest.fixture(scope="session")
def f9() -> FieldDescriptor:
    """F_3(w) with w^2 = -1."""
    return make_field("fp2:3:0:2")


@pytest.fixture(scope="session")
def f25() -> FieldDescriptor:
    """F_5(w) with w^2 = 2."""
    return make_field("fp2:5:0:2")


@pytest.fixture()
def degenerate_lucas(q_sqrt2) -> SequenceSpec:
    """P = (T + 1)(T + w): P + P_σ and P·P_σ share T + 1."""
    return SequenceSpec.lucas(parse_poly("T^2 + (1+1*w)*T + (0+1*w)", q_sqrt2))


@pytest.fixture()
def admissible_lucas(q_sqrt2) -> SequenceSpec:
    return SequenceSpec.lucas(parse_poly("T + (0+1*w)", q_sqrt2))


@pytest.fixture()
def zsig_f7(f7) -> SequenceSpec:
    return SequenceSpec.zsigmondy(parse_poly("T^2", f7), parse_poly("T + 1", f7))


@pytest.fixture()
def zsig_q(q) -> SequenceSpec:
    return SequenceSpec.zsigmondy(parse_poly("T^2 + 1", q), parse_poly("T", q))


@pytest.fixture()
def bang_f2(f2) -> SequenceSpec:
    return SequenceSpec.bang(parse_poly("T^2 + T + 1", f2))


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        dest="run_slow",
        default=False,
        help="Runs the desk-scale sweeps instead of skipping them",
    )


def pytest_configure(config: pytest.Config):
    global _RUN_SLOW
    _RUN_SLOW = config.option.run_slow
