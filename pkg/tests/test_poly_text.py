from fractions import Fraction

import pytest

from polynomial_zsigmondy.errors import PolySyntaxError
from polynomial_zsigmondy.fields import make_field
from polynomial_zsigmondy.poly import Poly
from polynomial_zsigmondy.poly_text import format_poly, parse_poly
from polynomial_zsigmondy.rng import RngState


@pytest.mark.parametrize(
    ("spec", "text", "expected"),
    [
        ("fp:7", "T^2 + 1", "T^2 + 1"),
        ("fp:7", "T^2 - 1", "T^2 + 6"),
        ("fp:7", "1/2*T", "4*T"),
        ("fp:5", "T + T + 3*T", "0"),
        ("fp:3", "  -T^3+T ", "2*T^3 + T"),
        ("q", "1/2*T^3 - 4*T", "1/2*T^3 - 4*T"),
        ("q", "-T^2 + 3/6", "-T^2 + 1/2"),
        ("q", "0", "0"),
        ("q-sqrt:2", "T^2 + (1+1*w)*T + (0+1*w)", "T^2 + (1+1*w)*T + (0+1*w)"),
        ("q-sqrt:2", "(w)*T + (1/2)", "(0+1*w)*T + (1/2+0*w)"),
        ("q-sqrt:2", "(3 - 2*w)", "(3-2*w)"),
        ("fp2:3:0:2", "(2*w+1)*T^2 + (1)", "(1+2*w)*T^2 + (1+0*w)"),
    ],
)
def test_parse_and_format(spec, text, expected):
    field = make_field(spec)
    assert format_poly(parse_poly(text, field)) == expected


@pytest.mark.parametrize(
    ("spec", "text", "position"),
    [
        ("fp:2", "1/2*T", 0),
        ("fp:7", "", 0),
        ("fp:7", "T^", 2),
        ("fp:7", "T T", 2),
        ("fp:7", "3/0", 0),
        ("fp:7", "(1+w)*T", 0),
        ("q", "x + 1", 0),
        ("q-sqrt:2", "(1+*w)", 3),
    ],
)
def test_syntax_errors(spec, text, position):
    with pytest.raises(PolySyntaxError) as error:
        parse_poly(text, make_field(spec))

    assert error.value.position == position
    assert error.value.text == text


@pytest.mark.parametrize("spec", ["fp:7", "fp:2", "q", "q-sqrt:2", "fp2:5:0:2", "q-ext:1:1"])
def test_format_parses_back(spec):
    field = make_field(spec)
    rng = RngState(17)
    for degree in range(6):
        p = Poly.from_raw(field, [field.random_element(rng) for _ in range(degree + 1)])
        assert parse_poly(format_poly(p), field) == p


def test_str_uses_text_form(q):
    assert str(Poly.from_raw(q, [Fraction(-1), Fraction(0), Fraction(1, 3)])) == "1/3*T^2 - 1"
