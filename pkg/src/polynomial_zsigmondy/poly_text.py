"""
Text form of polynomials: terms ``c``, ``c*T^e``, ``T^e`` and ``T`` joined by ``+``/``-``, with integer,
``num/den`` or ``(a+b*w)`` coefficients. `format_poly` output always parses back to the same polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from polynomial_zsigmondy.errors import PolySyntaxError
from polynomial_zsigmondy.fields import GENERATOR_NAME, FieldDescriptor, FieldKind, Raw
from polynomial_zsigmondy.poly import Poly

VARIABLE_NAME = "T"


def _monomial_text(degree: int) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return VARIABLE_NAME
    return f"{VARIABLE_NAME}^{degree}"


def format_poly(poly: Poly) -> str:
    if poly.is_zero:
        return "0"

    field = poly.field
    parts: list[str] = []
    for degree in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[degree]
        if field.is_zero(c):
            continue

        negative = False
        if field.kind == FieldKind.RATIONALS and c < 0:
            negative = True
            c = -c

        monomial = _monomial_text(degree)
        if not monomial:
            term = field.format(c)
        elif c == field.one:
            term = monomial
        else:
            term = f"{field.format(c)}*{monomial}"

        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f" - {term}" if negative else f" + {term}")

    return "".join(parts)


class _Parser:
    def __init__(self, text: str, field: FieldDescriptor):
        self.text = text
        self.field = field
        self.pos = 0

    def error(self, message: str, position: int | None = None) -> PolySyntaxError:
        return PolySyntaxError(message, self.text, self.pos if position is None else position)

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"Expected {char!r}")
        self.pos += 1

    def number(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected a number")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        start = self.pos
        num = self.number()
        if self.peek() != "/":
            return Fraction(num)
        self.pos += 1
        den = self.number()
        if den == 0:
            raise self.error("Zero denominator", start)
        return Fraction(num, den)

    def from_fraction(self, field: FieldDescriptor, value: Fraction, position: int) -> Raw:
        try:
            return field.from_fraction(value)
        except ZeroDivisionError:
            raise self.error(f"Coefficient {value} is not valid in {self.field}", position) from None

    def parenthesized(self) -> Raw:
        """(a+b*w) and its variants: any signed sum of rationals and multiples of w."""
        position = self.pos
        self.expect("(")
        real = Fraction(0)
        imag = Fraction(0)
        first = True
        while self.peek() != ")":
            sign = 1
            if self.peek() in "+-":
                sign = -1 if self.peek() == "-" else 1
                self.pos += 1
            elif not first:
                raise self.error("Expected '+' or '-'")
            first = False

            start = self.pos
            if self.peek() == GENERATOR_NAME:
                self.pos += 1
                imag += sign
                continue

            value = self.rational()
            if self.peek() == "*":
                self.pos += 1
                if self.peek() != GENERATOR_NAME:
                    raise self.error(f"Expected {GENERATOR_NAME!r}")
                self.pos += 1
                imag += sign * value
            else:
                real += sign * value
            self.skip_spaces()
            if start == self.pos:
                raise self.error("Empty coefficient")
        self.expect(")")

        if imag == 0:
            return self.from_fraction(self.field, real, position)
        if not self.field.is_extension:
            raise self.error(f"{GENERATOR_NAME!r} used over {self.field}", position)
        base = self.field.base
        return self.field.make(self.from_fraction(base, real, position), self.from_fraction(base, imag, position))

    def coefficient(self) -> Raw:
        if self.peek() == "(":
            return self.parenthesized()
        position = self.pos
        return self.from_fraction(self.field, self.rational(), position)

    def monomial_degree(self) -> int:
        self.expect(VARIABLE_NAME)
        if self.peek() == "^":
            self.pos += 1
            return self.number()
        return 1

    def parse(self) -> Poly:
        field = self.field
        terms: dict[int, Raw] = {}
        first = True

        while True:
            char = self.peek()
            if not char:
                if first:
                    raise self.error("Empty polynomial")
                break

            negative = False
            if char in "+-":
                negative = char == "-"
                self.pos += 1
            elif not first:
                raise self.error("Expected '+' or '-'")
            first = False

            char = self.peek()
            if char == VARIABLE_NAME:
                coefficient = field.one
                degree = self.monomial_degree()
            elif char.isdigit() or char == "(":
                coefficient = self.coefficient()
                degree = 0
                if self.peek() == "*":
                    self.pos += 1
                    degree = self.monomial_degree()
            else:
                raise self.error("Expected a term")

            if negative:
                coefficient = field.neg(coefficient)
            terms[degree] = field.add(terms.get(degree, field.zero), coefficient)

        if not terms:
            return Poly.zero(field)
        coeffs = [field.zero] * (max(terms) + 1)
        for degree, value in terms.items():
            coeffs[degree] = value
        return Poly.from_raw(field, coeffs)


def parse_poly(text: str, field: FieldDescriptor) -> Poly:
    return _Parser(text, field).parse()
