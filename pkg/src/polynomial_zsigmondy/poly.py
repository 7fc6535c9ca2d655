"""
Dense univariate polynomials in T over any `FieldDescriptor`.

Coefficients are raw field payloads stored from degree 0 upwards with trailing zeros trimmed, so the zero
polynomial has no coefficients.
"""

from __future__ import annotations

import dataclasses
import math
import typing

from polynomial_zsigmondy.errors import DescriptorMismatchError, InexactDivisionError
from polynomial_zsigmondy.fields import FieldDescriptor, FieldKind, Raw, Scalar

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

KARATSUBA_THRESHOLD = 64
NEG_INFINITY = -math.inf


class _NumberOps:
    """Plain Python arithmetic, exact for ints and Fractions. Prime-field results get reduced by the caller."""

    zero = 0

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def is_zero(x) -> bool:
        return x == 0


class _FieldOps:
    def __init__(self, field: FieldDescriptor):
        self.zero = field.zero
        self.add = field.add
        self.sub = field.sub
        self.mul = field.mul
        self.is_zero = field.is_zero


def _trimmed(coeffs: list, field: FieldDescriptor) -> tuple:
    end = len(coeffs)
    while end and field.is_zero(coeffs[end - 1]):
        end -= 1
    return tuple(coeffs[:end])


def _schoolbook(a: Sequence, b: Sequence, ops) -> list:
    out = [ops.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ops.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return out


def _add_lists(a: Sequence, b: Sequence, ops) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = ops.add(out[i], y)
    return out


def _karatsuba(a: Sequence, b: Sequence, ops) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= KARATSUBA_THRESHOLD:
        return _schoolbook(a, b, ops)

    half = max(len(a), len(b)) // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]

    z0 = _karatsuba(a0, b0, ops)
    z2 = _karatsuba(a1, b1, ops)
    z1 = _karatsuba(_add_lists(a0, a1, ops), _add_lists(b0, b1, ops), ops)

    out = [ops.zero] * (len(a) + len(b) + 2 * half)
    for i, x in enumerate(z0):
        out[i] = ops.add(out[i], x)
        out[i + half] = ops.sub(out[i + half], x)
    for i, x in enumerate(z2):
        out[i + 2 * half] = ops.add(out[i + 2 * half], x)
        out[i + half] = ops.sub(out[i + half], x)
    for i, x in enumerate(z1):
        out[i + half] = ops.add(out[i + half], x)
    return out[: len(a) + len(b) - 1]


def _mul_coeffs(field: FieldDescriptor, a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    if field.kind == FieldKind.PRIME_FIELD:
        p = field.characteristic
        return _trimmed([c % p for c in _karatsuba(a, b, _NumberOps)], field)
    if field.kind == FieldKind.RATIONALS:
        return _trimmed(_karatsuba(a, b, _NumberOps), field)
    return _trimmed(_karatsuba(a, b, _FieldOps(field)), field)


def _divrem_coeffs(field: FieldDescriptor, a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("Polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)

    db = len(b) - 1
    rem = list(a)
    quot = [field.zero] * (len(a) - db)
    inv_lc = field.inv(b[-1])

    if field.kind == FieldKind.PRIME_FIELD:
        p = field.characteristic
        for i in range(len(a) - len(b), -1, -1):
            c = rem[i + db] * inv_lc % p
            quot[i] = c
            if c:
                for j in range(db):
                    rem[i + j] = (rem[i + j] - c * b[j]) % p
    elif field.kind == FieldKind.RATIONALS:
        for i in range(len(a) - len(b), -1, -1):
            c = rem[i + db] * inv_lc
            quot[i] = c
            if c:
                for j in range(db):
                    rem[i + j] -= c * b[j]
    else:
        for i in range(len(a) - len(b), -1, -1):
            c = field.mul(rem[i + db], inv_lc)
            quot[i] = c
            if not field.is_zero(c):
                for j in range(db):
                    rem[i + j] = field.sub(rem[i + j], field.mul(c, b[j]))

    return _trimmed(quot, field), _trimmed(rem[:db], field)


@dataclasses.dataclass(frozen=True)
class Poly:
    field: FieldDescriptor
    coeffs: tuple[Raw, ...]

    @classmethod
    def from_raw(cls, field: FieldDescriptor, coeffs: Iterable[Raw]) -> Poly:
        return cls(field, _trimmed(list(coeffs), field))

    @classmethod
    def from_ints(cls, field: FieldDescriptor, values: Iterable[int]) -> Poly:
        """Coefficients listed from degree 0 upwards."""
        return cls.from_raw(field, (field.from_int(v) for v in values))

    @classmethod
    def from_scalars(cls, field: FieldDescriptor, values: Iterable[Scalar]) -> Poly:
        raw = []
        for value in values:
            if value.field != field:
                raise DescriptorMismatchError(f"Coefficient over {value.field} in a polynomial over {field}")
            raw.append(value.value)
        return cls.from_raw(field, raw)

    @classmethod
    def zero(cls, field: FieldDescriptor) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldDescriptor) -> Poly:
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, field: FieldDescriptor, value: Raw) -> Poly:
        return cls.from_raw(field, [value])

    @classmethod
    def monomial(cls, field: FieldDescriptor, degree: int, value: Raw | None = None) -> Poly:
        value = field.one if value is None else value
        return cls.from_raw(field, [field.zero] * degree + [value])

    @classmethod
    def variable(cls, field: FieldDescriptor) -> Poly:
        return cls.monomial(field, 1)

    # Queries

    @property
    def degree(self) -> int | float:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    @property
    def leading(self) -> Raw:
        if not self.coeffs:
            raise ValueError("The zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == self.field.one

    def coefficient(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return Scalar(self.field, self.coeffs[i])
        return Scalar(self.field, self.field.zero)

    def scalars(self) -> list[Scalar]:
        return [Scalar(self.field, c) for c in self.coeffs]

    # Arithmetic

    def _check(self, other: Poly) -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"Expected Poly; got {type(other).__name__}")
        if other.field != self.field:
            raise DescriptorMismatchError(f"Mixing polynomials over {self.field} and {other.field}")

    def scale(self, value: Raw) -> Poly:
        field = self.field
        return Poly.from_raw(field, (field.mul(c, value) for c in self.coeffs))

    def monic(self) -> Poly:
        """Monic associate; the zero polynomial stays zero."""
        if not self.coeffs or self.is_monic:
            return self
        return self.scale(self.field.inv(self.leading))

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        field = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = field.add(out[i], y)
        return Poly(field, _trimmed(out, field))

    def __neg__(self) -> Poly:
        field = self.field
        return Poly(field, tuple(field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        return Poly(self.field, _mul_coeffs(self.field, self.coeffs, other.coeffs))

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent}")
        result = Poly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        q, r = _divrem_coeffs(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def derivative(self) -> Poly:
        field = self.field
        return Poly.from_raw(field, (field.mul(field.from_int(i), c) for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self):
        from polynomial_zsigmondy.poly_text import format_poly

        return format_poly(self)


_POLY_OPS: dict[str, typing.Callable[[Poly, Poly], Poly]] = {
    "add": Poly.__add__,
    "sub": Poly.__sub__,
    "mul": Poly.__mul__,
}


def poly_arith(op: str, a: Poly, b: Poly | int) -> Poly:
    if op == "pow":
        if not isinstance(b, int):
            raise TypeError(f"pow takes an integer exponent; got {type(b).__name__}")
        return a**b
    if op not in _POLY_OPS:
        raise ValueError(f"Unknown polynomial operation: {op}")
    return _POLY_OPS[op](a, b)


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if not r.is_zero:
        raise InexactDivisionError(f"{b} does not divide {a}; remainder {r}", r)
    return q


def divides(d: Poly, f: Poly) -> bool:
    return (f % d).is_zero


def gcd_monic(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def pow_mod(f: Poly, exponent: int, modulus: Poly) -> Poly:
    """f^exponent reduced modulo `modulus`, by repeated squaring."""
    result = Poly.one(f.field) % modulus
    base = f % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        exponent >>= 1
        if exponent:
            base = (base * base) % modulus
    return result


def ord_at(f: Poly, pi: Poly) -> int:
    if f.is_zero:
        raise ValueError("ord of the zero polynomial is infinite")
    if pi.is_constant:
        raise ValueError(f"Valuation at the constant {pi} is undefined")

    count = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero:
            return count
        f = q
        count += 1


def coeff_map_sigma(poly: Poly) -> Poly:
    field = poly.field
    return Poly(field, tuple(field.sigma(c) for c in poly.coeffs))


def in_base_field(poly: Poly) -> bool:
    field = poly.field
    return all(field.is_fixed(c) for c in poly.coeffs)


def project_to_base(poly: Poly) -> Poly:
    field = poly.field
    if not field.is_extension:
        raise ValueError(f"{field} is not an extension")
    for i, c in enumerate(poly.coeffs):
        if not field.is_fixed(c):
            raise ValueError(f"Coefficient of T^{i} in {poly} is not fixed by sigma")
    return Poly(field.base, tuple(c[0] for c in poly.coeffs))


def lift_to_extension(poly: Poly, extension: FieldDescriptor) -> Poly:
    if extension.base != poly.field:
        raise DescriptorMismatchError(f"{extension} does not extend {poly.field}")
    return Poly(extension, tuple(extension.embed(c) for c in poly.coeffs))
