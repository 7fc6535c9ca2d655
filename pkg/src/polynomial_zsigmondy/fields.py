"""
Exact coefficient fields: prime fields F_p, the rationals, and quadratic extensions k(w) of either.

Field elements are handled in two layers. Polynomial kernels work on raw payloads (an ``int`` residue,
a ``Fraction`` or a pair of base payloads) through the methods of `FieldDescriptor`. `Scalar` wraps a
payload together with its descriptor for the public API.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import math
import re
import typing
from fractions import Fraction

import sympy

from polynomial_zsigmondy.errors import DescriptorMismatchError, FieldSpecError

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

    from polynomial_zsigmondy.rng import RngState

Raw = typing.Any

GENERATOR_NAME = "w"


class FieldKind(enum.Enum):
    PRIME_FIELD = "prime_field"
    RATIONALS = "rationals"
    QUAD_EXT = "quad_ext"


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    num_root = math.isqrt(x.numerator)
    den_root = math.isqrt(x.denominator)
    return num_root * num_root == x.numerator and den_root * den_root == x.denominator


@dataclasses.dataclass(frozen=True)
class FieldDescriptor:
    """
    kind: which of the three field families this is.
    characteristic: p for F_p and its extensions, 0 for the rationals and theirs.
    base: for QUAD_EXT, the prime field or rationals being extended.
    min_poly: for QUAD_EXT, base payloads (s, t) with w^2 = s*w + t.
    """

    kind: FieldKind
    characteristic: int
    base: FieldDescriptor | None = None
    min_poly: tuple[Raw, Raw] | None = None

    def __post_init__(self):
        if self.kind == FieldKind.QUAD_EXT:
            if self.base is None or self.min_poly is None:
                raise FieldSpecError("A quadratic extension needs a base field and a minimal polynomial")
            if self.base.kind == FieldKind.QUAD_EXT:
                raise FieldSpecError(f"Nested extensions are not supported: base is {self.base.spec_string}")
            if self.characteristic != self.base.characteristic:
                raise FieldSpecError("Extension characteristic differs from its base")
            if not self._min_poly_irreducible():
                s, t = self.min_poly
                raise FieldSpecError(
                    f"x^2 - ({self.base.format(s)})*x - ({self.base.format(t)}) is reducible over "
                    f"{self.base.spec_string}"
                )
        elif self.kind == FieldKind.PRIME_FIELD:
            if not sympy.isprime(self.characteristic):
                raise FieldSpecError(f"Characteristic {self.characteristic} is not prime")
        elif self.characteristic != 0:
            raise FieldSpecError("The rationals have characteristic 0")

    def _min_poly_irreducible(self) -> bool:
        base = self.base
        s, t = self.min_poly
        if base.kind == FieldKind.RATIONALS:
            return not _is_rational_square(s * s + 4 * t)

        # root search over the finite base
        for x in base.elements():
            if base.sub(base.sub(base.mul(x, x), base.mul(s, x)), t) == 0:
                return False
        return True

    # Structure

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0

    @property
    def is_extension(self) -> bool:
        return self.kind == FieldKind.QUAD_EXT

    @property
    def extension_degree(self) -> int:
        """Degree over the prime field (or over the rationals)."""
        return 2 if self.is_extension else 1

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self.spec_string} is infinite")
        return self.characteristic**self.extension_degree

    @property
    def prime_subfield(self) -> FieldDescriptor:
        return self.base if self.is_extension else self

    @functools.cached_property
    def spec_string(self) -> str:
        if self.kind == FieldKind.PRIME_FIELD:
            return f"fp:{self.characteristic}"
        if self.kind == FieldKind.RATIONALS:
            return "q"

        s, t = self.min_poly
        if self.base.kind == FieldKind.PRIME_FIELD:
            return f"fp2:{self.characteristic}:{s}:{t}"
        if s == 0 and t.denominator == 1:
            return f"q-sqrt:{t.numerator}"
        return f"q-ext:{s.numerator}/{s.denominator}:{t.numerator}/{t.denominator}"

    def __str__(self):
        return self.spec_string

    # Constants and conversions

    @property
    def zero(self) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.zero, self.base.zero
        if self.kind == FieldKind.RATIONALS:
            return Fraction(0)
        return 0

    @property
    def one(self) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.one, self.base.zero
        if self.kind == FieldKind.RATIONALS:
            return Fraction(1)
        return 1

    @property
    def generator(self) -> Raw:
        if not self.is_extension:
            raise ValueError(f"{self.spec_string} has no extension generator")
        return self.base.zero, self.base.one

    def from_int(self, n: int) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.from_int(n), self.base.zero
        if self.kind == FieldKind.RATIONALS:
            return Fraction(n)
        return n % self.characteristic

    def from_fraction(self, value: Fraction) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.from_fraction(value), self.base.zero
        if self.kind == FieldKind.RATIONALS:
            return Fraction(value)
        p = self.characteristic
        if value.denominator % p == 0:
            raise ZeroDivisionError(f"Denominator of {value} vanishes in {self.spec_string}")
        return value.numerator * pow(value.denominator, -1, p) % p

    def embed(self, value: Raw) -> Raw:
        """Maps a base-field payload into this extension."""
        if not self.is_extension:
            raise ValueError(f"{self.spec_string} is not an extension")
        return value, self.base.zero

    def make(self, a: Raw, b: Raw) -> Raw:
        """The payload a + b*w from two base payloads."""
        return a, b

    # Arithmetic on payloads

    def is_zero(self, x: Raw) -> bool:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.is_zero(x[0]) and self.base.is_zero(x[1])
        return x == 0

    def add(self, x: Raw, y: Raw) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            base = self.base
            return base.add(x[0], y[0]), base.add(x[1], y[1])
        if self.kind == FieldKind.RATIONALS:
            return x + y
        return (x + y) % self.characteristic

    def sub(self, x: Raw, y: Raw) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            base = self.base
            return base.sub(x[0], y[0]), base.sub(x[1], y[1])
        if self.kind == FieldKind.RATIONALS:
            return x - y
        return (x - y) % self.characteristic

    def neg(self, x: Raw) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.neg(x[0]), self.base.neg(x[1])
        if self.kind == FieldKind.RATIONALS:
            return -x
        return -x % self.characteristic

    def mul(self, x: Raw, y: Raw) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            base = self.base
            s, t = self.min_poly
            a, b = x
            c, d = y
            bd = base.mul(b, d)
            real = base.add(base.mul(a, c), base.mul(bd, t))
            imag = base.add(base.add(base.mul(a, d), base.mul(b, c)), base.mul(bd, s))
            return real, imag
        if self.kind == FieldKind.RATIONALS:
            return x * y
        return x * y % self.characteristic

    def norm(self, x: Raw) -> Raw:
        """x * sigma(x), a base payload."""
        if not self.is_extension:
            raise ValueError(f"{self.spec_string} is not an extension")
        base = self.base
        s, t = self.min_poly
        a, b = x
        return base.sub(base.add(base.mul(a, a), base.mul(base.mul(a, b), s)), base.mul(base.mul(b, b), t))

    def inv(self, x: Raw) -> Raw:
        if self.is_zero(x):
            raise ZeroDivisionError(f"Inverting zero in {self.spec_string}")
        if self.kind == FieldKind.QUAD_EXT:
            base = self.base
            n_inv = base.inv(self.norm(x))
            a, b = self.sigma(x)
            return base.mul(a, n_inv), base.mul(b, n_inv)
        if self.kind == FieldKind.RATIONALS:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    def pow(self, x: Raw, e: int) -> Raw:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if self.kind == FieldKind.PRIME_FIELD:
            return pow(x, e, self.characteristic)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def sigma(self, x: Raw) -> Raw:
        """The non-identity automorphism over the base, w -> s - w."""
        if not self.is_extension:
            raise ValueError(f"sigma is only defined on quadratic extensions, not {self.spec_string}")
        base = self.base
        s, _ = self.min_poly
        a, b = x
        return base.add(a, base.mul(b, s)), base.neg(b)

    def is_fixed(self, x: Raw) -> bool:
        if not self.is_extension:
            raise ValueError(f"{self.spec_string} is not an extension")
        return self.base.is_zero(x[1])

    def frobenius_root(self, x: Raw) -> Raw:
        """The unique p-th root of x in a finite field: x^(q/p)."""
        if not self.is_finite:
            raise ValueError(f"{self.spec_string} has no Frobenius")
        return self.pow(x, self.order // self.characteristic)

    # Enumeration, ordering, text

    def elements(self) -> Iterator[Raw]:
        if self.kind == FieldKind.PRIME_FIELD:
            yield from range(self.characteristic)
        elif self.kind == FieldKind.QUAD_EXT and self.base.is_finite:
            for b in self.base.elements():
                for a in self.base.elements():
                    yield a, b
        else:
            raise ValueError(f"{self.spec_string} is infinite")

    def random_element(self, rng: RngState, bound: int = 5) -> Raw:
        """Uniform over a finite field; numerators and denominators up to `bound` over the rationals."""
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.random_element(rng, bound), self.base.random_element(rng, bound)
        if self.kind == FieldKind.RATIONALS:
            num = rng.below(2 * bound + 1) - bound
            den = rng.below(bound) + 1
            return Fraction(num, den)
        return rng.below(self.characteristic)

    def sort_key(self, x: Raw) -> tuple:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.sort_key(x[0]) + self.base.sort_key(x[1])
        if self.kind == FieldKind.RATIONALS:
            return x.numerator, x.denominator
        return (x,)

    def to_ints(self, x: Raw) -> list[int]:
        if self.kind == FieldKind.QUAD_EXT:
            return self.base.to_ints(x[0]) + self.base.to_ints(x[1])
        if self.kind == FieldKind.RATIONALS:
            return [x.numerator, x.denominator]
        return [x]

    def from_ints(self, ints: typing.Sequence[int]) -> Raw:
        if self.kind == FieldKind.QUAD_EXT:
            half = len(ints) // 2
            return self.base.from_ints(ints[:half]), self.base.from_ints(ints[half:])
        if self.kind == FieldKind.RATIONALS:
            return Fraction(ints[0], ints[1])
        return ints[0] % self.characteristic

    def format(self, x: Raw) -> str:
        if self.kind == FieldKind.QUAD_EXT:
            a, b = x
            b_text = self.base.format(b)
            if b_text.startswith("-"):
                return f"({self.base.format(a)}-{b_text[1:]}*{GENERATOR_NAME})"
            return f"({self.base.format(a)}+{b_text}*{GENERATOR_NAME})"
        if self.kind == FieldKind.RATIONALS:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x)


@dataclasses.dataclass(frozen=True)
class Scalar:
    field: FieldDescriptor
    value: Raw

    @classmethod
    def of(cls, field: FieldDescriptor, value: int | Fraction) -> Scalar:
        if isinstance(value, Fraction):
            return cls(field, field.from_fraction(value))
        return cls(field, field.from_int(value))

    def _check(self, other: Scalar) -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"Expected Scalar; got {type(other).__name__}")
        if other.field != self.field:
            raise DescriptorMismatchError(f"Mixing {self.field} and {other.field}")

    def __add__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> Scalar:
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def sigma(self) -> Scalar:
        return Scalar(self.field, self.field.sigma(self.value))

    def __str__(self):
        return self.field.format(self.value)


_BINARY_OPS: dict[str, typing.Callable[[Scalar, Scalar], Scalar | bool]] = {
    "add": Scalar.__add__,
    "sub": Scalar.__sub__,
    "mul": Scalar.__mul__,
    "div": Scalar.__truediv__,
}


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar | bool:
    if op in _BINARY_OPS:
        if b is None:
            raise ValueError(f"{op} needs two operands")
        return _BINARY_OPS[op](a, b)
    if op == "eq":
        a._check(b)
        return a == b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "is_zero":
        return a.is_zero()
    raise ValueError(f"Unknown scalar operation: {op}")


def sigma_conjugate(a: Scalar) -> Scalar:
    return a.sigma()


# Constructors


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME_FIELD, p)


def rationals() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONALS, 0)


def quadratic_extension(base: FieldDescriptor, s: int | Fraction, t: int | Fraction) -> FieldDescriptor:
    if base.kind == FieldKind.QUAD_EXT:
        raise FieldSpecError(f"Nested extensions are not supported: base is {base.spec_string}")
    s_raw = base.from_fraction(Fraction(s))
    t_raw = base.from_fraction(Fraction(t))
    return FieldDescriptor(FieldKind.QUAD_EXT, base.characteristic, base, (s_raw, t_raw))


_FRACTION = r"(-?\d+)(?:/(\d+))?"
_SPEC_PATTERNS = {
    "fp": re.compile(r"fp:(\d+)"),
    "q": re.compile(r"q"),
    "q-sqrt": re.compile(rf"q-sqrt:{_FRACTION}"),
    "fp2": re.compile(r"fp2:(\d+):(-?\d+):(-?\d+)"),
    "q-ext": re.compile(rf"q-ext:{_FRACTION}:{_FRACTION}"),
}


def _fraction(num: str, den: str | None) -> Fraction:
    if den is not None and int(den) == 0:
        raise FieldSpecError("Zero denominator in field spec")
    return Fraction(int(num), int(den) if den is not None else 1)


@functools.lru_cache
def make_field(spec: str) -> FieldDescriptor:
    """
    Parses the field mini-grammar: fp:<p> | q | q-sqrt:<d> | fp2:<p>:<s>:<t> | q-ext:<s>:<t>,
    the extension generator satisfying w^2 = s*w + t.
    """
    spec = spec.strip()
    if spec.startswith(("fp2:fp2", "fp2:q", "q-ext:q", "q-sqrt:q")):
        raise FieldSpecError(f"Nested extensions are not supported: {spec!r}")

    if m := _SPEC_PATTERNS["fp"].fullmatch(spec):
        return prime_field(int(m.group(1)))
    if _SPEC_PATTERNS["q"].fullmatch(spec):
        return rationals()
    if m := _SPEC_PATTERNS["q-sqrt"].fullmatch(spec):
        return quadratic_extension(rationals(), 0, _fraction(m.group(1), m.group(2)))
    if m := _SPEC_PATTERNS["fp2"].fullmatch(spec):
        p = int(m.group(1))
        return quadratic_extension(prime_field(p), int(m.group(2)), int(m.group(3)))
    if m := _SPEC_PATTERNS["q-ext"].fullmatch(spec):
        s = _fraction(m.group(1), m.group(2))
        t = _fraction(m.group(3), m.group(4))
        return quadratic_extension(rationals(), s, t)

    raise FieldSpecError(f"Unknown field spec: {spec!r}")
