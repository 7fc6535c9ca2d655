"""
Factorization into monic irreducibles over finite fields F_q, q = p or p^2.

The pipeline is squarefree decomposition, then distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting. Every result is multiplied back out and compared with the input.
"""

from __future__ import annotations

import dataclasses
import logging
import typing

from polynomial_zsigmondy.errors import FactorizationCheckError, UnsupportedFieldError
from polynomial_zsigmondy.fields import Scalar
from polynomial_zsigmondy.poly import Poly, gcd_monic, pow_mod

if typing.TYPE_CHECKING:
    from polynomial_zsigmondy.fields import FieldDescriptor
    from polynomial_zsigmondy.rng import RngState

logger = logging.getLogger(__name__)

# Each attempt splits a valid input with probability at least 1/2.
MAX_SPLIT_ATTEMPTS = 256


def factor_sort_key(poly: Poly) -> tuple:
    field = poly.field
    return poly.degree, tuple(field.sort_key(c) for c in poly.coeffs)


@dataclasses.dataclass(frozen=True)
class Factorization:
    unit: Scalar
    factors: tuple[tuple[Poly, int], ...]

    @property
    def field(self) -> FieldDescriptor:
        return self.unit.field

    @property
    def irreducibles(self) -> list[Poly]:
        return [poly for poly, _ in self.factors]

    @property
    def degree(self) -> int:
        return sum(poly.degree * mult for poly, mult in self.factors)

    def expand(self) -> Poly:
        result = Poly.constant(self.field, self.unit.value)
        for poly, mult in self.factors:
            result = result * poly**mult
        return result

    def __str__(self):
        if not self.factors:
            return str(self.unit)
        parts = []
        if self.unit.value != self.field.one:
            parts.append(str(self.unit))
        for poly, mult in self.factors:
            text = f"({poly})"
            parts.append(text if mult == 1 else f"{text}^{mult}")
        return "*".join(parts)


def _require_finite(f: Poly, operation: str) -> None:
    if not f.field.is_finite:
        raise UnsupportedFieldError(f"{operation} needs a finite field; got {f.field}")


def _pth_root(f: Poly) -> Poly:
    """For f = u(T^p), returns u with every coefficient replaced by its p-th root."""
    field = f.field
    p = field.characteristic
    return Poly.from_raw(field, (field.frobenius_root(c) for c in f.coeffs[::p]))


def squarefree_decompose(f: Poly) -> list[tuple[Poly, int]]:
    _require_finite(f, "Squarefree decomposition")
    if f.is_constant:
        raise ValueError(f"Squarefree decomposition of the constant {f}")

    p = f.field.characteristic
    f = f.monic()
    one = Poly.one(f.field)
    result: list[tuple[Poly, int]] = []
    multiplier = 1

    while True:
        derivative = f.derivative()
        if not derivative.is_zero:
            g = gcd_monic(f, derivative)
            h = f // g
            i = 1
            while not h.is_one:
                common = gcd_monic(g, h)
                part = h // common
                if not part.is_constant:
                    result.append((part, i * multiplier))
                g, h, i = g // common, common, i + 1
            if g == one:
                break
            f = g

        # every remaining exponent is a multiple of p
        f = _pth_root(f)
        multiplier *= p

    result.sort(key=lambda item: item[1])
    return result


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    _require_finite(f, "Distinct-degree factorization")
    if f.is_constant:
        raise ValueError(f"Distinct-degree factorization of the constant {f}")
    f = f.monic()
    derivative = f.derivative()
    if derivative.is_zero or not gcd_monic(f, derivative).is_one:
        raise FactorizationCheckError(f"{f} is not squarefree")

    q = f.field.order
    x = Poly.variable(f.field)
    h = x % f
    parts: list[tuple[Poly, int]] = []
    d = 1
    while 2 * d <= f.degree:
        h = pow_mod(h, q, f)
        g = gcd_monic(f, h - x)
        if not g.is_one:
            parts.append((g, d))
            f = f // g
            h = h % f
        d += 1

    if not f.is_one:
        parts.append((f, f.degree))
    return parts


def _random_poly(field: FieldDescriptor, degree_below: int, rng: RngState) -> Poly:
    return Poly.from_raw(field, (field.random_element(rng) for _ in range(degree_below)))


def _splitting_candidate(f: Poly, a: Poly, d: int) -> Poly:
    field = f.field
    if field.characteristic != 2:
        return pow_mod(a, (field.order**d - 1) // 2, f) - Poly.one(field)

    # trace from F_{q^d} down to F_2
    power = a % f
    trace = power
    for _ in range(field.extension_degree * d - 1):
        power = (power * power) % f
        trace = trace + power
    return trace


def _split(f: Poly, d: int, rng: RngState) -> list[Poly]:
    if f.degree == d:
        return [f]
    if f.degree % d != 0:
        raise FactorizationCheckError(f"Equal-degree split produced {f}, whose degree is not a multiple of {d}")

    for _ in range(MAX_SPLIT_ATTEMPTS):
        a = _random_poly(f.field, f.degree, rng)
        if a.is_constant:
            continue
        g = gcd_monic(f, _splitting_candidate(f, a, d))
        if 0 < g.degree < f.degree:
            return _split(g, d, rng) + _split(f // g, d, rng)

    raise FactorizationCheckError(f"{f} does not split into factors of degree {d}")


def equal_degree_split(f: Poly, d: int, rng: RngState) -> list[Poly]:
    _require_finite(f, "Equal-degree splitting")
    if d < 1:
        raise ValueError(f"Invalid factor degree {d}")
    return sorted(_split(f.monic(), d, rng), key=factor_sort_key)


def factor(f: Poly, rng: RngState) -> Factorization:
    if f.is_zero:
        raise ValueError("Cannot factor the zero polynomial")
    if not f.field.is_finite:
        raise UnsupportedFieldError(
            f"Factoring over {f.field} is not supported; strip primitive parts by gcd instead"
        )

    unit = Scalar(f.field, f.leading)
    if f.is_constant:
        return Factorization(unit, ())

    factors: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decompose(f):
        for piece, d in distinct_degree(part):
            factors.extend((irreducible, mult) for irreducible in equal_degree_split(piece, d, rng))

    factors.sort(key=lambda item: factor_sort_key(item[0]))
    result = Factorization(unit, tuple(factors))
    if result.expand() != f:
        raise FactorizationCheckError(f"Factorization {result} does not multiply back to {f}")

    logger.debug("Factored degree %d polynomial into %d irreducibles", f.degree, len(factors))
    return result
