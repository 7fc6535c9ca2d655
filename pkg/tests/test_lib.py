"""
Independent oracles for the tests: nothing here calls the factorizer or the cyclotomic module.
"""

import itertools
import typing

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from polynomial_zsigmondy.fields import FieldDescriptor
from polynomial_zsigmondy.poly import Poly, divides
from polynomial_zsigmondy.poly_text import parse_poly
from polynomial_zsigmondy.rng import RngState


def poly(text: str, field: FieldDescriptor) -> Poly:
    return parse_poly(text, field)


def monic_polys(field: FieldDescriptor, degree: int) -> typing.Iterator[Poly]:
    """Every monic polynomial of the given degree over a prime field."""
    for lower in itertools.product(range(field.characteristic), repeat=degree):
        yield Poly.from_raw(field, list(lower) + [1])


def random_monic(field: FieldDescriptor, degree: int, rng: RngState) -> Poly:
    return Poly.from_raw(field, [rng.below(field.characteristic) for _ in range(degree)] + [1])


def factor_key(item: tuple[Poly, int]) -> tuple:
    p, mult = item
    return p.degree, p.coeffs, mult


def trial_division_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicity, by dividing out monic candidates of increasing degree."""
    remaining = f.monic()
    found: dict[Poly, int] = {}
    d = 1
    while 2 * d <= remaining.degree:
        for candidate in monic_polys(f.field, d):
            while divides(candidate, remaining):
                remaining = remaining // candidate
                found[candidate] = found.get(candidate, 0) + 1
        d += 1
    if not remaining.is_constant:
        found[remaining] = found.get(remaining, 0) + 1
    return sorted(found.items(), key=factor_key)


def trial_division_affordable(f: Poly, budget: int = 20_000) -> bool:
    return f.field.characteristic ** (f.degree // 2) <= budget


def galois_factor(f: Poly) -> list[tuple[tuple[int, ...], int]]:
    """sympy's GF(p) factorization, as (coefficients low to high, multiplicity) pairs."""
    p = f.field.characteristic
    _, factors = gf_factor(ZZ.map([int(c) for c in reversed(f.coeffs)]), p, ZZ)
    return sorted(
        ((tuple(int(c) for c in reversed(g)), k) for g, k in factors),
        key=lambda item: (len(item[0]), item[0], item[1]),
    )


def evaluate(f: Poly, x) -> typing.Any:
    field = f.field
    result = field.zero
    for c in reversed(f.coeffs):
        result = field.add(field.mul(result, x), c)
    return result


def has_root(f: Poly) -> bool:
    return any(f.field.is_zero(evaluate(f, x)) for x in f.field.elements())


def is_irreducible_low_degree(f: Poly) -> bool:
    """Root search, exact for degrees 2 and 3."""
    if f.degree > 3:
        raise ValueError(f"Root search decides irreducibility only up to degree 3; got {f.degree}")
    return f.degree >= 1 and (f.degree == 1 or not has_root(f))


def symbolic_phi_coefficients(n: int) -> list[int]:
    """Integer coefficients of Φ_n(x), low to high, from sympy's expansion."""
    x = sympy.Symbol("x")
    return [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]


def symbolic_phi_homog(n: int, a: Poly, b: Poly) -> Poly:
    """Σ c_i a^i b^(φ(n) - i) for the coefficients c_i of Φ_n(x)."""
    field = a.field
    coefficients = symbolic_phi_coefficients(n)
    top = len(coefficients) - 1
    result = Poly.zero(field)
    for i, c in enumerate(coefficients):
        if c:
            result = result + (a**i * b ** (top - i)).scale(field.from_int(c))
    return result
