"""
Möbius function, Euler totient, divisor lists and homogeneous cyclotomic polynomials Φ_n(A, B).
"""

from __future__ import annotations

import functools
import logging

import sympy

from polynomial_zsigmondy.errors import DescriptorMismatchError, IndexDeletedError
from polynomial_zsigmondy.poly import Poly, exact_div, gcd_monic, project_to_base

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 512


class ArithCache:
    """
    Sieved tables of smallest prime factors, μ and φ up to `n_max`. Arguments beyond the bound are
    factored with sympy and memoized as well.
    """

    def __init__(self, n_max: int = DEFAULT_N_MAX):
        if n_max < 1:
            raise ValueError(f"Invalid sieve bound {n_max}")
        self.n_max = n_max

        smallest = list(range(n_max + 1))
        for i in range(2, int(n_max**0.5) + 1):
            if smallest[i] == i:
                for j in range(i * i, n_max + 1, i):
                    if smallest[j] == j:
                        smallest[j] = i
        self._smallest_factor = smallest

        mobius = [0] * (n_max + 1)
        phi = [0] * (n_max + 1)
        mobius[1] = phi[1] = 1
        for n in range(2, n_max + 1):
            p = smallest[n]
            rest = n // p
            if rest % p == 0:
                mobius[n] = 0
                phi[n] = phi[rest] * p
            else:
                mobius[n] = -mobius[rest]
                phi[n] = phi[rest] * (p - 1)
        self._mobius = mobius
        self._phi = phi
        self._divisors: dict[int, tuple[int, ...]] = {}

    @staticmethod
    def _check(n: int) -> None:
        if n < 1:
            raise ValueError(f"Expected a positive integer; got {n}")

    def factorize(self, n: int) -> dict[int, int]:
        self._check(n)
        if n > self.n_max:
            return dict(sympy.factorint(n))
        result: dict[int, int] = {}
        while n > 1:
            p = self._smallest_factor[n]
            result[p] = result.get(p, 0) + 1
            n //= p
        return result

    def mobius(self, n: int) -> int:
        self._check(n)
        if n <= self.n_max:
            return self._mobius[n]
        exponents = self.factorize(n).values()
        if any(e > 1 for e in exponents):
            return 0
        return -1 if len(exponents) % 2 else 1

    def euler_phi(self, n: int) -> int:
        self._check(n)
        if n <= self.n_max:
            return self._phi[n]
        result = 1
        for p, e in self.factorize(n).items():
            result *= (p - 1) * p ** (e - 1)
        return result

    def divisors(self, n: int) -> tuple[int, ...]:
        """Positive divisors of n in increasing order."""
        self._check(n)
        if n not in self._divisors:
            divs = [1]
            for p, e in self.factorize(n).items():
                divs = [d * p**k for d in divs for k in range(e + 1)]
            self._divisors[n] = tuple(sorted(divs))
        return self._divisors[n]


@functools.cache
def default_cache() -> ArithCache:
    return ArithCache()


def mobius(n: int) -> int:
    return default_cache().mobius(n)


def euler_phi(n: int) -> int:
    return default_cache().euler_phi(n)


def divisors(n: int) -> tuple[int, ...]:
    return default_cache().divisors(n)


def p_adic_order(n: int, p: int) -> int:
    """ord_p(n), the exponent of the prime p in n."""
    if n < 1:
        raise ValueError(f"Expected a positive integer; got {n}")
    return sympy.multiplicity(p, n)


def check_index(n: int, characteristic: int) -> None:
    """Raises `IndexDeletedError` when the Möbius quotient is invalid at n in this characteristic."""
    if characteristic and n % characteristic == 0:
        raise IndexDeletedError(f"Index {n} is divisible by the characteristic {characteristic}")


def phi_homog(n: int, a: Poly, b: Poly) -> Poly:
    if n < 1:
        raise ValueError(f"Φ_n needs n >= 1; got {n}")
    if a.field != b.field:
        raise DescriptorMismatchError(f"Φ_{n} of polynomials over {a.field} and {b.field}")
    if a.is_zero or b.is_zero:
        raise ValueError(f"Φ_{n} of a zero polynomial")
    check_index(n, a.field.characteristic)

    one = Poly.one(a.field)
    numerator = one
    denominator = one
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        difference = a**d - b**d
        if mu > 0:
            numerator = numerator * difference
        else:
            denominator = denominator * difference

    result = exact_div(numerator, denominator)
    if n > 2 and result.is_constant and not (a.is_constant and b.is_constant) and gcd_monic(a, b).is_one:
        logger.warning("Φ_%d(%s, %s) = %s is a unit although the inputs are coprime", n, a, b, result)
    return result


def phi_lucas(n: int, p: Poly, p_sigma: Poly) -> Poly:
    """Φ_n(P, P_σ) for n >= 2, projected to the base field."""
    if n < 2:
        raise ValueError(f"The Lucas product starts at d = 2; got n = {n}")
    return project_to_base(phi_homog(n, p, p_sigma))
