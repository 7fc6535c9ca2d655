"""
The three sequence families and their memoized terms:

- zsigmondy: f_n = f^n - g^n for coprime f, g;
- bang: h_n = f^n - 1 for a non-unit f;
- lucas: L_n = (P^n - P_σ^n) / (P - P_σ) for P over a quadratic extension, with the companions
  L'_n = P^n - P_σ^n (over the extension) and L̂_n = P^n + P_σ^n.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import logging
import math
import threading
import typing

from polynomial_zsigmondy.errors import SequenceKindError
from polynomial_zsigmondy.poly import Poly, coeff_map_sigma, exact_div, gcd_monic, project_to_base

if typing.TYPE_CHECKING:
    from collections.abc import Callable

    from polynomial_zsigmondy.fields import FieldDescriptor

logger = logging.getLogger(__name__)


class SequenceKind(enum.Enum):
    ZSIGMONDY = "zsigmondy"
    BANG = "bang"
    LUCAS = "lucas"


class LucasTerms(typing.NamedTuple):
    l: Poly  # noqa: E741
    l_prime: Poly
    l_hat: Poly


class TermCache:
    """Index -> term memo shared by every caller holding the same spec. Safe to use from several threads."""

    def __init__(self):
        self._values: dict[typing.Hashable, typing.Any] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def __contains__(self, key):
        return key in self._values

    def get(self, key, compute: Callable[[], typing.Any]):
        with self._lock:
            if key in self._values:
                return self._values[key]

        # computed outside the lock; a duplicate computation yields the same value
        value = compute()
        with self._lock:
            return self._values.setdefault(key, value)

    def store(self, key, value) -> None:
        with self._lock:
            self._values[key] = value

    def items(self) -> list[tuple[typing.Hashable, typing.Any]]:
        with self._lock:
            return list(self._values.items())


@dataclasses.dataclass(frozen=True)
class SequenceSpec:
    """
    kind: the sequence family.
    field: the coefficient field of f and g, or the quadratic extension holding P.
    f, g: the zsigmondy pair; bang uses f only.
    p: the Lucas parameter P.
    """

    kind: SequenceKind
    field: FieldDescriptor
    f: Poly | None = None
    g: Poly | None = None
    p: Poly | None = None

    @classmethod
    def zsigmondy(cls, f: Poly, g: Poly) -> SequenceSpec:
        return cls(SequenceKind.ZSIGMONDY, f.field, f=f, g=g)

    @classmethod
    def bang(cls, f: Poly) -> SequenceSpec:
        return cls(SequenceKind.BANG, f.field, f=f)

    @classmethod
    def lucas(cls, p: Poly) -> SequenceSpec:
        return cls(SequenceKind.LUCAS, p.field, p=p)

    def __post_init__(self):
        for name in ("f", "g", "p"):
            poly = getattr(self, name)
            if poly is not None and poly.field != self.field:
                raise ValueError(f"{name} = {poly} is over {poly.field}, not {self.field}")

        if self.kind == SequenceKind.ZSIGMONDY:
            if self.f is None or self.g is None:
                raise ValueError("A zsigmondy sequence needs f and g")
            if self.f.is_zero or self.g.is_zero:
                raise ValueError("f and g must be non-zero")
            if self.f.is_constant and self.g.is_constant:
                raise ValueError(f"f = {self.f} and g = {self.g} are both constant")
            if not gcd_monic(self.f, self.g).is_one:
                raise ValueError(f"f = {self.f} and g = {self.g} are not coprime")

        elif self.kind == SequenceKind.BANG:
            if self.f is None:
                raise ValueError("A bang sequence needs f")
            if self.f.is_constant:
                raise ValueError(f"f = {self.f} must be a non-zero non-unit")

        else:
            if self.p is None:
                raise ValueError("A lucas sequence needs P")
            if not self.field.is_extension:
                raise ValueError(f"P must live over a quadratic extension; got {self.field}")
            if self.p == coeff_map_sigma(self.p):
                raise ValueError(f"P = {self.p} is fixed by sigma, so P - P_σ vanishes")

    def __getstate__(self):
        # caches hold a lock and are rebuilt on demand
        state = dict(self.__dict__)
        state.pop("cache", None)
        return state

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def base_field(self) -> FieldDescriptor:
        """The field k that the terms L_n, f_n, h_n live over."""
        return self.field.base if self.kind == SequenceKind.LUCAS else self.field

    @property
    def max_degree(self) -> int:
        if self.kind == SequenceKind.ZSIGMONDY:
            return max(self.f.degree, self.g.degree)
        if self.kind == SequenceKind.BANG:
            return self.f.degree
        return self.p.degree

    @functools.cached_property
    def p_sigma(self) -> Poly:
        require_kind(self, SequenceKind.LUCAS)
        return coeff_map_sigma(self.p)

    @functools.cached_property
    def cache(self) -> TermCache:
        return TermCache()

    def describe(self) -> str:
        if self.kind == SequenceKind.ZSIGMONDY:
            return f"zsigmondy {self.field} f={self.f} g={self.g}"
        if self.kind == SequenceKind.BANG:
            return f"bang {self.field} f={self.f}"
        return f"lucas {self.field} P={self.p}"

    def __str__(self):
        return self.describe()

    def power(self, name: str, n: int) -> Poly:
        """f^n, g^n, P^n or P_σ^n, built from the cached previous power when there is one."""
        base = self.p_sigma if name == "p_sigma" else getattr(self, name)
        if n == 0:
            return Poly.one(self.field)

        def compute():
            if ("power", name, n - 1) in self.cache:
                return self.power(name, n - 1) * base
            return base**n

        return self.cache.get(("power", name, n), compute)


def require_kind(spec: SequenceSpec, *kinds: SequenceKind) -> None:
    if spec.kind not in kinds:
        names = ", ".join(kind.value for kind in kinds)
        raise SequenceKindError(f"Expected a {names} sequence; got {spec.kind.value}")


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"Sequence indices start at 1; got {n}")


def zsig_term(spec: SequenceSpec, n: int) -> Poly:
    require_kind(spec, SequenceKind.ZSIGMONDY)
    _check_index(n)
    return spec.cache.get(("term", n), lambda: spec.power("f", n) - spec.power("g", n))


def bang_term(spec: SequenceSpec, n: int) -> Poly:
    require_kind(spec, SequenceKind.BANG)
    _check_index(n)
    return spec.cache.get(("term", n), lambda: spec.power("f", n) - Poly.one(spec.field))


def lucas_terms(spec: SequenceSpec, n: int) -> LucasTerms:
    require_kind(spec, SequenceKind.LUCAS)
    _check_index(n)

    def compute() -> LucasTerms:
        p_n = spec.power("p", n)
        p_sigma_n = spec.power("p_sigma", n)
        l_prime = p_n - p_sigma_n
        l_prime_1 = spec.p - spec.p_sigma
        return LucasTerms(
            l=project_to_base(exact_div(l_prime, l_prime_1)),
            l_prime=l_prime,
            l_hat=project_to_base(p_n + p_sigma_n),
        )

    return spec.cache.get(("term", n), compute)


def term(spec: SequenceSpec, n: int) -> Poly:
    """The n-th member of the divisibility sequence: f_n, h_n or L_n."""
    if spec.kind == SequenceKind.ZSIGMONDY:
        return zsig_term(spec, n)
    if spec.kind == SequenceKind.BANG:
        return bang_term(spec, n)
    return lucas_terms(spec, n).l


def check_admissible(spec: SequenceSpec) -> tuple[bool, Poly]:
    """Whether P + P_σ and P·P_σ are coprime in k[T], with their monic gcd."""
    require_kind(spec, SequenceKind.LUCAS)
    trace = project_to_base(spec.p + spec.p_sigma)
    norm = project_to_base(spec.p * spec.p_sigma)
    witness = gcd_monic(trace, norm)
    if not witness.is_one:
        logger.info("%s is not admissible: gcd(P + P_σ, P·P_σ) = %s", spec, witness)
    return witness.is_one, witness


def norm_poly(spec: SequenceSpec) -> Poly:
    """P·P_σ as a polynomial over k."""
    require_kind(spec, SequenceKind.LUCAS)
    return project_to_base(spec.p * spec.p_sigma)


def bezout_pair(m: int, n: int) -> tuple[int, int, int]:
    """Smallest c >= 1 and the matching d >= 0 with c·n - d·m = gcd(m, n); returns (c, d, gcd)."""
    if m < 1 or n < 1:
        raise ValueError(f"Bezout pair needs positive indices; got {m}, {n}")
    ell = math.gcd(m, n)
    c = 1
    while (c * n - ell) % m != 0:
        c += 1
    return c, (c * n - ell) // m, ell
