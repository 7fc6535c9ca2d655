"""
Primitive parts of sequence terms: the product of the irreducible factors of term(n) that divide no
earlier term, found by gcd-stripping so it works over every coefficient field.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
import typing

from polynomial_zsigmondy import cyclotomic
from polynomial_zsigmondy.errors import FactorizationCheckError, UnsupportedFieldError
from polynomial_zsigmondy.factorizer import Factorization, factor
from polynomial_zsigmondy.fields import Scalar
from polynomial_zsigmondy.poly import Poly, divides, gcd_monic
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, term

if typing.TYPE_CHECKING:
    from polynomial_zsigmondy.rng import RngState

logger = logging.getLogger(__name__)


class StripMode(enum.Enum):
    ALL_EARLIER = "all-earlier"
    DIVISORS_ONLY = "divisors-only"


def is_skipped(spec: SequenceSpec, n: int) -> bool:
    """Indices divisible by the characteristic are deleted from every family."""
    p = spec.characteristic
    return p > 0 and n % p == 0


def surviving_indices(spec: SequenceSpec, max_n: int) -> list[int]:
    return [n for n in range(1, max_n + 1) if not is_skipped(spec, n)]


def _earlier_indices(n: int, mode: StripMode) -> list[int]:
    proper = [d for d in reversed(cyclotomic.divisors(n)) if d != n]
    if mode == StripMode.DIVISORS_ONLY:
        return proper
    proper_set = set(proper)
    return proper + [m for m in range(n - 1, 0, -1) if m not in proper_set]


def _strip(current: Poly, other: Poly) -> Poly:
    """Removes from `current`, to full multiplicity, every irreducible it shares with `other`."""
    shared = gcd_monic(current, other % current)
    while not shared.is_one:
        current = current // shared
        shared = gcd_monic(current, shared)
    return current


def stripped_new_part(spec: SequenceSpec, n: int, mode: StripMode = StripMode.ALL_EARLIER) -> Poly:
    def compute() -> Poly:
        current = term(spec, n)
        if current.is_zero:
            raise ValueError(f"Term {n} of {spec} is zero")
        current = current.monic()

        for m in _earlier_indices(n, mode):
            if current.is_constant:
                break
            logger.debug("Stripping term %d against term %d", n, m)
            current = _strip(current, term(spec, m))

        return current

    return spec.cache.get(("stripped", mode, n), compute)


def has_primitive_prime_divisor(spec: SequenceSpec, n: int) -> bool:
    return not stripped_new_part(spec, n, StripMode.ALL_EARLIER).is_constant


def phi_for(spec: SequenceSpec, n: int) -> Poly:
    """Φ_n(f, g), Φ_n(f, 1) or Φ_n(P, P_σ) over k, as the family dictates."""

    def compute() -> Poly:
        if spec.kind == SequenceKind.ZSIGMONDY:
            return cyclotomic.phi_homog(n, spec.f, spec.g)
        if spec.kind == SequenceKind.BANG:
            return cyclotomic.phi_homog(n, spec.f, Poly.one(spec.field))
        return cyclotomic.phi_lucas(n, spec.p, spec.p_sigma)

    return spec.cache.get(("phi", n), compute)


def primitive_part_via_phi(spec: SequenceSpec, n: int) -> tuple[Poly, bool]:
    """Monic Φ_n and whether it equals the stripped primitive part."""
    phi = phi_for(spec, n).monic()
    return phi, phi == stripped_new_part(spec, n, StripMode.ALL_EARLIER)


def primitive_divisors(spec: SequenceSpec, n: int, rng: RngState) -> Factorization:
    field = spec.base_field
    if not field.is_finite:
        raise UnsupportedFieldError(f"Listing primitive divisors over {field} is not supported")

    part = stripped_new_part(spec, n, StripMode.ALL_EARLIER)
    if part.is_constant:
        return Factorization(Scalar(field, field.one), ())

    result = factor(part, rng)
    term_n = term(spec, n)
    for pi in result.irreducibles:
        if not divides(pi, term_n):
            raise FactorizationCheckError(f"{pi} does not divide term {n} of {spec}")
        for m in range(1, n):
            if divides(pi, term(spec, m)):
                raise FactorizationCheckError(f"{pi} divides the earlier term {m} of {spec}")
    return result


class DegreeReport(typing.NamedTuple):
    primitive_degree: int
    expected_degree: int
    violations: tuple[str, ...]

    @property
    def matches(self) -> bool:
        return self.primitive_degree == self.expected_degree


def primitive_degree_report(spec: SequenceSpec, n: int) -> DegreeReport:
    """deg f_n^* against φ(n)·max(deg f, deg g); hypotheses that do not hold are listed, not raised."""
    violations = []
    if spec.kind == SequenceKind.LUCAS:
        violations.append("lucas sequence")
    elif spec.kind == SequenceKind.ZSIGMONDY and spec.f.degree == spec.g.degree:
        violations.append("deg f = deg g")
    if is_skipped(spec, n):
        violations.append(f"characteristic divides {n}")

    part = stripped_new_part(spec, n, StripMode.ALL_EARLIER)
    return DegreeReport(
        primitive_degree=max(part.degree, 0),
        expected_degree=cyclotomic.euler_phi(n) * spec.max_degree,
        violations=tuple(violations),
    )


@dataclasses.dataclass(frozen=True)
class PrimitiveRecord:
    n: int
    skipped: bool
    term_degree: int
    primitive_part: Poly
    has_primitive: bool
    matches_phi: bool | None = None
    primitive_factors: Factorization | None = None

    def to_json(self) -> dict:
        factors = None
        if self.primitive_factors is not None:
            factors = [
                {"poly": str(poly), "multiplicity": mult} for poly, mult in self.primitive_factors.factors
            ]
        return {
            "n": self.n,
            "skipped": self.skipped,
            "deg_term": self.term_degree,
            "deg_primitive_part": max(self.primitive_part.degree, 0),
            "primitive_part": str(self.primitive_part),
            "has_primitive": self.has_primitive,
            "matches_phi": self.matches_phi,
            "primitive_factors": factors,
        }

    def to_tsv(self) -> str:
        def flag(value: bool | None) -> str:
            return "-" if value is None else str(int(value))

        return "\t".join(
            [
                str(self.n),
                flag(self.skipped),
                str(self.term_degree),
                str(max(self.primitive_part.degree, 0)),
                flag(self.has_primitive),
                flag(self.matches_phi),
            ]
        )


TSV_HEADER = "\t".join(["n", "skipped", "deg_term", "deg_primitive_part", "has_primitive", "matches_phi"])


def build_record(
    spec: SequenceSpec,
    n: int,
    mode: StripMode = StripMode.ALL_EARLIER,
    rng: RngState | None = None,
) -> PrimitiveRecord:
    """
    One survey row. Φ_n is compared only where the Möbius quotient is defined, and primitive
    factors are listed only when an rng is given and the field is finite.
    """
    skipped = is_skipped(spec, n)
    part = stripped_new_part(spec, n, mode)

    matches_phi = None
    if not skipped and not (spec.kind == SequenceKind.LUCAS and n < 2):
        matches_phi = phi_for(spec, n).monic() == part

    factors = None
    if rng is not None and spec.base_field.is_finite:
        factors = primitive_divisors(spec, n, rng) if mode == StripMode.ALL_EARLIER else factor(part, rng)

    return PrimitiveRecord(
        n=n,
        skipped=skipped,
        term_degree=term(spec, n).degree,
        primitive_part=part,
        has_primitive=not part.is_constant,
        matches_phi=matches_phi,
        primitive_factors=factors,
    )


def survey(
    spec: SequenceSpec,
    max_n: int,
    mode: StripMode = StripMode.ALL_EARLIER,
    rng: RngState | None = None,
) -> list[PrimitiveRecord]:
    logger.info("Surveying %s up to %d", spec, max_n)
    return [build_record(spec, n, mode, rng) for n in range(1, max_n + 1)]
