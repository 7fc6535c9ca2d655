"""
Existence of primitive prime divisors and the shape of primitive parts.
"""

from __future__ import annotations

import logging

from polynomial_zsigmondy import cyclotomic
from polynomial_zsigmondy.factorizer import factor
from polynomial_zsigmondy.poly import Poly, ord_at
from polynomial_zsigmondy.primitive_analysis import (
    StripMode,
    has_primitive_prime_divisor,
    phi_for,
    primitive_degree_report,
    stripped_new_part,
    surviving_indices,
)
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, check_admissible, require_kind, term
from polynomial_zsigmondy.verification.report import Report, Witness

logger = logging.getLogger(__name__)

THEOREM_FOR_KIND = {
    SequenceKind.ZSIGMONDY: "thm-1.3",
    SequenceKind.BANG: "cor-1.5",
    SequenceKind.LUCAS: "thm-2.6",
}

# Position in the filtered sequence from which a primitive divisor is guaranteed.
FIRST_GUARANTEED_POSITION = {
    SequenceKind.ZSIGMONDY: 3,
    SequenceKind.BANG: 2,
    SequenceKind.LUCAS: 3,
}

VALUATION_SAMPLES = 4


def _is_char2_with_general_g(spec: SequenceSpec) -> bool:
    return spec.kind == SequenceKind.ZSIGMONDY and spec.characteristic == 2 and not spec.g.is_one


def hypothesis_violations(spec: SequenceSpec) -> list[str]:
    """Reasons the existence theorem for this family does not apply."""
    reasons = []
    if _is_char2_with_general_g(spec):
        reasons.append("characteristic 2 with g != 1")
    if spec.kind == SequenceKind.LUCAS:
        if spec.characteristic == 2:
            reasons.append("characteristic 2")
        if not check_admissible(spec)[0]:
            reasons.append("P is not admissible")
    return reasons


def verify_zsigmondy(
    spec: SequenceSpec,
    max_n: int,
    include_deleted: bool = False,
    timing: bool = False,
) -> Report:
    """
    Every member of the filtered sequence from the guaranteed position onwards has a primitive prime
    divisor. With `include_deleted`, indices divisible by the characteristic stay in the sequence and
    are asserted as well, which must fail exactly there.
    """
    report = Report(THEOREM_FOR_KIND[spec.kind], spec.describe(), (1, max_n))
    threshold = FIRST_GUARANTEED_POSITION[spec.kind]

    with report.timed(timing):
        for reason in hypothesis_violations(spec):
            report.downgrade(reason)
            logger.warning("%s on %s: %s", report.statement, spec, reason)

        indices = list(range(1, max_n + 1)) if include_deleted else surviving_indices(spec, max_n)
        raw_misses = []
        for position, n in enumerate(indices, start=1):
            has = has_primitive_prime_divisor(spec, n)
            witness = lambda n=n, position=position: Witness(  # noqa: E731
                (n,),
                (("term", term(spec, n)),),
                f"no primitive prime divisor at position {position}",
            )
            if position >= threshold:
                report.record(has, witness)
            else:
                report.notes.append(f"position {position} (n = {n}): primitive divisor {has}")
                if n >= threshold and not has:
                    raw_misses.append(n)

        if raw_misses:
            report.notes.append(f"raw-index reading fails at n = {raw_misses}")
        else:
            report.notes.append(f"raw-index reading agrees from n = {threshold}")

    logger.info("%s on %s: %s", report.statement, spec, report.verdict.value)
    return report


def _sample_primes(spec: SequenceSpec, max_n: int, rng: RngState) -> list[Poly]:
    primes: list[Poly] = []
    for n in surviving_indices(spec, max_n):
        target = term(spec, n)
        if target.is_constant:
            continue
        for pi in factor(target, rng).irreducibles:
            if pi not in primes:
                primes.append(pi)
        if len(primes) >= VALUATION_SAMPLES:
            break
    return primes[:VALUATION_SAMPLES]


def valuation_formula(report: Report, spec: SequenceSpec, max_n: int, rng: RngState) -> None:
    """ord_π Φ_n = Σ_{d | n} μ(n/d) · ord_π(a_d) for sampled primes π."""
    if not spec.base_field.is_finite:
        report.notes.append("valuation formula skipped: primes cannot be listed in characteristic 0")
        return

    for pi in _sample_primes(spec, max_n, rng):
        for n in surviving_indices(spec, max_n):
            expected = sum(
                cyclotomic.mobius(n // d) * ord_at(term(spec, d), pi) for d in cyclotomic.divisors(n)
            )
            actual = ord_at(phi_for(spec, n), pi)
            report.record(
                actual == expected,
                lambda n=n, pi=pi, actual=actual, expected=expected: Witness(
                    (n,), (("pi", pi),), f"ord of Φ_n is {actual}, Möbius sum is {expected}"
                ),
            )


def verify_primitive_part(
    spec: SequenceSpec,
    max_n: int,
    seed: int = 0,
    timing: bool = False,
) -> Report:
    """
    The primitive part equals monic Φ_n from n = 3 on, has degree φ(n)·max(deg f, deg g) when the
    degrees differ, and the Φ_d multiply back to the term. Φ_n is never a unit past n = 2.
    """
    require_kind(spec, SequenceKind.ZSIGMONDY, SequenceKind.BANG)
    report = Report("obs-1", spec.describe(), (1, max_n), seed=seed)

    with report.timed(timing):
        for reason in hypothesis_violations(spec):
            report.downgrade(reason)

        for n in surviving_indices(spec, max_n):
            asserted = n > 2
            part = stripped_new_part(spec, n, StripMode.ALL_EARLIER)

            phi = phi_for(spec, n)
            report.record(
                phi.monic() == part,
                lambda n=n, phi=phi, part=part: Witness(
                    (n,), (("phi", phi.monic()), ("primitive_part", part)), "primitive part differs from Φ_n"
                ),
                asserted=asserted,
            )
            report.record(
                not phi.is_constant,
                lambda n=n, phi=phi: Witness((n,), (("phi", phi),), "Φ_n is a unit"),
                asserted=asserted,
            )

            degrees = primitive_degree_report(spec, n)
            if not degrees.violations:
                report.record(
                    degrees.matches,
                    lambda n=n, degrees=degrees, part=part: Witness(
                        (n,),
                        (("primitive_part", part),),
                        f"degree {degrees.primitive_degree}, expected {degrees.expected_degree}",
                    ),
                    asserted=asserted,
                )

            product = Poly.one(spec.base_field)
            for d in cyclotomic.divisors(n):
                product = product * phi_for(spec, d)
            report.record(
                product == term(spec, n),
                lambda n=n, product=product: Witness(
                    (n,), (("product", product), ("term", term(spec, n))), "Φ_d do not multiply back to the term"
                ),
            )

        valuation_formula(report, spec, max_n, RngState(seed))

    logger.info("%s on %s: %s", report.statement, spec, report.verdict.value)
    return report


def verify_frobenius_indices(spec: SequenceSpec, max_n: int, timing: bool = False) -> Report:
    """At n = p·c the term is the p-th power of term(c) and has no primitive prime divisor."""
    require_kind(spec, SequenceKind.ZSIGMONDY, SequenceKind.BANG)
    report = Report("obs-2", spec.describe(), (1, max_n))
    p = spec.characteristic

    with report.timed(timing):
        if p == 0:
            report.downgrade("characteristic 0 deletes no indices")
            return report

        for c in range(1, max_n // p + 1):
            n = p * c
            report.record(
                term(spec, n) == term(spec, c) ** p,
                lambda n=n, c=c: Witness((n, c), (("term", term(spec, n)),), "term(pc) is not term(c)^p"),
            )
            part = stripped_new_part(spec, n)
            report.record(
                part.is_constant,
                lambda n=n, part=part: Witness((n,), (("primitive_part", part),), "deleted index has a primitive part"),
            )

    return report

