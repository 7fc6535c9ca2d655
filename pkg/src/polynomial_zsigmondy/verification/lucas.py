"""
Identities of the polynomial Lucas sequence L_n = (P^n - P_σ^n) / (P - P_σ), grouped into clauses.
"""

from __future__ import annotations

import logging
import math

from polynomial_zsigmondy.poly import Poly, divides, gcd_monic, lift_to_extension, project_to_base
from polynomial_zsigmondy.primitive_analysis import has_primitive_prime_divisor
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import (
    SequenceKind,
    SequenceSpec,
    check_admissible,
    lucas_terms,
    norm_poly,
    require_kind,
)
from polynomial_zsigmondy.verification.divisibility import verify_strong_divisibility
from polynomial_zsigmondy.verification.ord_lemma import default_pi, verify_ord_lemma
from polynomial_zsigmondy.verification.report import Report, Witness
from polynomial_zsigmondy.verification.zsigmondy import verify_zsigmondy

logger = logging.getLogger(__name__)

# Odd exponents for the binomial identity in characteristic 0.
CHAR0_BINOMIAL_EXPONENTS = (3, 5)
IDENTITY_BOUND = 10


def coprime_to_norm(report: Report, spec: SequenceSpec, max_n: int, asserted: bool) -> None:
    """P·P_σ and L_n are coprime."""
    norm = norm_poly(spec)
    for n in range(1, max_n + 1):
        l_n = lucas_terms(spec, n).l
        shared = gcd_monic(norm, l_n)
        report.record(
            shared.is_one,
            lambda n=n, shared=shared: Witness((n,), (("gcd", shared),), "P·P_σ and L_n share a factor"),
            asserted=asserted,
        )


def frobenius_power(report: Report, spec: SequenceSpec, max_n: int) -> None:
    """
    In characteristic p: L'_cp = (L'_c)^p and L_cp = (L'_1)^(p-1)·(L_c)^p. The variant with L'_c in place
    of (L_c)^p is checked as well but only recorded, since it is not consistent in degree. Nothing is asserted in
    characteristic 2.
    """
    p = spec.characteristic
    if p == 0:
        report.notes.append("Frobenius clause needs positive characteristic")
        return
    asserted = p != 2
    if not asserted:
        report.notes.append("Frobenius clause recorded only in characteristic 2")

    extension = spec.field
    l_prime_1 = spec.p - spec.p_sigma
    for c in range(1, max_n // p + 1):
        big, small = lucas_terms(spec, c * p), lucas_terms(spec, c)
        report.record(
            big.l_prime == small.l_prime**p,
            lambda c=c, big=big: Witness((c * p, c), (("l_prime", big.l_prime),), "L'_cp is not (L'_c)^p"),
            asserted=asserted,
        )

        l_big = lift_to_extension(big.l, extension)
        forced = l_prime_1 ** (p - 1) * lift_to_extension(small.l, extension) ** p
        report.record(
            l_big == forced,
            lambda c=c, l_big=l_big, forced=forced: Witness(
                (c * p, c), (("l", l_big), ("expected", forced)), "L_cp is not (L'_1)^(p-1)·(L_c)^p"
            ),
            asserted=asserted,
        )

        printed = l_prime_1 ** (p - 1) * small.l_prime
        if l_big != printed:
            report.notes.append(f"c = {c}: L_cp differs from (L'_1)^(p-1)·L'_c")

        if c > 1:
            has = has_primitive_prime_divisor(spec, c * p)
            report.record(
                not has,
                lambda c=c: Witness((c * p,), (), "L_cp has a primitive prime divisor"),
                asserted=asserted,
            )

    if p <= max_n:
        report.notes.append(f"n = p = {p}: primitive divisor {has_primitive_prime_divisor(spec, p)}")


def binomial_expansion(report: Report, spec: SequenceSpec, max_n: int) -> None:
    """
    L'_rc = (L'_c)^r + Σ_{i=1}^{(r-1)/2} (-1)^(i-1)·C(r, i)·(P·P_σ)^(ic)·L'_((r-2i)c) for odd r, an
    integer identity; r is the characteristic when it is odd.
    """
    p = spec.characteristic
    if p == 2:
        report.notes.append("binomial expansion needs an odd exponent")
        return
    exponents = (p,) if p else CHAR0_BINOMIAL_EXPONENTS

    field = spec.field
    norm = spec.p * spec.p_sigma
    for r in exponents:
        for c in range(1, min(IDENTITY_BOUND, max_n // r) + 1):
            expected = lucas_terms(spec, c).l_prime ** r
            for i in range(1, (r - 1) // 2 + 1):
                coefficient = field.from_int((-1) ** (i - 1) * math.comb(r, i))
                summand = norm ** (i * c) * lucas_terms(spec, (r - 2 * i) * c).l_prime
                expected = expected + summand.scale(coefficient)
            actual = lucas_terms(spec, r * c).l_prime
            report.record(
                actual == expected,
                lambda r=r, c=c, actual=actual, expected=expected: Witness(
                    (r, c), (("l_prime", actual), ("expansion", expected)), "binomial expansion does not hold"
                ),
            )


def hat_identities(report: Report, spec: SequenceSpec, max_n: int, coprimality: bool) -> None:
    """L̂_m^2 - (L'_1)^2·L_m^2 = 4(P·P_σ)^m, and gcd(L̂_m, L_m) = 1 when `coprimality` is asserted."""
    field = spec.base_field
    four = Poly.constant(field, field.from_int(4))
    discriminant = project_to_base((spec.p - spec.p_sigma) ** 2)
    norm = norm_poly(spec)

    for m in range(1, max_n + 1):
        terms = lucas_terms(spec, m)
        lhs = terms.l_hat**2 - discriminant * terms.l**2
        rhs = four * norm**m
        report.record(
            lhs == rhs,
            lambda m=m, lhs=lhs, rhs=rhs: Witness((m,), (("lhs", lhs), ("rhs", rhs)), "L̂_m identity does not hold"),
        )

        shared = gcd_monic(terms.l_hat, terms.l)
        report.record(
            shared.is_one,
            lambda m=m, shared=shared: Witness((m,), (("gcd", shared),), "L̂_m and L_m share a factor"),
            asserted=coprimality,
        )


def doubling(report: Report, spec: SequenceSpec, max_n: int) -> None:
    """L_2m = L̂_m·L_m."""
    for m in range(1, max_n // 2 + 1):
        terms = lucas_terms(spec, m)
        doubled = lucas_terms(spec, 2 * m).l
        product = terms.l_hat * terms.l
        report.record(
            doubled == product,
            lambda m=m, doubled=doubled, product=product: Witness(
                (2 * m, m), (("l", doubled), ("product", product)), "L_2m is not L̂_m·L_m"
            ),
        )


def ideal_membership(report: Report, spec: SequenceSpec, max_n: int) -> None:
    """P·P_σ divides both L_n - P^(n-1) - P_σ^(n-1) and (P + P_σ)^(n-1) - P^(n-1) - P_σ^(n-1)."""
    extension = spec.field
    norm = spec.p * spec.p_sigma
    trace = spec.p + spec.p_sigma
    for n in range(2, max_n + 1):
        tail = spec.power("p", n - 1) + spec.power("p_sigma", n - 1)
        for label, value in (
            ("l", lift_to_extension(lucas_terms(spec, n).l, extension)),
            ("trace_power", trace ** (n - 1)),
        ):
            difference = value - tail
            report.record(
                divides(norm, difference),
                lambda n=n, label=label, difference=difference: Witness(
                    (n,), ((label, difference),), "not in the ideal generated by P·P_σ"
                ),
            )


CLAUSES = {
    "lemma-2.1": ("coprime-norm",),
    "lemma-2.3": ("frobenius", "binomial"),
    "lemma-2.4": ("hat",),
    "lemma-2.5": ("doubling", "valuation"),
    "lucas-suite": ("coprime-norm", "frobenius", "binomial", "hat", "doubling", "valuation", "ideal"),
}


def verify_lucas_identities(
    spec: SequenceSpec,
    max_n: int,
    statement: str = "lucas-suite",
    seed: int = 0,
    timing: bool = False,
) -> Report:
    require_kind(spec, SequenceKind.LUCAS)
    if statement not in CLAUSES:
        raise ValueError(f"Unknown Lucas statement: {statement}")
    clauses = CLAUSES[statement]
    report = Report(statement, spec.describe(), (1, max_n), seed=seed)

    with report.timed(timing):
        admissible, witness = check_admissible(spec)
        coprimality = admissible and spec.characteristic != 2
        if statement == "lemma-2.3" and spec.characteristic == 2:
            report.downgrade("characteristic 2")
        if not admissible:
            report.notes.append(f"P is not admissible: gcd = {witness}; coprimality is recorded only")

        if "coprime-norm" in clauses:
            coprime_to_norm(report, spec, max_n, admissible)
        if "frobenius" in clauses:
            frobenius_power(report, spec, max_n)
        if "binomial" in clauses:
            binomial_expansion(report, spec, max_n)
        if "hat" in clauses:
            hat_identities(report, spec, max_n, coprimality)
        if "doubling" in clauses:
            doubling(report, spec, max_n)
        if "valuation" in clauses:
            _valuation(report, spec, max_n, seed)
        if "ideal" in clauses:
            ideal_membership(report, spec, max_n)

        if statement == "lucas-suite":
            report.merge(verify_strong_divisibility(spec, max_n))
            report.merge(verify_zsigmondy(spec, max_n))

    logger.info("%s on %s: %s", report.statement, spec, report.verdict.value)
    return report


def _valuation(report: Report, spec: SequenceSpec, max_n: int, seed: int) -> None:
    """Valuations of L_mn at a prime of L_n, for the smallest n whose term has a prime over a finite field."""
    if not spec.base_field.is_finite:
        report.notes.append("valuation clause skipped: primes cannot be listed in characteristic 0")
        return

    p = spec.characteristic
    for n in range(2, max_n + 1):
        if n % p == 0 or lucas_terms(spec, n).l.is_constant:
            continue
        pi = default_pi(spec, n, RngState(seed))
        report.merge(verify_ord_lemma(spec, pi, n, max(1, max_n // n)))
        return
