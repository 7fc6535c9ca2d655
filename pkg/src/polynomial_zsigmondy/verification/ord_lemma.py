"""
Valuations along multiples of an index: ord_π(a_mn) = p^ord_p(m) · ord_π(a_n) in characteristic p and
ord_π(a_mn) = ord_π(a_n) in characteristic 0.
"""

from __future__ import annotations

import logging

from polynomial_zsigmondy import cyclotomic
from polynomial_zsigmondy.factorizer import factor
from polynomial_zsigmondy.poly import Poly, divides, gcd_monic, ord_at
from polynomial_zsigmondy.primitive_analysis import stripped_new_part
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, check_admissible, term
from polynomial_zsigmondy.verification.report import Report, Witness

logger = logging.getLogger(__name__)


def _check_irreducible(pi: Poly) -> None:
    if not pi.field.is_finite:
        return
    factorization = factor(pi, RngState(0))
    if factorization.factors != ((pi.monic(), 1),):
        raise ValueError(f"{pi} is not irreducible: {factorization}")


def predicted_multiplier(m: int, characteristic: int) -> int:
    if characteristic == 0:
        return 1
    return characteristic ** cyclotomic.p_adic_order(m, characteristic)


def multiple_congruence(report: Report, spec: SequenceSpec, pi: Poly, n: int, max_m: int) -> None:
    """f_mn - m·g^(n(m-1))·f_n is divisible by π^(2a), a = ord_π(f_n)."""
    field = spec.field
    a = ord_at(term(spec, n), pi)
    modulus = pi ** (2 * a)
    g = spec.g if spec.kind == SequenceKind.ZSIGMONDY else Poly.one(field)
    for m in range(1, max_m + 1):
        remainder = term(spec, m * n) - (g ** (n * (m - 1)) * term(spec, n)).scale(field.from_int(m))
        report.record(
            divides(modulus, remainder),
            lambda m=m, remainder=remainder: Witness(
                (m, n), (("pi", pi), ("difference", remainder)), f"not divisible by pi^{2 * a}"
            ),
        )


def verify_ord_lemma(
    spec: SequenceSpec,
    pi: Poly,
    n: int,
    max_m: int,
    timing: bool = False,
) -> Report:
    lucas = spec.kind == SequenceKind.LUCAS
    report = Report("lemma-2.5" if lucas else "lemma-1.1", f"{spec.describe()} pi={pi} n={n}", (1, max_m))
    p = spec.characteristic

    if pi.field != spec.base_field:
        raise ValueError(f"pi = {pi} is over {pi.field}, not {spec.base_field}")
    if pi.is_constant:
        raise ValueError(f"pi = {pi} is constant")
    _check_irreducible(pi)
    if not divides(pi, term(spec, n)):
        raise ValueError(f"pi = {pi} does not divide term {n} of {spec}")

    with report.timed(timing):
        if lucas:
            if p and n % p == 0:
                report.downgrade(f"n = {n} is divisible by the characteristic")
            if p == 2:
                report.downgrade("characteristic 2")
            if not check_admissible(spec)[0]:
                report.downgrade("P is not admissible")

        base = ord_at(term(spec, n), pi)
        for m in range(1, max_m + 1):
            deleted_multiplier = lucas and p > 0 and m % p == 0
            expected = base if lucas else predicted_multiplier(m, p) * base
            actual = ord_at(term(spec, m * n), pi)
            report.record(
                actual == expected,
                lambda m=m, actual=actual, expected=expected: Witness(
                    (m, n), (("pi", pi),), f"ord is {actual}, predicted {expected}"
                ),
                asserted=not deleted_multiplier,
            )
            if deleted_multiplier:
                report.notes.append(f"m = {m}: ord {actual} against {expected} (p divides m, recorded)")

        if not lucas:
            multiple_congruence(report, spec, pi, n, max_m)

    logger.info("%s on %s: %s", report.statement, spec, report.verdict.value)
    return report


def default_pi(spec: SequenceSpec, n: int, rng: RngState) -> Poly:
    """
    A prime of term(n): the smallest irreducible factor over a finite field, the squarefree part of the
    primitive part over characteristic 0.
    """
    target = term(spec, n)
    if target.is_constant:
        raise ValueError(f"Term {n} of {spec} is constant and has no prime divisors")

    if spec.base_field.is_finite:
        return factor(target, rng).factors[0][0]

    part = stripped_new_part(spec, n)
    if part.is_constant:
        part = target.monic()
    return part // gcd_monic(part, part.derivative())
