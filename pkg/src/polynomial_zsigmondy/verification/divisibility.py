"""
Strong divisibility gcd(a_m, a_n) = a_gcd(m, n) of the three families, together with the Bezout
identities that drive it.
"""

from __future__ import annotations

import logging
import math

from polynomial_zsigmondy.poly import Poly, gcd_monic
from polynomial_zsigmondy.sequences import (
    SequenceKind,
    SequenceSpec,
    bezout_pair,
    check_admissible,
    lucas_terms,
    norm_poly,
    term,
)
from polynomial_zsigmondy.verification.report import Report, Witness

logger = logging.getLogger(__name__)

IDENTITY_BOUND = 10

STATEMENT_FOR_KIND = {
    SequenceKind.ZSIGMONDY: "lemma-1.2",
    SequenceKind.BANG: "lemma-1.4",
    SequenceKind.LUCAS: "lemma-2.2",
}


def strong_divisibility_grid(report: Report, spec: SequenceSpec, max_n: int, odd_only: bool = False) -> None:
    indices = [n for n in range(1, max_n + 1) if not odd_only or n % 2]
    for i, m in enumerate(indices):
        for n in indices[i + 1 :]:
            actual = gcd_monic(term(spec, m), term(spec, n))
            expected = term(spec, math.gcd(m, n)).monic()
            report.record(
                actual == expected,
                lambda m=m, n=n, actual=actual, expected=expected: Witness(
                    (m, n), (("gcd", actual), ("expected", expected)), "gcd of terms differs from the gcd-index term"
                ),
            )


def _bezout_sides(spec: SequenceSpec, m: int, n: int) -> tuple[Poly, Poly]:
    c, d, ell = bezout_pair(m, n)
    cn, dm = c * n, d * m
    field = spec.base_field
    two = Poly.constant(field, field.from_int(2))

    if spec.kind == SequenceKind.ZSIGMONDY:
        f_dm, g_dm = spec.power("f", dm), spec.power("g", dm)
        f_cn, g_cn = spec.power("f", cn), spec.power("g", cn)
        lhs = term(spec, cn) * (f_dm + g_dm) - term(spec, dm) * (f_cn + g_cn)
        rhs = two * f_dm * g_dm * term(spec, ell)
    elif spec.kind == SequenceKind.BANG:
        lhs = term(spec, cn) - term(spec, dm)
        rhs = spec.power("f", dm) * term(spec, ell)
    else:
        big, small = lucas_terms(spec, cn), lucas_terms(spec, dm)
        lhs = big.l * small.l_hat - small.l * big.l_hat
        rhs = two * norm_poly(spec) ** dm * term(spec, ell)
    return lhs, rhs


def bezout_identities(report: Report, spec: SequenceSpec, bound: int) -> None:
    """The identity behind each strong divisibility proof, for m < n <= bound. Since n > m, d is never 0."""
    for m in range(1, bound + 1):
        for n in range(m + 1, bound + 1):
            lhs, rhs = _bezout_sides(spec, m, n)
            report.record(
                lhs == rhs,
                lambda m=m, n=n, lhs=lhs, rhs=rhs: Witness(
                    (m, n), (("lhs", lhs), ("rhs", rhs)), "Bezout identity does not hold"
                ),
            )


def verify_strong_divisibility(
    spec: SequenceSpec,
    max_n: int,
    identity_bound: int = IDENTITY_BOUND,
    timing: bool = False,
) -> Report:
    report = Report(STATEMENT_FOR_KIND[spec.kind], spec.describe(), (1, max_n))

    with report.timed(timing):
        if spec.kind != SequenceKind.BANG and spec.characteristic == 2:
            report.downgrade("characteristic 2 is outside the hypotheses")
            logger.warning("Strong divisibility of %s in characteristic 2 is recorded, not asserted", spec)

        if spec.kind == SequenceKind.LUCAS:
            admissible, witness = check_admissible(spec)
            if not admissible:
                # asserted anyway: this is the negative control
                report.notes.append(f"P is not admissible: gcd(P + P_σ, P·P_σ) = {witness}")

        strong_divisibility_grid(report, spec, max_n)
        bezout_identities(report, spec, min(identity_bound, max_n))

    logger.info("%s on %s: %s after %d cases", report.statement, spec, report.verdict.value, report.cases)
    return report
