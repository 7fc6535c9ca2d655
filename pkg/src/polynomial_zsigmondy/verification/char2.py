"""
Randomized exploration of zsigmondy sequences in characteristic 2 with g != 1, where the existence
theorem has no proof. Results are recorded, never asserted; bang controls (g = 1) are asserted.
"""

from __future__ import annotations

import dataclasses
import logging
import typing

from polynomial_zsigmondy.errors import UnsupportedFieldError
from polynomial_zsigmondy.formats.witness_archive import WitnessArchive
from polynomial_zsigmondy.primitive_analysis import has_primitive_prime_divisor, surviving_indices
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, term
from polynomial_zsigmondy.verification.campaign import random_coprime_pair, run_ordered
from polynomial_zsigmondy.verification.divisibility import strong_divisibility_grid
from polynomial_zsigmondy.verification.report import Report, Witness
from polynomial_zsigmondy.verification.zsigmondy import FIRST_GUARANTEED_POSITION

if typing.TYPE_CHECKING:
    from pathlib import Path

    from polynomial_zsigmondy.fields import FieldDescriptor
    from polynomial_zsigmondy.poly import Poly
    from polynomial_zsigmondy.rng import RngState

logger = logging.getLogger(__name__)

STATEMENT = "char2-remark"
CONTROL_COUNT = 10


class Char2Case(typing.NamedTuple):
    f: Poly
    g: Poly | None
    max_n: int

    @property
    def is_control(self) -> bool:
        return self.g is None

    def spec(self) -> SequenceSpec:
        if self.is_control:
            return SequenceSpec.bang(self.f)
        return SequenceSpec.zsigmondy(self.f, self.g)


def _check_char2_case(case: Char2Case) -> Report:
    """Odd-index strong divisibility and primitive divisors from the guaranteed position on."""
    spec = case.spec()
    report = Report(STATEMENT, spec.describe(), (1, case.max_n))

    # bang controls are checked on every index
    strong_divisibility_grid(report, spec, case.max_n, odd_only=not case.is_control)

    threshold = FIRST_GUARANTEED_POSITION[spec.kind]
    for position, n in enumerate(surviving_indices(spec, case.max_n), start=1):
        if position < threshold:
            continue
        report.record(
            has_primitive_prime_divisor(spec, n),
            lambda n=n, position=position: Witness(
                (n,), (("term", term(spec, n)),), f"no primitive prime divisor at position {position}"
            ),
        )
    return report


def _with_parameters(witness: Witness, case: Char2Case) -> Witness:
    parameters = [("f", case.f)]
    if case.g is not None:
        parameters.append(("g", case.g))
    return dataclasses.replace(witness, polys=tuple(parameters) + witness.polys)


def char2_cases(field: FieldDescriptor, max_degree: int, count: int, rng: RngState, max_n: int) -> list[Char2Case]:
    """`count` coprime pairs with g != 1, then bang controls on the first non-constant f drawn."""
    cases = []
    for i in range(count):
        f, g = random_coprime_pair(field, max_degree, rng.spawn(i), exclude_g_one=True)
        cases.append(Char2Case(f, g, max_n))

    controls = []
    for case in cases:
        if len(controls) >= CONTROL_COUNT:
            break
        if not case.f.is_constant and all(case.f != control.f for control in controls):
            controls.append(Char2Case(case.f, None, max_n))
    return cases + controls


def explore_char2(
    field: FieldDescriptor,
    max_degree: int,
    count: int,
    rng: RngState,
    max_n: int,
    archive: Path | None = None,
    workers: int = 1,
    timing: bool = False,
) -> Report:
    if field.characteristic != 2:
        raise UnsupportedFieldError(f"Characteristic 2 exploration needs a field of characteristic 2; got {field}")

    spec_text = f"zsigmondy {field} deg<={max_degree} pairs={count}"
    report = Report(STATEMENT, spec_text, (1, max_n), seed=rng.seed)

    with report.timed(timing):
        report.downgrade("characteristic 2 with g != 1 has no proof")
        cases = char2_cases(field, max_degree, count, rng, max_n)
        results = run_ordered(_check_char2_case, cases, workers, unit=" pair")

        for case, result in zip(cases, results):
            report.cases += result.cases
            witnesses = [_with_parameters(w, case) for w in result.failures]
            if case.is_control:
                report.failures.extend(witnesses)
            else:
                report.observations.extend(witnesses)

        controls = sum(1 for case in cases if case.is_control)
        report.notes.append(f"{len(cases) - controls} pairs, {controls} bang controls")
        report.notes.append(f"{len(report.observations)} counterexamples among pairs with g != 1")

    if report.observations:
        logger.warning("%s: %d counterexamples recorded", spec_text, len(report.observations))
    if archive is not None:
        WitnessArchive.from_reports([report]).write(archive)
        logger.info("Wrote %d witnesses to %s", len(report.failures) + len(report.observations), archive)

    return report
