"""
Statement ids and the checks behind them. Every report carries its id, so a verdict can be traced back to
the check that produced it.
"""

from __future__ import annotations

import dataclasses
import logging
import typing

from polynomial_zsigmondy.errors import SequenceKindError
from polynomial_zsigmondy.poly import Poly
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, term
from polynomial_zsigmondy.verification import campaign
from polynomial_zsigmondy.verification.char2 import explore_char2
from polynomial_zsigmondy.verification.divisibility import IDENTITY_BOUND, verify_strong_divisibility
from polynomial_zsigmondy.verification.lucas import verify_lucas_identities
from polynomial_zsigmondy.verification.ord_lemma import default_pi, verify_ord_lemma
from polynomial_zsigmondy.verification.zsigmondy import (
    verify_frobenius_indices,
    verify_primitive_part,
    verify_zsigmondy,
)

if typing.TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

    from polynomial_zsigmondy.fields import FieldDescriptor
    from polynomial_zsigmondy.verification.report import Report

logger = logging.getLogger(__name__)

ZSIG_OR_BANG = frozenset({SequenceKind.ZSIGMONDY, SequenceKind.BANG})
LUCAS_ONLY = frozenset({SequenceKind.LUCAS})


@dataclasses.dataclass(frozen=True)
class VerifyOptions:
    max_n: int = 40
    n: int | None = None
    max_m: int = 27
    pi: Poly | None = None
    seed: int = 0
    include_deleted: bool = False
    identity_bound: int = IDENTITY_BOUND
    timing: bool = False

    # campaigns
    field: FieldDescriptor | None = None
    count: int = 25
    max_degree: int = 3
    archive: Path | None = None
    workers: int = 1


class StatementRunner(typing.NamedTuple):
    kinds: frozenset[SequenceKind]
    run: Callable[[SequenceSpec | None, VerifyOptions], Report]


def _first_nonconstant_index(spec: SequenceSpec, max_n: int) -> int:
    for n in range(2, max_n + 1):
        p = spec.characteristic
        if p and n % p == 0:
            continue
        if not term(spec, n).is_constant:
            return n
    raise ValueError(f"No term of {spec} up to {max_n} has a prime divisor")


def _ord_lemma(spec: SequenceSpec, options: VerifyOptions) -> Report:
    n = options.n if options.n is not None else _first_nonconstant_index(spec, options.max_n)
    pi = options.pi if options.pi is not None else default_pi(spec, n, RngState(options.seed))
    report = verify_ord_lemma(spec, pi, n, options.max_m, timing=options.timing)
    report.seed = options.seed
    return report


def _strong_divisibility(spec: SequenceSpec, options: VerifyOptions) -> Report:
    return verify_strong_divisibility(spec, options.max_n, options.identity_bound, timing=options.timing)


def _zsigmondy(spec: SequenceSpec, options: VerifyOptions) -> Report:
    return verify_zsigmondy(spec, options.max_n, options.include_deleted, timing=options.timing)


def _lucas(statement: str) -> Callable[[SequenceSpec, VerifyOptions], Report]:
    def run(spec: SequenceSpec, options: VerifyOptions) -> Report:
        return verify_lucas_identities(spec, options.max_n, statement, seed=options.seed, timing=options.timing)

    return run


def _primitive_part(spec: SequenceSpec, options: VerifyOptions) -> Report:
    return verify_primitive_part(spec, options.max_n, options.seed, timing=options.timing)


def _frobenius_indices(spec: SequenceSpec, options: VerifyOptions) -> Report:
    return verify_frobenius_indices(spec, options.max_n, timing=options.timing)


def _char2(spec: SequenceSpec | None, options: VerifyOptions) -> Report:
    if options.field is None:
        raise ValueError("char2-remark needs a field")
    return explore_char2(
        options.field,
        options.max_degree,
        options.count,
        RngState(options.seed),
        options.max_n,
        archive=options.archive,
        workers=options.workers,
        timing=options.timing,
    )


STATEMENTS: dict[str, StatementRunner] = {
    "lemma-1.1": StatementRunner(ZSIG_OR_BANG, _ord_lemma),
    "lemma-1.2": StatementRunner(frozenset({SequenceKind.ZSIGMONDY}), _strong_divisibility),
    "thm-1.3": StatementRunner(frozenset({SequenceKind.ZSIGMONDY}), _zsigmondy),
    "lemma-1.4": StatementRunner(frozenset({SequenceKind.BANG}), _strong_divisibility),
    "cor-1.5": StatementRunner(frozenset({SequenceKind.BANG}), _zsigmondy),
    "lemma-2.1": StatementRunner(LUCAS_ONLY, _lucas("lemma-2.1")),
    "lemma-2.2": StatementRunner(LUCAS_ONLY, _strong_divisibility),
    "lemma-2.3": StatementRunner(LUCAS_ONLY, _lucas("lemma-2.3")),
    "lemma-2.4": StatementRunner(LUCAS_ONLY, _lucas("lemma-2.4")),
    "lemma-2.5": StatementRunner(LUCAS_ONLY, _lucas("lemma-2.5")),
    "thm-2.6": StatementRunner(LUCAS_ONLY, _zsigmondy),
    "lucas-suite": StatementRunner(LUCAS_ONLY, _lucas("lucas-suite")),
    "obs-1": StatementRunner(ZSIG_OR_BANG, _primitive_part),
    "obs-2": StatementRunner(ZSIG_OR_BANG, _frobenius_indices),
    "char2-remark": StatementRunner(frozenset(), _char2),
}


def needs_spec(statement: str) -> bool:
    return bool(_runner(statement).kinds)


def _runner(statement: str) -> StatementRunner:
    try:
        return STATEMENTS[statement]
    except KeyError:
        raise ValueError(f"Unknown statement {statement!r}; expected one of {', '.join(STATEMENTS)}") from None


def run_statement(statement: str, spec: SequenceSpec | None, options: VerifyOptions) -> Report:
    runner = _runner(statement)
    if runner.kinds:
        if spec is None:
            raise ValueError(f"{statement} needs a sequence")
        if spec.kind not in runner.kinds:
            names = ", ".join(sorted(kind.value for kind in runner.kinds))
            raise SequenceKindError(f"{statement} applies to {names} sequences, not {spec.kind.value}")

    logger.info("Running %s", statement)
    return runner.run(spec, options)


def kind_for(statement: str) -> SequenceKind:
    """The family a campaign for `statement` samples from; zsigmondy when several apply."""
    kinds = _runner(statement).kinds
    if not kinds:
        raise ValueError(f"{statement} does not run on sampled sequences")
    return SequenceKind.ZSIGMONDY if SequenceKind.ZSIGMONDY in kinds else next(iter(kinds))


def random_spec(kind: SequenceKind, field: FieldDescriptor, max_degree: int, rng: RngState) -> SequenceSpec:
    if kind == SequenceKind.ZSIGMONDY:
        return SequenceSpec.zsigmondy(*campaign.random_coprime_pair(field, max_degree, rng))
    if kind == SequenceKind.BANG:
        return SequenceSpec.bang(campaign.random_non_unit(field, max_degree, rng))
    return SequenceSpec.lucas(campaign.random_admissible_lucas(field, max_degree, rng))


class CampaignJob(typing.NamedTuple):
    statement: str
    spec: SequenceSpec
    options: VerifyOptions


def _run_job(job: CampaignJob) -> Report:
    return run_statement(job.statement, job.spec, job.options)


def run_campaign(
    statement: str,
    field: FieldDescriptor,
    options: VerifyOptions,
    kind: SequenceKind | None = None,
) -> list[Report]:
    """`options.count` seeded random sequences over `field`, each checked against `statement`."""
    kind = kind if kind is not None else kind_for(statement)
    rng = RngState(options.seed)
    # each job runs in a single process
    job_options = dataclasses.replace(options, workers=1)
    jobs = [
        CampaignJob(statement, random_spec(kind, field, options.max_degree, rng.spawn(i)), job_options)
        for i in range(options.count)
    ]
    logger.info("Campaign %s over %s: %d %s sequences", statement, field, len(jobs), kind.value)
    return campaign.run_ordered(_run_job, jobs, options.workers, unit=" spec")
