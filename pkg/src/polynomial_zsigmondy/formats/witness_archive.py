"""
`.zwit`: failures and recorded observations of one or more reports, stored verbatim so every
witness can be replayed later.
"""

from __future__ import annotations

import typing

import construct
from construct import Const, Construct, Struct

from polynomial_zsigmondy import common_types
from polynomial_zsigmondy.construct_extensions.compression import ARCHIVE_LEVEL, CompressedZSTD
from polynomial_zsigmondy.formats.base_resource import BaseResource
from polynomial_zsigmondy.verification.report import Witness

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from polynomial_zsigmondy.verification.report import Report

WitnessStruct = Struct(
    indices=common_types.make_vector(common_types.Index),
    polys=common_types.make_vector(Struct(label=common_types.Name, poly=common_types.Poly)),
    note=common_types.Name,
)

ReportEntry = Struct(
    statement=common_types.Name,
    spec=common_types.Name,
    verdict=common_types.Name,
    seed=common_types.Index,
    failures=common_types.make_vector(WitnessStruct),
    observations=common_types.make_vector(WitnessStruct),
)

ZWIT = Struct(
    _magic=Const(b"ZWIT"),
    version=common_types.VersionAdapter("1.0.0"),
    body=CompressedZSTD(Struct(reports=common_types.make_vector(ReportEntry)), ARCHIVE_LEVEL),
)


class ArchivedReport(typing.NamedTuple):
    statement: str
    spec: str
    verdict: str
    seed: int
    failures: list[Witness]
    observations: list[Witness]


def _encode_witness(witness: Witness) -> construct.Container:
    return construct.Container(
        indices=list(witness.indices),
        polys=[construct.Container(label=label, poly=poly) for label, poly in witness.polys],
        note=witness.note,
    )


def _decode_witness(raw: construct.Container) -> Witness:
    return Witness(
        indices=tuple(raw.indices),
        polys=tuple((item.label, item.poly) for item in raw.polys),
        note=raw.note,
    )


class WitnessArchive(BaseResource):
    @classmethod
    def construct_class(cls) -> Construct:
        return ZWIT

    @classmethod
    def extension(cls) -> str:
        return "zwit"

    @classmethod
    def from_reports(cls, reports: Iterable[Report]) -> WitnessArchive:
        entries = [
            construct.Container(
                statement=report.statement,
                spec=report.spec,
                verdict=report.verdict.value,
                seed=report.seed,
                failures=[_encode_witness(w) for w in report.failures],
                observations=[_encode_witness(w) for w in report.observations],
            )
            for report in reports
        ]
        return cls(construct.Container(version="1.0.0", body=construct.Container(reports=entries)))

    def reports(self) -> list[ArchivedReport]:
        return [
            ArchivedReport(
                statement=entry.statement,
                spec=entry.spec,
                verdict=entry.verdict,
                seed=entry.seed,
                failures=[_decode_witness(w) for w in entry.failures],
                observations=[_decode_witness(w) for w in entry.observations],
            )
            for entry in self._raw.body.reports
        ]

    @property
    def witness_count(self) -> int:
        return sum(len(entry.failures) + len(entry.observations) for entry in self._raw.body.reports)
