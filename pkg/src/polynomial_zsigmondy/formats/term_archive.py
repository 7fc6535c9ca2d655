"""
`.ztrm`: a sequence definition and the terms computed for it, so a later run can start from a
warm `TermCache`.
"""

from __future__ import annotations

import logging
import typing

import construct
from construct import Const, Construct, Struct

from polynomial_zsigmondy import common_types
from polynomial_zsigmondy.construct_extensions.compression import ARCHIVE_LEVEL, CompressedZSTD
from polynomial_zsigmondy.fields import make_field
from polynomial_zsigmondy.formats.base_resource import BaseResource
from polynomial_zsigmondy.sequences import LucasTerms, SequenceKind, SequenceSpec, lucas_terms, term

if typing.TYPE_CHECKING:
    from polynomial_zsigmondy.poly import Poly

logger = logging.getLogger(__name__)

PARAMETER_NAMES = ("f", "g", "p")

TermEntry = Struct(
    n=common_types.Index,
    # term(n) alone, or L_n, L'_n and L̂_n for a Lucas sequence
    values=common_types.make_vector(common_types.Poly),
)

ZTRM = Struct(
    _magic=Const(b"ZTRM"),
    version=common_types.VersionAdapter("1.0.0"),
    body=CompressedZSTD(
        Struct(
            kind=common_types.Name,
            field=common_types.Name,
            parameters=common_types.make_vector(Struct(name=common_types.Name, poly=common_types.Poly)),
            terms=common_types.make_vector(TermEntry),
        ),
        ARCHIVE_LEVEL,
    ),
)


def _values_for(spec: SequenceSpec, n: int) -> list[Poly]:
    if spec.kind == SequenceKind.LUCAS:
        return list(lucas_terms(spec, n))
    return [term(spec, n)]


class TermArchive(BaseResource):
    @classmethod
    def construct_class(cls) -> Construct:
        return ZTRM

    @classmethod
    def extension(cls) -> str:
        return "ztrm"

    @classmethod
    def from_spec(cls, spec: SequenceSpec, max_n: int) -> TermArchive:
        parameters = [
            construct.Container(name=name, poly=getattr(spec, name))
            for name in PARAMETER_NAMES
            if getattr(spec, name) is not None
        ]
        terms = [construct.Container(n=n, values=_values_for(spec, n)) for n in range(1, max_n + 1)]
        body = construct.Container(
            kind=spec.kind.value,
            field=spec.field.spec_string,
            parameters=parameters,
            terms=terms,
        )
        return cls(construct.Container(version="1.0.0", body=body))

    @property
    def body(self) -> construct.Container:
        return self._raw.body

    @property
    def indices(self) -> list[int]:
        return [entry.n for entry in self.body.terms]

    def spec(self) -> SequenceSpec:
        try:
            kind = SequenceKind(self.body.kind)
        except ValueError:
            raise ValueError(f"Unknown sequence kind in archive: {self.body.kind!r}") from None
        parameters = {item.name: item.poly for item in self.body.parameters}
        unknown = set(parameters) - set(PARAMETER_NAMES)
        if unknown:
            raise ValueError(f"Unknown parameters in archive: {sorted(unknown)}")
        return SequenceSpec(kind, make_field(self.body.field), **parameters)

    def load(self) -> SequenceSpec:
        """The archived spec with every stored term already in its cache."""
        spec = self.spec()
        for entry in self.body.terms:
            values = list(entry["values"])
            if spec.kind == SequenceKind.LUCAS:
                if len(values) != 3:
                    raise ValueError(f"Lucas entry {entry.n} holds {len(values)} polynomials, expected 3")
                spec.cache.store(("term", entry.n), LucasTerms(*values))
            else:
                if len(values) != 1:
                    raise ValueError(f"Entry {entry.n} holds {len(values)} polynomials, expected 1")
                spec.cache.store(("term", entry.n), values[0])

        logger.info("Loaded %d terms of %s", len(self.body.terms), spec)
        return spec
