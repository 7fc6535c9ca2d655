import construct
import pytest
from tests.test_lib import poly

from polynomial_zsigmondy.construct_extensions.compression import ARCHIVE_LEVEL
from polynomial_zsigmondy.formats import (
    ALL_FORMATS,
    TermArchive,
    WitnessArchive,
    format_for,
    format_for_data,
    read_archive,
)
from polynomial_zsigmondy.sequences import LucasTerms, SequenceKind, lucas_terms, term


@pytest.mark.parametrize("fixture", ["zsig_f7", "zsig_q", "bang_f2", "admissible_lucas"])
def test_round_trip(request, fixture, tmp_path):
    spec = request.getfixturevalue(fixture)
    path = tmp_path.joinpath(f"{fixture}.ztrm")

    TermArchive.from_spec(spec, 12).write(path)
    archive = TermArchive.read(path)

    assert archive.indices == list(range(1, 13))
    assert archive.spec() == spec
    assert archive.build() == path.read_bytes()


def test_load_warms_the_cache(zsig_f7):
    data = TermArchive.from_spec(zsig_f7, 8).build()
    spec = TermArchive.parse(data).load()

    assert spec == zsig_f7
    assert spec is not zsig_f7
    assert len(spec.cache) == 8
    assert ("term", 8) in spec.cache
    assert all(term(spec, n) == term(zsig_f7, n) for n in range(1, 9))


def test_load_lucas(admissible_lucas):
    spec = TermArchive.parse(TermArchive.from_spec(admissible_lucas, 5).build()).load()

    stored = spec.cache.get(("term", 4), lambda: None)
    assert isinstance(stored, LucasTerms)
    assert stored == lucas_terms(admissible_lucas, 4)


def test_load_rejects_wrong_entry_width(zsig_f7):
    archive = TermArchive.from_spec(zsig_f7, 3)
    archive.body.terms[1]["values"].append(poly("T", zsig_f7.field))

    with pytest.raises(ValueError, match="Entry 2 holds 2 polynomials"):
        TermArchive.parse(archive.build()).load()


def test_unknown_kind(bang_f2):
    archive = TermArchive.from_spec(bang_f2, 2)
    archive.body.kind = "fibonacci"

    with pytest.raises(ValueError, match="Unknown sequence kind"):
        TermArchive.parse(archive.build()).spec()


def test_bad_magic(zsig_f7):
    data = bytearray(TermArchive.from_spec(zsig_f7, 2).build())
    data[0:4] = b"ZXXX"

    with pytest.raises(construct.ConstError):
        TermArchive.parse(bytes(data))
    with pytest.raises(ValueError, match="Unknown archive magic"):
        format_for_data(bytes(data))


def test_corrupt_body(zsig_f7):
    data = TermArchive.from_spec(zsig_f7, 2).build()

    with pytest.raises(construct.ConstructError):
        TermArchive.parse(data[:8] + b"\x00" * (len(data) - 8))


def test_format_lookup(bang_f2, tmp_path):
    path = tmp_path.joinpath("bang.ztrm")
    TermArchive.from_spec(bang_f2, 4).write(path)

    assert format_for("ztrm") is TermArchive
    assert TermArchive.extension() == "ztrm"
    assert format_for("ZWIT") is WitnessArchive
    assert set(ALL_FORMATS) == {"ZTRM", "ZWIT"}
    assert isinstance(read_archive(path), TermArchive)


def test_to_json(bang_f2):
    archive = TermArchive.from_spec(bang_f2, 2)

    assert archive.to_json() == {
        "version": "1.0.0",
        "body": {
            "kind": SequenceKind.BANG.value,
            "field": "fp:2",
            "parameters": [{"name": "f", "poly": {"field": "fp:2", "poly": "T^2 + T + 1"}}],
            "terms": [
                {"n": 1, "values": [{"field": "fp:2", "poly": "T^2 + T"}]},
                {"n": 2, "values": [{"field": "fp:2", "poly": "T^4 + T^2"}]},
            ],
        },
    }


@pytest.mark.parametrize("archive_class", [TermArchive, WitnessArchive])
def test_body_compression_level(archive_class):
    body = archive_class.construct_class().body.subcon
    assert body.level == ARCHIVE_LEVEL
