from pathlib import Path

from polynomial_zsigmondy.formats.base_resource import BaseResource
from polynomial_zsigmondy.formats.term_archive import TermArchive
from polynomial_zsigmondy.formats.witness_archive import WitnessArchive

# the 4-byte magic of each archive is its extension in upper case
ALL_FORMATS: dict[str, type[BaseResource]] = {cls.extension().upper(): cls for cls in (TermArchive, WitnessArchive)}


def format_for(extension: str) -> type[BaseResource]:
    return ALL_FORMATS[extension.upper()]


def format_for_data(data: bytes) -> type[BaseResource]:
    """The archive type named by the 4-byte magic."""
    magic = data[:4].decode("ascii", errors="replace")
    if magic not in ALL_FORMATS:
        raise ValueError(f"Unknown archive magic: {data[:4]!r}")
    return ALL_FORMATS[magic]


def read_archive(path: Path) -> BaseResource:
    data = Path(path).read_bytes()
    return format_for_data(data).parse(data)


__all__ = [
    "ALL_FORMATS",
    "BaseResource",
    "TermArchive",
    "WitnessArchive",
    "format_for",
    "format_for_data",
    "read_archive",
]
