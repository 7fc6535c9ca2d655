from __future__ import annotations

import typing
from pathlib import Path

from construct import Construct, Container

from polynomial_zsigmondy.construct_extensions.json import convert_to_raw_python

if typing.TYPE_CHECKING:
    import typing_extensions


class BaseResource:
    _raw: Container

    def __init__(self, raw: Container):
        self._raw = raw

    @classmethod
    def construct_class(cls) -> Construct:
        raise NotImplementedError()

    @classmethod
    def extension(cls) -> str:
        raise NotImplementedError()

    @classmethod
    def parse(cls, data: bytes) -> typing_extensions.Self:
        return cls(cls.construct_class().parse(data))

    def build(self) -> bytes:
        return self.construct_class().build(self._raw)

    @classmethod
    def read(cls, path: Path) -> typing_extensions.Self:
        return cls.parse(Path(path).read_bytes())

    def write(self, path: Path) -> None:
        Path(path).write_bytes(self.build())

    def to_json(self) -> dict:
        return convert_to_raw_python(self._raw)
