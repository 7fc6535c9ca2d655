import construct
from construct import Adapter

from polynomial_zsigmondy.construct_extensions.polynomial import FieldSpec, PolyAdapter

Poly = PolyAdapter()
Name = FieldSpec
Index = construct.VarInt

VersionStruct = construct.Struct(major=construct.Int16ul, minor=construct.Int8ul, patch=construct.Int8ul)


class VersionAdapter(Adapter):
    """
    "major.minor.patch" as Int16ul/Int8ul/Int8ul. With `expected` set, an archive of another version fails
    to parse and cannot be built.
    """

    def __init__(self, expected: str | None = None):
        super().__init__(VersionStruct)
        self.expected = expected

    def _check(self, version: str, path) -> str:
        if self.expected is not None and version != self.expected:
            raise construct.ValidationError(f"archive version {version}, expected {self.expected}", path=path)
        return version

    def _decode(self, obj, context, path):
        return self._check(f"{obj.major}.{obj.minor}.{obj.patch}", path)

    def _encode(self, obj, context, path):
        try:
            major, minor, patch = (int(part) for part in self._check(obj, path).split("."))
        except ValueError:
            raise construct.ValidationError(f"invalid version {obj!r}", path=path) from None
        return construct.Container(major=major, minor=minor, patch=patch)


def make_vector(value: construct.Construct):
    return construct.PrefixedArray(construct.VarInt, value)
