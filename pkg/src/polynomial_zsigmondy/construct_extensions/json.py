import enum
from fractions import Fraction
from typing import Any

from construct.lib import Container, ListContainer

from polynomial_zsigmondy.poly import Poly


def convert_to_raw_python(value) -> Any:
    """Parsed archive contents as plain JSON values; polynomials in their canonical text form."""
    if callable(value):
        value = value()

    if isinstance(value, Poly):
        return {"field": value.field.spec_string, "poly": str(value)}

    if isinstance(value, ListContainer | list | tuple):
        return [convert_to_raw_python(item) for item in value]

    if isinstance(value, Container | dict):
        return {key: convert_to_raw_python(item) for key, item in value.items() if not str(key).startswith("_")}

    if isinstance(value, enum.Enum):
        return value.value

    if isinstance(value, Fraction):
        return str(value)

    return value
