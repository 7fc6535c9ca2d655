"""
Polynomials on the wire: the field spec string, then each coefficient as its tuple of integers
(`FieldDescriptor.to_ints`), all as ZigZag varints so arbitrarily large rationals survive.
"""

import construct
from construct import Adapter, PrefixedArray, Struct, VarInt, ZigZag

from polynomial_zsigmondy.fields import make_field
from polynomial_zsigmondy.poly import Poly

FieldSpec = construct.PascalString(VarInt, "utf8")

PolyStruct = Struct(
    field=FieldSpec,
    coefficients=PrefixedArray(VarInt, PrefixedArray(VarInt, ZigZag)),
)


class PolyAdapter(Adapter):
    def __init__(self):
        super().__init__(PolyStruct)

    def _decode(self, obj, context, path) -> Poly:
        try:
            field = make_field(obj.field)
        except ValueError as e:
            raise construct.ValidationError(f"invalid field spec {obj.field!r}: {e}", path=path) from e

        width = len(field.to_ints(field.zero))
        for ints in obj.coefficients:
            if len(ints) != width:
                raise construct.ValidationError(
                    f"coefficient {list(ints)} has {len(ints)} parts; {field} needs {width}", path=path
                )
        try:
            return Poly.from_raw(field, (field.from_ints(ints) for ints in obj.coefficients))
        except ZeroDivisionError as e:
            raise construct.ValidationError(f"zero denominator in a coefficient of {field}", path=path) from e

    def _encode(self, obj: Poly, context, path):
        if not isinstance(obj, Poly):
            raise construct.MappingError(f"expected a Poly, got {type(obj).__name__}", path=path)
        return construct.Container(
            field=obj.field.spec_string,
            coefficients=[obj.field.to_ints(x) for x in obj.coeffs],
        )
