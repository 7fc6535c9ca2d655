"""
Exceptions raised by the arithmetic and sequence layers.
"""

from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    from polynomial_zsigmondy.poly import Poly


class FieldSpecError(ValueError):
    pass


class DescriptorMismatchError(ValueError):
    pass


class UnsupportedFieldError(ValueError):
    pass


class SequenceKindError(TypeError):
    pass


class IndexDeletedError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    def __init__(self, message: str, remainder: Poly):
        super().__init__(message)
        self.remainder = remainder


class FactorizationCheckError(ArithmeticError):
    pass


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
