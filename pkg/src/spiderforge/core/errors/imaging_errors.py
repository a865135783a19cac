"""Raster and mask errors – raised by the imaging primitives."""

from .error import Error


class LengthMismatch(Error):
    error_name = "Length Mismatch"


class DimMismatch(Error):
    error_name = "Dimension Mismatch"

    def __init__(self, expected, actual, location=None):
        super().__init__(
            f"expected {expected[0]}x{expected[1]}, got {actual[0]}x{actual[1]}",
            location,
        )
        self.expected = tuple(expected)
        self.actual = tuple(actual)


class EmptyMask(Error):
    error_name = "Empty Mask"
