"""ImageBuffer – a W×H 8-bit RGB raster, row-major, origin at the top-left corner."""

import numpy as np

from spiderforge.core.errors import DimMismatch


class ImageBuffer:
    __slots__ = ("pixels",)

    def __init__(self, pixels):
        arr = np.asarray(pixels)

        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected an (H, W, 3) array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if arr.dtype != np.uint8:
            raise ValueError(f"expected uint8 pixels, got {arr.dtype}")

        arr = np.array(arr, order="C")
        arr.setflags(write=False)
        self.pixels = arr

    @classmethod
    def filled(cls, width, height, rgb):
        arr = np.empty((height, width, 3), dtype=np.uint8)
        arr[...] = np.asarray(rgb, dtype=np.uint8)
        return cls(arr)

    @classmethod
    def from_float(cls, values):
        """Rounds half-to-even and clamps to [0, 255]."""
        return cls(np.clip(np.rint(values), 0, 255).astype(np.uint8))

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def dims(self):
        return (self.width, self.height)

    def as_float(self):
        return self.pixels.astype(np.float64)

    def require_dims(self, dims):
        if tuple(dims) != self.dims:
            raise DimMismatch(tuple(dims), self.dims)

    def __eq__(self, other):
        if not isinstance(other, ImageBuffer):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __hash__(self):
        return hash((self.dims, self.pixels.tobytes()))

    def __repr__(self):
        return f"ImageBuffer({self.width}x{self.height})"
