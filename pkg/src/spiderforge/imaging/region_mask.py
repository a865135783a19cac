"""RegionMask – binary W×H membership with derived RLE, tight bbox, and bbox center."""

from typing import NamedTuple

import numpy as np

from spiderforge.core.errors import EmptyMask, DimMismatch


class BBox(NamedTuple):
    x_min: int
    y_min: int
    x_max: int
    y_max: int

    @property
    def center(self):
        return ((self.x_min + self.x_max) / 2, (self.y_min + self.y_max) / 2)


class RegionMask:
    __slots__ = ("bits", "_rle", "_bbox")

    def __init__(self, bits):
        arr = np.asarray(bits, dtype=bool)

        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"expected a non-empty (H, W) array, got shape {arr.shape}")

        arr = np.array(arr, order="C")
        arr.setflags(write=False)
        self.bits = arr
        self._rle = None
        self._bbox = None

    @classmethod
    def empty(cls, width, height):
        return cls(np.zeros((height, width), dtype=bool))

    @classmethod
    def full(cls, width, height):
        return cls(np.ones((height, width), dtype=bool))

    @property
    def width(self):
        return self.bits.shape[1]

    @property
    def height(self):
        return self.bits.shape[0]

    @property
    def dims(self):
        return (self.width, self.height)

    @property
    def area(self):
        return int(np.count_nonzero(self.bits))

    @property
    def is_empty(self):
        return not self.bits.any()

    @property
    def is_full(self):
        return bool(self.bits.all())

    @property
    def rle(self):
        if self._rle is None:
            from spiderforge.imaging.ops import rle_encode

            self._rle = rle_encode(self)
        return self._rle

    @property
    def bbox(self):
        if self._bbox is None:
            rows = np.flatnonzero(self.bits.any(axis=1))
            cols = np.flatnonzero(self.bits.any(axis=0))

            if rows.size == 0:
                raise EmptyMask("mask has no set pixels")

            self._bbox = BBox(
                int(cols[0]), int(rows[0]), int(cols[-1]), int(rows[-1])
            )
        return self._bbox

    @property
    def center(self):
        return self.bbox.center

    def contains(self, x, y):
        return 0 <= x < self.width and 0 <= y < self.height and bool(self.bits[y, x])

    def require_dims(self, dims):
        if tuple(dims) != self.dims:
            raise DimMismatch(tuple(dims), self.dims)

    def __eq__(self, other):
        if not isinstance(other, RegionMask):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.dims, self.rle.counts))

    def __repr__(self):
        return f"RegionMask({self.width}x{self.height}, area={self.area})"
