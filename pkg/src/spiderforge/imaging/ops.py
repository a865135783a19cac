"""Mask and raster primitives – RLE codec, IoU, bbox, and mask compositing."""

import numpy as np

from spiderforge.core.errors import DimMismatch, LengthMismatch
from spiderforge.imaging.image_buffer import ImageBuffer
from spiderforge.imaging.region_mask import RegionMask
from spiderforge.imaging.rle import Rle


def rle_encode(mask):
    flat = mask.bits.ravel()
    n = flat.size

    change = np.flatnonzero(flat[1:] != flat[:-1]) + 1
    bounds = np.concatenate(([0], change, [n]))
    runs = np.diff(bounds).tolist()

    if flat[0]:
        runs.insert(0, 0)

    return Rle(runs)


def rle_decode(rle, width, height):
    if not isinstance(rle, Rle):
        rle = Rle(rle)

    if rle.total != width * height:
        raise LengthMismatch(
            f"run lengths sum to {rle.total}, expected {width}x{height} = {width * height}"
        )

    counts = np.asarray(rle.counts, dtype=np.int64)
    values = (np.arange(counts.size) % 2).astype(bool)
    flat = np.repeat(values, counts)

    return RegionMask(flat.reshape(height, width))


def mask_iou(a, b):
    if a.dims != b.dims:
        raise DimMismatch(a.dims, b.dims)

    union = np.count_nonzero(a.bits | b.bits)
    if union == 0:
        return 1.0

    inter = np.count_nonzero(a.bits & b.bits)
    return inter / union


def bbox_of_mask(mask):
    bbox = mask.bbox
    return bbox, bbox.center


def composite_by_mask(base, overlay, mask):
    if base.dims != overlay.dims:
        raise DimMismatch(base.dims, overlay.dims)
    if base.dims != mask.dims:
        raise DimMismatch(base.dims, mask.dims)

    out = np.where(mask.bits[:, :, None], overlay.pixels, base.pixels)
    return ImageBuffer(out)


def full_mask(width, height):
    return RegionMask.full(width, height)
