"""Imaging package – rasters, region masks, RLE, and the mask primitives every other module builds on."""

from .image_buffer import ImageBuffer
from .rle import Rle
from .region_mask import RegionMask, BBox
from .ops import (
    rle_encode,
    rle_decode,
    mask_iou,
    bbox_of_mask,
    composite_by_mask,
    full_mask,
)
from .mask_io import read_mask_png, write_mask_png, read_image, write_image

__all__ = [
    "ImageBuffer",
    "Rle",
    "RegionMask",
    "BBox",
    "rle_encode",
    "rle_decode",
    "mask_iou",
    "bbox_of_mask",
    "composite_by_mask",
    "full_mask",
    "read_mask_png",
    "write_mask_png",
    "read_image",
    "write_image",
]
