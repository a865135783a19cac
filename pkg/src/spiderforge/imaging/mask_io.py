"""PNG file I/O – 1-bit region masks and RGB rasters through Pillow."""

import logging
from pathlib import Path

import numpy as np
from PIL import Image

from spiderforge.imaging.image_buffer import ImageBuffer
from spiderforge.imaging.region_mask import RegionMask

logger = logging.getLogger(__name__)


def read_mask_png(path):
    with Image.open(path) as im:
        arr = np.asarray(im.convert("L"))
    return RegionMask(arr > 0)


def write_mask_png(mask, path):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(mask.bits).convert("1").save(path, format="PNG")
    logger.debug("wrote mask %s (%dx%d)", path, mask.width, mask.height)


def read_image(path, dims=None):
    """Loads an RGB raster, resampling bicubically to dims=(W, H) when given."""
    with Image.open(path) as im:
        im = im.convert("RGB")
        if dims is not None and im.size != tuple(dims):
            im = im.resize(tuple(dims), Image.BICUBIC)
        arr = np.asarray(im, dtype=np.uint8)
    return ImageBuffer(arr)


def write_image(buffer, path):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(buffer.pixels).save(path, format="PNG")
