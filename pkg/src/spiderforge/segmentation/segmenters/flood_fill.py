"""Flood-fill segmenter – grows a 4-connected region of similar color from the prompt pixel."""

import numpy as np
from scipy import ndimage

from spiderforge.grounding import round_point
from spiderforge.imaging import RegionMask

FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)


def segment_flood_fill(point, img, color_tol):
    if color_tol < 0:
        raise ValueError(f"color tolerance must be non-negative, got {color_tol}")

    point.check_frame(img.dims)
    x, y = round_point(point, img.dims)

    pixels = img.pixels.astype(np.int16)
    diff = np.abs(pixels - pixels[y, x]).max(axis=2)

    labels, _ = ndimage.label(diff <= color_tol, structure=FOUR_CONNECTED)
    return RegionMask(labels == labels[y, x])
