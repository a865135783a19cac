"""Block-mean pixelation operator."""

import numpy as np

from spiderforge.core.constants import PIXELATE_BLOCKS
from spiderforge.imaging import ImageBuffer


def pixelate(img, block):
    """Replaces each block×block tile by its mean; edge tiles average what they cover."""
    x = img.as_float()
    h, w = img.height, img.width

    rows = np.arange(0, h, block)
    cols = np.arange(0, w, block)
    row_sizes = np.diff(np.append(rows, h))
    col_sizes = np.diff(np.append(cols, w))

    sums = np.add.reduceat(np.add.reduceat(x, rows, axis=0), cols, axis=1)
    means = sums / np.outer(row_sizes, col_sizes)[:, :, None]

    out = np.repeat(np.repeat(means, row_sizes, axis=0), col_sizes, axis=1)
    return ImageBuffer.from_float(out)


class PixelateOperator:
    def apply_pixelate(self, img, spec):
        return pixelate(img, PIXELATE_BLOCKS[spec.level - 1])
