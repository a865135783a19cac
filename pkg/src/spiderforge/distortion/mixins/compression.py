"""Block-DCT quantization – an in-process surrogate for JPEG compression artifacts."""

import numpy as np
from scipy import fft

from spiderforge.core.constants import COMPRESSION_SCALES, JPEG_LUMA_TABLE
from spiderforge.imaging import ImageBuffer

BLOCK = 8

_LUMA = np.asarray(JPEG_LUMA_TABLE, dtype=np.float64)


def block_dct_quantize(img, scale):
    h, w = img.height, img.width
    pad_h = (-h) % BLOCK
    pad_w = (-w) % BLOCK

    x = np.pad(img.as_float() - 128.0, ((0, pad_h), (0, pad_w), (0, 0)), mode="edge")
    hb, wb = x.shape[0] // BLOCK, x.shape[1] // BLOCK

    blocks = x.reshape(hb, BLOCK, wb, BLOCK, 3)
    coef = fft.dctn(blocks, axes=(1, 3), norm="ortho")

    q = (_LUMA * scale)[None, :, None, :, None]
    coef = np.rint(coef / q) * q

    out = fft.idctn(coef, axes=(1, 3), norm="ortho").reshape(x.shape)
    return ImageBuffer.from_float(out[:h, :w] + 128.0)


class CompressionOperator:
    def apply_compression(self, img, spec):
        return block_dct_quantize(img, COMPRESSION_SCALES[spec.level - 1])
