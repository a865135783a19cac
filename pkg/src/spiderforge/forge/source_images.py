"""Base rasters – pristine images from disk or a seeded procedural test card."""

import logging
from pathlib import Path

import numpy as np

from spiderforge.imaging import ImageBuffer, read_image

logger = logging.getLogger(__name__)

IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff")


def list_source_images(directory):
    directory = Path(directory)
    return sorted(p for p in directory.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES)


def procedural_card(dims, rng):
    """Gradients, a sinusoidal texture band, and a few solid blobs."""
    width, height = dims
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)

    fx = xx / max(width - 1, 1)
    fy = yy / max(height - 1, 1)
    period = float(rng.uniform(4.0, 12.0))
    phase = float(rng.uniform(0.0, 2.0 * np.pi))

    texture = 40.0 * np.sin(2.0 * np.pi * (xx + yy) / period + phase)
    card = np.stack(
        [
            40.0 + 170.0 * fx + texture,
            40.0 + 170.0 * fy - texture,
            128.0 + 60.0 * np.cos(2.0 * np.pi * (fx - fy)) + 0.5 * texture,
        ],
        axis=2,
    )

    for _ in range(int(rng.integers(3, 7))):
        cx, cy = rng.uniform(0, width), rng.uniform(0, height)
        r = rng.uniform(0.05, 0.2) * min(width, height)
        color = rng.uniform(0, 255, size=3)
        card[(xx - cx) ** 2 + (yy - cy) ** 2 <= r * r] = color

    return ImageBuffer.from_float(card)


def load_base_image(dims, rng, source_dir=None, explicit_path=None):
    if explicit_path is not None:
        return read_image(explicit_path, dims)

    if source_dir is not None:
        images = list_source_images(source_dir)
        if images:
            path = images[int(rng.integers(len(images)))]
            logger.debug("base image %s", path)
            return read_image(path, dims)
        logger.warning("no images found in %s, using a procedural test card", source_dir)

    return procedural_card(dims, rng)
