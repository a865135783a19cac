"""Region synthesis – seeded disjoint rectangles and ellipses, or masks ingested from disk."""

import logging
import re
from pathlib import Path

import numpy as np

from spiderforge.core.constants import REGION_NOUNS
from spiderforge.core.errors import (
    Unsatisfiable,
    RegionOverlap,
    SchemaViolation,
    EmptyMask,
    DimMismatch,
    Location,
)
from spiderforge.core.util import make_rng
from spiderforge.forge.records import Region
from spiderforge.forge.settings import MIN_REGION_SIDE, PLACEMENT_ATTEMPTS
from spiderforge.imaging import RegionMask, read_mask_png

logger = logging.getLogger(__name__)

UNIFORM_LABEL = "scene"
SOURCE_IMAGE_NAME = "image.png"

_TRAILING_DIGITS = re.compile(r"(\d+)$")


def _side_limits(width, height):
    short = min(width, height)
    min_side = max(MIN_REGION_SIDE, short // 8)
    max_side = max(min_side, short // 2)
    return min(min_side, short), min(max_side, short)


def _shape_bits(width, height, x0, y0, w, h, ellipse):
    bits = np.zeros((height, width), dtype=bool)

    if not ellipse:
        bits[y0 : y0 + h, x0 : x0 + w] = True
        return bits

    yy, xx = np.mgrid[y0 : y0 + h, x0 : x0 + w]
    cx = x0 + (w - 1) / 2
    cy = y0 + (h - 1) / 2
    inside = ((xx - cx) / (w / 2)) ** 2 + ((yy - cy) / (h / 2)) ** 2 <= 1.0
    bits[y0 : y0 + h, x0 : x0 + w] = inside
    return bits


def synth_regions(dims, count, seed):
    """Places count disjoint shapes; seed may be an int or a numpy Generator."""
    width, height = dims

    if count < 1:
        raise Unsatisfiable(f"region count must be at least 1, got {count}")

    min_side, max_side = _side_limits(width, height)
    if count * min_side * min_side > width * height:
        raise Unsatisfiable(
            f"{count} regions of at least {min_side}x{min_side} cannot fit in {width}x{height}"
        )

    rng = seed if isinstance(seed, np.random.Generator) else make_rng(seed, "regions")

    if count <= len(REGION_NOUNS):
        label_idx = rng.choice(len(REGION_NOUNS), size=count, replace=False)
    else:
        label_idx = rng.choice(len(REGION_NOUNS), size=count, replace=True)

    occupied = np.zeros((height, width), dtype=bool)
    regions = []

    for n in range(count):
        for _ in range(PLACEMENT_ATTEMPTS):
            w, h = (int(v) for v in rng.integers(min_side, max_side + 1, size=2))
            x0 = int(rng.integers(0, width - w + 1))
            y0 = int(rng.integers(0, height - h + 1))
            ellipse = bool(rng.random() < 0.5)

            bits = _shape_bits(width, height, x0, y0, w, h, ellipse)
            if bits.any() and not (bits & occupied).any():
                break
        else:
            raise Unsatisfiable(
                f"could not place region {n + 1} of {count} disjointly in {width}x{height}"
            )

        occupied |= bits
        label = REGION_NOUNS[int(label_idx[n])]
        regions.append(Region(n + 1, RegionMask(bits), label))

    return regions


def uniform_region(dims):
    width, height = dims
    return [Region(1, RegionMask.full(width, height), UNIFORM_LABEL)]


def _region_id(stem, position):
    match = _TRAILING_DIGITS.search(stem)
    return int(match.group(1)) if match else position + 1


def ingest_regions(directory, dims=None):
    """Reads {<stem>.png, <stem>.txt} pairs; the id comes from the stem's trailing digits.

    Returns (regions, image_path) where image_path is the directory's
    image.png when present.
    """
    directory = Path(directory)
    mask_files = sorted(
        p for p in directory.glob("*.png") if p.name != SOURCE_IMAGE_NAME
    )

    regions = []
    seen = {}
    occupied = None

    for position, path in enumerate(mask_files):
        loc = Location(str(path))
        rid = _region_id(path.stem, position)

        if rid in seen:
            raise SchemaViolation(f"region id {rid} also derived from {seen[rid]}", loc)
        seen[rid] = path.name

        mask = read_mask_png(path)
        if mask.is_empty:
            raise EmptyMask(f"mask {path.name} has no set pixels", loc)

        if dims is None:
            dims = mask.dims
        elif mask.dims != tuple(dims):
            raise DimMismatch(tuple(dims), mask.dims, loc)

        if occupied is None:
            occupied = np.zeros((mask.height, mask.width), dtype=bool)
        if (occupied & mask.bits).any():
            raise RegionOverlap(f"mask {path.name} overlaps an earlier region", loc)
        occupied |= mask.bits

        label_path = path.with_suffix(".txt")
        label = label_path.read_text(encoding="utf-8").strip() if label_path.exists() else ""
        regions.append(Region(rid, mask, label or path.stem))

    image_path = directory / SOURCE_IMAGE_NAME
    logger.info("ingested %d regions from %s", len(regions), directory)
    return sorted(regions, key=lambda r: r.id), (image_path if image_path.exists() else None)
