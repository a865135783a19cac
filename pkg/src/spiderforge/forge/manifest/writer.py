"""Manifest writer – canonical JSON lines plus the image and mask files they point at."""

import logging
from pathlib import Path

from spiderforge.core.constants import MANIFEST_SCHEMA
from spiderforge.core.util import dumps_canonical
from spiderforge.distortion import cumulative_intensity
from spiderforge.imaging import write_image, write_mask_png

logger = logging.getLogger(__name__)

MASK_RLE = "rle"
MASK_PNG = "png"
MANIFEST_NAME = "manifest.jsonl"


def region_to_json(region, mask_ref):
    bbox = region.mask.bbox
    return {
        "id": region.id,
        "label": region.semantic_label,
        "mask": mask_ref,
        "bbox": list(bbox),
        "center": list(bbox.center),
        "plan": region.plan.to_json(),
        "cumulative_intensity": cumulative_intensity(region.plan),
    }


def task_to_json(task):
    return {
        "task_id": task.task_id,
        "task": task.task,
        "sub_task": task.sub_task,
        "question": task.question,
        "answer": task.answer.to_json(),
        "target_region_id": task.target_region_id,
        "query": task.query.to_json() if task.query is not None else None,
    }


def sample_to_json(sample, mask_refs=None):
    """One manifest line; regions default to inline RLE masks."""
    mask_refs = mask_refs or {}
    width, height = sample.dims

    return {
        "schema": MANIFEST_SCHEMA,
        "sample_id": sample.sample_id,
        "image": sample.image_path,
        "width": width,
        "height": height,
        "regions": [
            region_to_json(r, mask_refs.get(r.id) or {"rle": r.mask.rle.to_list()})
            for r in sorted(sample.regions, key=lambda r: r.id)
        ],
        "tasks": [task_to_json(t) for t in sample.tasks],
        "provenance": dict(sample.provenance),
    }


class ManifestWriter:
    """Streams samples into <out>/manifest.jsonl, writing images/ and masks/ beside it.

    Samples must arrive in sample-id order.
    """

    def __init__(self, out_dir, mask_format=MASK_RLE):
        if mask_format not in (MASK_RLE, MASK_PNG):
            raise ValueError(f"unknown mask format {mask_format!r}")

        self.out_dir = Path(out_dir)
        self.mask_format = mask_format
        self.path = self.out_dir / MANIFEST_NAME
        self.count = 0
        self._last_id = None
        self._file = None

    def __enter__(self):
        (self.out_dir / "images").mkdir(parents=True, exist_ok=True)
        if self.mask_format == MASK_PNG:
            (self.out_dir / "masks").mkdir(parents=True, exist_ok=True)

        self._file = open(self.path, "w", encoding="utf-8", newline="\n")
        return self

    def __exit__(self, *exc):
        self._file.close()
        self._file = None
        logger.info("wrote %d samples to %s", self.count, self.path)
        return False

    def write(self, sample, image):
        if self._last_id is not None and sample.sample_id <= self._last_id:
            raise ValueError(f"sample {sample.sample_id} arrived after {self._last_id}")
        self._last_id = sample.sample_id

        write_image(image, self.out_dir / sample.image_path)

        mask_refs = {}
        if self.mask_format == MASK_PNG:
            for region in sample.regions:
                rel = f"masks/{sample.sample_id}_r{region.id}.png"
                write_mask_png(region.mask, self.out_dir / rel)
                mask_refs[region.id] = {"png": rel}

        self._file.write(dumps_canonical(sample_to_json(sample, mask_refs)))
        self._file.write("\n")
        self.count += 1


def write_manifest(samples, out_dir, mask_format=MASK_RLE):
    """Writes (SampleRecord, ImageBuffer) pairs; returns the manifest path."""
    with ManifestWriter(out_dir, mask_format) as writer:
        for sample, image in samples:
            writer.write(sample, image)
    return writer.path
