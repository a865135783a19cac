"""Per-sample forge state: region layout, task draws, planning, and rendering."""

import logging
from pathlib import Path

import numpy as np

from spiderforge.core.constants import (
    MIX_GLOBAL,
    MIX_LOCAL,
    MIX_GROUNDING,
    MIX_REF_SHORT,
    MIX_REF_LONG,
    SUB_HYD,
    SUB_SID,
    SUB_DAO,
    SUB_REF_SHORT,
    SUB_REF_LONG,
    GROUNDING_SUB_TASKS,
    POLARITY_MAX,
    POLARITY_MIN,
    ORDER_SEQUENCE,
    ORDER_FIRST,
    ORDER_LAST,
)
from spiderforge.core.errors import SchemaViolation, Location
from spiderforge.core.util import make_rng
from spiderforge.distortion import DistortionEngine
from spiderforge.forge.planning import GroundingRequest, plan_distortions
from spiderforge.forge.records import SampleRecord
from spiderforge.forge.regions import synth_regions, uniform_region, ingest_regions
from spiderforge.forge.source_images import load_base_image
from spiderforge.version import __version__

logger = logging.getLogger(__name__)

MIX_ORDER = (MIX_GLOBAL, MIX_LOCAL, MIX_GROUNDING, MIX_REF_SHORT, MIX_REF_LONG)
ORDER_VARIANTS = (ORDER_SEQUENCE, ORDER_FIRST, ORDER_LAST)
POLARITIES = (POLARITY_MAX, POLARITY_MIN)


def fill_slots(template, slots):
    count = template.count("{}")
    if count == 0:
        return template
    return template.format(*[slots[i % len(slots)] for i in range(count)])


def _normalized(weights):
    total = float(sum(weights))
    return np.asarray(weights, dtype=np.float64) / total


class ForgeBase:
    def __init__(self, settings):
        self.settings = settings
        self.engine = DistortionEngine()
        self.mask_dirs = []

        if settings.source_masks:
            root = Path(settings.source_masks)
            self.mask_dirs = sorted(p for p in root.iterdir() if p.is_dir())
            if not self.mask_dirs:
                self.mask_dirs = [root]

    @staticmethod
    def sample_id(index):
        return f"s{index:06d}"

    def pick(self, rng, pool):
        return pool[int(rng.integers(len(pool)))]

    def layout_regions(self, index, rng):
        """Returns (regions, dims, explicit base image path or None)."""
        if self.mask_dirs:
            directory = self.mask_dirs[index % len(self.mask_dirs)]
            regions, image_path = ingest_regions(directory)
            if not regions:
                raise SchemaViolation("no region masks found", Location(str(directory)))
            return regions, regions[0].mask.dims, image_path

        dims = tuple(self.settings.dims)
        if rng.random() < self.settings.uniform_ratio:
            return uniform_region(dims), dims, None

        lo, hi = self.settings.region_count
        count = int(rng.integers(lo, hi + 1))
        return synth_regions(dims, count, rng), dims, None

    def draw_tasks(self, rng, regions):
        """Draws task kinds from the mix; region targets and grounding requests are fixed here."""
        mix = self.settings.task_mix
        weights = [float(mix.get(key, 0.0)) for key in MIX_ORDER]
        split = self.settings.grounding_split
        split_weights = [float(split.get(sub, 0.0)) for sub in GROUNDING_SUB_TASKS]

        kinds = rng.choice(len(MIX_ORDER), size=self.settings.tasks_per_sample, p=_normalized(weights))
        region_ids = [r.id for r in regions]

        draws = []
        for k in kinds:
            key = MIX_ORDER[int(k)]

            if key == MIX_GLOBAL:
                draws.append((MIX_GLOBAL, None))
            elif key == MIX_LOCAL:
                draws.append((MIX_LOCAL, self.pick(rng, region_ids)))
            elif key == MIX_GROUNDING:
                sub = GROUNDING_SUB_TASKS[int(rng.choice(3, p=_normalized(split_weights)))]
                if sub == SUB_DAO:
                    request = GroundingRequest(SUB_DAO, order_variant=self.pick(rng, ORDER_VARIANTS))
                else:
                    request = GroundingRequest(sub, polarity=self.pick(rng, POLARITIES))
                draws.append((MIX_GROUNDING, request))
            else:
                pattern = SUB_REF_SHORT if key == MIX_REF_SHORT else SUB_REF_LONG
                draws.append((key, (self.pick(rng, region_ids), pattern)))

        return draws

    def forge_sample(self, index):
        """Forges sample index; returns (SampleRecord, distorted ImageBuffer)."""
        rng = make_rng(self.settings.seed, "sample", index)
        sid = self.sample_id(index)

        regions, dims, base_path = self.layout_regions(index, rng)
        draws = self.draw_tasks(rng, regions)

        requests = [payload for key, payload in draws if key == MIX_GROUNDING]
        planned, queries = plan_distortions(
            regions, requests, rng, retry_budget=self.settings.retry_budget
        )

        base = load_base_image(dims, rng, self.settings.source_images, base_path)
        image = self.engine.render_sample(base, planned)

        sample = SampleRecord(
            sample_id=sid,
            image_path=f"images/{sid}.png",
            dims=dims,
            regions=planned,
            provenance={
                "seed": self.settings.seed,
                "sample_index": index,
                "generator": f"spiderforge {__version__}",
            },
        )

        query_iter = iter(queries)
        for n, (key, payload) in enumerate(draws):
            if key == MIX_GLOBAL:
                record = self.build_global_desc(sample, rng)
            elif key == MIX_LOCAL:
                record = self.build_local_desc(sample, payload, rng)
            elif key == MIX_GROUNDING:
                record = self.build_grounding(sample, next(query_iter), rng)
            else:
                region_id, pattern = payload
                record = self.build_referring(sample, region_id, pattern, rng)

            record.task_id = f"t{n:02d}"
            sample.tasks.append(record)

        logger.debug("forged %s with %d regions and %d tasks", sid, len(planned), len(sample.tasks))
        return sample, image
