"""Global and local quality description records."""

from spiderforge.core.constants import (
    GLOBAL_DESC_POOL,
    LOCAL_DESC_POOL,
    TASK_GLOBAL_DESC,
    TASK_LOCAL_DESC,
    SCOPE_GLOBAL,
    SCOPE_LOCAL,
)
from spiderforge.core.errors import UnknownRegion
from spiderforge.forge import templates
from spiderforge.forge.records import Answer, TaskRecord
from spiderforge.grounding import term_of_center, referring_phrase


class ForgeDescriptions:
    def build_global_desc(self, sample, rng):
        question = self.pick(rng, GLOBAL_DESC_POOL)

        # Description tasks never trigger grounding, whatever the layout.
        answer = Answer(
            region_scope=SCOPE_GLOBAL,
            body=templates.global_body(sample.regions, sample.dims),
            distortion_set=templates.distortion_set([r.plan for r in sample.regions]),
        )
        return TaskRecord("", TASK_GLOBAL_DESC, question, answer)

    def build_local_desc(self, sample, region_id, rng):
        region = sample.region_by_id(region_id)
        if region is None:
            raise UnknownRegion(f"sample {sample.sample_id} has no region {region_id}")

        terms = term_of_center(region.center, sample.dims)
        question = self.pick(rng, LOCAL_DESC_POOL).format(
            referring_phrase(region.semantic_label, terms)
        )

        answer = Answer(
            region_scope=SCOPE_GLOBAL if region.is_full_frame else SCOPE_LOCAL,
            body=templates.local_body(region, sample.dims),
            spatial=terms.phrase,
            semantic=f"the {region.semantic_label}",
            distortion_set=templates.distortion_set([region.plan]),
        )
        return TaskRecord("", TASK_LOCAL_DESC, question, answer, target_region_id=region.id)
