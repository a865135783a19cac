"""Visual quality referring records – short and long answer patterns."""

from spiderforge.core.constants import (
    REFER_SINGLE_SHORT_POOL,
    REFER_SINGLE_LONG_POOL,
    REFER_MULTI_SHORT_POOL,
    REFER_MULTI_LONG_POOL,
    SUB_REF_SHORT,
    SUB_REF_LONG,
    TASK_REFERRING,
    SCOPE_GLOBAL,
    SCOPE_LOCAL,
)
from spiderforge.core.errors import UnknownRegion
from spiderforge.forge import templates
from spiderforge.forge.mixins.base import fill_slots
from spiderforge.forge.records import Answer, TaskRecord
from spiderforge.grounding import term_of_center, referring_phrase

_POOLS = {
    (1, SUB_REF_SHORT): REFER_SINGLE_SHORT_POOL,
    (1, SUB_REF_LONG): REFER_SINGLE_LONG_POOL,
    (2, SUB_REF_SHORT): REFER_MULTI_SHORT_POOL,
    (2, SUB_REF_LONG): REFER_MULTI_LONG_POOL,
}


class ForgeReferring:
    def build_referring(self, sample, region_id, pattern, rng):
        region = sample.region_by_id(region_id)
        if region is None:
            raise UnknownRegion(f"sample {sample.sample_id} has no region {region_id}")
        if pattern not in (SUB_REF_SHORT, SUB_REF_LONG):
            raise ValueError(f"unknown referring pattern {pattern!r}")

        terms = term_of_center(region.center, sample.dims)
        pool = _POOLS[(min(len(region.plan), 2), pattern)]
        question = fill_slots(
            self.pick(rng, pool), [referring_phrase(region.semantic_label, terms)]
        )

        if pattern == SUB_REF_SHORT:
            body = templates.referring_short_body(region)
        else:
            body = templates.referring_long_body(region)

        answer = Answer(
            region_scope=SCOPE_GLOBAL if region.is_full_frame else SCOPE_LOCAL,
            body=body,
            spatial=terms.phrase,
            semantic=f"the {region.semantic_label}",
            distortion_set=templates.distortion_set([region.plan]),
        )
        return TaskRecord(
            "", TASK_REFERRING, question, answer, sub_task=pattern, target_region_id=region.id
        )
