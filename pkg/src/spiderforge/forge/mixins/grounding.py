"""Visual quality grounding records – HyD-G, SiD-G, and DAO-G."""

from spiderforge.core.constants import (
    ALL_POOLS,
    TASK_GROUNDING,
    SCOPE_GLOBAL,
    SCOPE_LOCAL,
)
from spiderforge.core.errors import UniquenessFailure
from spiderforge.forge import templates
from spiderforge.forge.mixins.base import fill_slots
from spiderforge.forge.records import Answer, TaskRecord
from spiderforge.grounding import term_of_center


class ForgeGrounding:
    def build_grounding(self, sample, query, rng):
        matches = query.matching_regions(sample.regions)
        if len(matches) != 1:
            raise UniquenessFailure(
                f"{query.sub_task} query in sample {sample.sample_id} matches regions {matches}"
            )

        target = sample.region_by_id(matches[0])
        question = fill_slots(self.pick(rng, ALL_POOLS[query.pool_key]), query.slots)

        answer = Answer(
            region_scope=SCOPE_GLOBAL if target.is_full_frame else SCOPE_LOCAL,
            body=templates.grounding_body(target, sample.dims),
            spatial=term_of_center(target.center, sample.dims).phrase,
            semantic=f"the {target.semantic_label}",
            distortion_set=templates.distortion_set([target.plan]),
        )
        return TaskRecord(
            "",
            TASK_GROUNDING,
            question,
            answer,
            sub_task=query.sub_task,
            target_region_id=target.id,
            query=query,
        )
