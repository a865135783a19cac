"""Distortion planning – legal plans per region, resampled until every query has one answer."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from spiderforge.core.constants import (
    SUB_HYD,
    SUB_SID,
    SUB_DAO,
    ORDER_SEQUENCE,
    ORDER_FIRST,
    ORDER_LAST,
    LEVELS,
)
from spiderforge.core.errors import UniquenessFailure
from spiderforge.core.util import make_rng, draw_seed
from spiderforge.distortion import (
    DistortionType,
    DistortionSpec,
    DistortionPlan,
    legal_orders,
)
from spiderforge.forge.queries import GroundingQuery
from spiderforge.forge.records import Region
from spiderforge.forge.settings import RETRY_BUDGET

logger = logging.getLogger(__name__)

_SINGLES = list(DistortionType)
_PAIRS = legal_orders()


@dataclass(frozen=True)
class GroundingRequest:
    """What a grounding task asks for before the plans exist to fill in its types."""

    sub_task: str
    polarity: Optional[str] = None
    order_variant: Optional[str] = None


def _sample_plan(rng, region):
    if rng.random() < 0.5:
        kinds = (_SINGLES[int(rng.integers(len(_SINGLES)))],)
    else:
        kinds = _PAIRS[int(rng.integers(len(_PAIRS)))]

    specs = tuple(
        DistortionSpec(kind, int(rng.choice(LEVELS)), draw_seed(rng)) for kind in kinds
    )
    return DistortionPlan(specs, region.mask).validate()


def _derive_query(request, regions, rng):
    if request.sub_task == SUB_HYD:
        return GroundingQuery(SUB_HYD, polarity=request.polarity)

    if request.sub_task == SUB_SID:
        present = [k for k in DistortionType if any(k in r.plan.kinds for r in regions)]
        kind = present[int(rng.integers(len(present)))]
        return GroundingQuery(SUB_SID, polarity=request.polarity, kind=kind)

    if request.sub_task == SUB_DAO:
        if request.order_variant == ORDER_SEQUENCE:
            candidates = [r for r in regions if len(r.plan) == 2]
        else:
            candidates = list(regions)
        if not candidates:
            return None

        target = candidates[int(rng.integers(len(candidates)))]
        if request.order_variant == ORDER_SEQUENCE:
            kinds = target.plan.kinds
        elif request.order_variant == ORDER_FIRST:
            kinds = (target.plan.first,)
        else:
            kinds = (target.plan.last,)
        return GroundingQuery(SUB_DAO, order_variant=request.order_variant, order_kinds=kinds)

    raise ValueError(f"unknown grounding sub-task {request.sub_task!r}")


def is_well_posed(query, regions):
    if len(query.matching_regions(regions)) != 1:
        return False
    if query.polarity is not None and len(query.flipped().matching_regions(regions)) != 1:
        return False
    return True


def plan_distortions(regions, requests, seed, retry_budget=RETRY_BUDGET):
    """Assigns legal plans and resolves every request into a well-posed query.

    Returns (planned_regions, queries) with queries aligned to requests.
    Extremum queries are unique at both polarities; order queries match
    exactly one region.
    """
    rng = seed if isinstance(seed, np.random.Generator) else make_rng(seed, "plans")

    for attempt in range(retry_budget):
        planned = [
            Region(r.id, r.mask, r.semantic_label, _sample_plan(rng, r)) for r in regions
        ]

        queries = []
        for request in requests:
            query = _derive_query(request, planned, rng)
            if query is None or not is_well_posed(query, planned):
                break
            queries.append(query)
        else:
            if attempt:
                logger.debug("plans settled after %d resamples", attempt)
            return planned, queries

    raise UniquenessFailure(
        f"no plan gave every grounding query a unique answer after {retry_budget} attempts"
    )
