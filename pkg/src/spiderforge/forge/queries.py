"""GroundingQuery – the predicate a grounding question asks, and a brute-force scan for it."""

from dataclasses import dataclass
from typing import Optional

from spiderforge.core.constants import (
    SUB_HYD,
    SUB_SID,
    SUB_DAO,
    POLARITY_MAX,
    POLARITY_MIN,
    ORDER_SEQUENCE,
    ORDER_FIRST,
    ORDER_LAST,
)
from spiderforge.distortion import DistortionType, cumulative_intensity, type_intensity


@dataclass(frozen=True)
class GroundingQuery:
    sub_task: str
    polarity: Optional[str] = None
    kind: Optional[DistortionType] = None
    order_variant: Optional[str] = None
    order_kinds: tuple = ()

    def _extreme(self, scores):
        if not scores:
            return []
        pick = max if self.polarity == POLARITY_MAX else min
        best = pick(scores.values())
        return sorted(rid for rid, value in scores.items() if value == best)

    def matching_regions(self, regions):
        """Ids of every region satisfying the predicate; exactly one for a well-posed query."""
        if self.sub_task == SUB_HYD:
            return self._extreme({r.id: cumulative_intensity(r.plan) for r in regions})

        if self.sub_task == SUB_SID:
            scores = {r.id: type_intensity(r.plan, self.kind) for r in regions}
            return self._extreme({rid: v for rid, v in scores.items() if v > 0})

        if self.sub_task == SUB_DAO:
            if self.order_variant == ORDER_SEQUENCE:
                return sorted(r.id for r in regions if r.plan.kinds == self.order_kinds)
            if self.order_variant == ORDER_FIRST:
                return sorted(r.id for r in regions if r.plan.first is self.order_kinds[0])
            if self.order_variant == ORDER_LAST:
                return sorted(r.id for r in regions if r.plan.last is self.order_kinds[0])

        raise ValueError(f"malformed grounding query {self!r}")

    def flipped(self):
        """The same query with the opposite polarity."""
        other = POLARITY_MIN if self.polarity == POLARITY_MAX else POLARITY_MAX
        return GroundingQuery(self.sub_task, other, self.kind, self.order_variant, self.order_kinds)

    @property
    def pool_key(self):
        if self.sub_task == SUB_HYD:
            return f"hybrid_{self.polarity}"
        if self.sub_task == SUB_SID:
            return f"single_{self.polarity}"
        return f"order_{self.order_variant}"

    @property
    def slots(self):
        if self.sub_task == SUB_SID:
            return [self.kind.phrase]
        if self.sub_task == SUB_DAO:
            return [k.phrase for k in self.order_kinds]
        return []

    def to_json(self):
        return {
            "sub_task": self.sub_task,
            "polarity": self.polarity,
            "type": self.kind.value if self.kind else None,
            "order_variant": self.order_variant,
            "order": [k.value for k in self.order_kinds],
        }

    @classmethod
    def from_json(cls, obj):
        kind = obj.get("type")
        return cls(
            sub_task=obj["sub_task"],
            polarity=obj.get("polarity"),
            kind=DistortionType.from_name(kind) if kind else None,
            order_variant=obj.get("order_variant"),
            order_kinds=tuple(DistortionType.from_name(k) for k in obj.get("order") or ()),
        )
