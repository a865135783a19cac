"""DistortionSpec and DistortionPlan – what is applied to a region, how hard, and in which order."""

from dataclasses import dataclass, field

from spiderforge.core.constants import LEVELS
from spiderforge.core.errors import InvalidLevel, IllegalOrder
from spiderforge.distortion.distortion_type import DistortionType


@dataclass(frozen=True)
class DistortionSpec:
    kind: DistortionType
    level: int
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.kind, DistortionType):
            object.__setattr__(self, "kind", DistortionType.from_name(self.kind))
        if isinstance(self.level, bool) or self.level not in LEVELS:
            raise InvalidLevel(f"level must be one of 1..5, got {self.level!r}")

    def to_json(self):
        return {"type": self.kind.value, "level": self.level, "seed": self.seed}

    @classmethod
    def from_json(cls, obj):
        return cls(DistortionType.from_name(obj["type"]), obj["level"], obj["seed"])


@dataclass(frozen=True)
class DistortionPlan:
    specs: tuple = ()
    region: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "specs", tuple(self.specs))

    @property
    def kinds(self):
        return tuple(s.kind for s in self.specs)

    @property
    def first(self):
        return self.specs[0].kind if self.specs else None

    @property
    def last(self):
        return self.specs[-1].kind if self.specs else None

    def validate(self):
        from spiderforge.distortion.order import validate_order

        if len(self.specs) > 2:
            raise IllegalOrder(f"plans hold at most two distortions, got {len(self.specs)}")

        if len(self.specs) == 2 and not validate_order(*self.kinds):
            raise IllegalOrder(
                f"{self.kinds[0].value} followed by {self.kinds[1].value} is not a distinguishable order"
            )

        return self

    def to_json(self):
        return [s.to_json() for s in self.specs]

    @classmethod
    def from_json(cls, items, region=None):
        return cls(tuple(DistortionSpec.from_json(item) for item in items), region)

    def __len__(self):
        return len(self.specs)
