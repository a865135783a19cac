"""Dataset records – regions, structured answers, task records, and samples."""

from dataclasses import dataclass, field
from typing import Optional

from spiderforge.distortion import DistortionPlan


@dataclass
class Region:
    id: int
    mask: object
    semantic_label: str
    plan: DistortionPlan = field(default_factory=DistortionPlan)

    def __post_init__(self):
        if not self.semantic_label or not self.semantic_label.strip():
            raise ValueError(f"region {self.id} needs a non-empty semantic label")

    @property
    def center(self):
        return self.mask.center

    @property
    def is_full_frame(self):
        return self.mask.is_full


@dataclass(frozen=True)
class Answer:
    region_scope: str
    body: str
    spatial: Optional[str] = None
    semantic: Optional[str] = None
    distortion_set: tuple = ()

    def to_json(self):
        return {
            "spatial": self.spatial,
            "semantic": self.semantic,
            "region_scope": self.region_scope,
            "body": self.body,
            "distortion_set": list(self.distortion_set),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            region_scope=obj["region_scope"],
            body=obj["body"],
            spatial=obj.get("spatial"),
            semantic=obj.get("semantic"),
            distortion_set=tuple(obj.get("distortion_set") or ()),
        )


@dataclass
class TaskRecord:
    task_id: str
    task: str
    question: str
    answer: Answer
    sub_task: Optional[str] = None
    target_region_id: Optional[int] = None
    query: Optional[object] = None


@dataclass
class SampleRecord:
    sample_id: str
    image_path: str
    dims: tuple
    regions: list = field(default_factory=list)
    tasks: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    def region_by_id(self, region_id):
        for region in self.regions:
            if region.id == region_id:
                return region
        return None

    @property
    def is_uniform(self):
        return len(self.regions) == 1 and self.regions[0].is_full_frame
