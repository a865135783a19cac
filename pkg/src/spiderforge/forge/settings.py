"""ForgeSettings – everything that determines a forge run's output bytes."""

from dataclasses import dataclass, field
from typing import Optional

from spiderforge.core.constants import DEFAULT_TASK_MIX, DEFAULT_GROUNDING_SPLIT

RETRY_BUDGET = 64
MIN_REGION_SIDE = 4
PLACEMENT_ATTEMPTS = 200
DEFAULT_UNIFORM_RATIO = 0.1
DEFAULT_TASKS_PER_SAMPLE = 4


@dataclass(frozen=True)
class ForgeSettings:
    seed: int = 7
    dims: tuple = (256, 256)
    region_count: tuple = (2, 4)
    task_mix: dict = field(default_factory=lambda: dict(DEFAULT_TASK_MIX))
    grounding_split: dict = field(default_factory=lambda: dict(DEFAULT_GROUNDING_SPLIT))
    uniform_ratio: float = DEFAULT_UNIFORM_RATIO
    tasks_per_sample: int = DEFAULT_TASKS_PER_SAMPLE
    source_images: Optional[str] = None
    source_masks: Optional[str] = None
    retry_budget: int = RETRY_BUDGET
