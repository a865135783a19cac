"""Dataset statistics – per-category task counts for a forged run."""

from collections import Counter

from spiderforge.core.constants import (
    TASK_GLOBAL_DESC,
    TASK_LOCAL_DESC,
    TASK_GROUNDING,
    TASK_REFERRING,
    SUB_REF_SHORT,
    GROUNDING_SUB_TASKS,
)

CATEGORY_ORDER = ("Global", "Local", "Grounding", "RefShort", "RefLong")


def task_category(task):
    if task.task == TASK_GLOBAL_DESC:
        return "Global"
    if task.task == TASK_LOCAL_DESC:
        return "Local"
    if task.task == TASK_GROUNDING:
        return "Grounding"
    if task.task == TASK_REFERRING:
        return "RefShort" if task.sub_task == SUB_REF_SHORT else "RefLong"
    raise ValueError(f"unknown task kind {task.task!r}")


class ForgeTally:
    """Running counts, so a forge run need not keep its samples around."""

    def __init__(self):
        self.samples = 0
        self.uniform = 0
        self.regions = 0
        self.categories = Counter()
        self.grounding = Counter()

    def add(self, sample):
        self.samples += 1
        self.uniform += int(sample.is_uniform)
        self.regions += len(sample.regions)

        for task in sample.tasks:
            self.categories[task_category(task)] += 1
            if task.task == TASK_GROUNDING:
                self.grounding[task.sub_task] += 1

    def as_dict(self):
        return {
            "samples": self.samples,
            "uniform_samples": self.uniform,
            "regions": self.regions,
            "tasks": {name: self.categories.get(name, 0) for name in CATEGORY_ORDER},
            "grounding": {sub: self.grounding.get(sub, 0) for sub in GROUNDING_SUB_TASKS},
        }


def forge_statistics(samples):
    tally = ForgeTally()
    for sample in samples:
        tally.add(sample)
    return tally.as_dict()


def format_statistics(stats):
    rows = [
        ("samples", stats["samples"]),
        ("uniform", stats["uniform_samples"]),
        ("regions", stats["regions"]),
    ]
    rows += list(stats["tasks"].items())
    rows += [(f"  {sub}", n) for sub, n in stats["grounding"].items()]

    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {value:>8}" for name, value in rows) + "\n"
