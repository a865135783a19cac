"""Answer templates – deterministic prose standing in for generated quality descriptions."""

from spiderforge.core.constants import SEVERITY_WORDS, DISTORTION_NAMES
from spiderforge.distortion import cumulative_intensity
from spiderforge.grounding import term_of_center


def spec_phrase(spec):
    return f"{spec.kind.value} at level {spec.level} ({SEVERITY_WORDS[spec.level]})"


def plan_phrase(plan):
    return " followed by ".join(spec_phrase(s) for s in plan.specs)


def effects_phrase(plan):
    seen = []
    for kind in plan.kinds:
        if kind not in seen:
            seen.append(kind)
    return "; ".join(f"{kind.value} brings {kind.effect}" for kind in seen)


def distortion_set(plans):
    present = {kind.value for plan in plans for kind in plan.kinds}
    return tuple(name for name in DISTORTION_NAMES if name in present)


def position_phrase(region, dims):
    return term_of_center(region.center, dims).phrase


def region_sentence(region, dims):
    return (
        f"The {region.semantic_label} at the {position_phrase(region, dims)} "
        f"is affected by {plan_phrase(region.plan)}, which causes "
        f"{effects_phrase(region.plan)}."
    )


def global_body(regions, dims):
    if len(regions) == 1 and regions[0].is_full_frame:
        plan = regions[0].plan
        return (
            f"The entire image is uniformly affected by {plan_phrase(plan)}. "
            f"Across the whole frame, {effects_phrase(plan)}. "
            f"The cumulative distortion intensity is {cumulative_intensity(plan)}."
        )

    ordered = sorted(regions, key=lambda r: r.id)
    parts = [
        f"The image shows region-level distortions in {len(ordered)} areas while the "
        f"remaining content stays clean."
    ]
    parts.extend(region_sentence(r, dims) for r in ordered)

    worst = max(ordered, key=lambda r: (cumulative_intensity(r.plan), -r.id))
    parts.append(
        f"The {worst.semantic_label} at the {position_phrase(worst, dims)} is the most "
        f"degraded area, so it dominates the perceived quality."
    )
    return " ".join(parts)


def local_body(region, dims):
    return (
        f"{region_sentence(region, dims)} "
        f"Its cumulative distortion intensity is {cumulative_intensity(region.plan)}."
    )


def grounding_body(region, dims):
    if region.is_full_frame:
        return "The distortion covers the entire image, so the whole frame is the answer."
    return (
        f"The target region is the {region.semantic_label} at the "
        f"{position_phrase(region, dims)}."
    )


def referring_short_body(region):
    return ", ".join(distortion_set([region.plan]))


def referring_long_body(region):
    names = distortion_set([region.plan])
    by_name = {kind.value: kind for kind in region.plan.kinds}
    return " ".join(f"{name}: {by_name[name].effect}." for name in names)
