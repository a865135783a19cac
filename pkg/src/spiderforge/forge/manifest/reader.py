"""Manifest reader – parses manifest lines back into sample records with field-level errors."""

from pathlib import Path

from spiderforge.core.constants import MANIFEST_SCHEMA
from spiderforge.core.errors import Error, Location, SchemaViolation
from spiderforge.core.util import read_json_lines
from spiderforge.distortion import DistortionPlan
from spiderforge.forge.queries import GroundingQuery
from spiderforge.forge.records import Answer, Region, SampleRecord, TaskRecord
from spiderforge.forge.manifest.validation import validate_sample
from spiderforge.imaging import rle_decode, read_mask_png


def _require(obj, key, types, loc, prefix=""):
    field = f"{prefix}{key}"
    if key not in obj:
        raise SchemaViolation("missing field", loc.at_field(field))

    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, types):
        raise SchemaViolation(
            f"expected {_type_names(types)}, got {type(value).__name__}", loc.at_field(field)
        )
    return value


def _type_names(types):
    if isinstance(types, tuple):
        return " or ".join(t.__name__ for t in types)
    return types.__name__


def _parse_field(loc, field, fn, *args):
    """Runs fn, turning any domain error or malformed value into a SchemaViolation at field."""
    try:
        return fn(*args)
    except SchemaViolation:
        raise
    except Error as e:
        raise SchemaViolation(f"{e.error_name}: {e.details}", loc.at_field(field)) from e
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaViolation(f"malformed value ({e})", loc.at_field(field)) from e


def _read_mask(ref, dims, base_dir, loc, field):
    if not isinstance(ref, dict) or len(ref) != 1:
        raise SchemaViolation('mask must be {"rle": [...]} or {"png": path}', loc.at_field(field))

    if "rle" in ref:
        return _parse_field(loc, f"{field}.rle", rle_decode, ref["rle"], *dims)

    if "png" in ref:
        mask = _parse_field(loc, f"{field}.png", read_mask_png, base_dir / ref["png"])
        if mask.dims != tuple(dims):
            raise SchemaViolation(
                f"mask is {mask.width}x{mask.height}, image is {dims[0]}x{dims[1]}",
                loc.at_field(f"{field}.png"),
            )
        return mask

    raise SchemaViolation(f"unknown mask encoding {next(iter(ref))!r}", loc.at_field(field))


def parse_region(obj, dims, base_dir, loc, prefix):
    if not isinstance(obj, dict):
        raise SchemaViolation("region must be an object", loc.at_field(prefix.rstrip(".")))

    rid = _require(obj, "id", int, loc, prefix)
    label = _require(obj, "label", str, loc, prefix)
    mask = _read_mask(_require(obj, "mask", dict, loc, prefix), dims, base_dir, loc, f"{prefix}mask")
    plan = _parse_field(
        loc, f"{prefix}plan", DistortionPlan.from_json, _require(obj, "plan", list, loc, prefix)
    )

    return _parse_field(loc, f"{prefix}label", Region, rid, mask, label, plan)


def parse_task(obj, loc, prefix):
    if not isinstance(obj, dict):
        raise SchemaViolation("task must be an object", loc.at_field(prefix.rstrip(".")))

    answer = _parse_field(
        loc, f"{prefix}answer", Answer.from_json, _require(obj, "answer", dict, loc, prefix)
    )

    target = obj.get("target_region_id")
    if target is not None and (isinstance(target, bool) or not isinstance(target, int)):
        raise SchemaViolation("expected int or null", loc.at_field(f"{prefix}target_region_id"))

    query = obj.get("query")
    if query is not None:
        query = _parse_field(loc, f"{prefix}query", GroundingQuery.from_json, query)

    return TaskRecord(
        task_id=_require(obj, "task_id", str, loc, prefix),
        task=_require(obj, "task", str, loc, prefix),
        question=_require(obj, "question", str, loc, prefix),
        answer=answer,
        sub_task=obj.get("sub_task"),
        target_region_id=target,
        query=query,
    )


def parse_sample(obj, loc, base_dir):
    schema = _require(obj, "schema", str, loc)
    if schema != MANIFEST_SCHEMA:
        raise SchemaViolation(f"unsupported schema {schema!r}", loc.at_field("schema"))

    dims = (_require(obj, "width", int, loc), _require(obj, "height", int, loc))
    if dims[0] <= 0 or dims[1] <= 0:
        raise SchemaViolation("image dimensions must be positive", loc.at_field("width"))

    regions = [
        parse_region(r, dims, base_dir, loc, f"regions[{i}].")
        for i, r in enumerate(_require(obj, "regions", list, loc))
    ]
    tasks = [
        parse_task(t, loc, f"tasks[{i}].")
        for i, t in enumerate(_require(obj, "tasks", list, loc))
    ]

    return SampleRecord(
        sample_id=_require(obj, "sample_id", str, loc),
        image_path=_require(obj, "image", str, loc),
        dims=dims,
        regions=regions,
        tasks=tasks,
        provenance=obj.get("provenance") or {},
    )


def read_manifest(path):
    """Reads and validates every sample of a manifest, in file order.

    Mask paths resolve against the manifest's directory.
    """
    path = Path(path)
    samples = []
    seen = set()

    for ln, obj in read_json_lines(path):
        loc = Location(str(path), ln)
        sample = validate_sample(parse_sample(obj, loc, path.parent), loc)

        if sample.sample_id in seen:
            raise SchemaViolation(
                f"duplicate sample id {sample.sample_id}", loc.at_field("sample_id")
            )
        seen.add(sample.sample_id)
        samples.append(sample)

    return samples
