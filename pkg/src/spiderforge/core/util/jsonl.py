"""Line-delimited JSON helpers – canonical encoding and line-numbered reading."""

import json

from spiderforge.core.errors import Location, SchemaViolation


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_json_lines(path, records):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(dumps_canonical(record))
            f.write("\n")


def read_json_lines(path):
    """Yields (line_number, object) pairs, skipping blank lines."""
    with open(path, "r", encoding="utf-8") as f:
        for ln, line in enumerate(f, start=1):
            if not line.strip():
                continue

            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise SchemaViolation(
                    f"malformed JSON: {e.msg}", Location(str(path), ln)
                ) from e

            if not isinstance(obj, dict):
                raise SchemaViolation(
                    "each line must hold one JSON object", Location(str(path), ln)
                )

            yield ln, obj


def write_json(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(obj, f, sort_keys=True, indent=2, ensure_ascii=False)
        f.write("\n")
