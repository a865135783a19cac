"""Readers for the files eval consumes besides the manifest."""

from spiderforge.core.constants import PREDICTIONS_SCHEMA
from spiderforge.core.errors import Error, Location, SchemaViolation
from spiderforge.core.util import read_json_lines
from spiderforge.imaging import rle_decode


def _keyed(path, parse):
    out = {}
    for ln, obj in read_json_lines(path):
        loc = Location(str(path), ln)
        key, value = parse(obj, loc)
        if key in out:
            raise SchemaViolation(f"duplicate record for {'/'.join(map(str, key))}", loc)
        out[key] = value
    return out


def _ids(obj, loc):
    for field in ("sample_id", "task_id"):
        if not isinstance(obj.get(field), str):
            raise SchemaViolation(f"'{field}' must be a string", loc.at_field(field))
    return obj["sample_id"], obj["task_id"]


def _parse_prediction(obj, loc):
    key = _ids(obj, loc)

    if obj.get("schema") != PREDICTIONS_SCHEMA:
        raise SchemaViolation(f"unsupported schema {obj.get('schema')!r}", loc.at_field("schema"))

    try:
        mask = rle_decode(obj["rle"], obj["width"], obj["height"])
    except KeyError as e:
        raise SchemaViolation("missing field", loc.at_field(e.args[0])) from e
    except Error as e:
        raise SchemaViolation(f"{e.error_name}: {e.details}", loc.at_field("rle")) from e
    except (TypeError, ValueError) as e:
        raise SchemaViolation(f"malformed mask ({e})", loc.at_field("rle")) from e

    return key, mask


def read_predictions(path):
    """{(sample_id, task_id): predicted RegionMask}"""
    return _keyed(path, _parse_prediction)


def _parse_answer(obj, loc):
    key = _ids(obj, loc)
    text = obj.get("answer_text")
    if not isinstance(text, str):
        raise SchemaViolation("'answer_text' must be a string", loc.at_field("answer_text"))
    return key, text


def read_answers(path):
    """{(sample_id, task_id): free-text answer}"""
    return _keyed(path, _parse_answer)


def _parse_score(obj, loc):
    if not isinstance(obj.get("id"), str):
        raise SchemaViolation("'id' must be a string", loc.at_field("id"))

    pair = []
    for field in ("predicted", "reference"):
        value = obj.get(field)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaViolation(f"'{field}' must be a number", loc.at_field(field))
        pair.append(float(value))

    return (obj["id"],), tuple(pair)


def read_scores(path):
    """Returns (predicted, reference) lists in file order."""
    scores = _keyed(path, _parse_score)
    return [p for p, _ in scores.values()], [r for _, r in scores.values()]
