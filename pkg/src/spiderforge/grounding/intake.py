"""Logit intake – line-delimited records produced by an external LMM runner."""

import logging
from dataclasses import dataclass

from spiderforge.core.constants import SCOPE_GLOBAL, SCOPE_LOCAL
from spiderforge.core.errors import Location, SchemaViolation
from spiderforge.core.util import read_json_lines
from spiderforge.grounding.logits import TermLogits, DEFAULT_TAU

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogitRecord:
    sample_id: str
    task_id: str
    logits: TermLogits
    region_scope: str
    answer_text: str = ""

    @property
    def key(self):
        return (self.sample_id, self.task_id)


def _parse_record(obj, loc):
    for field in ("sample_id", "task_id", "chi", "region_scope"):
        if field not in obj:
            raise SchemaViolation(f"missing field '{field}'", loc.at_field(field))

    chi = obj["chi"]
    if not isinstance(chi, dict):
        raise SchemaViolation("'chi' must be an object", loc.at_field("chi"))

    for term in ("left", "right", "top", "bottom"):
        value = chi.get(term)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaViolation(f"logit '{term}' must be a number", loc.at_field(f"chi.{term}"))

    scope = obj["region_scope"]
    if scope not in (SCOPE_GLOBAL, SCOPE_LOCAL):
        raise SchemaViolation(f"unknown region scope {scope!r}", loc.at_field("region_scope"))

    tau = obj.get("tau", DEFAULT_TAU)

    try:
        logits = TermLogits.from_json(chi, tau if tau is not None else DEFAULT_TAU)
    except Exception as e:
        raise SchemaViolation(str(e), loc.at_field("tau")) from e

    return LogitRecord(
        str(obj["sample_id"]),
        str(obj["task_id"]),
        logits,
        scope,
        str(obj.get("answer_text", "")),
    )


def read_logits(path):
    """Returns {(sample_id, task_id): LogitRecord}; duplicates are a schema violation."""
    records = {}

    for ln, obj in read_json_lines(path):
        loc = Location(str(path), ln)
        record = _parse_record(obj, loc)

        if record.key in records:
            raise SchemaViolation(
                f"duplicate logits for {record.sample_id}/{record.task_id}", loc
            )

        records[record.key] = record

    logger.info("read %d logit records from %s", len(records), path)
    return records


def logit_record_to_json(record):
    obj = {
        "sample_id": record.sample_id,
        "task_id": record.task_id,
        "region_scope": record.region_scope,
        "answer_text": record.answer_text,
    }
    obj.update(record.logits.to_json())
    return obj
