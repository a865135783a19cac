"""ground – turns positional-term logits into point prompts and predicted masks."""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from tqdm import tqdm

from spiderforge.core.constants import (
    EXIT_CONFIG,
    EXIT_GROUND,
    PREDICTIONS_SCHEMA,
    SCOPE_LOCAL,
    TASK_GROUNDING,
)
from spiderforge.core.errors import ConfigError, DimMismatch, Error, MissingLogits, ProtocolViolation
from spiderforge.core.util import write_json, write_json_lines
from spiderforge.forge import read_manifest
from spiderforge.grounding import (
    PointPrompt,
    ground_or_skip,
    invert_point_to_logits,
    read_logits,
)
from spiderforge.imaging import RegionMask, read_image
from spiderforge.segmentation import PeerPool, Segmenter, SegmenterKind, SegmentTarget
from spiderforge.commands.command_result import CommandResult
from spiderforge.commands.config import ensure_out_dir, validate_config

logger = logging.getLogger(__name__)

PREDICTIONS_NAME = "predictions.jsonl"
ORACLE_MARGIN = 0.25


def oracle_target(center, dims):
    """Keeps a synthesized target off the frame border, where the term probabilities saturate."""
    width, height = dims
    cx, cy = center
    return PointPrompt(
        min(max(cx, ORACLE_MARGIN), width - ORACLE_MARGIN),
        min(max(cy, ORACLE_MARGIN), height - ORACLE_MARGIN),
    )


class GroundingRun:
    def __init__(self, config, manifest_dir, logits, segmenter):
        self.config = config
        self.manifest_dir = manifest_dir
        self.logits = logits
        self.segmenter = segmenter
        self.kind = segmenter.kind

    def _answer_and_logits(self, sample, task):
        if self.config.oracle_logits:
            if task.answer.region_scope != SCOPE_LOCAL:
                return task.answer, None
            target = sample.region_by_id(task.target_region_id)
            point = oracle_target(target.center, sample.dims)
            return task.answer, invert_point_to_logits(
                point, sample.dims, self.config.tau, self.config.as_printed_softmax
            )

        record = self.logits.get((sample.sample_id, task.task_id))
        if record is None:
            if task.answer.region_scope == SCOPE_LOCAL:
                raise MissingLogits(
                    f"no logits for {sample.sample_id}/{task.task_id}, whose answer is local"
                )
            return task.answer, None
        return record, record.logits

    def predict(self, item):
        sample, task = item
        answer, logits = self._answer_and_logits(sample, task)
        decision = ground_or_skip(answer, logits, sample.dims, self.config.as_printed_softmax)

        failure = None
        if decision.is_skip:
            mask, point = decision.mask, None
        else:
            image_path = self.manifest_dir / sample.image_path
            target = SegmentTarget(
                request_id=f"{sample.sample_id}/{task.task_id}",
                dims=sample.dims,
                regions=[r.mask for r in sample.regions],
                image_ref=str(image_path.resolve()),
                loader=lambda ref: read_image(ref, sample.dims),
            )
            point = [decision.point.x, decision.point.y]
            try:
                mask = self.segmenter.segment(decision.point, target)
            except (ProtocolViolation, DimMismatch) as e:
                # the response is reported as it came, never repaired
                logger.warning("%s: %s", target.request_id, e.details)
                mask, failure = RegionMask.empty(*sample.dims), e.as_string()

        width, height = sample.dims
        row = {
            "schema": PREDICTIONS_SCHEMA,
            "sample_id": sample.sample_id,
            "task_id": task.task_id,
            "sub_task": task.sub_task,
            "decision": decision.variant,
            "point": point,
            "segmenter": None if decision.is_skip else self.kind.value,
            "oracle_assisted": self.kind.oracle_assisted or self.config.oracle_logits,
            "rle": mask.rle.to_list(),
            "width": width,
            "height": height,
        }
        if failure is not None:
            row["error"] = failure
        return row


def grounding_items(samples):
    return [(s, t) for s in samples for t in s.tasks if t.task == TASK_GROUNDING]


def cmd_ground(config):
    res = CommandResult()

    try:
        validate_config(config, "ground")
        out = ensure_out_dir(config)
    except ConfigError as e:
        return res.failure(e, EXIT_CONFIG)

    pool = None
    try:
        manifest_path = Path(config.paths.manifest)
        samples = read_manifest(manifest_path)
        logits = {} if config.oracle_logits else read_logits(config.paths.logits)

        kind = SegmenterKind.from_name(config.segmenter)
        if kind is SegmenterKind.EXTERNAL:
            pool = PeerPool(config.peer_command, config.peers, config.peer_timeout)
        run = GroundingRun(
            config, manifest_path.parent, logits, Segmenter(kind, config.color_tol, pool)
        )

        items = grounding_items(samples)

        rows = []
        with tqdm(total=len(items), desc="ground", unit="task", disable=not config.progress) as bar:
            with ThreadPoolExecutor(max_workers=config.workers) as executor:
                for row in executor.map(run.predict, items):
                    rows.append(row)
                    bar.update(1)
    except Error as e:
        return res.failure(e, EXIT_GROUND)
    finally:
        if pool is not None:
            pool.close()

    write_json_lines(out / PREDICTIONS_NAME, rows)
    write_json(out / "run_config.json", config.to_json("ground"))

    skipped = sum(1 for row in rows if row["segmenter"] is None)
    failed = sum(1 for row in rows if "error" in row)
    logger.info("wrote %d predictions (%d skipped) to %s", len(rows), skipped, out / PREDICTIONS_NAME)

    value = {
        "predictions": len(rows),
        "skipped": skipped,
        "failed": failed,
        "path": str(out / PREDICTIONS_NAME),
    }
    if failed:
        logger.warning("%d of %d segmentation responses were rejected", failed, len(rows))
        return res.success(value, EXIT_GROUND)
    return res.success(value)
