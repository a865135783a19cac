"""RunConfig – defaults, a JSON config file, environment overrides, and flags, layered in that order."""

import json
import logging
import os
from dataclasses import dataclass, field, fields, asdict
from pathlib import Path
from typing import Optional

from spiderforge.core.constants import (
    DEFAULT_TASK_MIX,
    DEFAULT_GROUNDING_SPLIT,
    GROUNDING_SUB_TASKS,
    MIX_GLOBAL,
    MIX_LOCAL,
    MIX_GROUNDING,
    MIX_REF_SHORT,
    MIX_REF_LONG,
)
from spiderforge.core.errors import ConfigError, Location
from spiderforge.forge import ForgeSettings
from spiderforge.forge.settings import (
    DEFAULT_UNIFORM_RATIO,
    DEFAULT_TASKS_PER_SAMPLE,
    RETRY_BUDGET,
)
from spiderforge.grounding import DEFAULT_TAU
from spiderforge.segmentation import SegmenterKind, DEFAULT_COLOR_TOL, DEFAULT_PEER_TIMEOUT
from spiderforge.version import __version__

logger = logging.getLogger(__name__)

ENV_OUT_DIR = "SPIDERFORGE_OUT_DIR"
ENV_WORKERS = "SPIDERFORGE_WORKERS"

MIN_SIDE = 16
MIX_KEYS = (MIX_GLOBAL, MIX_LOCAL, MIX_GROUNDING, MIX_REF_SHORT, MIX_REF_LONG)
MASK_FORMATS = ("rle", "png")


@dataclass
class RunPaths:
    out_dir: str = "out"
    source_masks: Optional[str] = None
    source_images: Optional[str] = None
    manifest: Optional[str] = None
    logits: Optional[str] = None
    predictions: Optional[str] = None
    answers: Optional[str] = None
    scores: Optional[str] = None
    ratings: Optional[str] = None


@dataclass
class RunConfig:
    seed: int = 7
    sample_count: int = 100
    dims: tuple = (256, 256)
    region_count: tuple = (2, 4)
    task_mix: dict = field(default_factory=lambda: dict(DEFAULT_TASK_MIX))
    grounding_split: dict = field(default_factory=lambda: dict(DEFAULT_GROUNDING_SPLIT))
    uniform_ratio: float = DEFAULT_UNIFORM_RATIO
    tasks_per_sample: int = DEFAULT_TASKS_PER_SAMPLE
    mask_format: str = "rle"
    tau: float = DEFAULT_TAU
    as_printed_softmax: bool = False
    oracle_logits: bool = False
    segmenter: str = SegmenterKind.ORACLE.value
    color_tol: int = DEFAULT_COLOR_TOL
    peer_command: Optional[str] = None
    peers: int = 1
    peer_timeout: float = DEFAULT_PEER_TIMEOUT
    workers: int = 1
    progress: bool = False
    paths: RunPaths = field(default_factory=RunPaths)

    def apply(self, values, source):
        """Overlays a mapping of field values; unknown keys are a ConfigError."""
        known = {f.name for f in fields(self)}
        path_keys = {f.name for f in fields(RunPaths)}

        for key, value in values.items():
            if key == "paths":
                if not isinstance(value, dict):
                    raise ConfigError("'paths' must be an object", Location(source, field="paths"))
                self.apply(value, source)
            elif key in path_keys:
                setattr(self.paths, key, None if value is None else str(value))
            elif key in known:
                if key in ("dims", "region_count"):
                    value = tuple(value)
                setattr(self, key, value)
            else:
                raise ConfigError(f"unknown setting {key!r}", Location(source, field=key))

        return self

    def to_json(self, command=None):
        echo = asdict(self)
        echo["dims"] = list(self.dims)
        echo["region_count"] = list(self.region_count)
        echo["version"] = __version__
        if command:
            echo["command"] = command
        return echo

    def forge_settings(self):
        return ForgeSettings(
            seed=self.seed,
            dims=tuple(self.dims),
            region_count=tuple(self.region_count),
            task_mix=dict(self.task_mix),
            grounding_split=dict(self.grounding_split),
            uniform_ratio=self.uniform_ratio,
            tasks_per_sample=self.tasks_per_sample,
            source_images=self.paths.source_images,
            source_masks=self.paths.source_masks,
            retry_budget=RETRY_BUDGET,
        )


def read_config_file(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            values = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config file: {e.strerror}", Location(str(path))) from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"malformed JSON: {e.msg}", Location(str(path), e.lineno)) from e

    if not isinstance(values, dict):
        raise ConfigError("config file must hold a JSON object", Location(str(path)))
    return values


def environment_overrides(environ):
    values = {}

    if environ.get(ENV_OUT_DIR):
        values["out_dir"] = environ[ENV_OUT_DIR]

    if environ.get(ENV_WORKERS):
        try:
            values["workers"] = int(environ[ENV_WORKERS])
        except ValueError:
            raise ConfigError(
                f"{ENV_WORKERS} must be an integer, got {environ[ENV_WORKERS]!r}",
                Location(ENV_WORKERS),
            )

    return values


def load_config(flags, config_file=None, environ=None):
    """flags holds only the options given on the command line."""
    config = RunConfig()

    if config_file:
        config.apply(read_config_file(config_file), str(config_file))

    config.apply(environment_overrides(os.environ if environ is None else environ), "<environment>")
    config.apply(flags, "<command line>")

    return config


def _check(condition, message, setting):
    if not condition:
        raise ConfigError(message, Location("<config>", field=setting))


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_weights(weights, keys, setting):
    _check(isinstance(weights, dict), f"{setting} must be an object", setting)
    unknown = sorted(set(weights) - set(keys))
    _check(not unknown, f"{setting} has unknown keys {unknown}", setting)
    _check(
        all(_is_number(v) and v >= 0 for v in weights.values()),
        f"{setting} weights must be non-negative numbers",
        setting,
    )
    _check(sum(weights.values()) > 0, f"{setting} weights must have a positive sum", setting)


def _check_input(path, setting, required=True):
    if path is None:
        _check(not required, f"{setting} is required", setting)
        return
    _check(Path(path).exists(), f"{path} does not exist", setting)


def ensure_out_dir(config):
    out = Path(config.paths.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ConfigError(f"cannot create {out}: {e.strerror}", Location("<config>", field="out_dir")) from e
    return out


def validate_config(config, command):
    """Checks every setting command relies on before any work starts."""
    _check(_is_int(config.workers) and config.workers >= 1, "workers must be at least 1", "workers")

    if command == "forge":
        _check(_is_int(config.seed) and 0 <= config.seed < 2**64, "seed must be a 64-bit unsigned integer", "seed")
        _check(
            _is_int(config.sample_count) and config.sample_count >= 1,
            "sample_count must be at least 1",
            "sample_count",
        )
        _check(
            len(config.dims) == 2 and all(_is_int(d) and d >= MIN_SIDE for d in config.dims),
            f"dims must be two integers of at least {MIN_SIDE}",
            "dims",
        )
        lo_hi = config.region_count
        _check(
            len(lo_hi) == 2 and all(_is_int(v) for v in lo_hi) and 2 <= lo_hi[0] <= lo_hi[1],
            "region_count must be a range with 2 <= lo <= hi",
            "region_count",
        )
        _check_weights(config.task_mix, MIX_KEYS, "task_mix")
        _check_weights(config.grounding_split, GROUNDING_SUB_TASKS, "grounding_split")
        _check(
            _is_number(config.uniform_ratio) and 0 <= config.uniform_ratio <= 1,
            "uniform_ratio must lie in [0, 1]",
            "uniform_ratio",
        )
        _check(
            _is_int(config.tasks_per_sample) and config.tasks_per_sample >= 1,
            "tasks_per_sample must be at least 1",
            "tasks_per_sample",
        )
        _check(config.mask_format in MASK_FORMATS, f"mask_format must be one of {MASK_FORMATS}", "mask_format")
        _check_input(config.paths.source_masks, "source_masks", required=False)
        _check_input(config.paths.source_images, "source_images", required=False)

    elif command == "ground":
        _check(_is_number(config.tau) and config.tau > 0, "tau must be positive", "tau")
        try:
            kind = SegmenterKind.from_name(config.segmenter)
        except ValueError as e:
            raise ConfigError(str(e), Location("<config>", field="segmenter")) from e
        _check_input(config.paths.manifest, "manifest")
        _check_input(config.paths.logits, "logits", required=not config.oracle_logits)
        _check(_is_number(config.color_tol) and config.color_tol >= 0, "color_tol must be non-negative", "color_tol")
        _check(_is_int(config.peers) and config.peers >= 1, "peers must be at least 1", "peers")
        _check(
            _is_number(config.peer_timeout) and config.peer_timeout > 0,
            "peer_timeout must be positive",
            "peer_timeout",
        )
        if kind is SegmenterKind.EXTERNAL:
            _check(bool(config.peer_command), "the external segmenter needs peer_command", "peer_command")

    elif command == "eval":
        _check_input(config.paths.manifest, "manifest")
        _check_input(config.paths.predictions, "predictions")
        _check_input(config.paths.answers, "answers", required=False)
        _check_input(config.paths.scores, "scores", required=False)

    elif command == "validate-ratings":
        _check_input(config.paths.ratings, "ratings")

    else:
        raise ValueError(f"unknown command {command!r}")

    logger.debug("config for %s: %s", command, config)
    return config
