"""forge – writes a manifest, images, and statistics for a seeded run."""

import logging

from spiderforge.core.constants import EXIT_CONFIG, EXIT_FORGE
from spiderforge.core.errors import ConfigError, Error
from spiderforge.core.util import write_json
from spiderforge.forge import ForgeTally, ManifestWriter, forge_samples, validate_sample
from spiderforge.commands.command_result import CommandResult
from spiderforge.commands.config import ensure_out_dir, validate_config

logger = logging.getLogger(__name__)


def cmd_forge(config):
    res = CommandResult()

    try:
        validate_config(config, "forge")
        out = ensure_out_dir(config)
    except ConfigError as e:
        return res.failure(e, EXIT_CONFIG)

    tally = ForgeTally()

    try:
        with ManifestWriter(out, config.mask_format) as writer:
            for sample, image in forge_samples(
                config.forge_settings(), config.sample_count, config.workers, config.progress
            ):
                validate_sample(sample)
                writer.write(sample, image)
                tally.add(sample)
    except Error as e:
        return res.failure(e, EXIT_FORGE)

    stats = tally.as_dict()
    write_json(out / "run_config.json", config.to_json("forge"))
    write_json(out / "statistics.json", stats)

    logger.info("forged %d samples into %s", stats["samples"], out)
    return res.success(stats)
