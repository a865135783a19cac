"""validate-ratings – the dataset verification verdict per dimension."""

import logging

from spiderforge.core.constants import EXIT_CONFIG, EXIT_VALIDATE_FAIL
from spiderforge.core.errors import ConfigError, Error
from spiderforge.core.util import write_json
from spiderforge.metrics import read_ratings, verification_summary
from spiderforge.commands.command_result import CommandResult
from spiderforge.commands.config import ensure_out_dir, validate_config

logger = logging.getLogger(__name__)

VERIFICATION_NAME = "verification.json"


def cmd_validate(config):
    res = CommandResult()

    try:
        validate_config(config, "validate-ratings")
        out = ensure_out_dir(config)
        summary = verification_summary(read_ratings(config.paths.ratings))
    except (ConfigError, Error) as e:
        return res.failure(e, EXIT_CONFIG)

    write_json(out / VERIFICATION_NAME, {"dimensions": summary})

    failed = [d for d, block in summary.items() if not block["pass"]]
    if failed:
        logger.warning("verification failed for %s", ", ".join(failed))
        return res.success(summary, EXIT_VALIDATE_FAIL)
    return res.success(summary)
