"""Commands package – forge, ground, eval, and validate-ratings over a layered RunConfig."""

from .command_result import CommandResult
from .config import RunConfig, RunPaths, load_config, validate_config
from .forge_command import cmd_forge
from .ground_command import cmd_ground, oracle_target
from .eval_command import cmd_eval
from .validate_command import cmd_validate

__all__ = [
    "CommandResult",
    "RunConfig",
    "RunPaths",
    "load_config",
    "validate_config",
    "cmd_forge",
    "cmd_ground",
    "oracle_target",
    "cmd_eval",
    "cmd_validate",
]
