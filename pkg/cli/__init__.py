"""Command-line commands, their registry and the runner."""
from .base import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, CommandBase, CommandOutput
from .commands import PREGROUP_OK, get_all_commands, get_command_by_name
from .runner import run

__all__ = [
    "EXIT_DOMAIN",
    "EXIT_OK",
    "EXIT_USAGE",
    "CommandBase",
    "CommandOutput",
    "PREGROUP_OK",
    "get_all_commands",
    "get_command_by_name",
    "run",
]
