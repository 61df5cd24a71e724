"""Dispatch a RunConfig to its command and render the report."""
import json
import logging
import sys
from typing import Any, Dict, Optional, TextIO

from models import ReportEnvelope, RunConfig
from .base import EXIT_OK, EXIT_USAGE, CommandOutput
from .commands import get_command_by_name

logger = logging.getLogger(__name__)


def _render(config: RunConfig, output: CommandOutput) -> Optional[str]:
    if config.format == "json":
        return ReportEnvelope(command=config.command, result=output.data).to_json()
    if config.format == "dot":
        return output.dot
    return output.text


def _render_error(config: RunConfig, error: Dict[str, Any]) -> str:
    if config.format == "json":
        report = {k: v for k, v in error.items() if k != "exit_code"}
        return ReportEnvelope(command=config.command, error=report).to_json()
    lines = [f"error: {error['message']}"]
    if error.get("witnesses"):
        lines.append("witnesses: " + json.dumps(error["witnesses"], sort_keys=True, ensure_ascii=False))
    return "\n".join(lines)


def run(config: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    """
    Run one command and write its report.

    Reports go to `out`; text-mode errors go to `err`.

    Returns:
        0 on success, 1 on domain errors, 2 on usage errors
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        command = get_command_by_name(config.command)
    except ValueError as e:
        logger.error(str(e))
        err.write(f"error: {e}\n")
        return EXIT_USAGE

    result = command.execute(config)
    if not result["success"]:
        stream = out if config.format == "json" else err
        stream.write(_render_error(config, result["error"]) + "\n")
        return result["error"]["exit_code"]

    report = _render(config, result["data"])
    if report is None:
        err.write(f"error: {config.command} has no DOT output\n")
        return EXIT_USAGE
    out.write(report if report.endswith("\n") else report + "\n")
    return EXIT_OK
