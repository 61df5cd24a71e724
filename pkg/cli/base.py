"""Base class for command-line commands."""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from errors import InputError, UsageError, WorkbenchError
from models import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


@dataclass
class CommandOutput:
    """What a command produced: the text report, JSON-ready data and optional DOT."""
    text: str
    data: Dict[str, Any]
    dot: Optional[str] = None


class CommandBase(ABC):
    """
    Base class for all commands.

    Each command:
    - Names its positional inputs
    - Loads them through cli.inputs
    - Calls one module operation
    - Returns text, data and optionally DOT
    """

    arguments: Tuple[str, ...] = ()

    @property
    @abstractmethod
    def name(self) -> str:
        """Command name as typed, e.g. 'gog wp'."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line help text."""
        pass

    @abstractmethod
    def _run(self, config: RunConfig) -> CommandOutput:
        pass

    def _check_arguments(self, config: RunConfig) -> None:
        if len(config.inputs) != len(self.arguments):
            raise UsageError(
                f"{self.name} expects {len(self.arguments)} inputs ({' '.join(self.arguments) or 'none'}), "
                f"got {len(config.inputs)}",
                {"inputs": config.inputs},
            )

    def execute(self, config: RunConfig) -> Dict[str, Any]:
        """
        Execute the command.

        Returns:
            Dictionary with 'success', 'data' (a CommandOutput) and 'error'
            (an error report carrying the exit status) keys
        """
        try:
            logger.info(f"Executing {self.name} on {config.inputs}")
            self._check_arguments(config)
            output = self._run(config)
            logger.info(f"{self.name} executed successfully")
            return {"success": True, "data": output, "error": None}

        except InputError as e:
            logger.error(f"{self.name} rejected its input: {e.message}")
            return {"success": False, "data": None, "error": {**e.to_dict(), "exit_code": EXIT_USAGE}}

        except WorkbenchError as e:
            logger.error(f"{self.name} failed: {e.message}")
            return {"success": False, "data": None, "error": {**e.to_dict(), "exit_code": EXIT_DOMAIN}}

        except Exception as e:
            logger.error(f"{self.name} unexpected error: {e}", exc_info=True)
            return {
                "success": False,
                "data": None,
                "error": {"type": type(e).__name__, "message": f"Unexpected error: {e}", "witnesses": {},
                          "exit_code": EXIT_DOMAIN},
            }
