"""Exception hierarchy shared by all workbench packages."""
from typing import Any, Dict, Optional


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench."""

    def __init__(self, message: str, witnesses: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witnesses = witnesses or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "witnesses": {k: _plain(v) for k, v in self.witnesses.items()},
        }


class InputError(WorkbenchError):
    """Malformed input: unknown letters, bad parameters."""


class UsageError(InputError):
    """A request outside what an operation supports."""


class ParseError(InputError):
    """A text file could not be parsed; points at line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<input>"):
        super().__init__(
            f"{source}:{line}:{column}: {message}",
            {"line": line, "column": column, "source": source},
        )
        self.line = line
        self.column = column


class AxiomViolation(WorkbenchError):
    """A group, pregroup or tree-decomposition axiom failed."""

    def __init__(self, axiom: str, message: str, witnesses: Optional[Dict[str, Any]] = None):
        super().__init__(f"{axiom}: {message}", witnesses)
        self.axiom = axiom


class ConstructionError(WorkbenchError):
    """An internal consistency check failed; indicates a construction bug."""


class VFTableError(ConstructionError):
    """The tables of a virtually-free structure are inconsistent."""


def _plain(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted((_plain(v) for v in value), key=str)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)
