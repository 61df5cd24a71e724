"""
Group table files.

    order 3
    names: 1 b b2
    0 1 2
    1 2 0
    2 0 1

The `names:` line is optional and may appear before the rows.
"""
import logging
from typing import List, Optional

from errors import ParseError, WorkbenchError
from .group import FiniteGroup, check_group

logger = logging.getLogger(__name__)


def parse_group(text: str, source: str = "<input>") -> FiniteGroup:
    order: Optional[int] = None
    names: Optional[List[str]] = None
    rows: List[List[int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        if line.startswith("order"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError("expected 'order n' with n >= 1", lineno, 1, source)
            order = int(parts[1])
            continue
        if line.startswith("names:"):
            names = line[len("names:"):].split()
            continue
        if order is None:
            raise ParseError("expected 'order n' before the table", lineno, 1, source)
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError("table rows hold element indices", lineno, 1, source) from None
        if len(row) != order:
            raise ParseError(f"expected {order} entries, found {len(row)}", lineno, 1, source)
        rows.append(row)
    if order is None:
        raise ParseError("missing 'order' line", 1, 1, source)
    if len(rows) != order:
        raise ParseError(f"expected {order} table rows, found {len(rows)}", last_line or 1, 1, source)
    if names is not None and len(names) != order:
        raise ParseError(f"expected {order} names, found {len(names)}", 1, 1, source)
    try:
        return check_group(rows, names)
    except WorkbenchError as e:
        logger.error(f"{source}: {e.message}")
        raise


def format_group(group: FiniteGroup) -> str:
    lines = [f"order {group.order}", "names: " + " ".join(group.names)]
    for g in group.elements():
        lines.append(" ".join(str(int(x)) for x in group.table[g]))
    return "\n".join(lines) + "\n"
