"""
Pregroup text format:

    carrier: 1 a y y~ y.a y~.a
    inverse: 1 a y~ y y~.a y.a
    table:
    1 a y y~ y.a y~.a
    a 1 - - - -
    ...

Row i of the table lists the products x_i x_j by name, `-` where undefined.
"""
import logging
from typing import Dict, List, Optional

import numpy as np

from errors import AxiomViolation, InputError, ParseError
from .pregroup import UNDEFINED, Pregroup, check_pregroup

logger = logging.getLogger(__name__)

UNDEFINED_TOKEN = "-"


def parse_pregroup(text: str, source: str = "<input>") -> Pregroup:
    """
    Parse and validate a pregroup.

    Raises:
        ParseError: on malformed text or unknown names.
        AxiomViolation: if the table breaks an axiom.
    """
    carrier: Optional[List[str]] = None
    inverse_names: Optional[List[str]] = None
    inverse_line = 1
    rows: List[List[str]] = []
    row_lines: List[int] = []
    in_table = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_table:
            rows.append(line.split())
            row_lines.append(lineno)
        elif line.startswith("carrier:"):
            carrier = line[len("carrier:"):].split()
        elif line.startswith("inverse:"):
            inverse_names = line[len("inverse:"):].split()
            inverse_line = lineno
        elif line == "table:":
            in_table = True
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno, 1, source)
    if carrier is None or inverse_names is None or not in_table:
        raise ParseError("expected 'carrier:', 'inverse:' and 'table:' sections", 1, 1, source)

    index: Dict[str, int] = {name: i for i, name in enumerate(carrier)}
    n = len(carrier)

    def lookup(name: str, lineno: int) -> int:
        if name not in index:
            raise ParseError(f"{name!r} is not in the carrier", lineno, 1, source)
        return index[name]

    inverse = [lookup(x, inverse_line) for x in inverse_names]
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows, found {len(rows)}", row_lines[-1] if row_lines else 1, 1, source)
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    for i, (row, lineno) in enumerate(zip(rows, row_lines)):
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno, 1, source)
        for j, token in enumerate(row):
            if token != UNDEFINED_TOKEN:
                table[i, j] = lookup(token, lineno)
    try:
        return check_pregroup(carrier, inverse, table)
    except AxiomViolation:
        raise
    except InputError as e:
        raise ParseError(e.message, 1, 1, source) from e


def format_pregroup(p: Pregroup) -> str:
    names = p.carrier
    lines = ["carrier: " + " ".join(names), "inverse: " + " ".join(names[p.inv(x)] for x in range(p.size)), "table:"]
    for x in range(p.size):
        row = [UNDEFINED_TOKEN if (xy := p.mul(x, y)) is None else names[xy] for y in range(p.size)]
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"
