"""Built-in groups, graphs of groups, languages and graphs."""
from pathlib import Path

from .gogs import BUILTIN_GOGS, builtin_gog, builtin_names, dihedral, free2, psl2z, zxz2
from .languages import (
    AUTOMATA,
    GRAMMARS,
    anbn,
    balanced,
    ends_with_ab,
    even_a,
    free_group_wp,
    matrix_example,
    no_double_b,
)
from .graphs import comb, comb_windows, cycle, cycle_with_spokes, half_turn

DATA_DIR = Path(__file__).parent / "data"


def data_path(name: str) -> Path:
    return DATA_DIR / name


__all__ = [
    "BUILTIN_GOGS",
    "builtin_gog",
    "builtin_names",
    "dihedral",
    "free2",
    "psl2z",
    "zxz2",
    "AUTOMATA",
    "GRAMMARS",
    "anbn",
    "balanced",
    "ends_with_ab",
    "even_a",
    "free_group_wp",
    "matrix_example",
    "no_double_b",
    "comb",
    "comb_windows",
    "cycle",
    "cycle_with_spokes",
    "half_turn",
    "DATA_DIR",
    "data_path",
]
