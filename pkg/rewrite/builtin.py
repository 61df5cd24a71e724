"""Standard systems: free groups and the Dyck system."""
from typing import Sequence

from .alphabet import Alphabet, inverse_letter
from .system import SemiThueSystem


def free_group_system(generators: Sequence[str]) -> SemiThueSystem:
    """{a a~ -> _, a~ a -> _} for every generator a."""
    alphabet = Alphabet.with_formal_inverses(generators)
    rules = []
    for g in generators:
        rules.append(((g, inverse_letter(g)), ()))
        rules.append(((inverse_letter(g), g), ()))
    return SemiThueSystem(alphabet, rules)


def dyck_system() -> SemiThueSystem:
    """abc -> _, bca -> _, cab -> _ over {a, b, c}; presents F2 with c = (ab)^-1."""
    alphabet = Alphabet(("a", "b", "c"))
    rules = [(("a", "b", "c"), ()), (("b", "c", "a"), ()), (("c", "a", "b"), ())]
    return SemiThueSystem(alphabet, rules)
