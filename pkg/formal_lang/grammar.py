"""Context-free grammars: reduction, Chomsky normal form, CYK and shortest yields."""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from errors import InputError
from rewrite import Word

logger = logging.getLogger(__name__)

Production = Tuple[str, Word]


@dataclass(frozen=True)
class Cfg:
    """
    (V, Sigma, P, S) with productions A -> alpha, alpha over V and Sigma.

    Productions keep their declaration order and carry no duplicates.
    """
    variables: Tuple[str, ...]
    terminals: Tuple[str, ...]
    productions: Tuple[Production, ...]
    axiom: str

    def __post_init__(self):
        vs, ts = set(self.variables), set(self.terminals)
        if vs & ts:
            raise InputError("variables and terminals overlap", {"symbols": sorted(vs & ts)})
        if self.axiom not in vs:
            raise InputError(f"axiom {self.axiom!r} is not a variable", {"axiom": self.axiom})
        for lhs, rhs in self.productions:
            if lhs not in vs:
                raise InputError(f"left-hand side {lhs!r} is not a variable", {"production": lhs})
            for symbol in rhs:
                if symbol not in vs and symbol not in ts:
                    raise InputError(f"undeclared symbol {symbol!r} in a production of {lhs}", {"symbol": symbol})

    @classmethod
    def build(
        cls,
        productions: Iterable[Tuple[str, Sequence[str]]],
        axiom: str,
        terminals: Optional[Iterable[str]] = None,
    ) -> "Cfg":
        """Variables are the left-hand sides (axiom first); the remaining symbols are terminals."""
        prods = list(dict.fromkeys((lhs, tuple(rhs)) for lhs, rhs in productions))
        variables = list(dict.fromkeys([axiom] + [lhs for lhs, _ in prods]))
        declared = set(variables)
        inferred = [s for _, rhs in prods for s in rhs if s not in declared]
        terms = list(dict.fromkeys(list(terminals or []) + inferred))
        return cls(tuple(variables), tuple(terms), tuple(prods), axiom)

    @cached_property
    def variable_set(self) -> FrozenSet[str]:
        return frozenset(self.variables)

    def is_variable(self, symbol: str) -> bool:
        return symbol in self.variable_set

    def productions_of(self, variable: str) -> List[Word]:
        return [rhs for lhs, rhs in self.productions if lhs == variable]


def _productive(g: Cfg) -> Set[str]:
    productive: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if lhs not in productive and all(s in productive or not g.is_variable(s) for s in rhs):
                productive.add(lhs)
                changed = True
    return productive


def _reachable(g: Cfg, productions: Sequence[Production]) -> Set[str]:
    by_lhs: Dict[str, List[Word]] = {}
    for lhs, rhs in productions:
        by_lhs.setdefault(lhs, []).append(rhs)
    seen = {g.axiom}
    stack = [g.axiom]
    while stack:
        v = stack.pop()
        for rhs in by_lhs.get(v, ()):
            for s in rhs:
                if g.is_variable(s) and s not in seen:
                    seen.add(s)
                    stack.append(s)
    return seen


def reduce_grammar(g: Cfg) -> Cfg:
    """Drop unproductive, then unreachable variables (the axiom always stays)."""
    productive = _productive(g)
    kept = [
        (lhs, rhs) for lhs, rhs in g.productions
        if lhs in productive and all(s in productive or not g.is_variable(s) for s in rhs)
    ]
    reachable = _reachable(g, kept)
    kept = [(lhs, rhs) for lhs, rhs in kept if lhs in reachable]
    variables = tuple(v for v in g.variables if v in reachable)
    dropped = len(g.variables) - len(variables)
    if dropped:
        logger.debug(f"reduce_grammar dropped {dropped} variables")
    return Cfg(variables, g.terminals, tuple(kept), g.axiom)


def _fresh(base: str, used: Set[str]) -> str:
    name = base
    k = 1
    while name in used:
        k += 1
        name = f"{base}{k}"
    used.add(name)
    return name


def nullable_variables(g: Cfg) -> Set[str]:
    nullable: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if lhs not in nullable and all(s in nullable for s in rhs):
                nullable.add(lhs)
                changed = True
    return nullable


def _drop_nullable(rhs: Word, nullable: Set[str]) -> List[Word]:
    variants: List[Word] = [()]
    for s in rhs:
        extended = [v + (s,) for v in variants]
        if s in nullable:
            extended += variants
        variants = extended
    return list(dict.fromkeys(variants))


def eliminate_epsilon(g: Cfg) -> Cfg:
    """
    Equivalent grammar whose only empty production is S' -> _ for a fresh
    axiom S' that never occurs on a right-hand side.
    """
    g = reduce_grammar(g)
    used = set(g.variables) | set(g.terminals)
    start = _fresh(g.axiom + "'", used)
    nullable = nullable_variables(g)
    prods: List[Production] = [(start, (g.axiom,))]
    if g.axiom in nullable:
        prods.append((start, ()))
    for lhs, rhs in g.productions:
        for variant in _drop_nullable(rhs, nullable):
            if variant:
                prods.append((lhs, variant))
    return Cfg.build(prods, start, g.terminals)


def _eliminate_units(g: Cfg) -> List[Production]:
    unit_edges: Dict[str, List[str]] = {}
    by_lhs: Dict[str, List[Word]] = {}
    for lhs, rhs in g.productions:
        if len(rhs) == 1 and g.is_variable(rhs[0]):
            unit_edges.setdefault(lhs, []).append(rhs[0])
        else:
            by_lhs.setdefault(lhs, []).append(rhs)
    out: List[Production] = []
    for v in g.variables:
        closure = [v]
        seen = {v}
        for u in closure:
            for w in unit_edges.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    closure.append(w)
        for u in closure:
            out.extend((v, rhs) for rhs in by_lhs.get(u, ()))
    return list(dict.fromkeys(out))


def to_cnf(g: Cfg) -> Cfg:
    """
    Chomsky normal form: A -> B C, A -> a, and S -> _ only for an axiom
    absent from right-hand sides.

    Pipeline: fresh start (when needed), terminal lifting, binarization,
    empty-production elimination, unit elimination, reduction.
    """
    g = reduce_grammar(g)
    used = set(g.variables) | set(g.terminals)
    axiom = g.axiom
    prods: List[Production] = list(g.productions)
    if any(axiom in rhs for _, rhs in prods):
        start = _fresh(axiom + "0", used)
        prods.insert(0, (start, (axiom,)))
        axiom = start

    lifted: Dict[str, str] = {}
    terminals = set(g.terminals)
    step: List[Production] = []
    for lhs, rhs in prods:
        if len(rhs) >= 2:
            new_rhs = []
            for s in rhs:
                if s in terminals:
                    if s not in lifted:
                        lifted[s] = _fresh(f"T[{s}]", used)
                    s = lifted[s]
                new_rhs.append(s)
            rhs = tuple(new_rhs)
        step.append((lhs, rhs))
    step.extend((v, (a,)) for a, v in lifted.items())

    binary: List[Production] = []
    for lhs, rhs in step:
        head = lhs
        while len(rhs) > 2:
            rest = _fresh(f"{lhs}_", used)
            binary.append((head, (rhs[0], rest)))
            head, rhs = rest, rhs[1:]
        binary.append((head, rhs))

    staged = Cfg.build(binary, axiom, g.terminals)
    nullable = nullable_variables(staged)
    no_eps: List[Production] = []
    for lhs, rhs in staged.productions:
        for variant in _drop_nullable(rhs, nullable):
            if variant:
                no_eps.append((lhs, variant))
    if axiom in nullable:
        no_eps.append((axiom, ()))
    staged = Cfg(staged.variables, staged.terminals, tuple(dict.fromkeys(no_eps)), axiom)

    cnf = Cfg(staged.variables, staged.terminals, tuple(_eliminate_units(staged)), axiom)
    cnf = reduce_grammar(cnf)
    if not is_cnf(cnf):
        raise InputError("grammar could not be brought into Chomsky normal form")
    return cnf


def is_cnf(g: Cfg) -> bool:
    for lhs, rhs in g.productions:
        if len(rhs) == 0:
            if lhs != g.axiom or any(g.axiom in r for _, r in g.productions):
                return False
        elif len(rhs) == 1:
            if g.is_variable(rhs[0]):
                return False
        elif len(rhs) == 2:
            if not (g.is_variable(rhs[0]) and g.is_variable(rhs[1])):
                return False
        else:
            return False
    return True


def pumping_constant(g: Cfg) -> int:
    """2^|V|: bound on |vwx| in the pumping factorization of a CNF grammar."""
    return 2 ** len(g.variables)


class CykRecognizer:
    """Membership for a CNF grammar, productions indexed once."""

    def __init__(self, cnf: Cfg):
        if not is_cnf(cnf):
            raise InputError("CYK needs a grammar in Chomsky normal form")
        self.grammar = cnf
        self.by_terminal: Dict[str, Set[str]] = {}
        self.by_pair: Dict[Tuple[str, str], Set[str]] = {}
        self.accepts_empty = (cnf.axiom, ()) in cnf.productions
        for lhs, rhs in cnf.productions:
            if len(rhs) == 1:
                self.by_terminal.setdefault(rhs[0], set()).add(lhs)
            elif len(rhs) == 2:
                self.by_pair.setdefault((rhs[0], rhs[1]), set()).add(lhs)

    def __call__(self, word: Sequence[str]) -> bool:
        n = len(word)
        if n == 0:
            return self.accepts_empty
        table: List[List[FrozenSet[str]]] = [[frozenset()] * (n + 1) for _ in range(n)]
        for i, a in enumerate(word):
            table[i][i + 1] = frozenset(self.by_terminal.get(a, ()))
        for span in range(2, n + 1):
            for i in range(n - span + 1):
                j = i + span
                cell: Set[str] = set()
                for k in range(i + 1, j):
                    left, right = table[i][k], table[k][j]
                    if not left or not right:
                        continue
                    for b in left:
                        for c in right:
                            cell |= self.by_pair.get((b, c), set())
                table[i][j] = frozenset(cell)
        return self.grammar.axiom in table[0][n]


def cyk(cnf: Cfg, word: Sequence[str]) -> bool:
    return CykRecognizer(cnf)(word)


def shortest_yields(g: Cfg) -> Dict[str, Word]:
    """
    A shortest terminal word derivable from each productive variable.

    Ties break lexicographically over the terminal tuples, so witnesses are
    deterministic.
    """
    best: Dict[str, Word] = {}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if any(g.is_variable(s) and s not in best for s in rhs):
                continue
            word: Word = ()
            for s in rhs:
                word += best[s] if g.is_variable(s) else (s,)
            current = best.get(lhs)
            if current is None or (len(word), word) < (len(current), current):
                best[lhs] = word
                changed = True
    return best
