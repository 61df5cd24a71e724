"""Critical pairs and confluence/termination predicates."""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Sequence

from config import settings
from .alphabet import Word, format_word
from .system import FuelExhausted, SemiThueSystem, descendants, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriticalPair:
    peak: Word
    left: Word
    right: Word
    rules: tuple
    kind: str  # "overlap" or "inclusion"
    offset: int


class Verdict(str, Enum):
    LOCALLY_CONFLUENT = "LocallyConfluent"
    STRONGLY_CONFLUENT = "StronglyConfluent"
    COUNTEREXAMPLE = "CounterexamplePeak"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ConfluenceVerdict:
    status: Verdict
    pairs_checked: int
    peak: Optional[Word] = None
    left: Optional[Word] = None
    right: Optional[Word] = None
    fuel: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status in (Verdict.LOCALLY_CONFLUENT, Verdict.STRONGLY_CONFLUENT)

    def describe(self) -> str:
        if self.status == Verdict.COUNTEREXAMPLE:
            return (
                f"{self.status.value}({format_word(self.peak)}): "
                f"{format_word(self.left)} / {format_word(self.right)}"
            )
        if self.status == Verdict.UNKNOWN:
            return f"{self.status.value}(fuel={self.fuel})"
        return self.status.value


def critical_pairs(system: SemiThueSystem) -> List[CriticalPair]:
    """
    Overlaps (a proper suffix of one lhs is a prefix of another) and
    inclusions (one lhs is a factor of another), with both one-step results.
    Ordered by rule pair, then kind, then offset.
    """
    pairs = []
    rules = system.rules
    for i, r1 in enumerate(rules):
        l1 = r1.lhs
        for j, r2 in enumerate(rules):
            l2 = r2.lhs
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    pairs.append(CriticalPair(
                        peak=l1 + l2[k:],
                        left=r1.rhs + l2[k:],
                        right=l1[:-k] + r2.rhs,
                        rules=(i, j),
                        kind="overlap",
                        offset=len(l1) - k,
                    ))
            if i == j or len(l2) > len(l1):
                continue
            for p in range(len(l1) - len(l2) + 1):
                if l1[p:p + len(l2)] == l2:
                    pairs.append(CriticalPair(
                        peak=l1,
                        left=r1.rhs,
                        right=l1[:p] + r2.rhs + l1[p + len(l2):],
                        rules=(i, j),
                        kind="inclusion",
                        offset=p,
                    ))
    return pairs


def check_local_confluence(system: SemiThueSystem, fuel: Optional[int] = None) -> ConfluenceVerdict:
    """
    Normalize both sides of every critical pair and compare.

    Only meaningful for systems that terminate within `fuel`; any
    exhausted normalization yields Unknown.
    """
    fuel = settings.REWRITE_FUEL if fuel is None else fuel
    pairs = critical_pairs(system)
    unknown = False
    for checked, pair in enumerate(pairs, start=1):
        left = normalize(system, pair.left, fuel)
        right = normalize(system, pair.right, fuel)
        if isinstance(left, FuelExhausted) or isinstance(right, FuelExhausted):
            unknown = True
            continue
        if left != right:
            logger.info(f"critical pair at {format_word(pair.peak)} does not join")
            return ConfluenceVerdict(Verdict.COUNTEREXAMPLE, checked, pair.peak, left, right)
    if unknown:
        return ConfluenceVerdict(Verdict.UNKNOWN, len(pairs), fuel=fuel)
    logger.debug(f"{len(pairs)} critical pairs join")
    return ConfluenceVerdict(Verdict.LOCALLY_CONFLUENT, len(pairs))


def check_strong_confluence(system: SemiThueSystem) -> ConfluenceVerdict:
    """Every critical pair joins using at most one step on each side."""
    pairs = critical_pairs(system)
    for checked, pair in enumerate(pairs, start=1):
        if not descendants(system, pair.left, 1) & descendants(system, pair.right, 1):
            return ConfluenceVerdict(Verdict.COUNTEREXAMPLE, checked, pair.peak, pair.left, pair.right)
    return ConfluenceVerdict(Verdict.STRONGLY_CONFLUENT, len(pairs))


def is_length_reducing(system: SemiThueSystem) -> bool:
    return all(rule.is_length_reducing for rule in system.rules)


@dataclass(frozen=True)
class Equivalence:
    """
    Outcome of comparing two normal forms.

    `equal` is None when normalization ran out of fuel. `quality` is
    LOCALLY_CONFLUENT only for a length-reducing system whose critical
    pairs all join; any other system may send equal words to different
    normal forms, and `quality` is then UNKNOWN.
    """
    equal: Optional[bool]
    quality: Verdict
    left: Optional[Word] = None
    right: Optional[Word] = None

    @property
    def exact(self) -> bool:
        return self.equal is not None and self.quality == Verdict.LOCALLY_CONFLUENT

    def __bool__(self) -> bool:
        return self.equal is True


@lru_cache(maxsize=64)
def _equivalence_quality(system: SemiThueSystem, fuel: Optional[int]) -> Verdict:
    if not is_length_reducing(system):
        return Verdict.UNKNOWN
    verdict = check_local_confluence(system, fuel)
    return Verdict.LOCALLY_CONFLUENT if verdict.ok else Verdict.UNKNOWN


def equivalent(
    system: SemiThueSystem,
    u: Sequence[str],
    v: Sequence[str],
    fuel: Optional[int] = None,
) -> Equivalence:
    """
    Compare normal forms.

    Truthy iff the normal forms coincide. The answer decides equality in
    the presented monoid only when `exact` holds; the confluence check
    behind it runs once per system.
    """
    quality = _equivalence_quality(system, fuel)
    if quality != Verdict.LOCALLY_CONFLUENT:
        logger.debug(f"equivalent on {system!r}: not known to be convergent, answer is {quality.value}-quality")
    nu = normalize(system, u, fuel)
    nv = normalize(system, v, fuel)
    if isinstance(nu, FuelExhausted) or isinstance(nv, FuelExhausted):
        return Equivalence(None, Verdict.UNKNOWN)
    return Equivalence(nu == nv, quality, nu, nv)


def joinable_bfs(system: SemiThueSystem, u: Sequence[str], v: Sequence[str], depth: int = 6) -> bool:
    """Brute-force joinability: common descendant within `depth` steps."""
    return bool(descendants(system, u, depth) & descendants(system, v, depth))
