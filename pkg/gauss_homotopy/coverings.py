"""
Parity, covering and lifting of Gauss words.

A letter has odd parity when the span between its two occurrences has odd
length. ``cover`` deletes the odd letters, ``lift`` is its right inverse.
Iterating ``cover`` gives the tower w_0, w_1, ... which stabilizes after at
most rank/2 steps since each strict step removes at least two letters.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .errors import CapacityError
from .moves import HomotopyPolicy
from .search import SearchConfig, are_homotopic_bounded
from .words import GaussWord, Letter, fresh_letters, occurrence_map
from .z_invariant import compute_z, compute_z_o

logger = logging.getLogger(__name__)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


# Letters in order of first occurrence.
ParityTable = Dict[Letter, Parity]


def parity(word: GaussWord) -> ParityTable:
    table: ParityTable = {}
    for letter, ((_, first), (_, second)) in occurrence_map((word.letters,)).items():
        table[letter] = Parity.ODD if (second - first - 1) % 2 else Parity.EVEN
    return table


def odd_letters(word: GaussWord) -> List[Letter]:
    return [letter for letter, p in parity(word).items() if p is Parity.ODD]


def cover(word: GaussWord) -> GaussWord:
    odd = set(odd_letters(word))
    return GaussWord._trusted("".join(ch for ch in word.letters if ch not in odd))


def lift(word: GaussWord) -> GaussWord:
    """Wrap the first occurrence of every odd letter A as XAX with a fresh X."""
    odd = odd_letters(word)
    if not odd:
        return word
    try:
        fresh = dict(zip(odd, fresh_letters(word.letters, len(odd), after_max=True)))
    except CapacityError as exc:
        raise CapacityError(f"Cannot lift {word}: {exc}") from None
    out = []
    seen = set()
    for ch in word.letters:
        if ch in fresh and ch not in seen:
            out.append(fresh[ch] + ch + fresh[ch])
        else:
            out.append(ch)
        seen.add(ch)
    return GaussWord._trusted("".join(out))


def lift_family(word: GaussWord, i: int) -> GaussWord:
    if i < 0:
        raise ValueError(f"lift_family needs i >= 0, got {i}.")
    for _ in range(i):
        word = lift(word)
    return word


def cover_tower(word: GaussWord) -> List[GaussWord]:
    """w_0, ..., w_m where w_m is the first word with cover(w_m) = w_m."""
    tower = [word]
    while True:
        nxt = cover(tower[-1])
        if nxt.letters == tower[-1].letters:
            return tower
        tower.append(nxt)


def syntactic_height(word: GaussWord) -> Tuple[int, GaussWord]:
    tower = cover_tower(word)
    return len(tower) - 1, tower[-1]


@dataclass
class HeightBounds:
    """Bounds on the homotopy height; ``syntactic`` is always an upper bound."""

    syntactic: int
    base: GaussWord
    lower: int
    upper: int
    open_homotopy: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def _z_separated(u: GaussWord, v: GaussWord, open_homotopy: bool) -> bool:
    if compute_z(u) != compute_z(v):
        return True
    return open_homotopy and compute_z_o(u) != compute_z_o(v)


def height_bounds(
    word: GaussWord,
    cfg: Optional[SearchConfig] = None,
    open_homotopy: bool = False,
    refine_rank_limit: int = 5,
) -> HeightBounds:
    """Bracket the smallest n with w_{n+1} homotopic to w_n.

    The lower bound counts leading tower steps whose z-images (and z_o-images
    for open homotopy) differ. The upper bound is the first later step that
    bounded search proves homotopic, tried only while rank(w_n) stays within
    ``refine_rank_limit``.
    """
    policy = HomotopyPolicy.open_homotopy() if open_homotopy else HomotopyPolicy.closed_homotopy()
    base_cfg = cfg or SearchConfig()
    search_cfg = SearchConfig(policy, base_cfg.rank_cap, base_cfg.node_cap, False, base_cfg.rank_slack)
    tower = cover_tower(word)
    syntactic = len(tower) - 1
    notes: List[str] = []

    lower = 0
    while lower < syntactic and _z_separated(tower[lower], tower[lower + 1], open_homotopy):
        lower += 1

    upper = syntactic
    for n in range(lower, syntactic):
        if tower[n].rank > refine_rank_limit:
            notes.append(f"step {n}: rank {tower[n].rank} above refine limit {refine_rank_limit}")
            continue
        result = are_homotopic_bounded(tower[n + 1], tower[n], search_cfg)
        logger.debug("height step %d: %s", n, result.verdict.value)
        if result.equivalent:
            upper = n
            break
        notes.append(f"step {n}: {result.verdict.value}")
    return HeightBounds(syntactic, tower[-1], lower, upper, open_homotopy, notes)
