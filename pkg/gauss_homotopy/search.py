"""
Bounded breadth-first search over the move graph.

States are canonical component tuples. A search never visits a phrase of
rank above ``rank_cap`` and gives up after ``node_cap`` distinct states.
Within those bounds the move graph is undirected (every move has an inverse
that stays under the cap), so the states reachable from a phrase form its
bounded class.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConfigError
from .moves import HomotopyPolicy, Move, format_move, inverse_moves, successors
from .words import (
    MAX_RANK,
    Components,
    GaussPhrase,
    PhraseLike,
    as_phrase,
    canonical_components,
    format_phrase,
    rank_of,
)

logger = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 5_000_000
DEFAULT_RANK_SLACK = 2

Parents = Dict[Components, Optional[Tuple[Components, Move]]]


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent-within-bounds"
    RESOURCE_EXHAUSTED = "resource-exhausted"


@dataclass(frozen=True)
class SearchConfig:
    """Search bounds. ``rank_cap=None`` means max endpoint rank + ``rank_slack``."""

    policy: HomotopyPolicy = field(default_factory=HomotopyPolicy)
    rank_cap: Optional[int] = None
    node_cap: int = DEFAULT_NODE_CAP
    emit_certificate: bool = True
    rank_slack: int = DEFAULT_RANK_SLACK

    def cap_for(self, *ranks: int) -> int:
        top = max(ranks, default=0)
        cap = top + self.rank_slack if self.rank_cap is None else self.rank_cap
        if self.node_cap <= 0:
            raise ConfigError(f"node_cap must be positive, got {self.node_cap}.")
        if self.rank_slack < 0:
            raise ConfigError(f"rank_slack must be non-negative, got {self.rank_slack}.")
        if cap < top:
            raise ConfigError(f"rank_cap {cap} is below the endpoint rank {top}.")
        return min(cap, MAX_RANK)


@dataclass
class SearchResult:
    verdict: Verdict
    certificate: Optional[List[Move]]
    explored: int
    rank_cap: int

    @property
    def equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT

    def certificate_lines(self) -> List[str]:
        return [format_move(move) for move in self.certificate or []]


def _path_to(parents: Parents, state: Components) -> List[Tuple[Components, Move]]:
    """(previous state, move) steps from the root of ``parents`` to ``state``."""
    steps = []
    link = parents[state]
    while link is not None:
        steps.append(link)
        link = parents[link[0]]
    steps.reverse()
    return steps


def _certificate(forward: Parents, backward: Parents, meet: Components) -> List[Move]:
    moves = [move for _, move in _path_to(forward, meet)]
    for previous, move in reversed(_path_to(backward, meet)):
        moves.extend(inverse_moves(GaussPhrase._trusted(previous), move))
    return moves


def are_homotopic_bounded(a: PhraseLike, b: PhraseLike, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Decide a ~ b within the caps, searching from both ends.

    A side is searched only if its endpoint is non-empty or the other one is
    empty; growing a frontier out of the empty phrase is pure insertion.
    """
    cfg = cfg or SearchConfig()
    a, b = as_phrase(a), as_phrase(b)
    cap = cfg.cap_for(a.rank, b.rank)
    if a.n_components != b.n_components:
        logger.info("Component counts differ (%d vs %d); not equivalent.", a.n_components, b.n_components)
        return SearchResult(Verdict.NOT_EQUIVALENT, None, 0, cap)

    sa, sb = canonical_components(a.components), canonical_components(b.components)
    if sa == sb:
        return SearchResult(Verdict.EQUIVALENT, [] if cfg.emit_certificate else None, 1, cap)

    parents: List[Parents] = [{sa: None}, {sb: None}]
    frontiers: List[List[Components]] = [[sa], [sb]]
    active = [a.rank > 0 or b.rank == 0, b.rank > 0 or a.rank == 0]
    explored = 2
    depth = [0, 0]

    while True:
        candidates = [side for side in (0, 1) if active[side]]
        side = min(candidates, key=lambda s: (len(frontiers[s]), s))
        if not frontiers[side]:
            logger.debug("Side %d exhausted after %d states.", side, explored)
            return SearchResult(Verdict.NOT_EQUIVALENT, None, explored, cap)

        own, other = parents[side], parents[1 - side]
        next_frontier: List[Components] = []
        for state in frontiers[side]:
            for move, nxt in successors(state, cfg.policy, cap):
                if nxt in own:
                    continue
                own[nxt] = (state, move)
                explored += 1
                if nxt in other:
                    logger.debug("Met at depth %d/%d after %d states.", depth[0], depth[1], explored)
                    certificate = None
                    if cfg.emit_certificate:
                        forward, backward = (own, other) if side == 0 else (other, own)
                        certificate = _certificate(forward, backward, nxt)
                    return SearchResult(Verdict.EQUIVALENT, certificate, explored, cap)
                if explored >= cfg.node_cap:
                    logger.warning("Node cap %d reached; giving up.", cfg.node_cap)
                    return SearchResult(Verdict.RESOURCE_EXHAUSTED, None, explored, cap)
                next_frontier.append(nxt)
        frontiers[side] = next_frontier
        depth[side] += 1
        logger.debug("Side %d depth %d: frontier %d, explored %d", side, depth[side], len(next_frontier), explored)


# ---------------------------------------------------------------------------
# Whole-class exploration
# ---------------------------------------------------------------------------

@dataclass
class Exploration:
    parents: Parents
    complete: bool

    @property
    def states(self) -> List[Components]:
        return list(self.parents)


def _explore(
    start: Components,
    policy: HomotopyPolicy,
    rank_cap: int,
    node_cap: int,
    seen: Optional[Dict[Components, int]] = None,
    stop_at_rank_zero: bool = False,
) -> Exploration:
    parents: Parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for move, nxt in successors(state, policy, rank_cap):
            if nxt in parents or (seen is not None and nxt in seen):
                continue
            parents[nxt] = (state, move)
            if stop_at_rank_zero and rank_of(nxt) == 0:
                return Exploration(parents, True)
            if len(parents) >= node_cap:
                logger.warning("Node cap %d reached while exploring %s.", node_cap, format_phrase(start))
                return Exploration(parents, False)
            queue.append(nxt)
    return Exploration(parents, True)


def explore(phrase: PhraseLike, cfg: Optional[SearchConfig] = None) -> Exploration:
    """Every canonical state reachable from ``phrase`` within the caps."""
    cfg = cfg or SearchConfig()
    phrase = as_phrase(phrase)
    cap = cfg.cap_for(phrase.rank)
    return _explore(canonical_components(phrase.components), cfg.policy, cap, cfg.node_cap)


@dataclass
class ReduceResult:
    phrase: GaussPhrase
    certificate: Optional[List[Move]]
    explored: int
    complete: bool


def _encoding_key(state: Components) -> Tuple[int, str]:
    return rank_of(state), format_phrase(state)


def reduce(phrase: PhraseLike, cfg: Optional[SearchConfig] = None) -> ReduceResult:
    """Minimum-rank canonical form reachable within the caps."""
    cfg = cfg or SearchConfig()
    phrase = as_phrase(phrase)
    cap = cfg.cap_for(phrase.rank)
    start = canonical_components(phrase.components)
    found = _explore(start, cfg.policy, cap, cfg.node_cap, stop_at_rank_zero=True)
    best = min(found.parents, key=_encoding_key)
    certificate = [move for _, move in _path_to(found.parents, best)] if cfg.emit_certificate else None
    logger.debug("Reduced %s to %s over %d states.", phrase, format_phrase(best), len(found.parents))
    return ReduceResult(GaussPhrase._trusted(best), certificate, len(found.parents), found.complete)


@dataclass
class ClassPartition:
    """Groups of input indices; ``complete`` is False if any exploration hit the node cap."""

    groups: List[List[int]]
    complete: bool
    explored: int


def homotopy_classes(phrases: Sequence[PhraseLike], cfg: Optional[SearchConfig] = None) -> ClassPartition:
    """Partition ``phrases`` into bounded classes, exploring each class once.

    All explorations share one rank cap (the largest input rank plus the
    slack, unless fixed) so that the classes are components of one graph.
    """
    cfg = cfg or SearchConfig()
    items = [as_phrase(p) for p in phrases]
    cap = cfg.cap_for(*(p.rank for p in items))
    starts = [canonical_components(p.components) for p in items]
    owner: Dict[Components, int] = {}
    groups: List[List[int]] = []
    complete = True
    explored = 0
    for index, start in enumerate(starts):
        group = owner.get(start)
        if group is None:
            found = _explore(start, cfg.policy, cap, cfg.node_cap, seen=owner)
            group = len(groups)
            groups.append([])
            for state in found.parents:
                owner[state] = group
            complete = complete and found.complete
            explored += len(found.parents)
        groups[group].append(index)
    logger.debug("%d phrases fall into %d classes (%d states).", len(items), len(groups), explored)
    return ClassPartition(groups, complete, explored)
