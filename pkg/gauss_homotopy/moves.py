"""
Homotopy moves on Gauss phrases.

Moves act on the tuple of component strings. Every explicit pattern pair
(AA for H1, AB/BA for the H2 kinds, AB/AC/BC for the H3 kinds) must be two
adjacent letters inside a single component; the filler sequences between
pairs may cross component separators and may be empty.

A move's site lists the 0-based (component, position) of the first letter of
each explicit pair. For insertions the site is given in the coordinates of
the phrase after the insertion, so a reduction and the insertion that undoes
it share the same site.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import ConfigError, IllegalMoveError
from .words import (
    MAX_RANK,
    Components,
    GaussPhrase,
    PhraseLike,
    Point,
    as_phrase,
    canonical_components,
    fresh_letters,
    rank_of,
)

logger = logging.getLogger(__name__)


class MoveKind(str, Enum):
    H1 = "H1"
    H2 = "H2"
    H2A = "H2a"
    H3 = "H3"
    H3A = "H3a"
    H3B = "H3b"
    H3C = "H3c"
    SHIFT = "SHIFT"
    SWAP = "SWAP"


KIND_ORDER: Dict[MoveKind, int] = {kind: i for i, kind in enumerate(MoveKind)}
DERIVED_KINDS = frozenset({MoveKind.H2A, MoveKind.H3A, MoveKind.H3B, MoveKind.H3C})
H3_FAMILY = frozenset({MoveKind.H3, MoveKind.H3A, MoveKind.H3B, MoveKind.H3C})
INSERTING_KINDS = frozenset({MoveKind.H1, MoveKind.H2, MoveKind.H2A})

# Orientation of the (AC-pair, BC-pair) when the AB-pair reads A first.
_H3_FORWARD: Dict[Tuple[bool, bool], MoveKind] = {
    (True, True): MoveKind.H3,
    (False, True): MoveKind.H3A,
    (False, False): MoveKind.H3B,
    (True, False): MoveKind.H3C,
}


@dataclass(frozen=True)
class Move:
    """One homotopy move. ``inverse`` marks the right-to-left direction."""

    kind: MoveKind
    site: Tuple[Point, ...]
    inverse: bool = False

    @property
    def component(self) -> int:
        return self.site[0][0]

    @property
    def is_insertion(self) -> bool:
        return self.inverse and self.kind in INSERTING_KINDS

    def sort_key(self) -> Tuple[int, bool, Tuple[Point, ...]]:
        return KIND_ORDER[self.kind], self.inverse, self.site

    def __str__(self) -> str:
        return format_move(self)


@dataclass(frozen=True)
class HomotopyPolicy:
    """Which moves are permitted.

    ``closed_components`` is the set of component indices on which Shift is
    allowed; ``None`` means every component is closed.
    """

    closed_components: Optional[FrozenSet[int]] = None
    allow_permutation: bool = False
    derived: bool = True

    def __post_init__(self) -> None:
        if self.closed_components is not None and not isinstance(self.closed_components, frozenset):
            object.__setattr__(self, "closed_components", frozenset(self.closed_components))

    @classmethod
    def closed_homotopy(cls, derived: bool = True) -> "HomotopyPolicy":
        return cls(None, False, derived)

    @classmethod
    def open_homotopy(cls, derived: bool = True) -> "HomotopyPolicy":
        return cls(frozenset(), False, derived)

    @classmethod
    def mixed_homotopy(cls, derived: bool = True) -> "HomotopyPolicy":
        """First component closed, the rest open."""
        return cls(frozenset({0}), False, derived)

    @classmethod
    def unordered_homotopy(cls, derived: bool = True) -> "HomotopyPolicy":
        return cls(None, True, derived)

    def is_closed(self, component: int) -> bool:
        return self.closed_components is None or component in self.closed_components

    def permits(self, kind: MoveKind) -> bool:
        if kind is MoveKind.SWAP:
            return self.allow_permutation
        return self.derived or kind not in DERIVED_KINDS

    @property
    def name(self) -> str:
        for name, factory in POLICIES.items():
            if factory(self.derived) == self:
                return name
        closed = "all" if self.closed_components is None else sorted(self.closed_components)
        return f"custom(closed={closed}, permutation={self.allow_permutation})"


POLICIES = {
    "closed": HomotopyPolicy.closed_homotopy,
    "open": HomotopyPolicy.open_homotopy,
    "mixed": HomotopyPolicy.mixed_homotopy,
    "unordered": HomotopyPolicy.unordered_homotopy,
}


def policy_by_name(name: str, derived: bool = True) -> HomotopyPolicy:
    try:
        return POLICIES[name](derived)
    except KeyError:
        raise ConfigError(f"Unknown policy {name!r}; expected one of {', '.join(POLICIES)}.") from None


# ---------------------------------------------------------------------------
# Pattern helpers
# ---------------------------------------------------------------------------

def _pair_at(components: Components, point: Point) -> Optional[str]:
    c, p = point
    if not 0 <= c < len(components):
        return None
    comp = components[c]
    if p < 0 or p + 1 >= len(comp):
        return None
    return comp[p:p + 2]


def _disjoint(first: Point, second: Point) -> bool:
    """``first`` precedes ``second`` and the two adjacent pairs do not overlap."""
    if first[0] != second[0]:
        return first[0] < second[0]
    return second[1] >= first[1] + 2


def classify_h3(first: str, second: str, third: str) -> Optional[Tuple[MoveKind, bool]]:
    """Kind and direction of an H3-family move on three pairs, or None.

    The pairs, in positional order, must carry {A,B}, {A,C} and {B,C}.
    """
    s1, s2, s3 = set(first), set(second), set(third)
    if len(s1) != 2 or len(s2) != 2 or len(s3) != 2:
        return None
    a, b, c = s1 & s2, s1 & s3, s2 & s3
    if len(a) != 1 or len(b) != 1 or len(c) != 1 or len(s1 | s2 | s3) != 3:
        return None
    (la,), (lb,) = a, b
    o1, o2, o3 = first[0] == la, second[0] == la, third[0] == lb
    if o1:
        return _H3_FORWARD[(o2, o3)], False
    return _H3_FORWARD[(not o2, not o3)], True


def _classify_h2(first: str, second: str) -> Optional[MoveKind]:
    if first[0] == first[1] or set(first) != set(second):
        return None
    return MoveKind.H2 if second == first[::-1] else MoveKind.H2A


def _adjacent_pairs(components: Components) -> List[Tuple[Point, str]]:
    return [
        ((c, p), comp[p:p + 2])
        for c, comp in enumerate(components)
        for p in range(len(comp) - 1)
    ]


def _slots(components: Components) -> List[Point]:
    return [(c, q) for c, comp in enumerate(components) for q in range(len(comp) + 1)]


def _swap_pairs(components: Components, points: Sequence[Point]) -> Components:
    comps = [list(comp) for comp in components]
    for c, p in points:
        comps[c][p], comps[c][p + 1] = comps[c][p + 1], comps[c][p]
    return tuple("".join(comp) for comp in comps)


def _delete_pairs(components: Components, points: Sequence[Point]) -> Components:
    drop = {(c, p) for c, p0 in points for p in (p0, p0 + 1)}
    return tuple(
        "".join(ch for p, ch in enumerate(comp) if (c, p) not in drop)
        for c, comp in enumerate(components)
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _reducing_moves(components: Components, policy: HomotopyPolicy) -> List[Move]:
    moves: List[Move] = []
    pairs = _adjacent_pairs(components)

    for point, text in pairs:
        if text[0] == text[1]:
            moves.append(Move(MoveKind.H1, (point,)))

    by_letters: Dict[FrozenSet[str], List[Tuple[Point, str]]] = {}
    for point, text in pairs:
        if text[0] != text[1]:
            by_letters.setdefault(frozenset(text), []).append((point, text))

    for group in by_letters.values():
        for i, (p1, t1) in enumerate(group):
            for p2, t2 in group[i + 1:]:
                if not _disjoint(p1, p2):
                    continue
                kind = _classify_h2(t1, t2)
                if kind is not None and policy.permits(kind):
                    moves.append(Move(kind, (p1, p2)))

    for p1, t1 in pairs:
        if t1[0] == t1[1]:
            continue
        for shared in t1:
            other = t1[1] if shared == t1[0] else t1[0]
            for key, group in by_letters.items():
                if shared not in key or other in key:
                    continue
                (third_letter,) = key - {shared}
                for p2, t2 in group:
                    if not _disjoint(p1, p2):
                        continue
                    for p3, t3 in by_letters.get(frozenset((other, third_letter)), ()):
                        if not _disjoint(p2, p3):
                            continue
                        found = classify_h3(t1, t2, t3)
                        if found is not None and policy.permits(found[0]):
                            moves.append(Move(found[0], (p1, p2, p3), found[1]))

    for c, comp in enumerate(components):
        if comp and policy.is_closed(c):
            moves.append(Move(MoveKind.SHIFT, ((c, 0),)))
    if policy.allow_permutation:
        for c in range(len(components) - 1):
            moves.append(Move(MoveKind.SWAP, ((c, 0),)))
    return moves


def _insertion_moves(components: Components, policy: HomotopyPolicy, rank_cap: int) -> List[Move]:
    moves: List[Move] = []
    rank = rank_of(components)
    slots = _slots(components)
    if rank + 1 <= min(rank_cap, MAX_RANK):
        moves.extend(Move(MoveKind.H1, (slot,), True) for slot in slots)
    if rank + 2 <= min(rank_cap, MAX_RANK):
        kinds = [MoveKind.H2] + ([MoveKind.H2A] if policy.derived else [])
        for i, (c1, q1) in enumerate(slots):
            for c2, q2 in slots[i:]:
                second = (c2, q2 + 2) if c1 == c2 else (c2, q2)
                for kind in kinds:
                    moves.append(Move(kind, ((c1, q1), second), True))
    return moves


def enumerate_moves(
    phrase: PhraseLike,
    policy: Optional[HomotopyPolicy] = None,
    include_insertions: bool = False,
    rank_cap: Optional[int] = None,
) -> List[Move]:
    """Every legal move on ``phrase`` under ``policy`` in a fixed order.

    Insertions are listed only with ``include_insertions``; ``rank_cap``
    (default: rank + 2) bounds the rank they may reach.
    """
    phrase = as_phrase(phrase)
    policy = policy or HomotopyPolicy()
    components = phrase.components
    moves = _reducing_moves(components, policy)
    if include_insertions:
        cap = rank_of(components) + 2 if rank_cap is None else rank_cap
        moves.extend(_insertion_moves(components, policy, cap))
    moves.sort(key=Move.sort_key)
    return moves


# ---------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------

def _illegal(move: Move, components: Components, reason: str) -> IllegalMoveError:
    return IllegalMoveError(f"{format_move(move)} cannot be applied to {'|'.join(components)!r}: {reason}.")


def _apply_insertion(components: Components, move: Move) -> Components:
    width = 1 if move.kind is MoveKind.H1 else 2
    if len(move.site) != width:
        raise _illegal(move, components, f"expected {width} site point(s)")
    used = set("".join(components))
    n = len(components)

    if move.kind is MoveKind.H1:
        ((c, p),) = move.site
        if not (0 <= c < n and 0 <= p <= len(components[c])):
            raise _illegal(move, components, "site is outside the phrase")
        (x,) = fresh_letters(used, 1)
        comps = list(components)
        comps[c] = comps[c][:p] + x + x + comps[c][p:]
        return tuple(comps)

    (c1, p1), (c2, p2) = move.site
    if (c1, p1) > (c2, p2) or not (0 <= c1 < n and 0 <= c2 < n):
        raise _illegal(move, components, "site points out of order")
    x, y = fresh_letters(used, 2)
    second = y + x if move.kind is MoveKind.H2 else x + y
    comps = list(components)
    if c1 == c2:
        comp = comps[c1]
        q2 = p2 - 2
        if not (0 <= p1 <= q2 <= len(comp)):
            raise _illegal(move, components, "site is outside the phrase")
        comps[c1] = comp[:p1] + x + y + comp[p1:q2] + second + comp[q2:]
    else:
        if not (0 <= p1 <= len(comps[c1]) and 0 <= p2 <= len(comps[c2])):
            raise _illegal(move, components, "site is outside the phrase")
        comps[c1] = comps[c1][:p1] + x + y + comps[c1][p1:]
        comps[c2] = comps[c2][:p2] + second + comps[c2][p2:]
    return tuple(comps)


def apply_to_components(components: Components, move: Move) -> Components:
    """Rewrite a raw component tuple; raises IllegalMoveError on mismatch."""
    kind = move.kind
    if kind is MoveKind.SHIFT:
        c = move.component
        if not 0 <= c < len(components) or not components[c]:
            raise _illegal(move, components, "shift needs a non-empty component")
        comps = list(components)
        comps[c] = comps[c][1:] + comps[c][0]
        return tuple(comps)

    if kind is MoveKind.SWAP:
        c = move.component
        if not 0 <= c < len(components) - 1:
            raise _illegal(move, components, "no component to swap with")
        comps = list(components)
        comps[c], comps[c + 1] = comps[c + 1], comps[c]
        return tuple(comps)

    if move.is_insertion:
        return _apply_insertion(components, move)

    texts = [_pair_at(components, point) for point in move.site]
    if any(text is None for text in texts):
        raise _illegal(move, components, "site is outside the phrase")

    if kind is MoveKind.H1:
        if len(texts) != 1 or texts[0][0] != texts[0][1]:
            raise _illegal(move, components, "expected a doubled letter")
        return _delete_pairs(components, move.site)

    if kind in (MoveKind.H2, MoveKind.H2A):
        if len(texts) != 2 or not _disjoint(*move.site) or _classify_h2(*texts) is not kind:
            raise _illegal(move, components, f"pairs {texts} do not match {kind.value}")
        return _delete_pairs(components, move.site)

    if len(texts) != 3 or not (_disjoint(move.site[0], move.site[1]) and _disjoint(move.site[1], move.site[2])):
        raise _illegal(move, components, "expected three disjoint ordered pairs")
    if classify_h3(*texts) != (kind, move.inverse):
        raise _illegal(move, components, f"pairs {texts} do not match this orientation")
    return _swap_pairs(components, move.site)


def apply_move(phrase: PhraseLike, move: Move, policy: Optional[HomotopyPolicy] = None) -> GaussPhrase:
    """Apply ``move``; with a policy, also refuse moves the policy forbids."""
    phrase = as_phrase(phrase)
    if policy is not None:
        if not policy.permits(move.kind):
            raise IllegalMoveError(f"{format_move(move)} is not permitted under the {policy.name} policy.")
        if move.kind is MoveKind.SHIFT and not policy.is_closed(move.component):
            raise IllegalMoveError(f"Component {move.component + 1} is open; shift is not permitted.")
    return GaussPhrase._trusted(apply_to_components(phrase.components, move))


def successors(
    components: Components,
    policy: HomotopyPolicy,
    rank_cap: int,
) -> Iterator[Tuple[Move, Components]]:
    """(move, canonical result) for every legal move, insertions capped at ``rank_cap``."""
    for move in _reducing_moves(components, policy):
        yield move, canonical_components(apply_to_components(components, move))
    for move in _insertion_moves(components, policy, rank_cap):
        yield move, canonical_components(apply_to_components(components, move))


def neighbors(
    phrase: PhraseLike,
    policy: Optional[HomotopyPolicy] = None,
    rank_cap: Optional[int] = None,
) -> List[GaussPhrase]:
    """Canonical forms one move away, deduplicated, in move order."""
    phrase = as_phrase(phrase)
    policy = policy or HomotopyPolicy()
    cap = phrase.rank if rank_cap is None else rank_cap
    seen: Dict[Components, None] = {}
    moved = sorted(successors(phrase.components, policy, cap), key=lambda item: item[0].sort_key())
    for _, result in moved:
        seen.setdefault(result, None)
    return [GaussPhrase._trusted(result) for result in seen]


def inverse_moves(source: PhraseLike, move: Move) -> List[Move]:
    """Moves that undo ``move`` when applied to ``apply_move(source, move)``."""
    source = as_phrase(source)
    if move.kind is MoveKind.SHIFT:
        length = len(source.components[move.component])
        return [move] * (length - 1)
    if move.kind is MoveKind.SWAP:
        return [move]
    return [Move(move.kind, move.site, not move.inverse)]


def replay(phrase: PhraseLike, moves: Iterable[Move], policy: Optional[HomotopyPolicy] = None) -> GaussPhrase:
    phrase = as_phrase(phrase)
    for move in moves:
        phrase = apply_move(phrase, move, policy)
    return phrase


# ---------------------------------------------------------------------------
# Certificate line format
# ---------------------------------------------------------------------------

_MOVE_RE = re.compile(r"^(?P<kind>H1|H2a|H2|H3a|H3b|H3c|H3|SHIFT|SWAP)(?P<inv>\^-1)?@(?P<site>.+)$")
_GROUP_RE = re.compile(r"^(\d+):(\d+(?:,\d+)*)$")
_SWAP_RE = re.compile(r"^(\d+)-(\d+)$")


def format_move(move: Move) -> str:
    suffix = "^-1" if move.inverse else ""
    if move.kind is MoveKind.SHIFT:
        return f"SHIFT@{move.component + 1}"
    if move.kind is MoveKind.SWAP:
        return f"SWAP@{move.component + 1}-{move.component + 2}"
    groups: List[Tuple[int, List[int]]] = []
    for c, p in move.site:
        if groups and groups[-1][0] == c:
            groups[-1][1].append(p)
        else:
            groups.append((c, [p]))
    site = ";".join(f"{c + 1}:{','.join(str(p + 1) for p in ps)}" for c, ps in groups)
    return f"{move.kind.value}{suffix}@{site}"


def parse_move(text: str) -> Move:
    """Parse one certificate line such as ``H3c@1:1,3,6`` or ``H2^-1@1:1;2:1``."""
    match = _MOVE_RE.match(text.strip())
    if not match:
        raise IllegalMoveError(f"Cannot parse move {text!r}.")
    kind = MoveKind(match["kind"])
    inverse = match["inv"] is not None
    site = match["site"]

    if kind is MoveKind.SHIFT:
        if inverse or not site.isdigit() or int(site) < 1:
            raise IllegalMoveError(f"Cannot parse move {text!r}: expected SHIFT@<component>.")
        return Move(kind, ((int(site) - 1, 0),))
    if kind is MoveKind.SWAP:
        swap = _SWAP_RE.match(site)
        if inverse or not swap or int(swap[1]) < 1 or int(swap[2]) != int(swap[1]) + 1:
            raise IllegalMoveError(f"Cannot parse move {text!r}: expected SWAP@<c>-<c+1>.")
        return Move(kind, ((int(swap[1]) - 1, 0),))

    points: List[Point] = []
    for group in site.split(";"):
        found = _GROUP_RE.match(group)
        if not found:
            raise IllegalMoveError(f"Cannot parse site group {group!r} in {text!r}.")
        c = int(found[1]) - 1
        points.extend((c, int(p) - 1) for p in found[2].split(","))
    if any(c < 0 or p < 0 for c, p in points):
        raise IllegalMoveError(f"Positions in {text!r} are 1-based.")
    expected = {MoveKind.H1: 1, MoveKind.H2: 2, MoveKind.H2A: 2}.get(kind, 3)
    if len(points) != expected:
        raise IllegalMoveError(f"{kind.value} needs {expected} site point(s), got {len(points)} in {text!r}.")
    return Move(kind, tuple(points), inverse)


def parse_certificate(lines: Iterable[str]) -> List[Move]:
    return [parse_move(line) for line in lines if line.strip() and not line.lstrip().startswith("#")]
