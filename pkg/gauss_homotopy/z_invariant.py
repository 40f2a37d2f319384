"""
The z and z_o invariants of Gauss words, pushed forward to invariant keys.

For every letter A of w = xAyAz the phrase y|xz is classified by its key
(the unordered S key for z, the encoded S_m value for z_o). Summing those
keys and rank(w) copies of the key of |w modulo 2 gives a set of keys;
a non-empty set certifies that w is not trivial.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .errors import ConfigError
from .s_invariant import UnorderedKey, compute_S_m, unordered_key
from .words import (
    CANONICAL_ALPHABET,
    GaussPhrase,
    GaussWord,
    Letter,
    letter_site,
    letters,
    random_phrase,
)

logger = logging.getLogger(__name__)

FLAVOURS = ("z", "z_o")


@dataclass(frozen=True)
class ClassSumMod2:
    """Formal sum of class keys with coefficients in Z/2."""

    odd_keys: FrozenSet[UnorderedKey] = field(default_factory=frozenset)

    @classmethod
    def from_keys(cls, keys: Iterable[UnorderedKey]) -> "ClassSumMod2":
        odd = set()
        for key in keys:
            odd ^= {key}
        return cls(frozenset(odd))

    def __add__(self, other: "ClassSumMod2") -> "ClassSumMod2":
        return ClassSumMod2(self.odd_keys ^ other.odd_keys)

    def is_zero(self) -> bool:
        return not self.odd_keys

    def sorted_keys(self) -> List[UnorderedKey]:
        return sorted(self.odd_keys)

    def __len__(self) -> int:
        return len(self.odd_keys)


def phrase_for_letter(word: GaussWord, letter: Letter) -> GaussPhrase:
    """y|xz for w = xAyAz."""
    x, y, z = letter_site(word, letter)
    return GaussPhrase._trusted((y, x + z))


def trivial_phrase(word: GaussWord) -> GaussPhrase:
    return GaussPhrase._trusted(("", word.letters))


def _key_function(flavour: str):
    if flavour == "z":
        return unordered_key
    if flavour == "z_o":
        return lambda phrase: compute_S_m(phrase).encode()
    raise ConfigError(f"Unknown invariant flavour {flavour!r}; expected one of {FLAVOURS}.")


def letter_classes(word: GaussWord, flavour: str = "z") -> Dict[Letter, UnorderedKey]:
    """Key of y|xz for every letter, before any cancellation."""
    key = _key_function(flavour)
    return {letter: key(phrase_for_letter(word, letter)) for letter in letters(word)}


def trivial_key(word: GaussWord, flavour: str = "z") -> UnorderedKey:
    return _key_function(flavour)(trivial_phrase(word))


def _z_image(word: GaussWord, flavour: str) -> ClassSumMod2:
    per_letter = letter_classes(word, flavour)
    # -t equals +t mod 2, so only the parity of rank(w) matters for t.
    keys = list(per_letter.values())
    if word.rank % 2:
        keys.append(trivial_key(word, flavour))
    result = ClassSumMod2.from_keys(keys)
    logger.debug("%s(%s): %d letter keys, %d survive", flavour, word, len(per_letter), len(result))
    return result


def compute_z(word: GaussWord) -> ClassSumMod2:
    return _z_image(word, "z")


def compute_z_o(word: GaussWord) -> ClassSumMod2:
    return _z_image(word, "z_o")


def is_nonzero(value: ClassSumMod2) -> bool:
    return not value.is_zero()


# ---------------------------------------------------------------------------
# Letters uninvolved in an H3 move
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    case: int
    template: str
    move: str  # move relating p(w1,D) and p(w2,D)


TABLE_ONE: Tuple[TableRow, ...] = (
    TableRow(1, "rDsDtABxACyBCz", "H3"),
    TableRow(2, "rDsABtDxACyBCz", "H3"),
    TableRow(3, "rDsABtACxDyBCz", "H3"),
    TableRow(4, "rDsABtACxBCyDz", "H3"),
    TableRow(5, "rABsDtDxACyBCz", "H3"),
    TableRow(6, "rABsDtACxDyBCz", "H3c"),
    TableRow(7, "rABsDtACxBCyDz", "H3c"),
    TableRow(8, "rABsACtDxDyBCz", "H3"),
    TableRow(9, "rABsACtDxBCyDz", "H3b"),
    TableRow(10, "rABsACtBCxDyDz", "H3"),
)

FILLER_SLOTS = "rstxyz"
_FILLER_ALPHABET = "".join(ch for ch in CANONICAL_ALPHABET if ch not in "ABCD")
_H3_SWAPS = {"AB": "BA", "AC": "CA", "BC": "CB"}


@dataclass(frozen=True)
class TableInstance:
    row: TableRow
    fillers: Dict[str, str]
    w1: GaussWord
    w2: GaussWord

    def phrases(self) -> Tuple[GaussPhrase, GaussPhrase]:
        return phrase_for_letter(self.w1, "D"), phrase_for_letter(self.w2, "D")


def _substitute(template: str, fillers: Dict[str, str]) -> str:
    return "".join(fillers.get(ch, ch) for ch in template)


def instantiate_table_row(row: TableRow, rng: random.Random, max_filler_rank: int = 3) -> TableInstance:
    """Fill the slots of ``row`` with pieces of a random Gauss word on fresh letters."""
    rank = rng.randint(0, max_filler_rank)
    pieces = random_phrase(rng, rank, len(FILLER_SLOTS), alphabet=_FILLER_ALPHABET).components
    fillers = dict(zip(FILLER_SLOTS, pieces))
    w2_template = row.template
    for pair, swapped in _H3_SWAPS.items():
        w2_template = w2_template.replace(pair, swapped)
    w1 = GaussWord(_substitute(row.template, fillers))
    w2 = GaussWord(_substitute(w2_template, fillers))
    return TableInstance(row, fillers, w1, w2)
