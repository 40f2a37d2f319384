"""
Gauss words and Gauss phrases.

A Gauss word is a letter sequence in which every letter occurs exactly
twice; a Gauss phrase is a sequence of components whose concatenation is a
Gauss word. External format: components separated by "|", letters are
single ASCII alphanumerics, and the standalone empty word is written "-".
"""

import logging
import random
import string
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import (
    ArityError,
    BadTokenError,
    CapacityError,
    MissingLetterError,
    NonGaussError,
)

logger = logging.getLogger(__name__)

# Fixed relabelling alphabet; its order is the total order on letters.
CANONICAL_ALPHABET = string.ascii_uppercase + string.ascii_lowercase + string.digits
MAX_RANK = len(CANONICAL_ALPHABET)

SEPARATOR = "|"
EMPTY_WORD = "-"

_LETTER_ORDER: Dict[str, int] = {ch: i for i, ch in enumerate(CANONICAL_ALPHABET)}

Letter = str
Components = Tuple[str, ...]
Point = Tuple[int, int]  # (component index, position inside the component), 0-based


def letter_order(letter: Letter) -> int:
    """Position of a letter in the canonical alphabet."""
    try:
        return _LETTER_ORDER[letter]
    except KeyError:
        raise BadTokenError(f"Invalid letter {letter!r}: letters are single ASCII alphanumerics.") from None


def _check_components(components: Sequence[str]) -> None:
    counts: Counter = Counter()
    for comp in components:
        for ch in comp:
            if ch not in _LETTER_ORDER:
                raise BadTokenError(f"Invalid token {ch!r}: letters are single ASCII alphanumerics.")
        counts.update(comp)
    bad = sorted((letter for letter, n in counts.items() if n != 2), key=letter_order)
    if bad:
        detail = ", ".join(f"{letter} x{counts[letter]}" for letter in bad)
        raise NonGaussError(f"Every letter must occur exactly twice ({detail}).")


@dataclass(frozen=True)
class GaussWord:
    """A validated Gauss word."""

    letters: str

    def __post_init__(self) -> None:
        _check_components((self.letters,))

    @classmethod
    def _trusted(cls, letters: str) -> "GaussWord":
        word = object.__new__(cls)
        object.__setattr__(word, "letters", letters)
        return word

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def rank(self) -> int:
        return len(self.letters) // 2

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.letters or EMPTY_WORD

    def as_phrase(self) -> "GaussPhrase":
        return GaussPhrase._trusted((self.letters,))


@dataclass(frozen=True)
class GaussPhrase:
    """A validated Gauss phrase: one or more components over a shared alphabet."""

    components: Components

    def __post_init__(self) -> None:
        if not isinstance(self.components, tuple):
            object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ArityError("A Gauss phrase has at least one component.")
        _check_components(self.components)

    @classmethod
    def _trusted(cls, components: Components) -> "GaussPhrase":
        phrase = object.__new__(cls)
        object.__setattr__(phrase, "components", components)
        return phrase

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def rank(self) -> int:
        return self.length // 2

    def word(self) -> GaussWord:
        """Concatenation of all components."""
        return GaussWord._trusted("".join(self.components))

    def __str__(self) -> str:
        return format_phrase(self)


PhraseLike = Union[GaussPhrase, GaussWord]


def as_phrase(value: PhraseLike) -> GaussPhrase:
    if isinstance(value, GaussWord):
        return value.as_phrase()
    return value


@dataclass(frozen=True)
class CanonicalForm:
    """A phrase relabelled by first occurrence onto the canonical alphabet."""

    relabelled: GaussPhrase

    @property
    def key(self) -> str:
        return format_phrase(self.relabelled)

    def __str__(self) -> str:
        return self.key


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

def parse_word(text: str) -> GaussWord:
    """Parse the external form of a Gauss word ("-" or "" is the empty word)."""
    text = text.strip()
    if text == EMPTY_WORD:
        return GaussWord("")
    if SEPARATOR in text:
        raise BadTokenError(f"{text!r} contains a component separator; a Gauss word has one component.")
    return GaussWord(text)


def parse_phrase(text: str) -> GaussPhrase:
    """Parse `component ('|' component)*`; empty components are allowed."""
    text = text.strip()
    parts = tuple("" if part == EMPTY_WORD else part for part in text.split(SEPARATOR))
    return GaussPhrase(parts)


def format_phrase(phrase: Union[GaussPhrase, Components]) -> str:
    components = phrase.components if isinstance(phrase, GaussPhrase) else phrase
    if len(components) == 1 and not components[0]:
        return EMPTY_WORD
    return SEPARATOR.join(components)


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------

def canonical_components(components: Components) -> Components:
    """Rename letters to A, B, C, ... in order of first occurrence."""
    mapping: Dict[str, str] = {}
    out: List[str] = []
    for comp in components:
        chars = []
        for ch in comp:
            new = mapping.get(ch)
            if new is None:
                new = CANONICAL_ALPHABET[len(mapping)]
                mapping[ch] = new
            chars.append(new)
        out.append("".join(chars))
    return tuple(out)


def canonicalize(phrase: PhraseLike) -> CanonicalForm:
    phrase = as_phrase(phrase)
    return CanonicalForm(GaussPhrase._trusted(canonical_components(phrase.components)))


def is_isomorphic(a: PhraseLike, b: PhraseLike) -> bool:
    a, b = as_phrase(a), as_phrase(b)
    if a.n_components != b.n_components:
        return False
    return canonical_components(a.components) == canonical_components(b.components)


# ---------------------------------------------------------------------------
# Letter helpers
# ---------------------------------------------------------------------------

def letters(phrase: PhraseLike) -> List[Letter]:
    """Distinct letters in canonical-alphabet order."""
    phrase = as_phrase(phrase)
    return sorted(set("".join(phrase.components)), key=letter_order)


def occurrence_map(components: Components) -> Dict[Letter, List[Point]]:
    """Both occurrences of every letter, in reading order."""
    occ: Dict[Letter, List[Point]] = {}
    for c, comp in enumerate(components):
        for p, ch in enumerate(comp):
            occ.setdefault(ch, []).append((c, p))
    return occ


def letter_site(word: GaussWord, letter: Letter) -> Tuple[str, str, str]:
    """Split ``word`` as x·letter·y·letter·z and return (x, y, z)."""
    text = word.letters
    first = text.find(letter) if letter else -1
    if first < 0:
        raise MissingLetterError(f"Letter {letter!r} does not occur in {word}.")
    second = text.index(letter, first + 1)
    return text[:first], text[first + 1:second], text[second + 1:]


def fresh_letters(used: Iterable[Letter], count: int, after_max: bool = False) -> List[Letter]:
    """Unused canonical letters in alphabet order.

    With ``after_max`` the letters after the largest used one are taken first,
    wrapping round to the unused letters below it.
    """
    used = set(used)
    pool = [ch for ch in CANONICAL_ALPHABET if ch not in used]
    if after_max and used:
        top = max(letter_order(ch) for ch in used)
        pool = [ch for ch in pool if letter_order(ch) > top] + [ch for ch in pool if letter_order(ch) < top]
    if len(pool) < count:
        raise CapacityError(
            f"Need {count} fresh letters but only {len(pool)} of {MAX_RANK} remain unused."
        )
    return pool[:count]


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def random_word(rng: random.Random, rank: int, alphabet: str = CANONICAL_ALPHABET) -> GaussWord:
    """A uniformly shuffled Gauss word on the first ``rank`` letters of ``alphabet``."""
    if rank > len(alphabet):
        raise CapacityError(f"Rank {rank} exceeds the alphabet size {len(alphabet)}.")
    pool = list(alphabet[:rank]) * 2
    rng.shuffle(pool)
    return GaussWord("".join(pool))


def random_phrase(
    rng: random.Random,
    rank: int,
    n_components: int,
    alphabet: str = CANONICAL_ALPHABET,
) -> GaussPhrase:
    """A random Gauss word cut into ``n_components`` (possibly empty) components."""
    if n_components < 1:
        raise ArityError("A Gauss phrase has at least one component.")
    text = random_word(rng, rank, alphabet).letters
    cuts = sorted(rng.randint(0, len(text)) for _ in range(n_components - 1))
    bounds = [0, *cuts, len(text)]
    return GaussPhrase._trusted(tuple(text[bounds[i]:bounds[i + 1]] for i in range(n_components)))


def enumerate_canonical_words(rank: int) -> Iterator[GaussWord]:
    """All canonical Gauss words of the given rank, (2n)!/(2^n n!) of them."""
    if rank > MAX_RANK:
        raise CapacityError(f"Rank {rank} exceeds the alphabet size {MAX_RANK}.")
    length = 2 * rank
    # Depth-first: either open the next new letter or close one already open.
    stack: List[Tuple[str, int, Tuple[str, ...]]] = [("", 0, ())]
    while stack:
        prefix, opened, pending = stack.pop()
        if len(prefix) == length:
            yield GaussWord._trusted(prefix)
            continue
        options = []
        if opened < rank:
            letter = CANONICAL_ALPHABET[opened]
            options.append((prefix + letter, opened + 1, pending + (letter,)))
        for letter in pending:
            options.append((prefix + letter, opened, tuple(p for p in pending if p != letter)))
        stack.extend(reversed(options))


def phrase_from_components(components: Sequence[str], validate: bool = True) -> GaussPhrase:
    comps = tuple(components)
    if validate:
        return GaussPhrase(comps)
    return GaussPhrase._trusted(comps)


def rank_of(components: Components) -> int:
    return sum(len(c) for c in components) // 2


def first_letter_index(text: str, letter: Letter) -> Optional[int]:
    index = text.find(letter)
    return index if index >= 0 else None
