"""
Linking vectors and the S / S_m invariants of Gauss phrases.

Vectors in (Z/2)^n are plain tuples of 0/1 ints indexed by component, so
the built-in tuple order is the required total order (at the first
differing index the vector with 0 is smaller).

Canonical encoding: the rows of a matrix are written as 0/1 strings joined
by ';' and the matrices of a tuple are joined by '/'. For example
S(CEBE|ABAC) encodes as "00;01/00;10".
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import ArityError, MissingLetterError, SpanError, SplitLetterError
from .words import GaussPhrase, Letter, PhraseLike, as_phrase, occurrence_map

logger = logging.getLogger(__name__)

BitVector = Tuple[int, ...]

# Encoded S / S_m value; used as a class key in z-images.
UnorderedKey = str


def zero_vector(n: int) -> BitVector:
    return (0,) * n


def add_vectors(u: BitVector, v: BitVector) -> BitVector:
    return tuple((a + b) & 1 for a, b in zip(u, v))


def all_vectors(n: int) -> List[BitVector]:
    return [tuple(bits) for bits in itertools.product((0, 1), repeat=n)]


def involution(v: BitVector, x: BitVector) -> BitVector:
    """c_v(x) = v - x, which over Z/2 is v + x."""
    return add_vectors(v, x)


def orbit_representative(v: BitVector, x: BitVector) -> BitVector:
    return min(x, involution(v, x))


def vector_text(v: BitVector) -> str:
    return "".join(str(bit) for bit in v)


@dataclass(frozen=True)
class Orbit:
    members: Tuple[BitVector, ...]

    @property
    def representative(self) -> BitVector:
        return min(self.members)

    @property
    def is_fixed_point(self) -> bool:
        return len(self.members) == 1


def orbit_map(v: BitVector) -> List[Orbit]:
    """Partition of all vectors of length len(v) into c_v-orbits, by representative."""
    orbits: Dict[BitVector, Orbit] = {}
    for x in all_vectors(len(v)):
        rep = orbit_representative(v, x)
        if rep not in orbits:
            orbits[rep] = Orbit(tuple(sorted({x, involution(v, x)})))
    return [orbits[rep] for rep in sorted(orbits)]


@dataclass(frozen=True)
class Span:
    """Half-open slice [start, end) of one component."""

    component: int
    start: int
    end: int

    @classmethod
    def whole(cls, phrase: GaussPhrase, component: int) -> "Span":
        return cls(component, 0, len(phrase.components[component]))

    @classmethod
    def from_flat(cls, phrase: GaussPhrase, start: int, end: int) -> "Span":
        """Span given by offsets into the concatenated word."""
        offset = 0
        for c, comp in enumerate(phrase.components):
            if offset <= start and end <= offset + len(comp) and start <= end:
                return cls(c, start - offset, end - offset)
            offset += len(comp)
        raise SpanError(f"Span [{start}, {end}) crosses a component separator or leaves the phrase.")


def linking_vector(phrase: PhraseLike, span: Span) -> BitVector:
    """Bit i counts (mod 2) letters seen once in the span whose partner lies in component i."""
    phrase = as_phrase(phrase)
    n = phrase.n_components
    if not 0 <= span.component < n:
        raise SpanError(f"Component {span.component + 1} does not exist.")
    comp = phrase.components[span.component]
    if not 0 <= span.start <= span.end <= len(comp):
        raise SpanError(f"Span [{span.start}, {span.end}) is outside component {span.component + 1}.")
    inside = Counter(comp[span.start:span.end])
    occurrences = occurrence_map(phrase.components)
    bits = [0] * n
    for letter, count in inside.items():
        if count != 1:
            continue
        for c, p in occurrences[letter]:
            if not (c == span.component and span.start <= p < span.end):
                bits[c] ^= 1
    return tuple(bits)


def letter_linking_vector(phrase: PhraseLike, letter: Letter) -> BitVector:
    phrase = as_phrase(phrase)
    occurrences = occurrence_map(phrase.components).get(letter)
    if occurrences is None:
        raise MissingLetterError(f"Letter {letter!r} does not occur in {phrase}.")
    (c1, p1), (c2, p2) = occurrences
    if c1 != c2:
        raise SplitLetterError(f"Letter {letter!r} occurs in components {c1 + 1} and {c2 + 1}.")
    return linking_vector(phrase, Span(c1, p1 + 1, p2))


def _local_letters(phrase: GaussPhrase, component: int) -> List[Letter]:
    """Letters occurring twice in the given component, in order of first occurrence."""
    counts = Counter(phrase.components[component])
    return [letter for letter in dict.fromkeys(phrase.components[component]) if counts[letter] == 2]


def _odd_rows(vectors: List[BitVector]) -> Tuple[BitVector, ...]:
    counts = Counter(vectors)
    return tuple(sorted(v for v, count in counts.items() if count % 2 and any(v)))


@dataclass(frozen=True)
class SComponent:
    """Linking vector of the component plus the ascending non-zero rows."""

    linking_vector: BitVector
    rows: Tuple[BitVector, ...]

    @property
    def matrix(self) -> List[BitVector]:
        return [self.linking_vector, *self.rows]

    def encode(self) -> str:
        return ";".join(vector_text(row) for row in self.matrix)

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.matrix]


@dataclass(frozen=True)
class SValue:
    components: Tuple[SComponent, ...]

    def encode(self) -> str:
        return "/".join(comp.encode() for comp in self.components)

    def as_lists(self) -> List[List[List[int]]]:
        return [comp.as_lists() for comp in self.components]

    def __str__(self) -> str:
        return self.encode()


@dataclass(frozen=True)
class SMValue:
    first: SComponent
    second: SComponent  # rows are raw vectors, not orbit representatives

    def encode(self) -> str:
        return f"{self.first.encode()}/{self.second.encode()}"

    def as_lists(self) -> List[List[List[int]]]:
        return [self.first.as_lists(), self.second.as_lists()]

    def __str__(self) -> str:
        return self.encode()


def _s_component(phrase: GaussPhrase, k: int) -> SComponent:
    lv = linking_vector(phrase, Span.whole(phrase, k))
    reps = [orbit_representative(lv, letter_linking_vector(phrase, a)) for a in _local_letters(phrase, k)]
    # [0] always has the zero vector as representative, so dropping zero rows drops it.
    return SComponent(lv, _odd_rows(reps))


def compute_S(phrase: PhraseLike) -> SValue:
    phrase = as_phrase(phrase)
    return SValue(tuple(_s_component(phrase, k) for k in range(phrase.n_components)))


def _require_two(phrase: GaussPhrase, what: str) -> None:
    if phrase.n_components != 2:
        raise ArityError(f"{what} needs a 2-component phrase, got {phrase.n_components} component(s).")


def _transpose_component(comp: SComponent) -> SComponent:
    lv = comp.linking_vector[::-1]
    rows = tuple(sorted({orbit_representative(lv, row[::-1]) for row in comp.rows}))
    return SComponent(lv, rows)


def transpose_S(value: SValue) -> SValue:
    """S of the phrase with its two components exchanged."""
    if len(value.components) != 2:
        raise ArityError(f"Transposition needs a 2-component value, got {len(value.components)}.")
    first, second = value.components
    return SValue((_transpose_component(second), _transpose_component(first)))


def unordered_key(phrase: PhraseLike) -> UnorderedKey:
    phrase = as_phrase(phrase)
    _require_two(phrase, "The unordered key")
    value = compute_S(phrase)
    return min(value.encode(), transpose_S(value).encode())


def compute_S_m(phrase: PhraseLike) -> SMValue:
    """Mixed-homotopy invariant: first component closed, second open."""
    phrase = as_phrase(phrase)
    _require_two(phrase, "S_m")
    first = _s_component(phrase, 0)
    lv = linking_vector(phrase, Span.whole(phrase, 1))
    raw = [letter_linking_vector(phrase, a) for a in _local_letters(phrase, 1)]
    return SMValue(first, SComponent(lv, _odd_rows(raw)))


def format_matrices(value) -> str:
    """Bracketed 0/1 rows, one matrix per bracket group."""
    return " ".join("[" + " ".join(vector_text(row) for row in matrix) + "]" for matrix in value.as_lists())
