import itertools
import math

import pytest
from hypothesis import given, strategies as st

from conftest import gauss_phrases, gauss_words
from gauss_homotopy.errors import ArityError, BadTokenError, CapacityError, MissingLetterError, NonGaussError
from gauss_homotopy.words import (
    CANONICAL_ALPHABET,
    GaussPhrase,
    GaussWord,
    canonicalize,
    enumerate_canonical_words,
    format_phrase,
    fresh_letters,
    is_isomorphic,
    letter_site,
    letters,
    parse_phrase,
    parse_word,
    random_phrase,
    random_word,
)


class TestParsing:
    def test_word(self):
        w = parse_word("ABACDCBD")
        assert w.rank == 4 and w.length == 8

    def test_empty_word(self):
        assert parse_word("-").letters == ""
        assert parse_word("").letters == ""
        assert str(parse_word("-")) == "-"

    def test_phrase_with_empty_components(self):
        p = parse_phrase("|ABAB|")
        assert p.components == ("", "ABAB", "")
        assert p.rank == 2

    def test_single_empty_component(self):
        assert parse_phrase("-").components == ("",)
        assert format_phrase(parse_phrase("-")) == "-"

    def test_two_empty_components(self):
        assert format_phrase(parse_phrase("|")) == "|"

    @pytest.mark.parametrize("text", ["ABA", "AAA", "AB", "ABCABD"])
    def test_non_gauss(self, text):
        with pytest.raises(NonGaussError):
            parse_word(text)

    def test_letter_split_across_components_is_fine(self):
        assert parse_phrase("AB|BA").n_components == 2

    def test_odd_count_across_components(self):
        with pytest.raises(NonGaussError):
            parse_phrase("AB|B")

    @pytest.mark.parametrize("text", ["A A", "A-A", "AéAé", "A*A*"])
    def test_bad_tokens(self, text):
        with pytest.raises(BadTokenError):
            parse_word(text)

    def test_separator_in_word(self):
        with pytest.raises(BadTokenError):
            parse_word("A|A")

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_word("ABA")

    def test_no_components(self):
        with pytest.raises(ArityError):
            GaussPhrase(())


class TestCanonical:
    def test_relabel_by_first_occurrence(self):
        assert canonicalize(parse_word("XAXYBYAB")).key == "ABACDCBD"

    def test_positions_kept_across_components(self):
        assert canonicalize(parse_phrase("CEBE|ABAC")).key == "ABCB|DCDA"

    def test_isomorphism(self):
        assert is_isomorphic(parse_phrase("B|B"), parse_phrase("D|D"))
        assert not is_isomorphic(parse_phrase("AB|AB"), parse_phrase("ABAB"))
        assert not is_isomorphic(parse_word("ABAB"), parse_word("ABBA"))

    @given(gauss_phrases())
    def test_idempotent(self, phrase):
        once = canonicalize(phrase).relabelled
        assert canonicalize(once).relabelled == once

    @given(gauss_phrases())
    def test_canonical_form_is_isomorphic(self, phrase):
        assert is_isomorphic(phrase, canonicalize(phrase).relabelled)

    @given(gauss_phrases(max_rank=4), gauss_phrases(max_rank=4), st.permutations(CANONICAL_ALPHABET[:4]), st.booleans())
    def test_isomorphism_matches_bijection_search(self, a, b, image, relabel):
        if relabel:
            table = str.maketrans(CANONICAL_ALPHABET[:4], "".join(image))
            b = GaussPhrase(tuple(c.translate(table) for c in a.components))
        assert is_isomorphic(a, b) == _bijection_exists(a, b)


def _bijection_exists(a, b) -> bool:
    source, target = letters(a), letters(b)
    if len(a.components) != len(b.components) or len(source) != len(target):
        return False
    for image in itertools.permutations(target):
        table = str.maketrans("".join(source), "".join(image))
        if tuple(c.translate(table) for c in a.components) == b.components:
            return True
    return False


class TestLetters:
    def test_letter_site(self):
        assert letter_site(parse_word("ABACDCEBED"), "D") == ("ABAC", "CEBE", "")

    def test_missing_letter(self):
        with pytest.raises(MissingLetterError):
            letter_site(parse_word("ABAB"), "C")

    def test_letters_in_alphabet_order(self):
        assert letters(parse_phrase("aZ|Za")) == ["Z", "a"]

    def test_fresh_letters(self):
        assert fresh_letters("ABD", 2) == ["C", "E"]
        assert fresh_letters("ABD", 2, after_max=True) == ["E", "F"]

    def test_fresh_letters_wrap_round(self):
        used = CANONICAL_ALPHABET[1:]
        assert fresh_letters(used, 1, after_max=True) == ["A"]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            fresh_letters(CANONICAL_ALPHABET, 1)


class TestGenerators:
    @pytest.mark.parametrize("rank", range(6))
    def test_enumeration_count(self, rank):
        words = list(enumerate_canonical_words(rank))
        assert len(words) == math.factorial(2 * rank) // (2**rank * math.factorial(rank))
        assert len(set(words)) == len(words)
        assert all(canonicalize(w).key == (w.letters or "-") for w in words)

    def test_enumeration_validates(self):
        for w in enumerate_canonical_words(3):
            GaussWord(w.letters)

    def test_random_word(self, rng):
        w = random_word(rng, 5)
        assert w.rank == 5 and set(w.letters) == set("ABCDE")

    def test_random_phrase(self, rng):
        p = random_phrase(rng, 4, 3)
        assert p.n_components == 3 and p.rank == 4

    @given(gauss_words())
    def test_format_parse(self, word):
        assert parse_word(str(word)) == word
