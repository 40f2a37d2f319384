import pytest
from hypothesis import given

from conftest import apply_random_move, gauss_words
from gauss_homotopy.coverings import (
    Parity,
    cover,
    cover_tower,
    height_bounds,
    lift,
    lift_family,
    odd_letters,
    parity,
    syntactic_height,
)
from gauss_homotopy.errors import CapacityError
from gauss_homotopy.moves import HomotopyPolicy, apply_move, parse_move
from gauss_homotopy.search import SearchConfig
from gauss_homotopy.words import CANONICAL_ALPHABET, GaussWord, is_isomorphic, parse_word, random_word
from gauss_homotopy.z_invariant import compute_z


class TestParity:
    def test_golden(self):
        table = parity(parse_word("ABCADBECED"))
        assert table == {
            "A": Parity.EVEN, "B": Parity.ODD, "C": Parity.EVEN, "D": Parity.EVEN, "E": Parity.ODD,
        }
        assert odd_letters(parse_word("ABCADBECED")) == ["B", "E"]
        assert odd_letters(parse_word("ACADCD")) == ["A", "D"]

    @given(gauss_words())
    def test_odd_count_is_even(self, word):
        assert len(odd_letters(word)) % 2 == 0

    @given(gauss_words(min_rank=1))
    def test_shift_keeps_parity(self, word):
        shifted = GaussWord(str(apply_move(word, parse_move("SHIFT@1"))))
        assert parity(shifted) == parity(word)


class TestCover:
    def test_goldens(self):
        assert str(cover(parse_word("ABCADBECED"))) == "ACADCD"
        assert str(cover(parse_word("ABACDCEBED"))) == "DD"
        assert str(cover(parse_word("ABAB"))) == "-"

    def test_lift_goldens(self):
        assert is_isomorphic(lift(parse_word("ABCADBECED")), parse_word("AXBXCADBYEYCED"))
        assert is_isomorphic(lift(parse_word("ABAB")), parse_word("XAXYBYAB"))
        assert str(lift(parse_word("ABBA"))) == "ABBA"
        assert str(lift(parse_word("ACADCD"))) == "EAECAFDFCD"

    def test_lift_uses_letters_after_the_largest(self):
        assert str(lift(parse_word("ABAB"))) == "CACDBDAB"

    @given(gauss_words(max_rank=8))
    def test_cover_inverts_lift(self, word):
        assert cover(lift(word)) == word

    @given(gauss_words(min_rank=1))
    def test_cover_drops_two_letters_or_none(self, word):
        covered = cover(word)
        assert covered.rank == word.rank or covered.rank <= word.rank - 2

    def test_lift_capacity(self):
        head, tail = CANONICAL_ALPHABET[:31], CANONICAL_ALPHABET[31:]
        word = GaussWord("".join(a + b + a for a, b in zip(head, tail)) + tail)
        assert odd_letters(word)
        with pytest.raises(CapacityError):
            lift(word)


class TestTower:
    def test_golden(self):
        assert [str(w) for w in cover_tower(parse_word("ABCADBECED"))] == ["ABCADBECED", "ACADCD", "CC"]

    def test_syntactic_height(self):
        height, base = syntactic_height(parse_word("ABACDCEBED"))
        assert (height, str(base)) == (1, "DD")

    def test_empty_word(self):
        assert syntactic_height(parse_word("-")) == (0, parse_word("-"))

    def test_lift_family(self):
        w = parse_word("ABACDCEBED")
        for i in range(6):
            wi = lift_family(w, i)
            assert wi.rank == 5 + 4 * i
            assert syntactic_height(wi)[0] == 1 + i
            compute_z(wi)
        assert cover(lift_family(w, 1)) == w

    def test_lift_family_rejects_negative(self):
        with pytest.raises(ValueError):
            lift_family(parse_word("AA"), -1)


class TestHeightBounds:
    def test_homotopy_and_open_homotopy_heights_differ(self):
        w = parse_word("ABACDCBD")
        closed = height_bounds(w, SearchConfig(rank_slack=0))
        opened = height_bounds(w, SearchConfig(rank_slack=0), open_homotopy=True)
        assert (closed.lower, closed.upper, closed.exact) == (0, 0, True)
        assert (opened.lower, opened.upper, opened.exact) == (1, 1, True)

    def test_nontrivial_word_is_exact(self):
        bounds = height_bounds(parse_word("ABACDCEBED"), SearchConfig(rank_slack=0))
        assert (bounds.syntactic, str(bounds.base)) == (1, "DD")
        assert (bounds.lower, bounds.upper) == (1, 1)

    def test_refine_limit_skips_search(self):
        bounds = height_bounds(parse_word("ABACDCBD"), refine_rank_limit=1)
        assert bounds.upper == bounds.syntactic == 2
        assert any("refine limit" in note for note in bounds.notes)


class TestCoverInvariance:
    def test_z_of_cover_under_homotopy(self, rng):
        policy = HomotopyPolicy.closed_homotopy()
        for _ in range(1000):
            word = random_word(rng, rng.randint(0, 6))
            moved = apply_random_move(rng, word, policy)
            if moved is None:
                continue
            moved_word = GaussWord(moved.components[0])
            assert compute_z(cover(moved_word)) == compute_z(cover(word)), (str(word), str(moved_word))
