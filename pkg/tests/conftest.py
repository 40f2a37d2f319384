import random

import pytest
from hypothesis import strategies as st

from gauss_homotopy.moves import apply_move, enumerate_moves
from gauss_homotopy.words import CANONICAL_ALPHABET, GaussPhrase, GaussWord

DEFAULT_SEED = 20240101


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=DEFAULT_SEED, help="Seed for randomized suites.")


def pytest_report_header(config):
    return f"gauss-homotopy random seed: {config.getoption('--seed')}"


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@st.composite
def gauss_words(draw, min_rank: int = 0, max_rank: int = 6) -> GaussWord:
    rank = draw(st.integers(min_rank, max_rank))
    letters = draw(st.permutations(list(CANONICAL_ALPHABET[:rank]) * 2))
    return GaussWord("".join(letters))


@st.composite
def gauss_phrases(draw, max_rank: int = 6, max_components: int = 3, min_components: int = 1) -> GaussPhrase:
    word = draw(gauss_words(max_rank=max_rank)).letters
    n = draw(st.integers(min_components, max_components))
    cuts = sorted(draw(st.lists(st.integers(0, len(word)), min_size=n - 1, max_size=n - 1)))
    bounds = [0, *cuts, len(word)]
    return GaussPhrase(tuple(word[bounds[i]:bounds[i + 1]] for i in range(n)))


def apply_random_move(rng: random.Random, phrase, policy, rank_cap: int = 6):
    """One uniformly chosen legal move (insertions included), or None if there is none."""
    moves = enumerate_moves(phrase, policy, include_insertions=True, rank_cap=rank_cap)
    if not moves:
        return None
    return apply_move(phrase, rng.choice(moves))
