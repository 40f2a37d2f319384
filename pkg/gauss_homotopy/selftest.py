"""
Replays the published worked examples and the H3 uninvolved-letter table.

Each case is a function returning (passed, detail). ``run_selftest`` never
raises; a case that throws is recorded as failed.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

from .coverings import cover, height_bounds, lift, lift_family, odd_letters, syntactic_height
from .moves import HomotopyPolicy, MoveKind, apply_move, enumerate_moves, parse_move, replay
from .s_invariant import compute_S, compute_S_m, transpose_S, unordered_key
from .search import SearchConfig, Verdict, are_homotopic_bounded
from .words import is_isomorphic, parse_phrase, parse_word
from .z_invariant import (
    TABLE_ONE,
    compute_z,
    compute_z_o,
    instantiate_table_row,
    is_nonzero,
    phrase_for_letter,
    trivial_phrase,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]


@dataclass
class CaseResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SelftestSummary:
    seed: int
    results: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed


def _expect(actual, expected) -> Outcome:
    return actual == expected, f"got {actual!r}, expected {expected!r}"


def _s_two_component() -> Outcome:
    return _expect(compute_S(parse_phrase("CEBE|ABAC")).encode(), "00;01/00;10")


def _s_trivial_phrases() -> Outcome:
    left = compute_S(parse_phrase("|ABACDCEBED")).encode()
    right = compute_S(parse_phrase("ABACDCEBED|")).encode()
    return _expect((left, right), ("00/00", "00/00"))


def _transpose_fixed() -> Outcome:
    value = compute_S(parse_phrase("CEBE|ABAC"))
    return _expect(transpose_S(value), value)


def _unordered_keys_differ() -> Outcome:
    a, b = unordered_key(parse_phrase("CEBE|ABAC")), unordered_key(parse_phrase("|ABACDCEBED"))
    return a != b, f"{a} vs {b}"


def _s_m_values() -> Outcome:
    expected = {
        "B|CDCBD": "01/10;01;11",
        "ACDC|AD": "00;01/00",
        "D|ABABD": "01/10",
        "CB|ABAC": "00/00;10",
    }
    actual = {text: compute_S_m(parse_phrase(text)).encode() for text in expected}
    if len(set(actual.values())) != 4:
        return False, f"keys not distinct: {actual}"
    return _expect(actual, expected)


def _letter_phrases() -> Outcome:
    w = parse_word("ABACDCEBED")
    got = (str(phrase_for_letter(w, "D")), str(phrase_for_letter(w, "B")))
    return _expect(got, ("CEBE|ABAC", "ACDCE|AED"))


def _z_nonzero() -> Outcome:
    w = parse_word("ABACDCEBED")
    expected = {unordered_key(parse_phrase("CEBE|ABAC")), unordered_key(trivial_phrase(w))}
    z = compute_z(w)
    if not compute_z(parse_word("")).is_zero():
        return False, "z of the empty word is not zero"
    return _expect(set(z.odd_keys), expected)


def _z_versus_z_o() -> Outcome:
    w = parse_word("ABACDCBD")
    z, z_o = compute_z(w), compute_z_o(w)
    expected = {compute_S_m(parse_phrase(t)).encode() for t in ("B|CDCBD", "ACDC|AD", "D|ABABD", "CB|ABAC")}
    if is_nonzero(z):
        return False, f"z is {z.sorted_keys()}"
    return _expect(set(z_o.odd_keys), expected)


def _move_sequence() -> Outcome:
    steps = [("ABACDCBD", "H3c@1:1,3,6", "BACADBCD"), ("BACADBCD", "SHIFT@1", "ACADBCDB"), ("ACADBCDB", "H2a@1:4,7", "ACAC")]
    for source, move, target in steps:
        got = str(apply_move(parse_word(source), parse_move(move)))
        if got != target:
            return False, f"{move} on {source} gave {got}, expected {target}"
    return True, ""


def _separator_restriction() -> Outcome:
    phrase = parse_phrase("AB|BAC|C")
    moves = enumerate_moves(phrase, HomotopyPolicy.closed_homotopy())
    h2 = [m for m in moves if m.kind is MoveKind.H2]
    h1 = [m for m in moves if m.kind is MoveKind.H1]
    if len(h2) != 1 or h1:
        return False, f"H2 moves {h2}, H1 moves {h1}"
    return _expect(str(apply_move(phrase, h2[0])), "|C|C")


def _search(a: str, b: str, policy: HomotopyPolicy, cap: int, expected: Verdict) -> Outcome:
    source, target = parse_phrase(a), parse_phrase(b)
    result = are_homotopic_bounded(source, target, SearchConfig(policy, rank_cap=cap))
    if result.verdict is not expected:
        return False, f"{a} vs {b}: {result.verdict.value}"
    if result.equivalent and not is_isomorphic(replay(source, result.certificate, policy), target):
        return False, f"certificate {result.certificate_lines()} does not replay"
    return True, f"{result.explored} states"


def _cover_examples() -> Outcome:
    w = parse_word("ABCADBECED")
    checks = [
        (odd_letters(w), ["B", "E"]),
        (str(cover(w)), "ACADCD"),
        (is_isomorphic(lift(w), parse_word("AXBXCADBYEYCED")), True),
        (str(lift(parse_word("ABBA"))), "ABBA"),
        (is_isomorphic(lift(parse_word("ABAB")), parse_word("XAXYBYAB")), True),
        (str(cover(parse_word("ABACDCEBED"))), "DD"),
    ]
    for actual, expected in checks:
        if actual != expected:
            return False, f"got {actual!r}, expected {expected!r}"
    return True, ""


def _lift_family_heights() -> Outcome:
    w = parse_word("ABACDCEBED")
    heights = []
    for i in range(6):
        wi = lift_family(w, i)
        compute_z(wi)
        heights.append(syntactic_height(wi)[0])
    return _expect(heights, [1 + i for i in range(6)])


def _height_bounds_differ() -> Outcome:
    w = parse_word("ABACDCBD")
    closed = height_bounds(w, SearchConfig(rank_slack=0))
    opened = height_bounds(w, SearchConfig(rank_slack=0), open_homotopy=True)
    return _expect(((closed.lower, closed.upper), (opened.lower, opened.upper)), ((0, 0), (1, 1)))


def _table_cases(rng: random.Random, trials: int) -> Callable[[], Outcome]:
    def check() -> Outcome:
        for row in TABLE_ONE:
            for _ in range(trials):
                instance = instantiate_table_row(row, rng)
                p1, p2 = instance.phrases()
                if unordered_key(p1) != unordered_key(p2):
                    return False, f"case {row.case}: {instance.w1} vs {instance.w2}"
        return True, f"{len(TABLE_ONE) * trials} instances"
    return check


def build_cases(seed: int, table_trials: int) -> List[Tuple[str, Callable[[], Outcome]]]:
    closed, opened = HomotopyPolicy.closed_homotopy(), HomotopyPolicy.open_homotopy()
    rng = random.Random(seed)
    return [
        ("S of CEBE|ABAC", _s_two_component),
        ("S of the trivial phrases", _s_trivial_phrases),
        ("transposition fixes S(CEBE|ABAC)", _transpose_fixed),
        ("unordered keys separate u(w,D) and t(w)", _unordered_keys_differ),
        ("S_m values of ABACDCBD", _s_m_values),
        ("letter phrases of ABACDCEBED", _letter_phrases),
        ("z of ABACDCEBED", _z_nonzero),
        ("z vanishes but z_o does not on ABACDCBD", _z_versus_z_o),
        ("H3c, shift, H2a sequence", _move_sequence),
        ("pattern pairs never straddle a separator", _separator_restriction),
        ("ABACDCBD is trivial", lambda: _search("ABACDCBD", "-", closed, 4, Verdict.EQUIVALENT)),
        ("ABACDCBD is not open-trivial", lambda: _search("ABACDCBD", "-", opened, 5, Verdict.NOT_EQUIVALENT)),
        ("lift of ABAB is homotopic to ABAB", lambda: _search("XAXYBYAB", "ABAB", closed, 4, Verdict.EQUIVALENT)),
        ("ABAB is trivial by one H2a", lambda: _search("ABAB", "-", closed, 3, Verdict.EQUIVALENT)),
        ("ABACDCEBED is not trivial", lambda: _search("ABACDCEBED", "-", closed, 5, Verdict.NOT_EQUIVALENT)),
        ("cover and lift examples", _cover_examples),
        ("lift family heights", _lift_family_heights),
        ("height and open height of ABACDCBD", _height_bounds_differ),
        ("uninvolved letters under H3", _table_cases(rng, table_trials)),
    ]


def run_selftest(seed: int = 0, table_trials: int = 20) -> SelftestSummary:
    summary = SelftestSummary(seed)
    for name, check in build_cases(seed, table_trials):
        try:
            passed, detail = check()
        except Exception as exc:  # noqa: BLE001
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        logger.debug("%s: %s %s", name, "ok" if passed else "FAIL", detail)
        summary.results.append(CaseResult(name, passed, detail))
    logger.info("Self-test: %d passed, %d failed (seed %d)", summary.passed, summary.failed, seed)
    return summary
