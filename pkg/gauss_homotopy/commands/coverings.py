"""
Covering commands: parity, cover, lift, height.
"""

import argparse

from ..core import HomotopyConfig
from ..coverings import cover, cover_tower, height_bounds, lift_family, parity
from ..words import canonicalize, parse_word
from .base import BaseCommand, Report
from .invariants import WORD_ARGUMENT


class ParityCommand(BaseCommand):
    def __init__(self):
        super().__init__("parity", "Parity of every letter.", [WORD_ARGUMENT])

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        word = parse_word(args.word)
        table = {letter: p.value for letter, p in parity(word).items()}
        odd = [letter for letter, p in table.items() if p == "odd"]
        lines = [f"{letter}\t{p}" for letter, p in table.items()]
        return Report(self.name, args.word, canonicalize(word).key, {"parity": table, "odd": odd}, lines=lines)


class CoverCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "cover",
            "Delete the odd-parity letters.",
            [
                WORD_ARGUMENT,
                {"name": "--iterate", "action": "store_true", "default": False, "help": "Print the whole tower w_0 ... w_m."},
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        word = parse_word(args.word)
        result = {"cover": str(cover(word))}
        lines = [result["cover"]]
        if args.iterate:
            result["tower"] = [str(w) for w in cover_tower(word)]
            lines = result["tower"]
        return Report(self.name, args.word, canonicalize(word).key, result, lines=lines)


class LiftCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "lift",
            "Wrap every odd letter A as XAX with a fresh letter X.",
            [
                WORD_ARGUMENT,
                {"name": "--times", "type": int, "default": 1, "help": "Number of lifts to apply (default 1)."},
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        word = parse_word(args.word)
        lifted = lift_family(word, args.times)
        result = {"lift": str(lifted), "rank": lifted.rank}
        return Report(self.name, args.word, canonicalize(word).key, result, lines=[str(lifted)])


class HeightCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "height",
            "Syntactic height, base and homotopy height bounds.",
            [
                WORD_ARGUMENT,
                {"name": "--open", "action": "store_true", "default": False, "help": "Bound the open-homotopy height."},
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        word = parse_word(args.word)
        bounds = height_bounds(word, config.search_config(), args.open, config.refine_rank_limit)
        result = {
            "syntactic_height": bounds.syntactic,
            "base": str(bounds.base),
            "lower": bounds.lower,
            "upper": bounds.upper,
            "exact": bounds.exact,
        }
        lines = [
            f"syntactic height: {bounds.syntactic} (base {bounds.base})",
            f"height bounds: {bounds.lower} <= height <= {bounds.upper}",
        ]
        notes = ["syntactic height (upper bound of homotopy height)", *bounds.notes]
        if args.open:
            notes.insert(0, "open homotopy")
        return Report(self.name, args.word, canonicalize(word).key, result, notes=notes, lines=lines)
