"""
Invariant commands: s, sm, z, zo.
"""

import argparse

from ..core import HomotopyConfig
from ..s_invariant import compute_S, compute_S_m, format_matrices, transpose_S
from ..words import canonicalize, parse_phrase, parse_word
from ..z_invariant import compute_z, compute_z_o, letter_classes, trivial_key
from .base import BaseCommand, Report
from .words import PHRASE_ARGUMENT

WORD_ARGUMENT = {"name": "word", "help": "Gauss word ('-' for the empty word)."}


class SCommand(BaseCommand):
    def __init__(self):
        super().__init__("s", "Compute the S invariant as 0/1 matrices.", [PHRASE_ARGUMENT])

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        value = compute_S(phrase)
        result = {"matrices": value.as_lists(), "encoding": value.encode()}
        lines = [format_matrices(value)]
        if phrase.n_components == 2:
            key = min(value.encode(), transpose_S(value).encode())
            result["unordered_key"] = key
            lines.append(f"unordered key: {key}")
        return Report(self.name, args.phrase, canonicalize(phrase).key, result, lines=lines)


class SMCommand(BaseCommand):
    def __init__(self):
        super().__init__("sm", "Compute S_m of a 2-component phrase (first closed, second open).", [PHRASE_ARGUMENT])

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        value = compute_S_m(phrase)
        result = {"matrices": value.as_lists(), "encoding": value.encode()}
        return Report(self.name, args.phrase, canonicalize(phrase).key, result, lines=[format_matrices(value)])


class _ZCommand(BaseCommand):
    flavour = "z"
    label = "z-image (S-keyed)"

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        word = parse_word(args.word)
        value = compute_z(word) if self.flavour == "z" else compute_z_o(word)
        keys = value.sorted_keys()
        result = {
            "word": str(word),
            "z_keys": keys,
            "nonzero": bool(keys),
            "letter_keys": letter_classes(word, self.flavour),
            "trivial_key": trivial_key(word, self.flavour),
        }
        lines = [f"{self.label}: {'nonzero' if keys else 'zero'}"] + [f"  {key}" for key in keys]
        return Report(
            self.name, args.word, canonicalize(word).key, result,
            notes=[self.label], nontrivial=bool(keys), lines=lines,
        )


class ZCommand(_ZCommand):
    def __init__(self):
        super().__init__("z", "Compute the S-keyed image of the z invariant.", [WORD_ARGUMENT])


class ZOCommand(_ZCommand):
    flavour = "z_o"
    label = "z_o-image (S_m-keyed)"

    def __init__(self):
        super().__init__("zo", "Compute the S_m-keyed image of the open invariant z_o.", [WORD_ARGUMENT])
