"""
Commands on raw phrases: validate, canon, moves, apply.
"""

import argparse
import logging
from pathlib import Path

from ..core import HomotopyConfig
from ..errors import GaussHomotopyError
from ..moves import apply_move, enumerate_moves, format_move, parse_certificate, parse_move
from ..words import canonicalize, format_phrase, parse_phrase
from .base import POLICY_ARGUMENT, RANK_CAP_ARGUMENT, BaseCommand, Report

logger = logging.getLogger(__name__)

PHRASE_ARGUMENT = {"name": "phrase", "help": "Gauss phrase, components separated by '|' ('-' for the empty word)."}


class ValidateCommand(BaseCommand):
    def __init__(self):
        super().__init__("validate", "Check that the input is a Gauss phrase.", [PHRASE_ARGUMENT])

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        result = {"components": phrase.n_components, "rank": phrase.rank}
        line = f"valid: {phrase.n_components} component(s), rank {phrase.rank}"
        return Report(self.name, args.phrase, canonicalize(phrase).key, result, lines=[line])


class CanonCommand(BaseCommand):
    def __init__(self):
        super().__init__("canon", "Relabel letters in order of first occurrence.", [PHRASE_ARGUMENT])

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        key = canonicalize(parse_phrase(args.phrase)).key
        return Report(self.name, args.phrase, key, {"canonical": key}, lines=[key])


class MovesCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "moves",
            "List every legal move and its result.",
            [
                PHRASE_ARGUMENT,
                POLICY_ARGUMENT,
                {"name": "--insertions", "action": "store_true", "default": False, "help": "Include inserting moves."},
                RANK_CAP_ARGUMENT,
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        policy = config.homotopy_policy(args.policy)
        moves = enumerate_moves(phrase, policy, include_insertions=args.insertions, rank_cap=args.rank_cap)
        rows = [{"move": format_move(m), "result": format_phrase(apply_move(phrase, m))} for m in moves]
        lines = [f"{row['move']}\t{row['result']}" for row in rows]
        return Report(
            self.name, args.phrase, canonicalize(phrase).key, {"moves": rows},
            notes=[f"policy: {policy.name}"], lines=lines,
        )


class ApplyCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "apply",
            "Apply moves (or a certificate file) to a phrase.",
            [
                PHRASE_ARGUMENT,
                {"name": "moves", "nargs": "*", "help": "Moves in certificate format, e.g. H3c@1:1,3,6."},
                {"name": "--certificate", "default": None, "help": "Read moves from this file, one per line."},
                POLICY_ARGUMENT,
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        moves = [parse_move(text) for text in args.moves]
        if args.certificate:
            try:
                moves += parse_certificate(Path(args.certificate).read_text(encoding="utf-8").splitlines())
            except OSError as exc:
                raise GaussHomotopyError(f"Cannot read certificate {args.certificate}: {exc}") from None
        policy = config.homotopy_policy(args.policy) if args.policy else None
        current = phrase
        lines = [format_phrase(current)]
        for move in moves:
            current = apply_move(current, move, policy)
            lines.append(f"{format_move(move)}\t{format_phrase(current)}")
        result = {"result": format_phrase(current), "moves": [format_move(m) for m in moves]}
        return Report(self.name, args.phrase, canonicalize(phrase).key, result, lines=lines)
