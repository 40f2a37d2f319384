"""
Search commands: search, reduce, classes, paper-selftest.
"""

import argparse
import dataclasses
import logging
from pathlib import Path

from ..core import HomotopyConfig
from ..errors import GaussHomotopyError
from ..search import SearchConfig, are_homotopic_bounded, homotopy_classes, reduce
from ..selftest import run_selftest
from ..words import canonicalize, format_phrase, parse_phrase
from .base import NODE_CAP_ARGUMENT, POLICY_ARGUMENT, RANK_CAP_ARGUMENT, BaseCommand, Report
from .words import PHRASE_ARGUMENT

logger = logging.getLogger(__name__)

SEARCH_ARGUMENTS = [POLICY_ARGUMENT, RANK_CAP_ARGUMENT, NODE_CAP_ARGUMENT]


def _search_config(args: argparse.Namespace, config: HomotopyConfig) -> SearchConfig:
    cfg = config.search_config(args.policy, args.rank_cap)
    if args.node_cap is not None:
        cfg = dataclasses.replace(cfg, node_cap=args.node_cap)
    return cfg


class SearchCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "search",
            "Decide within bounds whether two phrases are homotopic.",
            [
                {"name": "source", "help": "First Gauss phrase."},
                {"name": "target", "help": "Second Gauss phrase."},
                *SEARCH_ARGUMENTS,
                {"name": "--certificate", "default": None, "help": "Write the certificate moves to this file."},
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        source, target = parse_phrase(args.source), parse_phrase(args.target)
        cfg = _search_config(args, config)
        outcome = are_homotopic_bounded(source, target, cfg)
        certificate = outcome.certificate_lines() if outcome.certificate is not None else None
        if args.certificate and certificate is not None:
            try:
                Path(args.certificate).write_text("".join(line + "\n" for line in certificate), encoding="utf-8")
            except OSError as exc:
                raise GaussHomotopyError(f"Cannot write certificate {args.certificate}: {exc}") from None
            logger.info("Wrote %d certificate moves to %s", len(certificate), args.certificate)
        result = {
            "verdict": outcome.verdict.value,
            "certificate": certificate,
            "explored": outcome.explored,
            "rank_cap": outcome.rank_cap,
            "target": canonicalize(target).key,
        }
        lines = [f"{outcome.verdict.value} (rank cap {outcome.rank_cap}, {outcome.explored} states)"]
        lines += certificate or []
        notes = [f"policy: {cfg.policy.name}", "verdicts are within the stated rank and node caps"]
        return Report(self.name, args.source, canonicalize(source).key, result, notes=notes, lines=lines)


class ReduceCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "reduce",
            "Find the smallest-rank phrase reachable within bounds.",
            [PHRASE_ARGUMENT, *SEARCH_ARGUMENTS],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        phrase = parse_phrase(args.phrase)
        cfg = _search_config(args, config)
        outcome = reduce(phrase, cfg)
        certificate = [str(m) for m in outcome.certificate] if outcome.certificate is not None else None
        reduced = format_phrase(outcome.phrase)
        result = {
            "reduced": reduced,
            "rank": outcome.phrase.rank,
            "certificate": certificate,
            "complete": outcome.complete,
            "explored": outcome.explored,
        }
        lines = [reduced, *(certificate or [])]
        notes = [f"policy: {cfg.policy.name}"]
        if not outcome.complete:
            notes.append("node cap reached; a smaller rank may exist")
        return Report(self.name, args.phrase, canonicalize(phrase).key, result, notes=notes, lines=lines)


class ClassesCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "classes",
            "Partition the phrases in FILE (one per line) into bounded homotopy classes.",
            [{"name": "file", "help": "Input file; blank lines and '#' comments are skipped."}, *SEARCH_ARGUMENTS],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        try:
            raw = Path(args.file).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise GaussHomotopyError(f"Cannot read {args.file}: {exc}") from None
        texts = [line.strip() for line in raw if line.strip() and not line.lstrip().startswith("#")]
        phrases = [parse_phrase(text) for text in texts]
        partition = homotopy_classes(phrases, _search_config(args, config))
        groups = [[texts[i] for i in group] for group in partition.groups]
        result = {"groups": groups, "complete": partition.complete, "explored": partition.explored}
        notes = [] if partition.complete else ["node cap reached; classes may be split"]
        return Report(
            self.name, args.file, None, result, notes=notes,
            lines=[" ".join(group) for group in groups],
        )


class SelftestCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            "paper-selftest",
            "Replay the worked examples and the H3 uninvolved-letter table.",
            [
                {"name": "--seed", "type": int, "default": None, "help": "Seed for the table fillers (default from config)."},
                {"name": "--table-trials", "type": int, "default": None, "help": "Random instances per table row."},
            ],
        )

    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        seed = config.selftest_seed if args.seed is None else args.seed
        trials = config.table_trials if args.table_trials is None else args.table_trials
        summary = run_selftest(seed, trials)
        cases = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in summary.results]
        lines = [f"seed {seed}"]
        lines += [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if not r.passed else "") for r in summary.results]
        lines.append(f"{summary.passed} passed, {summary.failed} failed")
        result = {"seed": seed, "passed": summary.passed, "failed": summary.failed, "cases": cases}
        return Report(self.name, None, None, result, lines=lines, exit_status=1 if summary.failed else 0)
