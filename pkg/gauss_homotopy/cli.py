"""
Command-line interface for gauss-homotopy.
Usage:
    python -m gauss_homotopy z ABACDCEBED
    gauss-homotopy --json search ABACDCBD - --rank-cap 4   # if installed via pip
    gauss-homotopy batch inputs.txt --output reports.jsonl --resume
"""

import argparse
import json
import logging
import multiprocessing
import shlex
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from dotenv import load_dotenv

# Load .env from current directory so GAUSS_HOMOTOPY_CONFIG can be set per project
load_dotenv()

from .commands import Report, build_commands
from .commands.base import dump_json
from .core import HomotopyConfig, load_config
from .errors import GaussHomotopyError
from .utils.checkpoint import load_checkpoint, remove_checkpoint, save_checkpoint
from .validators import validate_report

logger = logging.getLogger("gauss_homotopy")

EXIT_OK = 0
EXIT_NONTRIVIAL = 1
EXIT_INPUT_ERROR = 2


def _setup_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    fmt = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    logging.basicConfig(level=level, format=fmt, stream=sys.stderr)


class _BatchLineError(Exception):
    """Raised instead of exiting when a batch line fails to parse."""


class _LineParser(argparse.ArgumentParser):
    """Argument parser for batch lines: never prints, never exits."""

    def error(self, message: str) -> None:
        raise _BatchLineError(message)

    def exit(self, status: int = 0, message: Optional[str] = None) -> None:
        raise _BatchLineError((message or "").strip() or f"line requested parser exit (status {status})")

    def _print_message(self, message: str, file=None) -> None:
        # help and version output would corrupt the record stream
        pass


def build_parser(parser_class=argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser = parser_class(
        prog="gauss-homotopy",
        description="Homotopy invariants and bounded homotopy search for Gauss words and phrases.",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to a YAML config file (overrides defaults, overridden by CLI flags). "
        "Defaults to $GAUSS_HOMOTOPY_CONFIG.",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        default=False,
        help="Print reports as JSON.",
    )
    parser.add_argument(
        "--expect-trivial",
        action="store_true",
        default=False,
        help="Exit with status 1 if an invariant certifies non-triviality.",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        default=False,
        help="Enable debug logging.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", metavar="COMMAND", parser_class=parser_class)
    subparsers.required = True
    for command in build_commands():
        command.register(subparsers)

    batch = subparsers.add_parser(
        "batch",
        help="Run one subcommand invocation per line of FILE.",
        description="Run one subcommand invocation per line of FILE; output one JSON record per line.",
    )
    batch.add_argument("file", help="Input file, e.g. lines like 'z ABACDCEBED'.")
    batch.add_argument("--output", default=None, help="Write records here instead of stdout (enables checkpoints).")
    batch.add_argument("--resume", action="store_true", default=False, help="Resume from OUTPUT.checkpoint.json.")
    batch.add_argument("--workers", type=int, default=None, help="Worker processes (default from config).")
    batch.set_defaults(command=None)
    return parser


def _check_schema(report: Report, config: HomotopyConfig) -> None:
    if not config.validate_reports:
        return
    ok, messages = validate_report(report.to_dict())
    if not ok:
        logger.warning("Report for %r failed schema validation: %s", report.command, "; ".join(messages))


def _render(report: Report, as_json: bool, config: HomotopyConfig) -> str:
    if not as_json:
        return report.to_text()
    _check_schema(report, config)
    return report.to_json()


def _exit_status(report: Report, expect_trivial: bool) -> int:
    if report.exit_status:
        return report.exit_status
    if expect_trivial and report.nontrivial:
        return EXIT_NONTRIVIAL
    return EXIT_OK


# ---------------------------------------------------------------------------
# Batch mode
# ---------------------------------------------------------------------------

_WORKER_STATE: Dict[str, Any] = {}


def _init_worker(config: HomotopyConfig) -> None:
    _WORKER_STATE["config"] = config
    _WORKER_STATE["parser"] = build_parser(_LineParser)


def _process_line(item: Tuple[int, str]) -> str:
    """Run one batch line and return its compact JSON record."""
    number, line = item
    text = line.strip()
    if not text or text.startswith("#"):
        return "{}"
    parser: argparse.ArgumentParser = _WORKER_STATE["parser"]
    config: HomotopyConfig = _WORKER_STATE["config"]
    try:
        args = parser.parse_args(shlex.split(text))
        if args.command is None:
            raise _BatchLineError("batch lines cannot start another batch")
        report = args.command.run(args, config)
        _check_schema(report, config)
        return report.to_json(indent=None)
    except (GaussHomotopyError, _BatchLineError, ValueError) as exc:
        logger.error("Line %d (%s): %s", number, text, exc)
        return dump_json({"line": number, "input": text, "error": str(exc)}, indent=None)


def _run_batch(args: argparse.Namespace, config: HomotopyConfig) -> int:
    path = Path(args.file)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        logger.error("Cannot read batch file %s: %s", path, exc)
        return EXIT_INPUT_ERROR

    records: List[str] = []
    if args.output and args.resume:
        checkpoint = load_checkpoint(args.output)
        if checkpoint and checkpoint.get("source") == str(path):
            records = checkpoint["records"]
            logger.info("Resuming batch at line %d", len(records) + 1)
    if args.output:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
    start = len(records)
    items = list(enumerate(lines, start=1))[start:]

    workers = args.workers or config.workers
    if workers > 1 and items:
        pool = multiprocessing.Pool(processes=workers, initializer=_init_worker, initargs=(config,))
        results = pool.imap(_process_line, items)
    else:
        pool = None
        _init_worker(config)
        results = map(_process_line, items)

    try:
        for record in results:
            records.append(record)
            if args.output is None:
                print(record, flush=True)
            elif len(records) % config.checkpoint_interval == 0:
                save_checkpoint(args.output, records, len(records), str(path))
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    if args.output:
        Path(args.output).write_text("".join(r + "\n" for r in records), encoding="utf-8")
        remove_checkpoint(args.output)
        logger.info("Wrote %d records to %s", len(records), args.output)

    return _batch_status([json.loads(r) for r in records], args.expect_trivial)


def _batch_status(records: List[Dict[str, Any]], expect_trivial: bool) -> int:
    if any("error" in r for r in records):
        return EXIT_INPUT_ERROR
    if expect_trivial and any(r.get("nontrivial") for r in records):
        return EXIT_NONTRIVIAL
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    _setup_logging(args.verbose)

    overrides = {"workers": getattr(args, "workers", None)}
    try:
        config = load_config(args.config, overrides)
    except GaussHomotopyError as exc:
        logger.error("Invalid configuration: %s", exc)
        return EXIT_INPUT_ERROR

    if args.subcommand == "batch":
        return _run_batch(args, config)

    try:
        report = args.command.run(args, config)
    except GaussHomotopyError as exc:
        logger.error("%s: %s", args.subcommand, exc)
        return EXIT_INPUT_ERROR

    print(_render(report, args.json, config))
    return _exit_status(report, args.expect_trivial)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
