"""
Abstract base class for CLI subcommands, and the report they return.
"""

import argparse
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core import HomotopyConfig


def dump_json(data: Any, indent: Optional[int] = 2) -> str:
    separators = None if indent else (",", ":")
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False, separators=separators)


@dataclass
class Report:
    """Outcome of one subcommand.

    ``lines`` is the human-readable rendering and is not part of the JSON.
    ``nontrivial`` is set when an invariant certified non-triviality.
    """

    command: str
    input: Optional[str]
    canonical: Optional[str]
    result: Dict[str, Any]
    notes: List[str] = field(default_factory=list)
    nontrivial: bool = False
    lines: List[str] = field(default_factory=list)
    exit_status: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "input": self.input,
            "canonical": self.canonical,
            "result": self.result,
            "notes": self.notes,
            "nontrivial": self.nontrivial,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return dump_json(self.to_dict(), indent)

    def to_text(self) -> str:
        body = self.lines or [dump_json(self.result)]
        return "\n".join(body + [f"# {note}" for note in self.notes])


class BaseCommand(ABC):
    """
    Base class for a subcommand.

    Attributes:
        name: The subcommand name on the command line.
        description: Short help text.
        arguments: List of dicts with 'name' plus any ``add_argument`` keywords.
    """

    def __init__(self, name: str, description: str, arguments: List[Dict[str, Any]]):
        self.name = name
        self.description = description
        self.arguments = arguments

    def register(self, subparsers: "argparse._SubParsersAction") -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.description, description=self.description)
        for option in self.arguments:
            option = dict(option)
            names = option.pop("name")
            parser.add_argument(*([names] if isinstance(names, str) else names), **option)
        parser.set_defaults(command=self)
        return parser

    @abstractmethod
    def run(self, args: argparse.Namespace, config: HomotopyConfig) -> Report:
        """Execute the command with parsed arguments."""
        pass


POLICY_ARGUMENT = {
    "name": "--policy",
    "choices": ["closed", "open", "mixed", "unordered"],
    "default": None,
    "help": "Homotopy flavour (default from config).",
}
RANK_CAP_ARGUMENT = {
    "name": "--rank-cap",
    "type": int,
    "default": None,
    "help": "Largest rank an intermediate phrase may reach (default: max endpoint rank + rank_slack).",
}
NODE_CAP_ARGUMENT = {
    "name": "--node-cap",
    "type": int,
    "default": None,
    "help": "Give up after this many distinct states.",
}
