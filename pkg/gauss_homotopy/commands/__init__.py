"""
Subcommands exposed by the CLI.
"""

from typing import List

from .base import BaseCommand, Report
from .coverings import CoverCommand, HeightCommand, LiftCommand, ParityCommand
from .invariants import SCommand, SMCommand, ZCommand, ZOCommand
from .search import ClassesCommand, ReduceCommand, SearchCommand, SelftestCommand
from .words import ApplyCommand, CanonCommand, MovesCommand, ValidateCommand


def build_commands() -> List[BaseCommand]:
    return [
        ValidateCommand(),
        CanonCommand(),
        MovesCommand(),
        ApplyCommand(),
        SCommand(),
        SMCommand(),
        ZCommand(),
        ZOCommand(),
        ParityCommand(),
        CoverCommand(),
        LiftCommand(),
        HeightCommand(),
        SearchCommand(),
        ReduceCommand(),
        ClassesCommand(),
        SelftestCommand(),
    ]


__all__ = ["BaseCommand", "Report", "build_commands"]
