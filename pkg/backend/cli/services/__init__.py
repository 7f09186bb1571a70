# backend/cli/services/__init__.py

from .runner import CliCommand, RunResult, SUBCOMMANDS, run

__all__ = ["CliCommand", "RunResult", "SUBCOMMANDS", "run"]
