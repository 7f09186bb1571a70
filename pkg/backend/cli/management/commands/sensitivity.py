# backend/cli/management/commands/sensitivity.py

from ._base import PlatesCommand


class Command(PlatesCommand):
    help = "Patch-potential and separation stability needed to resolve a target pressure change."
    subcommand = "sensitivity"
