# backend/cli/management/commands/oracle.py

from ._base import PlatesCommand


class Command(PlatesCommand):
    help = "Compare the closed-form separation with the parametric energy-integral form."
    subcommand = "oracle"
