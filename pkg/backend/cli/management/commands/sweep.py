# backend/cli/management/commands/sweep.py

from ._base import PlatesCommand


class Command(PlatesCommand):
    help = "Pressure breakdown over a grid of d, P or beta*rho."
    subcommand = "sweep"
