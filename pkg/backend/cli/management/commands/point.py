# backend/cli/management/commands/point.py

from ._base import PlatesCommand


class Command(PlatesCommand):
    help = "Pressure breakdown at one separation and gas pressure."
    subcommand = "point"
