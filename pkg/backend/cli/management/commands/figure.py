# backend/cli/management/commands/figure.py

from dataclasses import replace

from experiment.domain import FIGURES

from ._base import PlatesCommand


class Command(PlatesCommand):
    help = "Data table behind one of the standard figures, optionally with a gnuplot script."
    subcommand = "figure"

    def add_arguments(self, parser):
        parser.add_argument("which", choices=FIGURES)
        super().add_arguments(parser)
        parser.add_argument("--plot-script", dest="plot_script_path", help="Also write a gnuplot script here.")

    def build_command(self, options):
        return replace(
            super().build_command(options),
            figure=options["which"],
            plot_script_path=options.get("plot_script_path"),
        )
