# backend/cli/management/commands/_base.py

from django.core.management.base import BaseCommand, CommandError

from cli.services import CliCommand, run


class PlatesCommand(BaseCommand):
    """Options shared by every subcommand; subclasses set ``subcommand``."""

    subcommand = ""

    def add_arguments(self, parser):
        parser.add_argument("--config", dest="config_path", help="Configuration file or a previous CSV output.")
        parser.add_argument(
            "--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
            help="Override one configuration key; may be repeated.",
        )
        parser.add_argument("--output", dest="output_path", help="Write CSV here instead of stdout.")
        parser.add_argument("--workers", type=int, help="Worker threads for grid evaluations.")

    def build_command(self, options) -> CliCommand:
        return CliCommand(
            subcommand=self.subcommand,
            config_path=options.get("config_path"),
            overrides=tuple(options.get("overrides") or ()),
            output_path=options.get("output_path"),
            workers=options.get("workers"),
        )

    def handle(self, *args, **options):
        result = run(self.build_command(options))
        if result.status:
            raise CommandError(result.message, returncode=result.status)
        if not options.get("output_path"):
            self.stdout.write(result.text, ending="")
