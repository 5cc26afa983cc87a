import logging
import sys

import click

from commands.groups import closure_cmd, decompose_cmd, props_cmd, words_cmd
from commands.rotations import order_cmd, theta_cmd
from commands.verify import verify_paper_cmd
from utils.config import LOG_LEVEL

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def create_cli():
    @click.group()
    @click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=LOG_LEVEL,
                  show_default=True, help="Log level; logs go to stderr.")
    def cli(log_level):
        """Exact arithmetic on rotation groups over Q and Q(√d)."""
        logging.basicConfig(
            level=log_level.upper(),
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            force=True,
        )

    for command in (theta_cmd, order_cmd, closure_cmd, props_cmd, decompose_cmd, words_cmd, verify_paper_cmd):
        cli.add_command(command)

    return cli


if __name__ == "__main__":
    cli = create_cli()
    cli()
