# commands/verify.py
import logging
import sys

import click

from commands.common import EXIT_ASSERTION, EXIT_OK, dumps, handle_errors
from tasks.paper_suite import verify_all
from utils.config import DEFAULT_SEED

logger = logging.getLogger(__name__)


@click.command("verify-paper")
@click.option("--json", "out_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the structured report to this file.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True, help="Fuzzing seed.")
@click.option("--rational-only", is_flag=True, help="Restrict to the rational field; √d checks are skipped.")
@handle_errors
def verify_paper_cmd(out_path, seed, rational_only):
    """Run every witness check and fuzz suite; exit 1 if any assertion fails."""
    report = verify_all(seed, rational_only)
    for line in report.summary_lines():
        click.echo(line)

    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(dumps(report.to_json()) + "\n")
        logger.info("report written to %s", out_path)

    failed = [r.id for r in report.records if r.failed]
    if failed:
        logger.error("failing assertions: %s", ", ".join(failed))
        sys.exit(EXIT_ASSERTION)
    sys.exit(EXIT_OK)
