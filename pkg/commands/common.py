# commands/common.py
import json
import logging
import sys
from functools import wraps

import click

from models.generator_file import GeneratorFile
from utils.errors import (
    ClosureExceedsCap, DepthTooLarge, GroupTooLarge, ParseError,
)
from utils.response import response

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4

json_option = click.option("--json", "as_json", is_flag=True, help="Print the machine-readable payload.")
generator_file_argument = click.argument("generator_file", type=click.Path(exists=True, dir_okay=False))


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ParseError):
        return EXIT_PARSE
    if isinstance(error, (ClosureExceedsCap, GroupTooLarge, DepthTooLarge)):
        return EXIT_CAP
    return EXIT_DOMAIN


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def emit(as_json: bool, message: str, data, lines):
    """Print either the response envelope as JSON or the human summary lines."""
    if as_json:
        click.echo(dumps(response(True, message, data)))
    else:
        for line in lines:
            click.echo(line)


def handle_errors(f):
    """Translate toolkit errors into the exit-code contract."""

    @wraps(f)
    def decorated(*args, **kwargs):
        as_json = kwargs.get("as_json", False)
        try:
            return f(*args, **kwargs)
        except ValueError as e:
            code = exit_code_for(e)
            logger.debug("command failed with %s", type(e).__name__, exc_info=True)
            if as_json:
                click.echo(dumps(response(False, str(e), {"error": type(e).__name__, "exit_code": code})))
            else:
                click.echo(f"error: {type(e).__name__}: {e}", err=True)
            sys.exit(code)

    return decorated


def load_generators(path: str) -> GeneratorFile:
    file = GeneratorFile.load(path)
    logger.info("loaded %s: %d generators over d=%d", path, len(file.matrices) + len(file.quaternions),
                file.ambient_d)
    return file
