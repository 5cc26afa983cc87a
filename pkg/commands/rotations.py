# commands/rotations.py
import click

from commands.common import generator_file_argument, handle_errors, json_option, emit, load_generators
from models.quaternion import Quaternion
from models.rotation import element_order, theta
from models.scalar import check_ambient
from utils.codec import parse_quaternion
from utils.config import ORDER_CAP
from utils.errors import ExactRotError, ParseError


@click.command("theta")
@click.argument("quaternion")
@click.option("--d", "d", type=int, default=0, show_default=True, help="Ambient field Q(√d).")
@json_option
@handle_errors
def theta_cmd(quaternion, d, as_json):
    """Print theta(x) for a quaternion given as "x0,x1,x2,x3"."""
    try:
        d = check_ambient(d)
    except ExactRotError as e:
        raise ParseError(str(e))
    x = Quaternion(*parse_quaternion(quaternion, d), d=d)
    m = theta(x)
    emit(as_json, "theta", {"quaternion": x.to_json(), "ambient_d": d, "matrix": m.to_json()}, [str(m)])


@click.command("order")
@generator_file_argument
@click.option("--cap", type=int, default=ORDER_CAP, show_default=True, help="Largest power tried.")
@json_option
@handle_errors
def order_cmd(generator_file, cap, as_json):
    """Print the order of every generator in a generator file."""
    gens = load_generators(generator_file).generators
    results = [element_order(m, cap) for m in gens]
    lines = [f"g{n}: {r}" + (f" ({r.certificate})" if r.certificate else "") for n, r in enumerate(results, 1)]
    emit(as_json, "order", [r.to_json() for r in results], lines)
