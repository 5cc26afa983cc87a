# utils/codec.py
import re
from fractions import Fraction

from models.scalar import QuadScalar
from utils.errors import ParseError

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_COEF = re.compile(r"^[+-]?(?:\d+(?:/\d+)?)?$")
_ROOT_MARKERS = ("√", "sqrt")


def _rational(text: str, original: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ParseError(f"not a rational number: {original!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {original!r}")


def parse_scalar(text: str, d: int = 0) -> QuadScalar:
    """
    Parse the scalar wire syntax into a QuadScalar of ambient d.

    Accepted forms: "p", "p/q", "p/q+r/s√d", "r/s√d", "-√d"; "sqrt" may be
    written instead of "√". The root under the radical must equal d.
    """
    original = text
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty scalar")

    marker = next((m for m in _ROOT_MARKERS if m in text), None)
    if marker is None:
        return QuadScalar(_rational(text, original), 0, d)

    head, _, root = text.partition(marker)
    if not root.isdigit():
        raise ParseError(f"bad radicand in {original!r}")
    if d == 0:
        raise ParseError(f"{original!r} has a radical but the ambient field is Q")
    if int(root) != d:
        raise ParseError(f"{original!r} uses sqrt({root}) but the ambient field is d={d}")

    # the surd coefficient starts at the last sign that is not the leading one
    split = max(head.rfind("+"), head.rfind("-"))
    if split > 0:
        rat_text, coef_text = head[:split], head[split:]
    else:
        rat_text, coef_text = "", head
    if not _COEF.match(coef_text):
        raise ParseError(f"bad surd coefficient in {original!r}")
    if coef_text in ("", "+"):
        coef = Fraction(1)
    elif coef_text == "-":
        coef = Fraction(-1)
    else:
        coef = _rational(coef_text, original)
    rat = _rational(rat_text, original) if rat_text else Fraction(0)
    return QuadScalar(rat, coef, d)


def format_scalar(value: QuadScalar) -> str:
    return value.to_text()


def parse_matrix(rows, d: int = 0):
    """Parse a 3×3 array of scalar strings into row-major QuadScalar entries."""
    if not isinstance(rows, (list, tuple)) or len(rows) != 3:
        raise ParseError("a matrix must be a list of 3 rows")
    entries = []
    for row in rows:
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise ParseError("every matrix row must have 3 entries")
        entries.extend(parse_scalar(cell, d) for cell in row)
    return entries


def parse_quaternion(parts, d: int = 0):
    """Parse "x0,x1,x2,x3" or a 4-item list into four QuadScalars."""
    if isinstance(parts, str):
        parts = [p for p in parts.split(",")]
    if not isinstance(parts, (list, tuple)) or len(parts) != 4:
        raise ParseError("a quaternion needs exactly 4 components")
    return [parse_scalar(p, d) for p in parts]
