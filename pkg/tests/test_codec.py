from fractions import Fraction

import pytest

from models.scalar import QuadScalar
from utils.codec import format_scalar, parse_matrix, parse_quaternion, parse_scalar
from utils.errors import ParseError


@pytest.mark.parametrize("text, d, expected", [
    ("3", 0, QuadScalar(3)),
    ("-3/4", 0, QuadScalar(Fraction(-3, 4))),
    ("6/8", 0, QuadScalar(Fraction(3, 4))),
    ("1/2+3/4√3", 3, QuadScalar(Fraction(1, 2), Fraction(3, 4), 3)),
    ("-1/2-sqrt3", 3, QuadScalar(Fraction(-1, 2), -1, 3)),
    ("2√3", 3, QuadScalar(0, 2, 3)),
    ("-√5", 5, QuadScalar(0, -1, 5)),
    ("+√5", 5, QuadScalar(0, 1, 5)),
    (" 1 / 2 ", 0, QuadScalar(Fraction(1, 2))),
])
def test_parse_scalar(text, d, expected):
    assert parse_scalar(text, d) == expected


def test_canonical_text_parses_back():
    for value in (QuadScalar(Fraction(-7, 3), Fraction(5, 2), 7), QuadScalar(0, -1, 2), QuadScalar(Fraction(4, 9))):
        assert parse_scalar(format_scalar(value), value.d) == value


@pytest.mark.parametrize("text, d", [
    ("", 0),
    ("abc", 0),
    ("1/0", 0),
    ("1.5", 0),
    ("1+√2", 3),
    ("1+√0", 0),
    ("√2", 0),
    ("1+√", 3),
    ("1+x√3", 3),
])
def test_parse_scalar_rejects(text, d):
    with pytest.raises(ParseError):
        parse_scalar(text, d)


@pytest.mark.parametrize("value", [5, True, 1.5, None])
def test_parse_scalar_non_strings(value):
    with pytest.raises(ParseError):
        parse_scalar(value)


def test_parse_matrix():
    entries = parse_matrix([["1", "0", "0"], ["0", "1/2", "-1/2√3"], ["0", "1/2√3", "1/2"]], 3)
    assert len(entries) == 9
    assert entries[5] == QuadScalar(0, Fraction(-1, 2), 3)
    with pytest.raises(ParseError):
        parse_matrix([["1", "0", "0"], ["0", "1", "0"]])
    with pytest.raises(ParseError):
        parse_matrix([["1", "0"], ["0", "1", "0"], ["0", "0", "1"]])


def test_parse_quaternion():
    assert parse_quaternion("1,2,0,0") == [1, 2, 0, 0]
    assert parse_quaternion(["1/2", "0", "√3", "0"], 3)[2] == QuadScalar(0, 1, 3)
    with pytest.raises(ParseError):
        parse_quaternion("1,2")
