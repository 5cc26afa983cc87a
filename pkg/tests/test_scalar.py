from fractions import Fraction
from random import Random

import pytest
import sympy

from models.scalar import QuadScalar, Sign, check_ambient, is_squarefree, scalar_arith
from utils.errors import AmbientMismatch, DivisionByZero, ExactRotError


def test_field_arithmetic():
    x = QuadScalar(1, 1, 2)
    y = QuadScalar(1, -1, 2)
    assert x * y == -1
    assert x + y == 2
    assert x - y == QuadScalar(0, 2, 2)
    assert x * x.inverse() == 1
    assert (x / y) * y == x
    assert 1 / x == x.inverse()
    assert 3 - x == QuadScalar(2, -1, 2)


def test_powers():
    r = QuadScalar.sqrt_d(3)
    assert r ** 2 == 3
    assert r ** -2 == Fraction(1, 3)
    assert r ** 0 == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QuadScalar(1, 1, 3) / QuadScalar(0, 0, 3)
    # also a ZeroDivisionError, so callers can catch either
    with pytest.raises(ZeroDivisionError):
        QuadScalar(0).inverse()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        QuadScalar(1, 1, 2) + QuadScalar(1, 1, 3)
    with pytest.raises(AmbientMismatch):
        QuadScalar.of(QuadScalar(1, 0, 2), 3)


def test_rejects_bad_input():
    with pytest.raises(TypeError):
        QuadScalar(0.5)
    with pytest.raises(ExactRotError):
        QuadScalar(1, 1, 4)
    with pytest.raises(ExactRotError):
        QuadScalar(1, 1, 0)
    with pytest.raises(ExactRotError):
        check_ambient(1)
    with pytest.raises(AttributeError):
        QuadScalar(1).rat = 2


def test_squarefree():
    assert [n for n in range(1, 13) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11]
    assert check_ambient(5) == 5


def test_conjugate_norm_trace():
    x = QuadScalar(Fraction(1, 2), Fraction(1, 2), 5)
    assert x.conjugate() == QuadScalar(Fraction(1, 2), Fraction(-1, 2), 5)
    assert x.norm() == -1
    assert x.trace() == 1
    assert x * x.conjugate() == x.norm()


def test_algebraic_integers():
    golden = QuadScalar(Fraction(1, 2), Fraction(1, 2), 5)
    assert golden.is_algebraic_integer()
    assert not QuadScalar(Fraction(1, 2), Fraction(1, 2), 3).is_algebraic_integer()
    assert not QuadScalar(Fraction(-6, 5)).is_algebraic_integer()
    assert QuadScalar(2).is_algebraic_integer()
    assert QuadScalar(0, 1, 7).is_algebraic_integer()


def test_sign_against_sympy():
    rng = Random(7)
    for _ in range(1000):
        d = rng.choice((2, 3, 5, 7, 11))
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        expected = sympy.sign(sympy.Rational(a.numerator, a.denominator)
                              + sympy.Rational(b.numerator, b.denominator) * sympy.sqrt(d))
        assert int(QuadScalar(a, b, d).sign()) == int(expected), (a, b, d)


def test_sign_near_cancellation():
    # 99/70 is a convergent of √2
    assert QuadScalar(Fraction(99, 70), -1, 2).sign() is Sign.POSITIVE
    assert QuadScalar(Fraction(-99, 70), 1, 2).sign() is Sign.NEGATIVE
    assert QuadScalar(Fraction(140, 99), -1, 2).sign() is Sign.NEGATIVE
    assert QuadScalar(0).sign() is Sign.ZERO


def test_ordering():
    root2 = QuadScalar.sqrt_d(2)
    assert Fraction(7, 5) < root2 < Fraction(3, 2)
    assert root2 >= root2
    assert -root2 <= 0
    assert abs(-root2) == root2


def test_hash_matches_rationals():
    assert hash(QuadScalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert QuadScalar(-1) in {-1}
    assert len({QuadScalar(1, 1, 3), QuadScalar(1, 1, 3), QuadScalar(1, -1, 3)}) == 2


@pytest.mark.parametrize("value, text", [
    (QuadScalar(3), "3"),
    (QuadScalar(Fraction(-3, 5)), "-3/5"),
    (QuadScalar(Fraction(1, 2), Fraction(-3, 4), 3), "1/2-3/4√3"),
    (QuadScalar(Fraction(1, 2), Fraction(1, 2), 5), "1/2+1/2√5"),
    (QuadScalar(0, -1, 5), "-√5"),
    (QuadScalar(0, 1, 2), "√2"),
    (QuadScalar(0, 0, 3), "0"),
])
def test_canonical_text(value, text):
    assert value.to_text() == text
    assert str(value) == text


def test_scalar_arith_dispatch():
    a, b = QuadScalar(1, 1, 3), QuadScalar(2, 0, 3)
    assert scalar_arith("add", a, b) == QuadScalar(3, 1, 3)
    assert scalar_arith("sub", a, b) == QuadScalar(-1, 1, 3)
    assert scalar_arith("mul", a, b) == QuadScalar(2, 2, 3)
    assert scalar_arith("div", a, b) == QuadScalar(Fraction(1, 2), Fraction(1, 2), 3)
    assert scalar_arith("neg", a, b) == -a
    with pytest.raises(ValueError):
        scalar_arith("pow", a, b)
