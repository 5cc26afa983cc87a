# models/scalar.py
from enum import IntEnum
from fractions import Fraction
from numbers import Rational

from utils.errors import AmbientMismatch, DivisionByZero, ExactRotError


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def check_ambient(d: int) -> int:
    """Validate an ambient field parameter: 0 (plain Q) or a squarefree d >= 2."""
    d = int(d)
    if d == 0:
        return d
    if d < 2 or not is_squarefree(d):
        raise ExactRotError(f"ambient d must be 0 or a squarefree integer >= 2, got {d}")
    return d


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _sign_of(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class QuadScalar:
    """
    Exact element rat + surd*sqrt(d) of Q(sqrt(d)).

    Values are immutable. All scalars taking part in one computation share the
    same ambient d; d = 0 means plain rationals (surd is then always 0).
    """

    __slots__ = ("rat", "surd", "d", "_hash")

    def __init__(self, rat=0, surd=0, d: int = 0):
        if isinstance(rat, float) or isinstance(surd, float):
            raise TypeError("QuadScalar is exact; floats are not accepted")
        d = check_ambient(d)
        rat = Fraction(rat)
        surd = Fraction(surd)
        if d == 0 and surd != 0:
            raise ExactRotError("a surd part requires an ambient d > 0")
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "surd", surd)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @classmethod
    def of(cls, value, d: int = 0) -> "QuadScalar":
        if isinstance(value, QuadScalar):
            if value.d != d:
                raise AmbientMismatch(value.d, d)
            return value
        return cls(value, 0, d)

    @classmethod
    def sqrt_d(cls, d: int) -> "QuadScalar":
        return cls(0, 1, d)

    # -- coercion -------------------------------------------------------

    def _coerce(self, other) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise AmbientMismatch(self.d, other.d)
            return other
        if isinstance(other, (int, Rational)):
            return QuadScalar(other, 0, self.d)
        return NotImplemented

    # -- field arithmetic -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.rat + other.rat, self.surd + other.surd, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.rat, -self.surd, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadScalar(self.rat - other.rat, self.surd - other.surd, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.surd and not other.surd:
            return QuadScalar(self.rat * other.rat, 0, self.d)
        rat = self.rat * other.rat + self.surd * other.surd * self.d
        surd = self.rat * other.surd + self.surd * other.rat
        return QuadScalar(rat, surd, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadScalar":
        # (a + b√d)^-1 = (a - b√d) / (a² - d·b²); the norm vanishes only at 0
        norm = self.norm()
        if norm == 0:
            raise DivisionByZero("division by zero in Q(sqrt(%d))" % self.d)
        return QuadScalar(self.rat / norm, -self.surd / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** -n
        result = QuadScalar(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field structure ------------------------------------------------

    def conjugate(self) -> "QuadScalar":
        """Galois conjugate rat - surd*sqrt(d)."""
        return QuadScalar(self.rat, -self.surd, self.d)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.d * self.surd * self.surd

    def trace(self) -> Fraction:
        return 2 * self.rat

    def is_algebraic_integer(self) -> bool:
        # x is a root of X² - trace·X + norm, so it is integral iff both are integers
        return self.trace().denominator == 1 and self.norm().denominator == 1

    def sign(self) -> Sign:
        a, b = _sign_of(self.rat), _sign_of(self.surd)
        if b == 0:
            return Sign(a)
        if a == 0 or a == b:
            return Sign(b)
        # opposite signs: |rat| vs |surd|·√d, compared on squares
        lhs = self.rat * self.rat
        rhs = self.surd * self.surd * self.d
        if lhs == rhs:
            return Sign.ZERO
        return Sign(a if lhs > rhs else b)

    def __abs__(self):
        return -self if self.sign() is Sign.NEGATIVE else self

    def __bool__(self):
        return bool(self.rat) or bool(self.surd)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                return NotImplemented
            return self.rat == other.rat and self.surd == other.surd
        if isinstance(other, (int, Rational)):
            return self.surd == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            value = hash(self.rat) if not self.surd else hash((self.rat, self.surd, self.d))
            object.__setattr__(self, "_hash", value)
        return self._hash

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return int((self - other).sign())

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def sort_key(self):
        return (self.rat, self.surd)

    # -- text -----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical wire form: "p", "p/q", "p/q+r/s√d", "r/s√d", "-√d"."""
        if not self.surd:
            return _fraction_text(self.rat)
        coef = abs(self.surd)
        coef_text = "" if coef == 1 else _fraction_text(coef)
        surd_text = f"{coef_text}√{self.d}"
        if not self.rat:
            return ("-" if self.surd < 0 else "") + surd_text
        sign = "-" if self.surd < 0 else "+"
        return f"{_fraction_text(self.rat)}{sign}{surd_text}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"QuadScalar({self.to_text()!r}, d={self.d})"


def _fraction_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def scalar_arith(op: str, a: QuadScalar, b: QuadScalar) -> QuadScalar:
    """Dispatch one of add/sub/mul/div/neg by name (neg ignores b)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown scalar operation {op!r}")
