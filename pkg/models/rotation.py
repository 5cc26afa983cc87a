# models/rotation.py
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from models.quaternion import Quaternion, qnorm_sq
from models.scalar import QuadScalar, Sign
from utils.config import ORDER_CAP
from utils.errors import AmbientMismatch, IdentityHasNoAxis, NotARotation, ZeroQuaternion


class Rot3:
    """
    Exact 3×3 rotation matrix, entries stored row-major.

    Construction checks MᵀM = E and det M = 1; products of valid rotations skip
    the check since SO3 is closed under multiplication.
    """

    __slots__ = ("entries", "d", "_hash")

    def __init__(self, entries, d: int = 0, validate: bool = True):
        entries = tuple(QuadScalar.of(e, d) for e in entries)
        if len(entries) != 9:
            raise NotARotation(f"a rotation needs 9 entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", None)
        if validate:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Rot3 is immutable")

    @classmethod
    def _trusted(cls, entries, d: int) -> "Rot3":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "entries", tuple(entries))
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def from_rows(cls, rows, d: int = 0) -> "Rot3":
        return cls([cell for row in rows for cell in row], d)

    @classmethod
    def identity(cls, d: int = 0) -> "Rot3":
        one, zero = QuadScalar(1, 0, d), QuadScalar(0, 0, d)
        return cls._trusted((one, zero, zero, zero, one, zero, zero, zero, one), d)

    @classmethod
    def diag(cls, a, b, c, d: int = 0) -> "Rot3":
        return cls((a, 0, 0, 0, b, 0, 0, 0, c), d)

    def _validate(self):
        if self.transpose()._mul(self) != Rot3.identity(self.d):
            raise NotARotation("matrix is not orthogonal: MᵀM ≠ E")
        if self.det() != 1:
            raise NotARotation(f"determinant is {self.det().to_text()}, expected 1")

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[3 * r + c]

    def rows(self):
        e = self.entries
        return (e[0:3], e[3:6], e[6:9])

    def transpose(self) -> "Rot3":
        e = self.entries
        return Rot3._trusted((e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]), self.d)

    def inverse(self) -> "Rot3":
        return self.transpose()

    def det(self) -> QuadScalar:
        a, b, c, d_, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d_ * i - f * g) + c * (d_ * h - e * g)

    def trace(self) -> QuadScalar:
        return self.entries[0] + self.entries[4] + self.entries[8]

    def _mul(self, other: "Rot3") -> "Rot3":
        a = self.entries
        b = other.entries
        out = []
        for r in (0, 3, 6):
            a0, a1, a2 = a[r], a[r + 1], a[r + 2]
            out.append(a0 * b[0] + a1 * b[3] + a2 * b[6])
            out.append(a0 * b[1] + a1 * b[4] + a2 * b[7])
            out.append(a0 * b[2] + a1 * b[5] + a2 * b[8])
        return Rot3._trusted(out, self.d)

    def __matmul__(self, other: "Rot3") -> "Rot3":
        if not isinstance(other, Rot3):
            return NotImplemented
        if other.d != self.d:
            raise AmbientMismatch(self.d, other.d)
        return self._mul(other)

    def __pow__(self, n: int) -> "Rot3":
        if n < 0:
            return self.transpose() ** -n
        result = Rot3.identity(self.d)
        base = self
        while n:
            if n & 1:
                result = result._mul(base)
            base = base._mul(base)
            n >>= 1
        return result

    def apply(self, v):
        e = self.entries
        return tuple(e[r] * v[0] + e[r + 1] * v[1] + e[r + 2] * v[2] for r in (0, 3, 6))

    def is_identity(self) -> bool:
        return self == Rot3.identity(self.d)

    def __eq__(self, other):
        if not isinstance(other, Rot3):
            return NotImplemented
        return self.d == other.d and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.entries))
        return self._hash

    def sort_key(self):
        return tuple(e.sort_key() for e in self.entries)

    def to_json(self):
        return [[cell.to_text() for cell in row] for row in self.rows()]

    def __str__(self):
        return "[" + ",".join("[" + ",".join(cell.to_text() for cell in row) + "]" for row in self.rows()) + "]"

    def __repr__(self):
        return f"Rot3({self}, d={self.d})"


@dataclass(frozen=True)
class Axis:
    """A rotation axis as a line: direction scaled so the first nonzero coordinate is 1."""

    v1: QuadScalar
    v2: QuadScalar
    v3: QuadScalar

    @classmethod
    def from_vector(cls, v) -> "Axis":
        pivot = next((c for c in v if c), None)
        if pivot is None:
            raise ValueError("the zero vector spans no axis")
        inv = pivot.inverse()
        return cls(*(c * inv for c in v))

    @property
    def vector(self):
        return (self.v1, self.v2, self.v3)

    def dot(self, other: "Axis") -> QuadScalar:
        return self.v1 * other.v1 + self.v2 * other.v2 + self.v3 * other.v3

    def is_perpendicular(self, other: "Axis") -> bool:
        return not self.dot(other)

    def to_json(self):
        return [c.to_text() for c in self.vector]

    def __str__(self):
        return "(" + ", ".join(self.to_json()) + ")"


class OrderKind(Enum):
    FINITE = "Finite"
    INFINITE_CERTIFIED = "InfiniteCertified"
    UNKNOWN_WITHIN_CAP = "UnknownWithinCap"


@dataclass(frozen=True)
class OrderResult:
    kind: OrderKind
    order: Optional[int] = None
    certificate: str = ""

    @property
    def is_finite(self) -> bool:
        return self.kind is OrderKind.FINITE

    def to_json(self):
        return {"kind": self.kind.value, "order": self.order, "certificate": self.certificate}

    def __str__(self):
        if self.kind is OrderKind.FINITE:
            return f"Finite({self.order})"
        return self.kind.value


def theta(x: Quaternion) -> Rot3:
    """The rotation of a nonzero quaternion; the kernel is the nonzero reals."""
    if x.is_zero():
        raise ZeroQuaternion("theta is undefined at 0")
    x0, x1, x2, x3 = x.components
    s0, s1, s2, s3 = x0 * x0, x1 * x1, x2 * x2, x3 * x3
    inv = qnorm_sq(x).inverse()
    raw = (
        s0 + s1 - s2 - s3, 2 * (x1 * x2 - x0 * x3), 2 * (x1 * x3 + x0 * x2),
        2 * (x1 * x2 + x0 * x3), s0 - s1 + s2 - s3, 2 * (x2 * x3 - x0 * x1),
        2 * (x1 * x3 - x0 * x2), 2 * (x2 * x3 + x0 * x1), s0 - s1 - s2 + s3,
    )
    return Rot3._trusted([v * inv for v in raw], x.d)


def axis_of(m: Rot3) -> Axis:
    """
    The fixed line of a non-identity rotation.

    Read off the skew part when it is nonzero; for half turns the skew part
    vanishes and any nonzero column of M + E spans the axis.
    """
    if m.is_identity():
        raise IdentityHasNoAxis("the identity fixes every line")
    skew = (m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1])
    if any(skew):
        return Axis.from_vector(skew)
    for c in range(3):
        column = tuple(m[r, c] + (1 if r == c else 0) for r in range(3))
        if any(column):
            return Axis.from_vector(column)
    raise IdentityHasNoAxis("no nonzero column in M + E")


def kronecker_certificate(t: QuadScalar):
    """
    Decide whether t = 2cos(angle) allows a finite rotation order.

    Returns (passes, reason). A finite order needs t to be an algebraic integer
    with every Galois conjugate in [-2, 2]; for rational t that leaves
    {-2, -1, 0, 1, 2}.
    """
    if not t.is_algebraic_integer():
        return False, f"2cos(angle) = {t.to_text()} is not an algebraic integer"
    for conj in (t, t.conjugate()):
        if (conj - 2).sign() is Sign.POSITIVE or (conj + 2).sign() is Sign.NEGATIVE:
            return False, f"conjugate {conj.to_text()} of 2cos(angle) lies outside [-2, 2]"
    return True, f"2cos(angle) = {t.to_text()} is an algebraic integer with conjugates in [-2, 2]"


def element_order(m: Rot3, cap: int = ORDER_CAP) -> OrderResult:
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    passes, reason = kronecker_certificate(m.trace() - 1)
    if not passes:
        return OrderResult(OrderKind.INFINITE_CERTIFIED, None, reason)
    power = m
    for n in range(1, cap + 1):
        if power.is_identity():
            return OrderResult(OrderKind.FINITE, n, f"M^{n} = E and no smaller power is E")
        power = power._mul(m)
    return OrderResult(OrderKind.UNKNOWN_WITHIN_CAP, None, f"certificate passes but no identity power up to {cap}")


def rot_commutes(m: Rot3, n: Rot3) -> bool:
    return m @ n == n @ m
