# models/quaternion.py
from enum import Enum

from models.scalar import QuadScalar
from utils.errors import AmbientMismatch, ZeroQuaternion


class Commutation(Enum):
    COMMUTE = "Commute"
    ANTICOMMUTE = "Anticommute"
    NEITHER = "Neither"


class Quaternion:
    """Hamilton quaternion x0 + x1 i + x2 j + x3 k over Q(sqrt(d))."""

    __slots__ = ("x0", "x1", "x2", "x3", "d")

    def __init__(self, x0=0, x1=0, x2=0, x3=0, d: int = 0):
        comps = [QuadScalar.of(c, d) for c in (x0, x1, x2, x3)]
        object.__setattr__(self, "x0", comps[0])
        object.__setattr__(self, "x1", comps[1])
        object.__setattr__(self, "x2", comps[2])
        object.__setattr__(self, "x3", comps[3])
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @property
    def components(self):
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def vector(self):
        return (self.x1, self.x2, self.x3)

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_real(self) -> bool:
        return not any(self.vector)

    def is_pure(self) -> bool:
        return not self.x0

    def _check(self, other: "Quaternion"):
        if other.d != self.d:
            raise AmbientMismatch(self.d, other.d)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion(*(c * other for c in self.components), d=self.d)

    def __add__(self, other: "Quaternion"):
        self._check(other)
        return Quaternion(*(a + b for a, b in zip(self.components, other.components)), d=self.d)

    def __sub__(self, other: "Quaternion"):
        self._check(other)
        return Quaternion(*(a - b for a, b in zip(self.components, other.components)), d=self.d)

    def __neg__(self):
        return Quaternion(*(-c for c in self.components), d=self.d)

    def scale(self, factor) -> "Quaternion":
        return Quaternion(*(c * factor for c in self.components), d=self.d)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3, d=self.d)

    def inverse(self) -> "Quaternion":
        if self.is_zero():
            raise ZeroQuaternion("the zero quaternion has no inverse")
        return self.conjugate().scale(qnorm_sq(self).inverse())

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.d == other.d and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def to_json(self):
        return [c.to_text() for c in self.components]

    def __str__(self):
        parts = []
        for coef, unit in zip(self.components, ("", "i", "j", "k")):
            if coef:
                parts.append(f"({coef.to_text()}){unit}" if unit else coef.to_text())
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"Quaternion({', '.join(self.to_json())}, d={self.d})"


def qmul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Hamilton product, from i² = j² = k² = -1 and ij = -ji = k."""
    x._check(y)
    a0, a1, a2, a3 = x.components
    b0, b1, b2, b3 = y.components
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        d=x.d,
    )


def qnorm_sq(x: Quaternion) -> QuadScalar:
    return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3


def perp(x: Quaternion, y: Quaternion) -> bool:
    x._check(y)
    return not (x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3)


def vector_minors(x: Quaternion, y: Quaternion):
    """The 2×2 minors of the vector parts, i.e. their cross product."""
    return (
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x3 * y.x1 - x.x1 * y.x3,
        x.x1 * y.x2 - x.x2 * y.x1,
    )


def _nonzero(*qs):
    for q in qs:
        if q.is_zero():
            raise ZeroQuaternion("expected a nonzero quaternion")


def anticommutes(x: Quaternion, y: Quaternion) -> bool:
    """xy = -yx, decided by direct multiplication."""
    _nonzero(x, y)
    return qmul(x, y) == -qmul(y, x)


def anticommutes_by_criterion(x: Quaternion, y: Quaternion) -> bool:
    """Both real parts vanish and the vector parts are perpendicular."""
    _nonzero(x, y)
    return not x.x0 and not y.x0 and perp(x, y)


def commutes(x: Quaternion, y: Quaternion) -> bool:
    """xy = yx, decided by direct multiplication."""
    return qmul(x, y) == qmul(y, x)


def commutes_by_minors(x: Quaternion, y: Quaternion) -> bool:
    """Vector parts linearly dependent: all three minors vanish."""
    x._check(y)
    return not any(vector_minors(x, y))


def commutation_trichotomy(x: Quaternion, y: Quaternion) -> Commutation:
    """
    Classify a pair of nonzero quaternions as commuting, anticommuting or neither.

    The rotations theta(x), theta(y) commute exactly when xy = ±yx, so NEITHER
    is returned iff their images in SO3 do not commute.
    """
    _nonzero(x, y)
    xy, yx = qmul(x, y), qmul(y, x)
    if xy == yx:
        return Commutation.COMMUTE
    if xy == -yx:
        return Commutation.ANTICOMMUTE
    return Commutation.NEITHER
