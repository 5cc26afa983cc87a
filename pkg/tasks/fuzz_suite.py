# tasks/fuzz_suite.py
"""
Seeded fuzz suites for the quaternion commutation criteria and the rotation identities.

Components are drawn as p/q with |p| <= 20, 1 <= q <= 10; in a d > 0 context
a surd part is drawn the same way. Every suite returns one AssertionRecord
counting samples and discrepancies.
"""
import logging
from fractions import Fraction
from random import Random
from typing import List

from models.quaternion import (
    Commutation, Quaternion, anticommutes, anticommutes_by_criterion, commutation_trichotomy,
    commutes, commutes_by_minors, qmul, qnorm_sq, vector_minors,
)
from models.rotation import Rot3, axis_of, rot_commutes, theta
from models.scalar import QuadScalar
from tasks.records import AssertionRecord
from utils.config import FUZZ_PAIRS

logger = logging.getLogger(__name__)


class QuaternionFuzzer:
    def __init__(self, seed: int, d: int = 0):
        self.rng = Random(seed)
        self.d = d

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(self.rng.randint(-20, 20), self.rng.randint(1, 10))
            if value or not nonzero:
                return value

    def scalar(self, nonzero: bool = False) -> QuadScalar:
        while True:
            surd = self.rational() if self.d and self.rng.random() < 0.5 else 0
            value = QuadScalar(self.rational(), surd, self.d)
            if value or not nonzero:
                return value

    def quaternion(self) -> Quaternion:
        while True:
            x = Quaternion(*(self.scalar() for _ in range(4)), d=self.d)
            if not x.is_zero():
                return x

    def pure(self) -> Quaternion:
        while True:
            x = Quaternion(0, self.scalar(), self.scalar(), self.scalar(), d=self.d)
            if not x.is_zero():
                return x

    def non_real(self) -> Quaternion:
        while True:
            x = self.quaternion()
            if not x.is_real():
                return x

    def perpendicular_pure(self, x: Quaternion) -> Quaternion:
        """A nonzero pure quaternion perpendicular to x (cross product with a random vector)."""
        while True:
            r = self.pure()
            y = Quaternion(0, *vector_minors(x, r), d=self.d)
            if not y.is_zero():
                return y

    def combination(self, x: Quaternion) -> Quaternion:
        """α + β·x with β ≠ 0: commutes with x and is non-real whenever x is."""
        return Quaternion(self.scalar(), d=self.d) + x.scale(self.scalar(nonzero=True))


def anticommutation_criterion(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    mismatches, positives = 0, 0
    for n in range(count):
        kind = n % 3
        if kind == 0:
            x, y = fz.quaternion(), fz.quaternion()
        elif kind == 1:
            x = fz.pure()
            y = fz.perpendicular_pure(x)
        else:
            x, y = fz.pure(), fz.pure()
        direct = anticommutes(x, y)
        positives += direct
        if direct != anticommutes_by_criterion(x, y):
            mismatches += 1
            logger.error("anticommutation mismatch: %r, %r", x, y)
    return AssertionRecord.check(
        f"fuzz.anticommutation.d{d}", "xy = -yx iff x0 = y0 = 0 and x ⊥ y",
        mismatches == 0 and positives > 0, samples=count, anticommuting=positives, discrepancies=mismatches)


def commutation_criterion(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    mismatches, positives = 0, 0
    for n in range(count):
        x = fz.quaternion()
        y = fz.combination(x) if n % 2 else fz.quaternion()
        direct = commutes(x, y)
        positives += direct
        if direct != commutes_by_minors(x, y):
            mismatches += 1
            logger.error("commutation mismatch: %r, %r", x, y)
    return AssertionRecord.check(
        f"fuzz.commutation.d{d}", "xy = yx iff the vector parts are linearly dependent",
        mismatches == 0 and positives > 0, samples=count, commuting=positives, discrepancies=mismatches)


def commuting_transitivity(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = 0
    for _ in range(count):
        x = fz.non_real()
        y, z = fz.combination(x), fz.combination(x)
        if not (commutes(x, y) and commutes(x, z) and commutes(y, z)):
            failures += 1
            logger.error("transitivity failure: %r, %r, %r", x, y, z)
    return AssertionRecord.check(
        f"fuzz.transitivity.d{d}", "non-real quaternions commuting with x commute with each other",
        failures == 0, samples=count, failures=failures)


def norm_multiplicativity(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = sum(
        qnorm_sq(qmul(x, y)) != qnorm_sq(x) * qnorm_sq(y)
        for x, y in ((fz.quaternion(), fz.quaternion()) for _ in range(count))
    )
    return AssertionRecord.check(
        f"fuzz.norm.d{d}", "|xy|² = |x|²|y|²", failures == 0, samples=count, failures=failures)


def theta_homomorphism(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = 0
    for _ in range(count):
        x, y = fz.quaternion(), fz.quaternion()
        if theta(qmul(x, y)) != theta(x) @ theta(y):
            failures += 1
    return AssertionRecord.check(
        f"fuzz.theta-homomorphism.d{d}", "theta(xy) = theta(x) theta(y)",
        failures == 0, samples=count, failures=failures)


def theta_kernel(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = 0
    for _ in range(count):
        x = fz.quaternion()
        lam = fz.rational(nonzero=True)
        if theta(x.scale(lam)) != theta(x):
            failures += 1
    return AssertionRecord.check(
        f"fuzz.theta-kernel.d{d}", "nonzero reals lie in the kernel of theta",
        failures == 0, samples=count, failures=failures)


def trichotomy_matches_rotations(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = 0
    seen = {c: 0 for c in Commutation}
    for n in range(count):
        x = fz.non_real() if n % 3 else fz.pure()
        if n % 3 == 1:
            y = fz.combination(x)
        elif n % 3 == 0:
            y = fz.perpendicular_pure(x)
        else:
            y = fz.quaternion()
        verdict = commutation_trichotomy(x, y)
        seen[verdict] += 1
        if (verdict is Commutation.NEITHER) == rot_commutes(theta(x), theta(y)):
            failures += 1
    return AssertionRecord.check(
        f"fuzz.trichotomy.d{d}", "theta(x), theta(y) commute iff xy = ±yx",
        failures == 0 and all(seen.values()), samples=count, failures=failures,
        distribution={c.value: seen[c] for c in Commutation})


def pure_quaternions_are_half_turns(seed: int, count: int = FUZZ_PAIRS, d: int = 0) -> AssertionRecord:
    fz = QuaternionFuzzer(seed, d)
    failures = 0
    for _ in range(count):
        m = theta(fz.pure())
        if m.is_identity() or not (m @ m).is_identity():
            failures += 1
    return AssertionRecord.check(
        f"fuzz.pure-half-turn.d{d}", "a pure quaternion maps to a rotation of order 2",
        failures == 0, samples=count, failures=failures)


def centralizer_of_half_turn(seed: int, count: int = FUZZ_PAIRS) -> AssertionRecord:
    """
    Rotations commuting with A = diag(1, -1, -1) are x-axis rotations or
    half turns about an axis in the yz-plane, and A is the only half turn of
    the first kind.
    """
    fz = QuaternionFuzzer(seed, 0)
    a = Rot3.diag(1, -1, -1)
    failures, commuting = 0, 0
    for n in range(count):
        kind = n % 3
        if kind == 0:
            x = Quaternion(fz.rational(), fz.rational(nonzero=True))
        elif kind == 1:
            x = Quaternion(0, 0, fz.rational(), fz.rational(nonzero=True))
        else:
            x = fz.quaternion()
        m = theta(x)
        if not rot_commutes(m, a):
            continue
        commuting += 1
        first_row, first_col = (m[0, 0], m[0, 1], m[0, 2]), (m[0, 0], m[1, 0], m[2, 0])
        shape_ok = first_row == first_col and first_row in ((1, 0, 0), (-1, 0, 0))
        if shape_ok and m[0, 0] == -1:
            shape_ok = (m @ m).is_identity()
        if shape_ok and m[0, 0] == 1 and not m.is_identity() and (m @ m).is_identity():
            shape_ok = m == a
        if not shape_ok:
            failures += 1
            logger.error("unexpected element of the centralizer of A: %s", m)
    return AssertionRecord.check(
        "fuzz.half-turn-centralizer", "the centralizer of a half turn: axial rotations and perpendicular half turns",
        failures == 0 and commuting > 0, samples=count, commuting=commuting, failures=failures)


def perpendicular_half_turns(seed: int, count: int = 200) -> AssertionRecord:
    """Half turns about axes in the yz-plane commute iff the axes are equal or perpendicular."""
    fz = QuaternionFuzzer(seed, 0)
    failures, positives = 0, 0
    for n in range(count):
        b, c = fz.rational(), fz.rational(nonzero=True)
        x = Quaternion(0, 0, b, c)
        kind = n % 4
        if kind == 0:
            y = x.scale(fz.rational(nonzero=True))
        elif kind == 1:
            y = Quaternion(0, 0, -c, b).scale(fz.rational(nonzero=True))
        else:
            y = Quaternion(0, 0, fz.rational(), fz.rational(nonzero=True))
        m, n_ = theta(x), theta(y)
        ax, ay = axis_of(m), axis_of(n_)
        geometric = ax == ay or ax.is_perpendicular(ay)
        commuting = rot_commutes(m, n_)
        positives += commuting
        if commuting != geometric:
            failures += 1
            logger.error("half-turn mismatch: axes %s, %s", ax, ay)
    return AssertionRecord.check(
        "fuzz.yz-half-turns", "two yz-plane half turns commute iff their axes are identical or perpendicular",
        failures == 0 and positives > 0, samples=count, commuting=positives, failures=failures)


def run_fuzz_suites(seed: int, rational_only: bool = False, count: int = FUZZ_PAIRS) -> List[AssertionRecord]:
    records = []
    for offset, suite in enumerate((
        anticommutation_criterion, commutation_criterion, commuting_transitivity, norm_multiplicativity,
        theta_homomorphism, theta_kernel, trichotomy_matches_rotations, pure_quaternions_are_half_turns,
    )):
        records.append(suite(seed + offset, count, 0))
    records.append(centralizer_of_half_turn(seed + 20, count))
    records.append(perpendicular_half_turns(seed + 21, max(200, count // 5)))

    # second pass over Q(√3)
    sqrt3_suites = (
        ("anticommutation", anticommutation_criterion),
        ("commutation", commutation_criterion),
        ("theta-homomorphism", theta_homomorphism),
    )
    for offset, (name, suite) in enumerate(sqrt3_suites):
        if rational_only:
            records.append(AssertionRecord.skip(f"fuzz.{name}.d3", "quaternion identities over Q(√3)", "needs √3"))
        else:
            records.append(suite(seed + 30 + offset, max(200, count // 5), 3))
    for r in records:
        logger.info("%s: %s", r.id, r.verdict)
    return records
