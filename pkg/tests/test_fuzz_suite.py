import pytest

from models.quaternion import commutes
from tasks.fuzz_suite import (
    QuaternionFuzzer, centralizer_of_half_turn, anticommutation_criterion, commutation_criterion, commuting_transitivity,
    norm_multiplicativity, perpendicular_half_turns, pure_quaternions_are_half_turns, run_fuzz_suites,
    theta_homomorphism, theta_kernel, trichotomy_matches_rotations,
)
from tasks.records import PASS, SKIPPED

SEED = 1234


def test_fuzzer_is_reproducible():
    a, b = QuaternionFuzzer(SEED, 3), QuaternionFuzzer(SEED, 3)
    assert [a.quaternion() for _ in range(20)] == [b.quaternion() for _ in range(20)]


def test_fuzzer_shapes():
    fz = QuaternionFuzzer(SEED)
    for _ in range(50):
        x = fz.non_real()
        assert not x.is_real()
        assert fz.pure().is_pure()
        assert commutes(x, fz.combination(x))
        y = fz.perpendicular_pure(x)
        assert not (x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3)


@pytest.mark.parametrize("suite", [
    anticommutation_criterion, commutation_criterion, commuting_transitivity, norm_multiplicativity,
    theta_homomorphism, theta_kernel, trichotomy_matches_rotations, pure_quaternions_are_half_turns,
])
@pytest.mark.parametrize("d", [0, 3])
def test_identity_suites_pass(suite, d):
    record = suite(SEED, 90, d)
    assert record.verdict == PASS, record.values
    assert record.id.endswith(f".d{d}")
    assert record.values["samples"] == 90


def test_trichotomy_sees_every_verdict():
    record = trichotomy_matches_rotations(SEED, 90, 0)
    assert all(record.values["distribution"].values())


def test_half_turn_suites():
    assert centralizer_of_half_turn(SEED, 90).verdict == PASS
    record = perpendicular_half_turns(SEED, 200)
    assert record.verdict == PASS
    assert record.values["commuting"] > 0


def test_run_fuzz_suites_rational_only():
    records = run_fuzz_suites(SEED, rational_only=True, count=30)
    skipped = [r for r in records if r.verdict == SKIPPED]
    assert [r.id for r in skipped] == ["fuzz.anticommutation.d3", "fuzz.commutation.d3", "fuzz.theta-homomorphism.d3"]
    assert all(r.values["reason"] == "needs √3" for r in skipped)
    assert not any(r.failed for r in records)


def test_run_fuzz_suites_is_seeded():
    first = [r.to_json() for r in run_fuzz_suites(SEED, count=30)]
    assert first == [r.to_json() for r in run_fuzz_suites(SEED, count=30)]
    assert len({r["id"] for r in first}) == len(first)
