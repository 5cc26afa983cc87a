import pytest

from models.corpus import commutation_counterexample
from models.properties import (
    IMPLICATIONS, PropertyReport, PropertyTag, check_all, check_property, implication_harness, verify_witness,
)
from utils.errors import GroupTooLarge

from tests.oracles import corpus_group, cyclic, product_group, symmetric3


def test_p3_fails_on_d8_at_the_central_half_turn(d8):
    report = check_property(d8, PropertyTag.P3)
    assert not report.holds
    x, y, z = report.witnesses["elements"]
    assert x == d8.index_of(commutation_counterexample()[0])
    assert d8.commute(x, y) and d8.commute(x, z) and not d8.commute(y, z)
    assert verify_witness(d8, report)


def test_r3_holds_on_d8(d8):
    assert check_property(d8, PropertyTag.R3).holds


def test_p4_fails_on_d12(d12, d12_sqrt3):
    for group in (d12, d12_sqrt3):
        report = check_property(group, PropertyTag.P4)
        assert not report.holds
        assert report.witnesses["subgroup"] == sorted(group.all())
        assert verify_witness(group, report)
        assert check_property(group, PropertyTag.P5).holds
        assert check_property(group, PropertyTag.R4).holds


def test_nonabelian_witnesses(d8):
    p1 = check_property(d8, PropertyTag.P1)
    assert not p1.holds and verify_witness(d8, p1)
    p2 = check_property(d8, PropertyTag.P2)
    assert not p2.holds and verify_witness(d8, p2)


def test_abelian_groups_satisfy_everything(v4):
    reports = check_all(v4)
    assert all(r.holds for r in reports.values())
    assert not any(verify_witness(v4, r) for r in reports.values())


@pytest.mark.parametrize("name, expected", [
    ("A4", {"P1": False, "P2": False, "P3": True, "P4": True, "R3": True}),
    ("S4", {"P1": False, "P2": False, "P3": False, "P4": True, "R3": False}),
    ("D6", {"P1": False, "P2": False, "P3": True, "P4": True, "R3": True}),
])
def test_property_profiles(name, expected):
    group = corpus_group(name)
    reports = check_all(group, [PropertyTag(t) for t in expected])
    assert {tag.value: r.holds for tag, r in reports.items()} == expected


def test_p8_is_vacuous(d8):
    report = check_property(d8, PropertyTag.P8)
    assert report.holds and report.vacuous
    assert "vacuous" in report.note


def test_tampered_witness_is_rejected(d8):
    report = check_property(d8, PropertyTag.P3)
    x, y, z = report.witnesses["elements"]
    assert not verify_witness(d8, PropertyReport(PropertyTag.P3, False, {"elements": [x, y, y]}))
    assert not verify_witness(d8, PropertyReport(PropertyTag.R3, False, {"elements": [x, y, z]}))


def test_witness_json_includes_matrices(d12):
    report = check_property(d12, PropertyTag.P4)
    data = report.to_json(d12)
    assert data["tag"] == "P4" and data["holds"] is False
    assert set(data["witness_matrices"]) == {str(i) for i in range(12)}


def test_size_guard(monkeypatch, d8):
    monkeypatch.setattr("models.properties.SUBGROUP_GUARD", 4)
    with pytest.raises(GroupTooLarge):
        check_property(d8, PropertyTag.P5)
    assert not check_property(d8, PropertyTag.P3).holds


def test_implication_harness(d8, d12, v4, s4):
    report = implication_harness([("D8", d8), ("D12", d12), ("V4", v4), ("S4", s4)])
    assert report.ok
    assert report.checked == 4 * len(IMPLICATIONS)
    data = report.to_json()
    assert "P3 -> R3" in data["edges"]
    assert data["groups"] == ["D8", "D12", "V4", "S4"]


@pytest.mark.parametrize("factors, failing, holding", [
    ((cyclic(3), symmetric3()), ["P5", "P6", "P7"], ["R4", "R6"]),
    ((symmetric3(), symmetric3()), ["P5", "P6", "P7", "R4", "R6"], []),
    ((cyclic(4), symmetric3()), ["P5", "P6"], ["P7", "R4", "R6"]),
    ((cyclic(2), cyclic(2), symmetric3()), ["P5"], ["P6", "P7", "R4", "R6"]),
], ids=["C3xS3", "S3xS3", "C4xS3", "C2xC2xS3"])
def test_direct_product_shapes_on_abstract_groups(factors, failing, holding):
    group = product_group(*factors)
    for tag in failing:
        report = check_property(group, PropertyTag(tag))
        assert not report.holds, tag
        assert verify_witness(group, report), tag
    for tag in holding:
        assert check_property(group, PropertyTag(tag)).holds, tag


def test_r4_fails_when_the_abelian_factor_is_not_central():
    group = product_group(symmetric3(), symmetric3())
    assert group.center() == {0}
    report = check_property(group, PropertyTag.R4)
    assert not report.holds
    dec = report.witnesses["decomposition"]
    assert len(report.witnesses["subgroup"]) == 12
    assert len(dec["h"]) == 2 and not set(dec["h"]) <= group.center()
    assert verify_witness(group, report)


def test_abstract_product_table():
    group = product_group(cyclic(3), symmetric3())
    assert group.order == 18
    assert group.is_subgroup(group.all())
    assert sorted(group.element_orders).count(2) == 3
    assert len(group.center()) == 3
