import pytest

from models.corpus import (
    CORPUS, CORPUS_VERSION, build_corpus, commutation_counterexample, corpus_entries,
    dihedral12_sqrt3_generators, golden_fifth_turn, infinite_product_generators,
)
from models.rotation import Rot3

ORDERS = {
    "C1": 1, "C2": 2, "C3": 3, "C4": 4, "C6": 6, "V4": 4, "D6": 6, "D8": 8, "D12": 12,
    "A4": 12, "S4": 24, "D12/sqrt3": 12, "C5": 5, "A5": 60,
}


def test_corpus_names_are_unique():
    names = [e.name for e in CORPUS]
    assert len(names) == len(set(names)) == len(ORDERS)
    assert CORPUS_VERSION == 1


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_entries_build_with_expected_order(entry):
    group = entry.build()
    assert group.order == ORDERS[entry.name]
    assert group.d == entry.d
    assert entry.to_json()["expected"] == entry.expected.label


def test_rational_only_keeps_plain_rationals():
    names = [e.name for e in corpus_entries(rational_only=True)]
    assert "A5" not in names and "C5" not in names and "D12/sqrt3" not in names
    assert all(g.d == 0 for _, g in build_corpus(rational_only=True))


def test_named_rotations():
    a, b, c = commutation_counterexample()
    assert a == Rot3.diag(1, -1, -1)
    assert a == b @ b
    assert c == Rot3.diag(-1, 1, -1)
    a2, bt, c2 = infinite_product_generators()
    assert (a2, c2) == (a, c)
    assert str(bt) == "[[1,0,0],[0,-3/5,-4/5],[0,4/5,-3/5]]"


def test_irrational_generators():
    sixth, flip = dihedral12_sqrt3_generators()
    assert sixth.d == flip.d == 3
    assert sixth.to_json()[1] == ["0", "1/2", "-1/2√3"]
    assert (sixth ** 6).is_identity()
    fifth = golden_fifth_turn()
    assert fifth.d == 5
    assert (fifth ** 5).is_identity() and not fifth.is_identity()
