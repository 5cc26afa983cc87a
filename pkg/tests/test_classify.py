import pytest

from models.classify import Family, IsoType, classify_iso_type, decomposition_types
from models.corpus import CORPUS
from utils.errors import UnrecognizedGroup

from tests.oracles import corpus_group


@pytest.mark.parametrize("entry", [e for e in CORPUS if e.name != "A5"], ids=lambda e: e.name)
def test_corpus_classification(entry):
    assert classify_iso_type(entry.build()) == entry.expected


def test_icosahedral():
    a5 = corpus_group("A5")
    assert a5.order == 60
    assert classify_iso_type(a5) == IsoType(Family.ICOSAHEDRAL)


def test_labels():
    assert IsoType(Family.CYCLIC, 2).label == "C2"
    assert IsoType(Family.DIHEDRAL, 3).label == "Dihedral(3)"
    assert str(IsoType(Family.OCTAHEDRAL)) == "OctahedralS4"
    assert IsoType(Family.TRIVIAL).label == "Trivial"


def test_klein_group_is_dihedral_two(v4):
    assert classify_iso_type(v4) == IsoType(Family.DIHEDRAL, 2)


def test_subgroup_types(s4):
    counts = {}
    for h in s4.subgroups():
        label = classify_iso_type(s4, h).label
        counts[label] = counts.get(label, 0) + 1
    assert counts == {
        "Trivial": 1, "C2": 9, "C3": 4, "C4": 3, "Dihedral(2)": 4,
        "Dihedral(3)": 4, "Dihedral(4)": 3, "TetrahedralA4": 1, "OctahedralS4": 1,
    }


def test_decomposition_types(d12, d12_sqrt3, v4):
    assert decomposition_types(d12, d12.direct_product_decompositions()) == [("C2 × Dihedral(3)", 2)]
    assert decomposition_types(d12_sqrt3, d12_sqrt3.direct_product_decompositions()) == [("C2 × Dihedral(3)", 2)]
    assert decomposition_types(v4, v4.direct_product_decompositions()) == [("C2 × C2", 3)]
    c6 = corpus_group("C6")
    assert decomposition_types(c6, c6.direct_product_decompositions()) == [("C2 × C3", 1)]


def test_not_a_group(d8):
    quarter_turns = [x for x, n in enumerate(d8.element_orders) if n == 4]
    with pytest.raises(UnrecognizedGroup):
        classify_iso_type(d8, frozenset([0] + quarter_turns))
