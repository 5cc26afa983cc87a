import pytest

from models.corpus import commutation_counterexample, free_pair
from models.group import Decomposition, generate_closure
from models.rotation import Rot3, axis_of
from utils.errors import AmbientMismatch, ClosureExceedsCap, GroupTooLarge, NotASubgroup

from tests.oracles import brute_force_subgroups, corpus_group


def test_trivial_closure():
    g = generate_closure([])
    assert g.order == 1
    assert g.elements[0].is_identity()
    assert g.subgroups() == [frozenset({0})]


def test_closure_layout(d8):
    a, b, c = commutation_counterexample()
    assert d8.order == 8
    assert d8.elements[0].is_identity()
    assert d8.elements[d8.generator_indices[0]] == b
    assert a in d8.index
    for x in range(d8.order):
        assert d8.mul(x, d8.inv(x)) == 0


def test_closure_is_deterministic():
    _, b, c = commutation_counterexample()
    first = generate_closure([b, c])
    assert generate_closure([b, c]).elements == first.elements
    assert generate_closure([c, b]).elements == first.elements


def test_closure_cap():
    with pytest.raises(ClosureExceedsCap) as info:
        generate_closure(list(free_pair()), cap=500)
    assert info.value.count_so_far > 500
    with pytest.raises(ValueError):
        generate_closure([Rot3.identity()], cap=0)


def test_closure_rejects_mixed_fields():
    with pytest.raises(AmbientMismatch):
        generate_closure([Rot3.identity(0), Rot3.identity(3)])


@pytest.mark.parametrize("name, count", [("C6", 4), ("V4", 5), ("D8", 10), ("D12", 16), ("A4", 10)])
def test_subgroups_match_brute_force(name, count):
    group = corpus_group(name)
    subgroups = group.subgroups()
    assert len(subgroups) == count
    assert set(subgroups) == brute_force_subgroups(group)
    assert subgroups[0] == frozenset({0})
    assert subgroups[-1] == group.all()


def test_large_lattices(s4):
    assert len(s4.subgroups()) == 30
    assert len(corpus_group("A5").subgroups()) == 59


def test_element_orders(d8):
    assert sorted(d8.element_orders) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_center_and_centralizers(d8, d12, s4):
    a = d8.index_of(commutation_counterexample()[0])
    assert d8.center() == frozenset({0, a})
    assert len(d12.center()) == 2
    assert s4.center() == frozenset({0})
    r = d12.element_orders.index(6)
    assert d12.centralizer(r) == d12.generated([r])
    assert len(d12.centralizer(r)) == 6
    assert d8.centralizer(a) == d8.all()


def test_centralizers_share_axes(s4):
    for g, n in enumerate(s4.element_orders):
        if n >= 3:
            axis = axis_of(s4.elements[g])
            assert all(axis_of(s4.elements[h]) == axis for h in s4.centralizer(g) if h)


def test_maximal_abelian_subgroups(d8):
    maximal = d8.maximal_abelian_subgroups()
    assert sorted(len(h) for h in maximal) == [4, 4, 4]
    assert sum(d8.is_abelian(h) for h in maximal) == 3
    cyclic = [h for h in maximal if any(d8.element_orders[x] == 4 for x in h)]
    assert len(cyclic) == 1


def test_malnormality(d8, v4):
    rotations = next(h for h in d8.maximal_abelian_subgroups() if any(d8.element_orders[x] == 4 for x in h))
    assert not d8.is_malnormal(rotations)
    g = d8.malnormality_witness(rotations)
    assert g not in rotations
    assert len(d8.conjugate(g, rotations) & rotations) > 1
    assert d8.is_malnormal(d8.all())
    assert v4.is_malnormal(v4.all())
    r = d8.element_orders.index(4)
    with pytest.raises(NotASubgroup):
        d8.malnormality_witness(frozenset({0, r}))


def test_decompositions(d8, d12, v4):
    assert d8.direct_product_decompositions() == []
    assert len(v4.direct_product_decompositions()) == 3
    decs = d12.direct_product_decompositions()
    assert len(decs) == 2
    center = d12.center()
    for dec in decs:
        assert isinstance(dec, Decomposition)
        assert dec.factor_h == center
        assert len(dec.factor_k) == 6 and not d12.is_abelian(dec.factor_k)
        assert dec.to_json()["h"] == sorted(center)


def test_decompositions_of_subgroups(d12):
    cyclic6 = d12.generated([d12.element_orders.index(6)])
    decs = d12.direct_product_decompositions(cyclic6)
    assert [(len(d.factor_h), len(d.factor_k)) for d in decs] == [(2, 3)]
    with pytest.raises(NotASubgroup):
        d12.direct_product_decompositions(frozenset({0, d12.element_orders.index(6)}))
    assert all(len(decs) > 0 for _, decs in d12.all_decompositions)


def test_size_guard(monkeypatch, d8):
    monkeypatch.setattr("models.group.SUBGROUP_GUARD", 4)
    fresh = generate_closure([d8.elements[g] for g in d8.generator_indices])
    with pytest.raises(GroupTooLarge):
        fresh.subgroups()
    with pytest.raises(GroupTooLarge):
        fresh.direct_product_decompositions()


def test_to_json(v4):
    data = v4.to_json()
    assert data["order"] == 4
    assert data["ambient_d"] == 0
    assert data["elements"][0] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
