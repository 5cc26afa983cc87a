# tasks/paper_suite.py
"""
Witness suite: rebuilds every named rotation and example group, and checks
each claimed identity, order, decomposition and property exactly.
"""
import logging
from fractions import Fraction
from typing import List

from models.classify import Family, IsoType, classify_iso_type, decomposition_types
from models.corpus import (
    build_corpus, commutation_counterexample, commuting_infinite_pair, corpus_entries,
    dihedral12_sqrt3_generators, free_pair, infinite_product_generators, q,
)
from models.group import generate_closure
from models.properties import (
    EDGE_NOTE, PropertyTag, check_all, check_property, implication_harness, verify_witness,
)
from models.quaternion import Commutation, commutation_trichotomy
from models.rotation import Axis, OrderKind, Rot3, axis_of, element_order, rot_commutes, theta
from models.words import ABELIAN, FREE, word_no_relation_search
from tasks.fuzz_suite import run_fuzz_suites
from tasks.records import AssertionRecord, SuiteReport
from utils.errors import ClosureExceedsCap

logger = logging.getLogger(__name__)

check = AssertionRecord.check


def _m(rows, d: int = 0) -> Rot3:
    return Rot3.from_rows(rows, d)


def _f(text: str) -> Fraction:
    return Fraction(text)


def theta_golden_values() -> List[AssertionRecord]:
    expected = {
        "i": (q(0, 1), Rot3.diag(1, -1, -1)),
        "j": (q(0, 0, 1), Rot3.diag(-1, 1, -1)),
        "1+2i": (q(1, 2), _m([[1, 0, 0], [0, _f("-3/5"), _f("-4/5")], [0, _f("4/5"), _f("-3/5")]])),
        "1+2j": (q(1, 0, 2), _m([[_f("-3/5"), 0, _f("4/5")], [0, 1, 0], [_f("-4/5"), 0, _f("-3/5")]])),
        "1+4i": (q(1, 4), _m([[1, 0, 0], [0, _f("-15/17"), _f("-8/17")], [0, _f("8/17"), _f("-15/17")]])),
        "1": (q(1), Rot3.identity()),
    }
    records = []
    for name, (x, m) in expected.items():
        got = theta(x)
        records.append(check(f"theta.golden.{name}", f"theta({name}) has the stated matrix",
                             got == m, theta=str(got)))
    records.append(check("theta.axis", "the axis of theta(x) is the line through the vector part of x",
                         axis_of(theta(q(1, 2))) == Axis.from_vector(q(0, 1).vector)
                         and axis_of(theta(q(0, 0, 1, 1))) == Axis.from_vector(q(0, 0, 1, 1).vector),
                         axis_1_2i=str(axis_of(theta(q(1, 2)))), axis_j_k=str(axis_of(theta(q(0, 0, 1, 1))))))
    return records


def commutative_transitivity_counterexample() -> List[AssertionRecord]:
    a, b, c = commutation_counterexample()
    records = [
        check("ct.matrices", "A = diag(1,-1,-1), B = quarter turn about x, C = diag(-1,1,-1)",
              a == Rot3.diag(1, -1, -1) and c == Rot3.diag(-1, 1, -1)
              and b == _m([[1, 0, 0], [0, 0, -1], [0, 1, 0]]), A=str(a), B=str(b), C=str(c)),
        check("ct.relations", "AB = BA and AC = CA but BC ≠ CB",
              rot_commutes(a, b) and rot_commutes(a, c) and not rot_commutes(b, c)),
    ]
    verdicts = (
        commutation_trichotomy(q(0, 1), q(1, 1)),
        commutation_trichotomy(q(0, 1), q(0, 0, 1)),
        commutation_trichotomy(q(1, 1), q(0, 0, 1)),
    )
    records.append(check("ct.trichotomy", "i(i+1) = (i+1)i, ij = -ji, (i+1)j ≠ ±j(i+1)",
                         verdicts == (Commutation.COMMUTE, Commutation.ANTICOMMUTE, Commutation.NEITHER),
                         verdicts=[v.value for v in verdicts]))

    abc = generate_closure([a, b, c], cap=100)
    bc = generate_closure([b, c], cap=100)
    records.append(check("ct.same-group", "A = B² and ⟨A,B,C⟩ = ⟨B,C⟩",
                         a == b @ b and set(abc.elements) == set(bc.elements), order=bc.order))
    iso = classify_iso_type(bc)
    records.append(check("ct.dihedral8", "⟨B,C⟩ is the dihedral group of order 8",
                         bc.order == 8 and iso == IsoType(Family.DIHEDRAL, 4), order=bc.order, type=iso.label))
    decs = bc.direct_product_decompositions()
    records.append(check("ct.indecomposable", "the dihedral group of order 8 is not a non-trivial direct product",
                         decs == [], decompositions=len(decs)))
    center = bc.center()
    records.append(check("ct.center", "the centre of ⟨B,C⟩ is {E, A}",
                         center == frozenset({0, bc.index_of(a)}), center_order=len(center)))

    p3 = check_property(bc, PropertyTag.P3)
    x, y, z = p3.witnesses.get("elements", [None, None, None])
    records.append(check("ct.p3-fails", "the group is not commutative transitive, A being the pivot",
                         not p3.holds and x == bc.index_of(a) and verify_witness(bc, p3),
                         witness=[str(bc.elements[i]) for i in (x, y, z) if i is not None]))
    r3 = check_property(bc, PropertyTag.R3)
    records.append(check("ct.r3-holds", "but it is commutative transitive on non-central elements", r3.holds))
    return records


def infinite_direct_product() -> List[AssertionRecord]:
    a, bt, c = infinite_product_generators()
    bt_inv = bt.inverse()
    records = [
        check("idp.commuting", "A commutes with B̃ and with C", rot_commutes(a, bt) and rot_commutes(a, c)),
        check("idp.conjugation", "C B̃ = B̃⁻¹ C and C B̃⁻¹ = B̃ C",
              c @ bt == bt_inv @ c and c @ bt_inv == bt @ c),
    ]
    order = element_order(bt, cap=100)
    records.append(check("idp.infinite-order", "B̃ has infinite order",
                         order.kind is OrderKind.INFINITE_CERTIFIED, order=str(order), certificate=order.certificate))
    records.append(check("idp.a-order", "A has order 2", str(element_order(a, cap=10)) == "Finite(2)"))

    hits, upper_left = [], set()
    power = Rot3.identity()
    for n in range(0, 51):
        for sign in ((1,) if n == 0 else (1, -1)):
            p = power if sign == 1 else power.inverse()
            upper_left.add((p @ c)[0, 0])
            if p == a or p @ c == a:
                hits.append(sign * n)
        power = power @ bt
    records.append(check("idp.a-not-in-subgroup", "A is neither B̃ⁿ nor B̃ⁿC for |n| <= 50",
                         not hits, checked_exponents=101, hits=hits))
    records.append(check("idp.upper-left", "B̃ⁿC has upper-left entry -1, A has 1",
                         upper_left == {-1} and a[0, 0] == 1))
    try:
        generate_closure([a, bt, c], cap=500)
        infinite = False
    except ClosureExceedsCap:
        infinite = True
    records.append(check("idp.closure-cap", "⟨A, B̃, C⟩ is infinite (closure exceeds its cap)", infinite))
    return records


def finite_direct_product(rational_only: bool) -> List[AssertionRecord]:
    records = []
    if rational_only:
        return [AssertionRecord.skip(id, anchor, "needs √3") for id, anchor in (
            ("fdp.generator-order", "the sixth turn has order 6"),
            ("fdp.sqrt3", "the dihedral group of order 12 over Q(√3) is C2 × S3"),
            ("fdp.p4-fails", "so the group does not satisfy P4"),
        )]
    sixth, flip = dihedral12_sqrt3_generators()
    records.append(check("fdp.generator-order", "the sixth turn has order 6",
                         str(element_order(sixth, cap=10)) == "Finite(6)"))
    g = generate_closure([sixth, flip], cap=100)
    iso = classify_iso_type(g)
    decs = g.direct_product_decompositions()
    types = decomposition_types(g, decs)
    center = g.center()
    central_c2 = all(center in (dec.factor_h, dec.factor_k) for dec in decs)
    records.append(check("fdp.sqrt3", "the dihedral group of order 12 over Q(√3) is C2 × S3",
                         g.order == 12 and iso == IsoType(Family.DIHEDRAL, 6)
                         and [t for t, _ in types] == ["C2 × Dihedral(3)"] and len(center) == 2 and central_c2,
                         order=g.order, type=iso.label, decompositions=dict(types)))
    p4 = check_property(g, PropertyTag.P4)
    records.append(check("fdp.p4-fails", "so the group does not satisfy P4",
                         not p4.holds and verify_witness(g, p4), witness=p4.witnesses))
    return records


def corpus_checks(rational_only: bool) -> List[AssertionRecord]:
    records = []
    built = build_corpus(rational_only)
    reports = {entry.name: check_all(group) for entry, group in built}

    wrong = [e.name for e, g in built if classify_iso_type(g) != e.expected]
    records.append(check("corpus.classification", "every corpus group has its expected isomorphism type",
                         not wrong, groups=[e.name for e, _ in built], misclassified=wrong))

    for tag in (PropertyTag.P5, PropertyTag.P6, PropertyTag.P7, PropertyTag.R6):
        failing = [name for name, rep in reports.items() if not rep[tag].holds]
        records.append(check(f"corpus.{tag.value}", f"every finite rotation group satisfies {tag.value}",
                             not failing, failing=failing))

    unreplayable = [f"{e.name}:{tag.value}" for e, g in built for tag, rep in reports[e.name].items()
                    if not rep.holds and not verify_witness(g, rep)]
    records.append(check("corpus.witnesses", "every failing property carries a witness that re-verifies",
                         not unreplayable, unreplayable=unreplayable))

    d12 = dict((e.name, g) for e, g in built)["D12"]
    p4 = reports["D12"][PropertyTag.P4]
    records.append(check("corpus.d12-p4", "the rational dihedral group of order 12 violates P4 but keeps P5",
                         not p4.holds and reports["D12"][PropertyTag.P5].holds, witness=p4.witnesses,
                         order=d12.order))

    abelian_ok = all(all(r.holds for r in reports[e.name].values()) for e, g in built if g.is_abelian())
    records.append(check("corpus.abelian", "abelian groups satisfy every property", abelian_ok))

    harness = implication_harness([(e.name, g) for e, g in built])
    records.append(check("corpus.implications", "no implication arrow is violated on the corpus",
                         harness.ok, checked=harness.checked, violations=harness.violations, edges=EDGE_NOTE))

    bad_axes = []
    for entry, group in built:
        for g, n in enumerate(group.element_orders):
            if n < 3:
                continue
            axis = axis_of(group.elements[g])
            for h in group.centralizer(g):
                if h != 0 and axis_of(group.elements[h]) != axis:
                    bad_axes.append(f"{entry.name}:{g}:{h}")
    records.append(check("corpus.centralizer-axis",
                         "elements commuting with a rotation of order >= 3 share its axis",
                         not bad_axes, mismatches=bad_axes[:10]))

    not_transitive = []
    for entry, group in built:
        for s in group.subgroups():
            if any(group.element_orders[a] == 2 for a in s):
                continue
            members = [a for a in s if a != 0]
            for x in members:
                partners = [y for y in members if group.commute(x, y)]
                if any(not group.commute(y, z) for y in partners for z in partners):
                    not_transitive.append(entry.name)
    records.append(check("corpus.no-involution-transitive",
                         "subgroups without involutions are commutative transitive",
                         not not_transitive, failing=sorted(set(not_transitive))))

    centerless = [(e.name, g) for e, g in built if len(g.center()) == 1]
    p4_r4 = [name for name, g in centerless
             if reports[name][PropertyTag.P4].holds != reports[name][PropertyTag.R4].holds]
    records.append(check("corpus.centerless-p4-r4", "with trivial centre P4 and R4 coincide",
                         not p4_r4, groups=[n for n, _ in centerless], disagreements=p4_r4))

    d8_reports = reports["D8"]
    records.append(check("corpus.d8-r3-not-p3", "D8 is transitive on non-central elements only",
                         d8_reports[PropertyTag.R3].holds and not d8_reports[PropertyTag.P3].holds))
    records.append(check("corpus.p8-vacuous", "P8 is vacuous on finite groups and reported as such",
                         all(rep[PropertyTag.P8].vacuous for rep in reports.values())))
    return records


def infinite_examples() -> List[AssertionRecord]:
    records = []
    g1, g2 = free_pair()
    try:
        generate_closure([g1, g2], cap=10000)
        capped = False
    except ClosureExceedsCap as exc:
        capped = exc.count_so_far > 10000
    records.append(check("free.closure-cap", "⟨θ(1+2i), θ(1+2j)⟩ is infinite (closure exceeds 10000)", capped))
    free = word_no_relation_search([g1, g2], 8, FREE)
    records.append(check("free.words", "all reduced words of length <= 8 are pairwise distinct",
                         free.all_distinct and free.count == 13121, result=str(free)))

    h1, h2 = commuting_infinite_pair()
    orders = [element_order(h, cap=100) for h in (h1, h2)]
    records.append(check("zz.commuting", "θ(1+2i) and θ(1+4i) commute and both have infinite order",
                         rot_commutes(h1, h2) and all(o.kind is OrderKind.INFINITE_CERTIFIED for o in orders),
                         certificates=[o.certificate for o in orders]))
    zz = word_no_relation_search([h1, h2], 10, ABELIAN)
    records.append(check("zz.no-relation", "g1^m g2^n = E only for m = n = 0 (|m|, |n| <= 10)",
                         zz.all_distinct, result=str(zz)))

    torsion = word_no_relation_search([theta(q(0, 1))], 4, FREE)
    records.append(check("words.torsion", "a half turn satisfies g1^2 = E",
                         str(torsion) == "RelationFound(g1^2)", result=str(torsion)))
    return records


def paper_witness_suite(rational_only: bool = False) -> List[AssertionRecord]:
    records = []
    for section in (theta_golden_values, commutative_transitivity_counterexample, infinite_direct_product):
        records.extend(section())
    records.extend(finite_direct_product(rational_only))
    records.extend(corpus_checks(rational_only))
    records.extend(infinite_examples())
    logger.info("witness suite: %d records", len(records))
    return records


def verify_all(seed: int, rational_only: bool = False) -> SuiteReport:
    """Everything verify-paper runs: the witness suite followed by the fuzz suites."""
    report = SuiteReport(seed=seed, rational_only=rational_only)
    report.header = {
        "implication_edges": EDGE_NOTE,
        "corpus": [e.to_json() for e in corpus_entries(rational_only)],
        "ambient_fields": [0] if rational_only else [0, 3, 5],
    }
    report.extend(paper_witness_suite(rational_only))
    report.extend(run_fuzz_suites(seed, rational_only))
    return report
