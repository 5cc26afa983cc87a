# models/properties.py
"""
Group properties P1-P8, R3, R4, R6 decided on finite rotation groups.

Direct-product properties quantify over every subgroup S of G and every
internal decomposition S = H × K into non-trivial factors.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from models.group import Decomposition, FiniteRotGroup, Subgroup
from utils.config import SUBGROUP_GUARD
from utils.errors import GroupTooLarge

logger = logging.getLogger(__name__)


class PropertyTag(Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    R3 = "R3"
    R4 = "R4"
    R6 = "R6"


DESCRIPTIONS = {
    PropertyTag.P1: "abelian",
    PropertyTag.P2: "every maximal abelian subgroup is malnormal (CSA)",
    PropertyTag.P3: "commutative transitive on non-identity elements",
    PropertyTag.P4: "every non-trivial direct product subgroup is abelian",
    PropertyTag.P5: "direct product subgroups are abelian, or C2 × (non-abelian with an involution)",
    PropertyTag.P6: "direct product subgroups are abelian, or (elementary abelian 2-group) × (non-abelian with an involution)",
    PropertyTag.P7: "direct product subgroups are abelian, or both factors contain an involution",
    PropertyTag.P8: "torsion-free direct product subgroups are abelian",
    PropertyTag.R3: "commutative transitive on non-central elements",
    PropertyTag.R4: "direct product subgroups are abelian, or (non-abelian) × (central subgroup)",
    PropertyTag.R6: "in every direct product subgroup at least one factor is abelian",
}

SUBGROUP_TAGS = {
    PropertyTag.P2, PropertyTag.P4, PropertyTag.P5, PropertyTag.P6,
    PropertyTag.P7, PropertyTag.P8, PropertyTag.R4, PropertyTag.R6,
}

# arrows of the implication diagram, restricted to the decidable properties
IMPLICATIONS: List[Tuple[PropertyTag, PropertyTag]] = [
    (PropertyTag.P1, PropertyTag.P2),
    (PropertyTag.P2, PropertyTag.P3),
    (PropertyTag.P3, PropertyTag.P4),
    (PropertyTag.P4, PropertyTag.P5),
    (PropertyTag.P5, PropertyTag.P6),
    (PropertyTag.P6, PropertyTag.P7),
    (PropertyTag.P7, PropertyTag.P8),
    (PropertyTag.P3, PropertyTag.R3),
    (PropertyTag.R3, PropertyTag.R4),
    (PropertyTag.P4, PropertyTag.R4),
    (PropertyTag.P6, PropertyTag.R6),
    (PropertyTag.R4, PropertyTag.R6),
]

EDGE_NOTE = (
    "edges read from the implication diagram: the top row P2..P8, P1 up to P2, "
    "the bottom row R3 -> R4 -> R6, and the column arrows P3 -> R3, P4 -> R4, P6 -> R6; "
    "arrows into P9/P10 are omitted since those properties are not decided"
)


@dataclass
class PropertyReport:
    tag: PropertyTag
    holds: bool
    witnesses: Dict = field(default_factory=dict)
    vacuous: bool = False
    note: str = ""

    def to_json(self, group: Optional[FiniteRotGroup] = None):
        data = {
            "tag": self.tag.value,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "note": self.note,
            "witnesses": self.witnesses,
        }
        if group is not None and self.witnesses:
            data["witness_matrices"] = {
                str(i): group.elements[i].to_json() for i in _witness_indices(self.witnesses)
            }
        return data


def _witness_indices(witnesses: Dict):
    found = set()
    for key in ("elements", "subgroup"):
        found.update(witnesses.get(key, []))
    if "conjugator" in witnesses:
        found.add(witnesses["conjugator"])
    dec = witnesses.get("decomposition")
    if dec:
        found.update(dec["h"])
        found.update(dec["k"])
    return sorted(found)


# -- factor predicates --------------------------------------------------------

def _has_involution(group: FiniteRotGroup, h: Subgroup) -> bool:
    return any(group.element_orders[a] == 2 for a in h)


def _exponent_two(group: FiniteRotGroup, h: Subgroup) -> bool:
    return all(group.element_orders[a] <= 2 for a in h)


def _decomposition_ok(tag: PropertyTag, group: FiniteRotGroup, s: Subgroup, dec: Decomposition, center: Subgroup) -> bool:
    h, k = dec.factor_h, dec.factor_k
    if group.is_abelian(s):
        return True
    h_ab, k_ab = group.is_abelian(h), group.is_abelian(k)
    if tag is PropertyTag.P4:
        return False
    if tag is PropertyTag.P5:
        return any(len(a) == 2 and not group.is_abelian(b) and _has_involution(group, b)
                   for a, b in ((h, k), (k, h)))
    if tag is PropertyTag.P6:
        return any(group.is_abelian(a) and not group.is_abelian(b) and _has_involution(group, b)
                   and _exponent_two(group, a) for a, b in ((h, k), (k, h)))
    if tag is PropertyTag.P7:
        return _has_involution(group, h) and _has_involution(group, k)
    if tag is PropertyTag.R4:
        return any(not group.is_abelian(a) and b <= center for a, b in ((h, k), (k, h)))
    if tag is PropertyTag.R6:
        return h_ab or k_ab
    raise ValueError(f"{tag.value} is not a direct product property")


# -- deciders -----------------------------------------------------------------

def _check_abelian(group: FiniteRotGroup) -> PropertyReport:
    for a in range(group.order):
        for b in range(a + 1, group.order):
            if not group.commute(a, b):
                return PropertyReport(PropertyTag.P1, False, {"elements": [a, b]})
    return PropertyReport(PropertyTag.P1, True)


def _check_csa(group: FiniteRotGroup) -> PropertyReport:
    for h in group.maximal_abelian_subgroups():
        g = group.malnormality_witness(h)
        if g is not None:
            return PropertyReport(PropertyTag.P2, False, {"subgroup": sorted(h), "conjugator": g})
    return PropertyReport(PropertyTag.P2, True)


def _check_transitive(group: FiniteRotGroup, tag: PropertyTag) -> PropertyReport:
    excluded = {0} if tag is PropertyTag.P3 else group.center()
    pool = [a for a in range(group.order) if a not in excluded]
    for x in pool:
        partners = [y for y in pool if group.commute(x, y)]
        for i, y in enumerate(partners):
            for z in partners[i + 1:]:
                if not group.commute(y, z):
                    return PropertyReport(tag, False, {"elements": [x, y, z]})
    return PropertyReport(tag, True)


def _check_products(group: FiniteRotGroup, tag: PropertyTag) -> PropertyReport:
    center = group.center()
    for s, decs in group.all_decompositions:
        for dec in decs:
            if not _decomposition_ok(tag, group, s, dec, center):
                return PropertyReport(tag, False, {"subgroup": sorted(s), "decomposition": dec.to_json()})
    return PropertyReport(tag, True)


def check_property(group: FiniteRotGroup, tag: PropertyTag) -> PropertyReport:
    """Decide one property on a finite rotation group, with a replayable witness on failure."""
    if tag in SUBGROUP_TAGS and group.order > SUBGROUP_GUARD:
        raise GroupTooLarge(group.order, SUBGROUP_GUARD)
    if tag is PropertyTag.P1:
        report = _check_abelian(group)
    elif tag is PropertyTag.P2:
        report = _check_csa(group)
    elif tag in (PropertyTag.P3, PropertyTag.R3):
        report = _check_transitive(group, tag)
    elif tag is PropertyTag.P8:
        # a finite group has no torsion-free non-trivial subgroup
        report = PropertyReport(tag, True, vacuous=True,
                                note="vacuous: every non-trivial finite group has torsion")
    else:
        report = _check_products(group, tag)
    logger.debug("%s on group of order %d: %s", tag.value, group.order, report.holds)
    return report


def check_all(group: FiniteRotGroup, tags: Sequence[PropertyTag] = tuple(PropertyTag)) -> Dict[PropertyTag, PropertyReport]:
    return {tag: check_property(group, tag) for tag in tags}


def verify_witness(group: FiniteRotGroup, report: PropertyReport) -> bool:
    """Re-evaluate a failing report's witness from scratch; True iff it shows the violation."""
    if report.holds:
        return False
    w = report.witnesses
    tag = report.tag
    if tag is PropertyTag.P1:
        a, b = w["elements"]
        return group.elements[a] @ group.elements[b] != group.elements[b] @ group.elements[a]
    if tag is PropertyTag.P2:
        h = frozenset(w["subgroup"])
        g = w["conjugator"]
        maximal = group.is_abelian(h) and not any(
            h < other and group.is_abelian(other) for other in group.subgroups())
        return maximal and g not in h and len(group.conjugate(g, h) & h) > 1
    if tag in (PropertyTag.P3, PropertyTag.R3):
        x, y, z = (group.elements[i] for i in w["elements"])
        excluded = {0} if tag is PropertyTag.P3 else group.center()
        if any(i in excluded for i in w["elements"]):
            return False
        return x @ y == y @ x and x @ z == z @ x and y @ z != z @ y
    s = frozenset(w["subgroup"])
    dec = Decomposition(frozenset(w["decomposition"]["h"]), frozenset(w["decomposition"]["k"]))
    if dec not in group.direct_product_decompositions(s):
        return False
    return not _decomposition_ok(tag, group, s, dec, group.center())


@dataclass
class HarnessReport:
    edges: List[Tuple[str, str]]
    groups: List[str]
    checked: int = 0
    violations: List[Dict] = field(default_factory=list)
    note: str = EDGE_NOTE

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self):
        return {
            "note": self.note,
            "edges": [f"{a} -> {b}" for a, b in self.edges],
            "groups": self.groups,
            "checked": self.checked,
            "violations": self.violations,
        }


def implication_harness(corpus: Sequence[Tuple[str, FiniteRotGroup]]) -> HarnessReport:
    """Check every diagram arrow on every group: the source holding forces the target."""
    report = HarnessReport(edges=[(a.value, b.value) for a, b in IMPLICATIONS], groups=[n for n, _ in corpus])
    for name, group in corpus:
        verdicts = {tag: check_property(group, tag).holds for tag in PropertyTag}
        for source, target in IMPLICATIONS:
            report.checked += 1
            if verdicts[source] and not verdicts[target]:
                logger.error("implication %s -> %s violated on %s", source.value, target.value, name)
                report.violations.append({"group": name, "edge": f"{source.value} -> {target.value}"})
    return report
