# models/classify.py
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from models.group import Decomposition, FiniteRotGroup, Subgroup
from utils.errors import UnrecognizedGroup


class Family(Enum):
    TRIVIAL = "Trivial"
    CYCLIC = "Cyclic"
    DIHEDRAL = "Dihedral"
    TETRAHEDRAL = "TetrahedralA4"
    OCTAHEDRAL = "OctahedralS4"
    ICOSAHEDRAL = "IcosahedralA5"


@dataclass(frozen=True)
class IsoType:
    family: Family
    n: int = 0

    @property
    def label(self) -> str:
        if self.family is Family.CYCLIC:
            return f"C{self.n}"
        if self.family is Family.DIHEDRAL:
            return f"Dihedral({self.n})"
        return self.family.value

    def __str__(self):
        return self.label


def classify_iso_type(group: FiniteRotGroup, h: Optional[Subgroup] = None) -> IsoType:
    """
    Name a finite rotation group (or one of its subgroups).

    Finite subgroups of SO3 are cyclic, dihedral, A4, S4 or A5, so the order
    together with the multiset of element orders pins the family down.
    """
    members = group.all() if h is None else frozenset(h)
    n = len(members)
    orders = Counter(group.element_orders[a] for a in members)
    if n == 1:
        return IsoType(Family.TRIVIAL)
    if orders.get(n):
        return IsoType(Family.CYCLIC, n)
    if n % 2 == 0:
        m = n // 2
        # a cyclic subgroup of index 2 plus at least m half turns outside it
        if orders.get(m) and orders.get(2, 0) >= m:
            return IsoType(Family.DIHEDRAL, m)
    if n == 12 and orders == Counter({1: 1, 2: 3, 3: 8}):
        return IsoType(Family.TETRAHEDRAL)
    if n == 24 and orders == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return IsoType(Family.OCTAHEDRAL)
    if n == 60 and orders == Counter({1: 1, 2: 15, 3: 20, 5: 24}):
        return IsoType(Family.ICOSAHEDRAL)
    raise UnrecognizedGroup(f"order {n} with element orders {dict(sorted(orders.items()))}")


def decomposition_types(group: FiniteRotGroup, decompositions: List[Decomposition]) -> List[Tuple[str, int]]:
    """Group decompositions by the isomorphism types of their factors: [(label, count)]."""
    counts: Counter = Counter()
    for dec in decompositions:
        pair = sorted((classify_iso_type(group, dec.factor_h), classify_iso_type(group, dec.factor_k)),
                      key=lambda t: (len(t.label), t.label))
        counts[" × ".join(t.label for t in pair)] += 1
    return sorted(counts.items())
