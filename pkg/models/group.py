# models/group.py
"""Finite rotation groups: closure, Cayley table and the subgroup lattice.

Elements are referred to by index into FiniteRotGroup.elements; index 0 is
always the identity. Subgroups are frozensets of indices.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence

from models.rotation import Rot3
from utils.config import CLOSURE_CAP, SUBGROUP_GUARD
from utils.errors import AmbientMismatch, ClosureExceedsCap, GroupTooLarge, NotASubgroup

logger = logging.getLogger(__name__)

Subgroup = FrozenSet[int]


@dataclass(frozen=True)
class Decomposition:
    """An internal direct product H × K of a (sub)group, both factors non-trivial."""

    factor_h: Subgroup
    factor_k: Subgroup

    def to_json(self):
        return {"h": sorted(self.factor_h), "k": sorted(self.factor_k)}


class FiniteRotGroup:
    def __init__(self, elements: Sequence[Rot3], cayley: List[List[int]], generator_indices: Sequence[int]):
        self.elements = list(elements)
        self.cayley = cayley
        self.generator_indices = tuple(generator_indices)
        self.d = self.elements[0].d
        self.index: Dict[Rot3, int] = {m: i for i, m in enumerate(self.elements)}
        self.inverses = [row.index(0) for row in cayley]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def all(self) -> Subgroup:
        return frozenset(range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def index_of(self, m: Rot3) -> int:
        return self.index[m]

    def commute(self, a: int, b: int) -> bool:
        return self.cayley[a][b] == self.cayley[b][a]

    @cached_property
    def element_orders(self) -> List[int]:
        orders = []
        for a in range(self.order):
            n, p = 1, a
            while p != 0:
                p = self.cayley[p][a]
                n += 1
            orders.append(n)
        return orders

    def is_abelian(self, h: Optional[Subgroup] = None) -> bool:
        members = sorted(self.all() if h is None else h)
        return all(self.commute(a, b) for i, a in enumerate(members) for b in members[i + 1:])

    def is_subgroup(self, h) -> bool:
        h = frozenset(h)
        if 0 not in h or not h <= self.all():
            return False
        return all(self.cayley[a][b] in h for a in h for b in h)

    # -- closures inside the group ----------------------------------------

    def generated(self, gens) -> Subgroup:
        """Subgroup generated by the given element indices (finite, so no inverses needed)."""
        members = {0}
        frontier = [0]
        gens = [g for g in gens if g != 0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.cayley[a][g]
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(members)

    def _cyclic_generators(self) -> Dict[Subgroup, int]:
        seen: Dict[Subgroup, int] = {}
        for a in range(self.order):
            seen.setdefault(self.generated([a]), a)
        return seen

    # -- subgroup lattice -------------------------------------------------

    def _guard(self):
        if self.order > SUBGROUP_GUARD:
            raise GroupTooLarge(self.order, SUBGROUP_GUARD)

    @cached_property
    def _subgroups(self) -> List[Subgroup]:
        cyclic = self._cyclic_generators()
        known = {h: (g,) for h, g in cyclic.items()}
        frontier = list(known)
        # joining with cyclic subgroups reaches every subgroup, one generator at a time
        while frontier:
            nxt = []
            for h in frontier:
                for c, g in cyclic.items():
                    if c <= h:
                        continue
                    gens = known[h] + (g,)
                    j = self.generated(gens)
                    if j not in known:
                        known[j] = gens
                        nxt.append(j)
            frontier = nxt
        result = _sorted_subgroups(known)
        logger.debug("group of order %d has %d subgroups", self.order, len(result))
        return result

    def subgroups(self) -> List[Subgroup]:
        self._guard()
        return list(self._subgroups)

    def center(self) -> Subgroup:
        return frozenset(a for a in range(self.order) if all(self.commute(a, b) for b in range(self.order)))

    def centralizer(self, g: int) -> Subgroup:
        return frozenset(h for h in range(self.order) if self.commute(g, h))

    def maximal_abelian_subgroups(self) -> List[Subgroup]:
        abelian = [h for h in self.subgroups() if self.is_abelian(h)]
        return [h for h in abelian if not any(h < other for other in abelian)]

    def conjugate(self, g: int, h: Subgroup) -> Subgroup:
        gi = self.inverses[g]
        return frozenset(self.cayley[self.cayley[g][a]][gi] for a in h)

    def malnormality_witness(self, h: Subgroup) -> Optional[int]:
        """First g outside H with gHg⁻¹ ∩ H non-trivial, or None if H is malnormal."""
        if not self.is_subgroup(h):
            raise NotASubgroup("the given index set is not a subgroup")
        for g in range(self.order):
            if g in h:
                continue
            if len(self.conjugate(g, h) & h) > 1:
                return g
        return None

    def is_malnormal(self, h: Subgroup) -> bool:
        return self.malnormality_witness(frozenset(h)) is None

    def direct_product_decompositions(self, s: Optional[Subgroup] = None) -> List[Decomposition]:
        """
        All unordered internal decompositions S = H × K with H, K non-trivial.

        H ∩ K = {E}, elementwise commuting and |H|·|K| = |S| force HK = S and
        both factors normal.
        """
        self._guard()
        s = self.all() if s is None else frozenset(s)
        if not self.is_subgroup(s):
            raise NotASubgroup("the given index set is not a subgroup")
        return self._decompositions(s)

    def _decompositions(self, s: Subgroup) -> List[Decomposition]:
        inside = [h for h in self._subgroups if h <= s and 1 < len(h) < len(s)]
        found = []
        for i, h in enumerate(inside):
            if len(s) % len(h):
                continue
            for k in inside[i + 1:]:
                if len(h) * len(k) != len(s) or len(h & k) != 1:
                    continue
                if all(self.commute(a, b) for a in h for b in k):
                    found.append(Decomposition(h, k))
        return found

    @cached_property
    def all_decompositions(self):
        """(subgroup, decompositions) for every subgroup that has at least one."""
        self._guard()
        out = []
        for s in self._subgroups:
            decs = self._decompositions(s)
            if decs:
                out.append((s, decs))
        return out

    def to_json(self):
        return {
            "ambient_d": self.d,
            "order": self.order,
            "generators": list(self.generator_indices),
            "elements": [m.to_json() for m in self.elements],
        }


def _sorted_subgroups(subgroups) -> List[Subgroup]:
    return sorted(subgroups, key=lambda h: (len(h), sorted(h)))


def generate_closure(gens: Sequence[Rot3], cap: int = CLOSURE_CAP, d: Optional[int] = None) -> FiniteRotGroup:
    """
    Breadth-first closure of a generating set under multiplication.

    Each BFS layer is sorted by matrix entries before it is indexed, so the
    element order only depends on the generators. Raises ClosureExceedsCap as
    soon as more than ``cap`` elements are found.
    """
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    gens = list(gens)
    if d is None:
        d = gens[0].d if gens else 0
    for g in gens:
        if g.d != d:
            raise AmbientMismatch(d, g.d)

    letters = []
    for g in gens + [g.inverse() for g in gens]:
        if g not in letters:
            letters.append(g)

    identity = Rot3.identity(d)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        layer = set()
        for x in frontier:
            for s in letters:
                y = x @ s
                if y not in index:
                    layer.add(y)
        frontier = sorted(layer, key=Rot3.sort_key)
        for y in frontier:
            index[y] = len(elements)
            elements.append(y)
        if len(elements) > cap:
            logger.info("closure stopped at %d elements (cap %d)", len(elements), cap)
            raise ClosureExceedsCap(len(elements), cap)

    cayley = [[index[a @ b] for b in elements] for a in elements]
    logger.debug("closure of %d generators has order %d", len(gens), len(elements))
    return FiniteRotGroup(elements, cayley, [index[g] for g in gens])
