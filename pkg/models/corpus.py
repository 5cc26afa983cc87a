# models/corpus.py
"""Named rotations and the versioned corpus of finite rotation groups."""
import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

from models.classify import Family, IsoType
from models.group import FiniteRotGroup, generate_closure
from models.quaternion import Quaternion
from models.rotation import Rot3, theta
from models.scalar import QuadScalar

logger = logging.getLogger(__name__)

CORPUS_VERSION = 1


def q(x0, x1=0, x2=0, x3=0, d: int = 0) -> Quaternion:
    return Quaternion(x0, x1, x2, x3, d=d)


def commutation_counterexample() -> Tuple[Rot3, Rot3, Rot3]:
    """A = θ(i), B = θ(1+i), C = θ(j): AB = BA, AC = CA but BC ≠ CB."""
    return theta(q(0, 1)), theta(q(1, 1)), theta(q(0, 0, 1))


def infinite_product_generators() -> Tuple[Rot3, Rot3, Rot3]:
    """A = θ(i), B̃ = θ(1+2i), C = θ(j): ⟨A⟩ × ⟨B̃, C⟩ is infinite and non-abelian."""
    return theta(q(0, 1)), theta(q(1, 2)), theta(q(0, 0, 1))


def dihedral12_sqrt3_generators() -> Tuple[Rot3, Rot3]:
    """A sixth-turn about the x-axis and a half turn about the y-axis, over Q(√3)."""
    half = QuadScalar(1, 0, 3) / 2
    s = QuadScalar(0, 1, 3) / 2
    sixth = Rot3((1, 0, 0, 0, half, -s, 0, s, half), d=3)
    flip = Rot3.diag(-1, 1, -1, d=3)
    return sixth, flip


def free_pair() -> Tuple[Rot3, Rot3]:
    """θ(1+2i) and θ(1+2j), which generate a free group of rank 2."""
    return theta(q(1, 2)), theta(q(1, 0, 2))


def commuting_infinite_pair() -> Tuple[Rot3, Rot3]:
    """θ(1+2i) and θ(1+4i), which generate Z × Z."""
    return theta(q(1, 2)), theta(q(1, 4))


def golden_fifth_turn() -> Rot3:
    """θ(φ + i + φ⁻¹k): a fifth-turn about an icosahedral 5-fold axis, over Q(√5)."""
    phi = QuadScalar(1, 1, 5) / 2
    return theta(Quaternion(phi, 1, 0, phi - 1, d=5))


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    d: int
    expected: IsoType
    generators: Callable[[], List[Rot3]]

    def build(self) -> FiniteRotGroup:
        return generate_closure(self.generators(), cap=200, d=self.d)

    def to_json(self):
        return {"name": self.name, "ambient_d": self.d, "expected": self.expected.label}


def _third_turn():
    return theta(q(1, 1, 1, 1))


def _sixth_turn():
    return theta(q(3, 1, 1, 1))


def _diagonal_flip():
    return theta(q(0, 1, -1))


CORPUS: List[CorpusEntry] = [
    CorpusEntry("C1", 0, IsoType(Family.TRIVIAL), lambda: []),
    CorpusEntry("C2", 0, IsoType(Family.CYCLIC, 2), lambda: [theta(q(0, 1))]),
    CorpusEntry("C3", 0, IsoType(Family.CYCLIC, 3), lambda: [_third_turn()]),
    CorpusEntry("C4", 0, IsoType(Family.CYCLIC, 4), lambda: [theta(q(1, 1))]),
    CorpusEntry("C6", 0, IsoType(Family.CYCLIC, 6), lambda: [_sixth_turn()]),
    CorpusEntry("V4", 0, IsoType(Family.DIHEDRAL, 2), lambda: [theta(q(0, 1)), theta(q(0, 0, 1))]),
    CorpusEntry("D6", 0, IsoType(Family.DIHEDRAL, 3), lambda: [_third_turn(), _diagonal_flip()]),
    CorpusEntry("D8", 0, IsoType(Family.DIHEDRAL, 4), lambda: list(commutation_counterexample()[1:])),
    CorpusEntry("D12", 0, IsoType(Family.DIHEDRAL, 6), lambda: [_sixth_turn(), _diagonal_flip()]),
    CorpusEntry("A4", 0, IsoType(Family.TETRAHEDRAL),
                lambda: [theta(q(0, 1)), theta(q(0, 0, 1)), _third_turn()]),
    CorpusEntry("S4", 0, IsoType(Family.OCTAHEDRAL), lambda: [theta(q(1, 1)), _third_turn()]),
    CorpusEntry("D12/sqrt3", 3, IsoType(Family.DIHEDRAL, 6), lambda: list(dihedral12_sqrt3_generators())),
    CorpusEntry("C5", 5, IsoType(Family.CYCLIC, 5), lambda: [golden_fifth_turn()]),
    CorpusEntry("A5", 5, IsoType(Family.ICOSAHEDRAL),
                lambda: [theta(q(0, 1, d=5)), theta(q(1, 1, 1, 1, d=5)), golden_fifth_turn()]),
]


def corpus_entries(rational_only: bool = False) -> List[CorpusEntry]:
    return [e for e in CORPUS if e.d == 0 or not rational_only]


def build_corpus(rational_only: bool = False) -> List[Tuple[CorpusEntry, FiniteRotGroup]]:
    built = []
    for entry in corpus_entries(rational_only):
        group = entry.build()
        logger.debug("corpus %s: order %d", entry.name, group.order)
        built.append((entry, group))
    return built
