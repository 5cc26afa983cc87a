# models/words.py
"""Bounded searches for relations among rotations (evidence for freeness / Z×Z)."""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from models.rotation import Rot3
from utils.config import WORD_DEPTH_GUARD
from utils.errors import AmbientMismatch, DepthTooLarge, ExactRotError

logger = logging.getLogger(__name__)

FREE = "free"
ABELIAN = "abelian"

# a word is a tuple of syllables (generator number starting at 1, nonzero power)
Word = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class WordSearchResult:
    all_distinct: bool
    count: int
    relation: Optional[Word] = None

    def to_json(self):
        return {
            "result": "AllDistinct" if self.all_distinct else "RelationFound",
            "count": self.count,
            "relation": format_word(self.relation) if self.relation is not None else None,
        }

    def __str__(self):
        if self.all_distinct:
            return f"AllDistinct({self.count})"
        return f"RelationFound({format_word(self.relation)})"


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(f"g{g}" if p == 1 else f"g{g}^{p}" for g, p in word)


def _syllables(letters) -> Word:
    out = []
    for letter in letters:
        g, p = abs(letter), (1 if letter > 0 else -1)
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + p)
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append((g, p))
    return tuple(out)


def _free_reduce(letters):
    out = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _relator(word, other) -> Word:
    """Reduced form of word·other⁻¹, written with as few inverse letters as possible."""
    rel = _free_reduce(word + tuple(-x for x in reversed(other)))
    inv = tuple(-x for x in reversed(rel))
    if sum(x < 0 for x in inv) < sum(x < 0 for x in rel):
        rel = inv
    return _syllables(rel)


def _check(gens: Sequence[Rot3], max_len: int):
    if max_len < 1 or max_len > WORD_DEPTH_GUARD:
        raise DepthTooLarge(f"max_len must be between 1 and {WORD_DEPTH_GUARD}, got {max_len}")
    if not gens:
        raise ExactRotError("at least one generator is required")
    for g in gens:
        if g.d != gens[0].d:
            raise AmbientMismatch(gens[0].d, g.d)


def word_no_relation_search(gens: Sequence[Rot3], max_len: int, mode: str = FREE) -> WordSearchResult:
    """
    Look for a relation among short words in the generators.

    ``free``: evaluate every reduced word over g1^±1, g2^±1, ... of length at
    most max_len; they are pairwise distinct exactly when no non-trivial
    relation of length up to 2·max_len holds. ``abelian``: test
    g1^m g2^n = E for all |m|, |n| <= max_len other than m = n = 0.
    """
    gens = list(gens)
    _check(gens, max_len)
    if mode == FREE:
        return _free_search(gens, max_len)
    if mode == ABELIAN:
        if len(gens) != 2:
            raise ValueError("abelian mode takes exactly two generators")
        return _abelian_search(gens[0], gens[1], max_len)
    raise ValueError(f"unknown word search mode {mode!r}")


def _free_search(gens, max_len) -> WordSearchResult:
    letters = []
    for k, g in enumerate(gens, start=1):
        letters.append((k, g))
        letters.append((-k, g.inverse()))

    identity = Rot3.identity(gens[0].d)
    seen = {identity: ()}
    frontier = [((), identity)]
    for length in range(1, max_len + 1):
        nxt = []
        for word, value in frontier:
            for letter, mat in letters:
                if word and word[-1] == -letter:
                    continue
                w = word + (letter,)
                v = value @ mat
                prev = seen.get(v)
                if prev is not None:
                    relation = _relator(w, prev)
                    logger.info("relation %s found at length %d", format_word(relation), length)
                    return WordSearchResult(False, len(seen), relation)
                seen[v] = w
                nxt.append((w, v))
        frontier = nxt
        logger.debug("length %d: %d distinct reduced words", length, len(seen))
    return WordSearchResult(True, len(seen))


def _abelian_search(g1: Rot3, g2: Rot3, max_len) -> WordSearchResult:
    by_matrix = {}
    for n in range(-max_len, max_len + 1):
        by_matrix.setdefault(g2 ** n, []).append(n)
    checked = 0
    for m in range(-max_len, max_len + 1):
        target = (g1 ** m).inverse()
        for n in by_matrix.get(target, []):
            if (m, n) != (0, 0):
                relation = tuple((g, p) for g, p in ((1, m), (2, n)) if p)
                return WordSearchResult(False, checked, relation)
        checked += 2 * max_len + 1
    return WordSearchResult(True, checked)
