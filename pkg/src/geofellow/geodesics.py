"""Geodesic predicates and exhaustive word searches.

Geodesity is decided by the closed-form ``geodesic_length`` (validated
against BFS elsewhere), which keeps the predicate O(1) and the exhaustive
sweeps cheap.  The searches here are deliberately direct: they are the
brute-force route that the automaton and the fellow-traveler kernels are
checked against, so they must stay independent of both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import distance
from .errors import ResourceBoundError
from .group import (
    ALPHABET,
    IDENTITY,
    GroupElement,
    Letter,
    Word,
    apply_letter,
    evaluate,
    geodesic_length,
)

__all__ = [
    "GeodesicFamily",
    "is_geodesic",
    "geodesics_to",
    "geodesic_words_up_to",
    "shorter_equivalent_words",
    "two_t_exponents",
    "MAX_ENUMERATION_LENGTH",
    "MAX_SOURCE_LENGTH",
    "MAX_TARGET_LENGTH",
]

# Hard search bounds; the spaces behind them grow exponentially.
MAX_ENUMERATION_LENGTH = 12
MAX_SOURCE_LENGTH = 16
MAX_TARGET_LENGTH = 20


@dataclass(frozen=True)
class GeodesicFamily:
    """All geodesic words reaching one target vertex."""

    target: GroupElement
    words: frozenset[Word]

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)


def is_geodesic(word) -> bool:
    return len(word) == geodesic_length(evaluate(word))


def geodesics_to(g: GroupElement) -> GeodesicFamily:
    """Enumerate every geodesic word to ``g`` by pruned DFS.

    A prefix is extended only while it stays on some geodesic, i.e. while
    length-so-far plus remaining distance still equals the target length.
    """
    glen = geodesic_length(g)
    if glen > MAX_TARGET_LENGTH:
        raise ResourceBoundError(
            f"target at distance {glen} exceeds bound {MAX_TARGET_LENGTH}"
        )
    found: list[Word] = []

    def walk(prefix: list[Letter], at: GroupElement) -> None:
        if len(prefix) == glen:
            found.append(Word(prefix))
            return
        for letter in ALPHABET:
            nxt = apply_letter(at, letter)
            if len(prefix) + 1 + distance(nxt, g) == glen:
                prefix.append(letter)
                walk(prefix, nxt)
                prefix.pop()

    walk([], IDENTITY)
    return GeodesicFamily(g, frozenset(found))


def geodesic_words_up_to(max_len: int) -> set[Word]:
    """Every geodesic word of length <= max_len.

    Prefixes of geodesics are geodesic, so the walk extends geodesic
    prefixes only and never touches the rest of the tree.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if max_len > MAX_ENUMERATION_LENGTH:
        raise ResourceBoundError(
            f"max_len {max_len} exceeds bound {MAX_ENUMERATION_LENGTH}"
        )
    out: set[Word] = set()

    def walk(prefix: list[Letter], at: GroupElement) -> None:
        out.add(Word(prefix))
        if len(prefix) == max_len:
            return
        for letter in ALPHABET:
            nxt = apply_letter(at, letter)
            if geodesic_length(nxt) == len(prefix) + 1:
                prefix.append(letter)
                walk(prefix, nxt)
                prefix.pop()

    walk([], IDENTITY)
    return out


def two_t_exponents(word) -> tuple[int, int, int] | None:
    """Decompose a word of shape (a-run) t (a-run) t (a-run) into exponents.

    Returns (x1, y, x2) with each run sign-consistent, or None if the word
    has a different shape (wrong t count, or a run mixing a with a^-1).
    """
    runs: list[int] = [0]
    for letter in word:
        if letter is Letter.T:
            runs.append(0)
        else:
            delta = 1 if letter is Letter.A else -1
            if runs[-1] and (runs[-1] > 0) != (delta > 0):
                return None
            runs[-1] += delta
    if len(runs) != 3:
        return None
    return runs[0], runs[1], runs[2]


def shorter_equivalent_words(word) -> set[Word]:
    """All strictly shorter words with the same endpoint.

    DFS with ball pruning: a prefix is abandoned as soon as its length plus
    its distance to the target can no longer beat ``len(word)``.  For a
    geodesic input the root itself is pruned and the result is empty.
    """
    n = len(word)
    if n > MAX_SOURCE_LENGTH:
        raise ResourceBoundError(f"word length {n} exceeds bound {MAX_SOURCE_LENGTH}")
    target = evaluate(word)
    out: set[Word] = set()

    def walk(prefix: list[Letter], at: GroupElement) -> None:
        if len(prefix) + distance(at, target) >= n:
            return
        if at == target:
            out.add(Word(prefix))
        for letter in ALPHABET:
            prefix.append(letter)
            walk(prefix, apply_letter(at, letter))
            prefix.pop()

    walk([], IDENTITY)
    return out
