"""Exact model of the two-layer group and its word metric.

The group is generated by ``a`` (with inverse ``a^-1``) and the involution
``t``.  Its Cayley graph is two copies of the integer grid: every vertex is
named by a triple ``(x, y, layer)``, and the identity sits at
``(0, 0, bottom)``.  Reading a word left to right moves a point through the
graph: ``a`` steps East (``x + 1``) while on the bottom layer and North
(``y + 1``) while on the top layer, ``a^-1`` steps the other way, and ``t``
flips between the layers.  Because ``t`` swaps which axis ``a`` acts on, the
group law mixes coordinates whenever the left factor sits on the top layer.

Word lengths of elements have a closed form (``geodesic_length``) which the
Cayley-graph BFS in :mod:`geofellow.cayley` independently validates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .errors import ParseError

__all__ = [
    "Letter",
    "Layer",
    "Word",
    "GroupElement",
    "IDENTITY",
    "ALPHABET",
    "parse_word",
    "format_word",
    "evaluate",
    "apply_letter",
    "multiply",
    "inverse",
    "geodesic_length",
    "canonical_geodesic",
]


class Letter(IntEnum):
    """Generator letters, ordered ``a < a^-1 < t`` for all lexicographic uses."""

    A = 0
    A_INV = 1
    T = 2

    @property
    def char(self) -> str:
        return ("a", "A", "t")[self]

    @property
    def inverse(self) -> "Letter":
        # t is an involution; a and a^-1 swap.
        if self is Letter.T:
            return Letter.T
        return Letter.A_INV if self is Letter.A else Letter.A


ALPHABET = (Letter.A, Letter.A_INV, Letter.T)


class Layer(IntEnum):
    BOTTOM = 0
    TOP = 1


class Word(tuple):
    """An immutable sequence of letters; doubles as an edge path.

    Words compare and hash as plain tuples, so the letter order of
    :class:`Letter` gives the lexicographic order used in serialized output.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> "Word":
        return super().__new__(cls, (Letter(l) for l in letters))

    def __add__(self, other) -> "Word":
        return Word(tuple.__add__(self, other))

    def __getitem__(self, index):
        item = tuple.__getitem__(self, index)
        return Word(item) if isinstance(index, slice) else item

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY_WORD = Word()


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A vertex of the Cayley graph, named by its coordinate triple."""

    x: int
    y: int
    layer: Layer

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return inverse(self)

    def __str__(self) -> str:
        side = "top" if self.layer is Layer.TOP else "bottom"
        return f"({self.x},{self.y},{side})"


IDENTITY = GroupElement(0, 0, Layer.BOTTOM)


def parse_word(text: str) -> Word:
    """Parse word text into letters.

    Grammar: tokens are ``a``, ``A``, ``t`` or ``T``, each with an optional
    integer power written ``^k`` (``-`` allowed).  ``A`` means ``a^-1`` and
    ``T`` means ``t``; since ``t`` is an involution, ``t^-1`` also means
    ``t``, and any other power of ``t`` is rejected.  Whitespace between
    tokens is ignored.
    """
    letters: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in "aAtT":
            raise ParseError(f"unexpected character {ch!r}", i)
        base_pos = i
        i += 1
        power = 1
        if i < n and text[i] == "^":
            i += 1
            sign_start = i
            if i < n and text[i] == "-":
                i += 1
            digits_start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == digits_start:
                raise ParseError("missing exponent digits", sign_start)
            power = int(text[sign_start:i])
        if ch in "tT":
            if abs(power) != 1:
                raise ParseError(f"power {power} not allowed on t", base_pos)
            letters.append(Letter.T)
        else:
            net = power if ch == "a" else -power
            letter = Letter.A if net > 0 else Letter.A_INV
            letters.extend([letter] * abs(net))
    return Word(letters)


def format_word(word: Iterable[Letter]) -> str:
    """Render a word in the grammar's power notation (empty word -> '')."""
    letters = list(word)
    parts: list[str] = []
    i = 0
    while i < len(letters):
        letter = letters[i]
        if letter is Letter.T:
            parts.append("t")
            i += 1
            continue
        j = i
        while j < len(letters) and letters[j] == letter:
            j += 1
        run = j - i
        net = run if letter is Letter.A else -run
        parts.append("a" if net == 1 else f"a^{net}")
        i = j
    return "".join(parts)


def apply_letter(g: GroupElement, letter: Letter) -> GroupElement:
    """Right-multiply an element by one generator letter."""
    if letter is Letter.T:
        return GroupElement(g.x, g.y, Layer(1 - g.layer))
    delta = 1 if letter is Letter.A else -1
    if g.layer is Layer.BOTTOM:
        return GroupElement(g.x + delta, g.y, g.layer)
    return GroupElement(g.x, g.y + delta, g.layer)


def evaluate(word: Iterable[Letter]) -> GroupElement:
    """Fold a word from the identity into the element it represents."""
    x, y, layer = 0, 0, 0
    for letter in word:
        if letter == Letter.T:
            layer = 1 - layer
        elif letter == Letter.A:
            if layer:
                y += 1
            else:
                x += 1
        else:
            if layer:
                y -= 1
            else:
                x -= 1
    return GroupElement(x, y, Layer(layer))


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Group law in coordinates.

    A bottom-layer left factor translates; a top-layer one additionally
    swaps the roles of the two axes of ``h`` and flips its layer.  Agrees
    with :func:`evaluate` on concatenation of words.
    """
    if g.layer is Layer.BOTTOM:
        return GroupElement(g.x + h.x, g.y + h.y, h.layer)
    return GroupElement(g.x + h.y, g.y + h.x, Layer(1 - h.layer))


def inverse(g: GroupElement) -> GroupElement:
    if g.layer is Layer.BOTTOM:
        return GroupElement(-g.x, -g.y, g.layer)
    return GroupElement(-g.y, -g.x, g.layer)


def geodesic_length(g: GroupElement) -> int:
    """Distance from the identity, in closed form.

    Top layer: ``|x| + |y| + 1`` (East/North moves plus one layer flip).
    Bottom layer: ``|x|`` when ``y == 0``, else ``|x| + |y| + 2`` (North
    movement needs a round trip through the top layer).
    """
    if g.layer is Layer.TOP:
        return abs(g.x) + abs(g.y) + 1
    if g.y == 0:
        return abs(g.x)
    return abs(g.x) + abs(g.y) + 2


def canonical_geodesic(g: GroupElement) -> Word:
    """One distinguished geodesic word for ``g``.

    Runs of ``a`` first: ``a^x`` for bottom elements on the axis,
    ``a^x t a^y`` for top elements, and ``a^x t a^y t`` for the remaining
    bottom elements.  The result evaluates to ``g`` and realizes
    :func:`geodesic_length`.
    """

    def run(n: int) -> list[Letter]:
        return [Letter.A if n > 0 else Letter.A_INV] * abs(n)

    if g.layer is Layer.BOTTOM and g.y == 0:
        return Word(run(g.x))
    letters = run(g.x) + [Letter.T] + run(g.y)
    if g.layer is Layer.BOTTOM:
        letters.append(Letter.T)
    return Word(letters)
