"""Breadth-first exploration of the Cayley graph.

``ball`` realizes the path metric by BFS over the three generator letters;
``distance`` uses the closed-form word length instead, so the two provide
independent routes to the same metric.  The resulting ``DistanceMap`` is
immutable and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .group import (
    ALPHABET,
    IDENTITY,
    GroupElement,
    Letter,
    apply_letter,
    geodesic_length,
    inverse,
    multiply,
)

__all__ = ["DistanceMap", "ball", "distance", "neighbors", "export_dot"]


@dataclass(frozen=True)
class DistanceMap:
    """Radius-r ball around the identity: element -> BFS distance."""

    radius: int
    entries: Mapping[GroupElement, int]

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def sphere_sizes(self) -> list[int]:
        """Number of elements at each exact distance 0..radius."""
        sizes = [0] * (self.radius + 1)
        for d in self.entries.values():
            sizes[d] += 1
        return sizes


def ball(radius: int) -> DistanceMap:
    """BFS from the identity out to the given radius."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    entries = {IDENTITY: 0}
    frontier = [IDENTITY]
    for d in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for letter in ALPHABET:
                h = apply_letter(g, letter)
                if h not in entries:
                    entries[h] = d
                    nxt.append(h)
        frontier = nxt
    return DistanceMap(radius, entries)


def distance(g: GroupElement, h: GroupElement) -> int:
    """Word-metric distance between two vertices (closed form)."""
    return geodesic_length(multiply(inverse(g), h))


def neighbors(g: GroupElement) -> list[tuple[Letter, GroupElement]]:
    """The three generator neighbors of a vertex, in letter order."""
    return [(letter, apply_letter(g, letter)) for letter in ALPHABET]


def _sort_key(g: GroupElement) -> tuple[int, int, int]:
    return (int(g.layer), g.x, g.y)


def export_dot(dmap: DistanceMap) -> str:
    """Render the ball as DOT text.

    One node per element, labeled with its coordinate triple; one
    undirected-style edge per generator pair, labeled ``a`` or ``t``.
    Nodes are sorted by (layer, x, y) so the output is byte-stable.
    """
    nodes = sorted(dmap.entries, key=_sort_key)
    edges = set()
    for g in nodes:
        for letter, label in ((Letter.A, "a"), (Letter.T, "t")):
            h = apply_letter(g, letter)
            if h in dmap.entries:
                u, v = sorted((g, h), key=_sort_key)
                edges.add((_sort_key(u), _sort_key(v), label, u, v))
    lines = ["digraph cayley_ball {", "  edge [dir=none];"]
    for g in nodes:
        lines.append(f'  "{g}";')
    for _, _, label, u, v in sorted(edges, key=lambda e: e[:3]):
        lines.append(f'  "{u}" -> "{v}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
