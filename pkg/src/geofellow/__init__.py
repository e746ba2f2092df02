"""Geodesic language and fellow-traveler analysis on a two-layer Cayley graph.

The package models one group exactly: the split extension of the integer
grid by an involution that swaps the two axes.  It ships the coordinate
group law, BFS over the Cayley graph, an acceptor for the (regular)
language of geodesic words together with a small DFA algebra, exhaustive
geodesic searches, and the fellow-traveler machinery that computes minimal
falsification constants, whose divergence on the witness words
``t a^n t a^n t`` shows the generating set lacks the falsification by
fellow traveler property.
"""

from .cayley import DistanceMap, ball, distance, export_dot, neighbors
from .automata import (
    Dfa,
    accepts,
    build_geodesic_acceptor,
    complement,
    enumerate_language,
    equivalent,
    is_empty,
    minimize,
    minimize_brzozowski,
    product,
)
from .errors import ParseError, ResourceBoundError
from .fellow import (
    FellowReport,
    async_constant,
    fellow_feasible,
    fftp_scan,
    min_fftp_constant,
    path_point,
    sync_constant,
)
from .geodesics import (
    GeodesicFamily,
    geodesic_words_up_to,
    geodesics_to,
    is_geodesic,
    shorter_equivalent_words,
)
from .group import (
    ALPHABET,
    IDENTITY,
    GroupElement,
    Layer,
    Letter,
    Word,
    canonical_geodesic,
    evaluate,
    format_word,
    geodesic_length,
    inverse,
    multiply,
    parse_word,
)
from .kernels import BACKEND

__version__ = "0.1.0"
