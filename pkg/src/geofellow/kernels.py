"""Kernel backend selection.

The hot sweeps have two interchangeable implementations: a compiled
extension (`geofellow._speedups`, built from Cython at install time) and
the pure-Python fallback (`geofellow._pykernels`).  The compiled one is
preferred when importable; set ``GEOFELLOW_BACKEND=python`` to force the
fallback, or ``GEOFELLOW_BACKEND=cython`` to fail loudly if the extension
is missing.
"""

from __future__ import annotations

import os

from . import _pykernels

_requested = os.environ.get("GEOFELLOW_BACKEND", "").strip().lower()

if _requested in ("python", "pure"):
    _impl = _pykernels
elif _requested == "cython":
    from . import _speedups as _impl  # type: ignore[no-redef]
else:
    if _requested:
        raise ImportError(f"unknown GEOFELLOW_BACKEND {_requested!r}")
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND_NAME

theorem5_mismatches = _impl.theorem5_mismatches
parity_mismatches = _impl.parity_mismatches
nongeodesic_words = _impl.nongeodesic_words
feasible = _impl.feasible
min_fftp = _impl.min_fftp


def available_backends() -> dict:
    """Importable kernel modules by name (for tests and benchmarks)."""
    backends = {"python": _pykernels}
    try:
        from . import _speedups

        backends["cython"] = _speedups
    except ImportError:
        pass
    return backends


def dfa_tables(d) -> tuple[tuple[int, ...], bytes, int]:
    """Flatten a Dfa into the kernel ABI (letter order a, a^-1, t)."""
    from .group import ALPHABET

    if tuple(sorted(d.alphabet)) != tuple(sorted(ALPHABET)):
        raise ValueError("kernel sweeps need the full three-letter alphabet")
    cols = [d.letter_index(letter) for letter in ALPHABET]
    flat = tuple(
        d.transitions[s][c] for s in d.states for c in cols
    )
    accepting = bytes(1 if s in d.accepting else 0 for s in d.states)
    return flat, accepting, d.start
