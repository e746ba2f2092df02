"""Fellow-traveler distances and minimal falsification constants.

Two unit-speed paths synchronously k-fellow travel when they stay within
distance k of each other at every integer time; the asynchronous variant
allows a monotone recoupling of the two clocks and is computed as the
discrete Fréchet value on the grid of position pairs.

``min_fftp_constant`` asks, for a non-geodesic word, how small k can be so
that *some* strictly shorter word with the same endpoint k-fellow travels
it.  ``fftp_scan`` tabulates that constant over every non-geodesic word up
to a length bound; its per-length maximum growing without bound is the
falsification-by-fellow-traveler failure this package demonstrates.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .cayley import distance
from .errors import ResourceBoundError
from .group import (
    IDENTITY,
    GroupElement,
    Word,
    apply_letter,
    evaluate,
    format_word,
    geodesic_length,
)
from .geodesics import MAX_ENUMERATION_LENGTH, MAX_SOURCE_LENGTH

__all__ = [
    "FellowReport",
    "path_point",
    "sync_constant",
    "async_constant",
    "fellow_feasible",
    "min_fftp_constant",
    "fftp_scan",
    "reports_to_csv",
    "summary_to_csv",
    "scan_to_json",
]


@dataclass(frozen=True)
class FellowReport:
    """Minimal falsification constant for one non-geodesic word."""

    word: Word
    endpoint: GroupElement
    word_len: int
    geo_len: int
    min_k: int
    witness: Word


def _prefix_points(word) -> list[GroupElement]:
    pts = [IDENTITY]
    for letter in word:
        pts.append(apply_letter(pts[-1], letter))
    return pts


def path_point(word, t: int) -> GroupElement:
    """Position at integer time t: the length-t prefix, or the endpoint."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    return evaluate(word[: min(t, len(word))])


def sync_constant(u, v) -> int:
    """Least k such that the two paths k-fellow travel at integer times."""
    pu, pv = _prefix_points(u), _prefix_points(v)
    horizon = max(len(u), len(v))
    return max(
        distance(pu[min(t, len(u))], pv[min(t, len(v))]) for t in range(horizon + 1)
    )


def async_constant(u, v) -> int:
    """Discrete asynchronous constant: min over monotone couplings.

    Dynamic program over the (|u|+1) x (|v|+1) grid of position pairs with
    steps (1,0), (0,1), (1,1); the value of a cell is the distance there or
    the best predecessor, whichever is larger.
    """
    pu, pv = _prefix_points(u), _prefix_points(v)
    n, m = len(pu), len(pv)
    row = [0] * m
    for i in range(n):
        prev_row = row
        row = [0] * m
        for j in range(m):
            d = distance(pu[i], pv[j])
            if i == 0 and j == 0:
                row[j] = d
                continue
            best = None
            if i > 0:
                best = prev_row[j]
            if j > 0 and (best is None or row[j - 1] < best):
                best = row[j - 1]
            if i > 0 and j > 0 and prev_row[j - 1] < best:
                best = prev_row[j - 1]
            row[j] = best if best > d else d
    return row[m - 1]


def fellow_feasible(word, len_bound: int, k: int) -> bool:
    """Can some word of length <= len_bound with the same endpoint k-fellow
    travel the given word?

    Decided by a layered reachable-set sweep: a candidate path consumes one
    letter per time step until it halts for good at its endpoint, and every
    surviving position must stay within k of the reference path.
    """
    if not 0 <= len_bound < len(word):
        raise ValueError("len_bound must satisfy 0 <= len_bound < len(word)")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return kernels.feasible(bytes(word), len_bound, k)


def min_fftp_constant(word) -> FellowReport:
    """Least k for which the word is k-fellow traveled by a shorter
    same-endpoint word, along with the lexicographically least witness."""
    word = Word(word)
    n = len(word)
    if n > MAX_SOURCE_LENGTH:
        raise ResourceBoundError(f"word length {n} exceeds bound {MAX_SOURCE_LENGTH}")
    endpoint = evaluate(word)
    geo = geodesic_length(endpoint)
    if n <= geo:
        raise ValueError("word is geodesic; nothing shorter reaches its endpoint")
    min_k, witness = kernels.min_fftp(bytes(word))
    return FellowReport(word, endpoint, n, geo, min_k, Word(witness))


def _scan_chunk(chunk: list[bytes]) -> list[tuple[bytes, int, bytes]]:
    return [(w,) + kernels.min_fftp(w) for w in chunk]


def fftp_scan(max_len: int, workers: int = 1):
    """FellowReports for every non-geodesic word of length <= max_len.

    Returns ``(reports, summary)`` where the reports are sorted by length
    then lexicographically, and the summary has one ``(length,
    count_nongeodesic, max_min_k)`` row per length that contributes words.
    The split across workers never affects the result.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if max_len > MAX_ENUMERATION_LENGTH:
        raise ResourceBoundError(
            f"max_len {max_len} exceeds bound {MAX_ENUMERATION_LENGTH}"
        )
    if workers < 1:
        raise ValueError("workers must be positive")
    words = kernels.nongeodesic_words(max_len)
    if workers == 1 or len(words) < 2 * workers:
        solved = _scan_chunk(words)
    else:
        chunks = [words[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            solved = [row for part in pool.map(_scan_chunk, chunks) for row in part]
    solved.sort(key=lambda row: (len(row[0]), row[0]))

    reports = []
    for raw, min_k, raw_witness in solved:
        word = Word(raw)
        endpoint = evaluate(word)
        reports.append(
            FellowReport(
                word,
                endpoint,
                len(word),
                geodesic_length(endpoint),
                min_k,
                Word(raw_witness),
            )
        )
    summary = []
    for report in reports:
        if summary and summary[-1][0] == report.word_len:
            count, best = summary[-1][1] + 1, max(summary[-1][2], report.min_k)
            summary[-1] = (report.word_len, count, best)
        else:
            summary.append((report.word_len, 1, report.min_k))
    return reports, summary


def reports_to_csv(reports) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["word", "endpoint", "word_len", "geo_len", "min_k", "witness"])
    for r in reports:
        writer.writerow(
            [
                format_word(r.word),
                str(r.endpoint),
                r.word_len,
                r.geo_len,
                r.min_k,
                format_word(r.witness),
            ]
        )
    return out.getvalue()


def summary_to_csv(summary) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["len", "count_nongeodesic", "max_min_k"])
    writer.writerows(summary)
    return out.getvalue()


def scan_to_json(config: dict, reports, summary) -> str:
    doc = {
        "config": config,
        "rows": [
            {
                "word": format_word(r.word),
                "endpoint": str(r.endpoint),
                "word_len": r.word_len,
                "geo_len": r.geo_len,
                "min_k": r.min_k,
                "witness": format_word(r.witness),
            }
            for r in reports
        ],
        "summary": [
            {"len": length, "count_nongeodesic": count, "max_min_k": best}
            for length, count, best in summary
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
