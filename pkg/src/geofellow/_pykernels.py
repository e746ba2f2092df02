"""Pure-Python hot kernels.

Fallback implementations of the exhaustive-sweep cores; the compiled
`_speedups` module mirrors these signatures exactly.  Everything here works
on raw ints (letters 0=a, 1=a^-1, 2=t; layers 0=bottom, 1=top) and bytes
words, so the sweeps stay allocation-light.
"""

from __future__ import annotations

BACKEND_NAME = "python"

MAX_WORD = 16

_A, _AINV, _T = 0, 1, 2


def _closed_length(x: int, y: int, layer: int) -> int:
    if layer:
        return abs(x) + abs(y) + 1
    if y == 0:
        return abs(x)
    return abs(x) + abs(y) + 2


def _dist(px, py, pl, qx, qy, ql) -> int:
    # closed-form length of p^-1 q
    if pl == 0:
        dx = qx - px
        dy = qy - py
        dl = ql
    else:
        dx = qy - py
        dy = qx - px
        dl = 1 - ql
    if dl:
        return abs(dx) + abs(dy) + 1
    if dy == 0:
        return abs(dx)
    return abs(dx) + abs(dy) + 2


def _step(x, y, layer, letter):
    if letter == _T:
        return x, y, 1 - layer
    d = 1 if letter == _A else -1
    if layer:
        return x, y + d, layer
    return x + d, y, layer


def _path(word) -> list[tuple[int, int, int]]:
    if len(word) > MAX_WORD:
        raise ValueError("word length exceeds kernel bound")
    pts = [(0, 0, 0)]
    x = y = layer = 0
    for letter in word:
        x, y, layer = _step(x, y, layer, letter)
        pts.append((x, y, layer))
    return pts


def theorem5_mismatches(max_len, transitions, accepting, start):
    """Compare the acceptor against the closed-form geodesic test.

    Walks the full ternary tree of words up to max_len, carrying the
    endpoint coordinates and the automaton state incrementally.  Returns
    (words checked, list of mismatching words as bytes).
    """
    mismatches: list[bytes] = []
    count = 0
    prefix = bytearray()

    def walk(depth, x, y, layer, state):
        nonlocal count
        count += 1
        accepted = accepting[state] != 0
        if accepted != (depth == _closed_length(x, y, layer)):
            mismatches.append(bytes(prefix))
        if depth == max_len:
            return
        base = state * 3
        prefix.append(_A)
        if layer:
            walk(depth + 1, x, y + 1, layer, transitions[base])
        else:
            walk(depth + 1, x + 1, y, layer, transitions[base])
        prefix[-1] = _AINV
        if layer:
            walk(depth + 1, x, y - 1, layer, transitions[base + 1])
        else:
            walk(depth + 1, x - 1, y, layer, transitions[base + 1])
        prefix[-1] = _T
        walk(depth + 1, x, y, 1 - layer, transitions[base + 2])
        prefix.pop()

    walk(0, 0, 0, 0, start)
    return count, mismatches


def parity_mismatches(max_len):
    """Count words whose layer disagrees with the parity of their t count."""
    bad = 0
    count = 0

    def walk(depth, x, y, layer, tcount):
        nonlocal bad, count
        count += 1
        if (layer == 1) != (tcount % 2 == 1):
            bad += 1
        if depth == max_len:
            return
        if layer:
            walk(depth + 1, x, y + 1, layer, tcount)
            walk(depth + 1, x, y - 1, layer, tcount)
        else:
            walk(depth + 1, x + 1, y, layer, tcount)
            walk(depth + 1, x - 1, y, layer, tcount)
        walk(depth + 1, x, y, 1 - layer, tcount + 1)

    walk(0, 0, 0, 0, 0)
    return count, bad


def nongeodesic_words(max_len):
    """All non-geodesic words of length <= max_len, in lexicographic order."""
    out: list[bytes] = []
    if max_len < 0:
        return out
    prefix = bytearray()

    def walk(depth, x, y, layer):
        if depth > _closed_length(x, y, layer):
            out.append(bytes(prefix))
        if depth == max_len:
            return
        prefix.append(_A)
        if layer:
            walk(depth + 1, x, y + 1, layer)
        else:
            walk(depth + 1, x + 1, y, layer)
        prefix[-1] = _AINV
        if layer:
            walk(depth + 1, x, y - 1, layer)
        else:
            walk(depth + 1, x - 1, y, layer)
        prefix[-1] = _T
        walk(depth + 1, x, y, 1 - layer)
        prefix.pop()

    walk(0, 0, 0, 0)
    return out


def _suffix_max(points, tgt):
    # suf[s] = max distance from points[s:] to the target; suf[T+1] = 0
    tx, ty, tl = tgt
    suf = [0] * (len(points) + 1)
    for s in range(len(points) - 1, -1, -1):
        px, py, pl = points[s]
        suf[s] = max(suf[s + 1], _dist(px, py, pl, tx, ty, tl))
    return suf


def _forward_layers(points, len_bound, k, stop_early_suf=None):
    """Reachable-position sets per time step for the feasibility sweep.

    layers[t] holds every position a unit-speed path of t letters can
    occupy while staying within k of the reference path at every integer
    time so far.  Stops once a layer comes up empty (or, when
    stop_early_suf is given, as soon as acceptance is certain).
    """
    tgt = points[-1]
    layers = [{(0, 0, 0)}]
    for t in range(1, len_bound + 1):
        if stop_early_suf is not None and tgt in layers[-1] and stop_early_suf[t] <= k:
            return layers, True
        wx, wy, wl = points[t]
        nxt = set()
        for x, y, layer in layers[-1]:
            for letter in (_A, _AINV, _T):
                q = _step(x, y, layer, letter)
                if _dist(q[0], q[1], q[2], wx, wy, wl) <= k:
                    nxt.add(q)
        if not nxt:
            break
        layers.append(nxt)
    if stop_early_suf is not None:
        done = tgt in layers[-1] and stop_early_suf[len(layers)] <= k
        return layers, done
    return layers, False


def _accepting_lengths(layers, tgt, suf, k):
    return [m for m in range(len(layers)) if tgt in layers[m] and suf[m + 1] <= k]


def feasible(word, len_bound, k):
    """Is there a same-endpoint word of length <= len_bound staying within k?"""
    points = _path(word)
    suf = _suffix_max(points, points[-1])
    _, done = _forward_layers(points, len_bound, k, stop_early_suf=suf)
    return done


def min_fftp(word):
    """Least falsification constant and its lexicographically least witness.

    Scans k upward from 0; for the first feasible k, reconstructs the
    witness by a backward completability pass over the stored layers and a
    greedy forward walk (halting preferred, then letters in order), which
    yields the lexicographically least witness word.
    """
    big = len(word)
    points = _path(word)
    tgt = points[-1]
    if big <= _closed_length(*tgt):
        raise ValueError("word is geodesic; no shorter equivalent exists")
    len_bound = big - 1
    suf = _suffix_max(points, tgt)
    for k in range(2 * big + 1):
        layers, _ = _forward_layers(points, len_bound, k)
        if _accepting_lengths(layers, tgt, suf, k):
            return k, _extract_witness(layers, tgt, suf, k, len_bound)
    raise AssertionError("sweep failed below the 2|w| safety cap")


def _extract_witness(layers, tgt, suf, k, len_bound):
    nlay = len(layers)
    # completable[t]: positions in layers[t] from which acceptance is reachable
    completable: list[set] = [set() for _ in range(nlay)]
    for t in range(nlay - 1, -1, -1):
        ahead = completable[t + 1] if t + 1 < nlay else ()
        for p in layers[t]:
            if p == tgt and suf[t + 1] <= k:
                completable[t].add(p)
                continue
            if ahead and t < len_bound:
                x, y, layer = p
                for letter in (_A, _AINV, _T):
                    if _step(x, y, layer, letter) in ahead:
                        completable[t].add(p)
                        break
    letters = bytearray()
    p = (0, 0, 0)
    t = 0
    while True:
        if p == tgt and suf[t + 1] <= k:
            return bytes(letters)
        moved = False
        for letter in (_A, _AINV, _T):
            q = _step(p[0], p[1], p[2], letter)
            if t + 1 < nlay and q in completable[t + 1]:
                letters.append(letter)
                p = q
                t += 1
                moved = True
                break
        if not moved:
            raise AssertionError("witness extraction lost the feasible path")
