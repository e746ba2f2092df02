# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; drop-in replacement for `_pykernels`.

Letters are 0=a, 1=a^-1, 2=t; layers 0=bottom, 1=top.  The feasibility
sweeps replace hash sets with flat membership grids over the box of
positions reachable within the word-length bound (|x|, |y| <= 16).
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "cython"

cdef enum:
    MAXW = 16              # longest word the sweeps accept
    MAXD = 24              # deepest tree walk
    DIM = 2 * MAXW + 1
    NCELLS = DIM * DIM * 2


cdef inline int iabs(int v) nogil:
    return -v if v < 0 else v


cdef inline int closed_length(int x, int y, int layer) nogil:
    if layer:
        return iabs(x) + iabs(y) + 1
    if y == 0:
        return iabs(x)
    return iabs(x) + iabs(y) + 2


cdef inline int cdist(int px, int py, int pl, int qx, int qy, int ql) nogil:
    cdef int dx, dy, dl
    if pl == 0:
        dx = qx - px
        dy = qy - py
        dl = ql
    else:
        dx = qy - py
        dy = qx - px
        dl = 1 - ql
    if dl:
        return iabs(dx) + iabs(dy) + 1
    if dy == 0:
        return iabs(dx)
    return iabs(dx) + iabs(dy) + 2


cdef inline void cstep(int x, int y, int layer, int letter,
                       int *qx, int *qy, int *ql) nogil:
    if letter == 2:
        qx[0] = x
        qy[0] = y
        ql[0] = 1 - layer
    elif layer:
        qx[0] = x
        qy[0] = y + (1 if letter == 0 else -1)
        ql[0] = layer
    else:
        qx[0] = x + (1 if letter == 0 else -1)
        qy[0] = y
        ql[0] = layer


cdef inline int cell_of(int x, int y, int layer) nogil:
    return ((x + MAXW) * DIM + (y + MAXW)) * 2 + layer


def theorem5_mismatches(int max_len, transitions, accepting, int start):
    """(words checked, mismatching words) for acceptor vs closed-form test."""
    if max_len < 0 or max_len > MAXD:
        raise ValueError("max_len out of kernel range")
    cdef int nflat = len(transitions)
    cdef int *trans = <int *> malloc(nflat * sizeof(int))
    if trans is NULL:
        raise MemoryError()
    cdef int i
    for i in range(nflat):
        trans[i] = transitions[i]
    cdef const unsigned char[::1] acc = accepting

    cdef int sx[MAXD + 1]
    cdef int sy[MAXD + 1]
    cdef int sl[MAXD + 1]
    cdef int sst[MAXD + 1]
    cdef int li[MAXD + 1]
    cdef unsigned char chosen[MAXD + 1]
    cdef long count = 0
    cdef list mismatches = []
    cdef int depth = 0, letter, x, y, layer, state

    sx[0] = 0
    sy[0] = 0
    sl[0] = 0
    sst[0] = start
    li[0] = 0
    try:
        count += 1
        if (acc[start] != 0) != (closed_length(0, 0, 0) == 0):
            mismatches.append(b"")
        while depth >= 0:
            if depth == max_len or li[depth] == 3:
                depth -= 1
                continue
            letter = li[depth]
            li[depth] += 1
            cstep(sx[depth], sy[depth], sl[depth], letter, &x, &y, &layer)
            state = trans[sst[depth] * 3 + letter]
            depth += 1
            sx[depth] = x
            sy[depth] = y
            sl[depth] = layer
            sst[depth] = state
            li[depth] = 0
            chosen[depth] = <unsigned char> letter
            count += 1
            if (acc[state] != 0) != (depth == closed_length(x, y, layer)):
                mismatches.append(bytes(bytearray(
                    [chosen[i] for i in range(1, depth + 1)])))
    finally:
        free(trans)
    return count, mismatches


def parity_mismatches(int max_len):
    """Count words whose layer disagrees with the parity of their t count."""
    if max_len < 0 or max_len > MAXD:
        raise ValueError("max_len out of kernel range")
    cdef int sl[MAXD + 1]
    cdef int st[MAXD + 1]
    cdef int li[MAXD + 1]
    cdef long count = 1
    cdef long bad = 0
    cdef int depth = 0, letter, layer, tcount

    sl[0] = 0
    st[0] = 0
    li[0] = 0
    while depth >= 0:
        if depth == max_len or li[depth] == 3:
            depth -= 1
            continue
        letter = li[depth]
        li[depth] += 1
        layer = sl[depth] if letter != 2 else 1 - sl[depth]
        tcount = st[depth] + (1 if letter == 2 else 0)
        depth += 1
        sl[depth] = layer
        st[depth] = tcount
        li[depth] = 0
        count += 1
        if (layer == 1) != (tcount % 2 == 1):
            bad += 1
    return count, bad


def nongeodesic_words(int max_len):
    """All non-geodesic words of length <= max_len, in lexicographic order."""
    cdef list out = []
    if max_len < 0:
        return out
    if max_len > MAXD:
        raise ValueError("max_len out of kernel range")
    cdef int sx[MAXD + 1]
    cdef int sy[MAXD + 1]
    cdef int sl[MAXD + 1]
    cdef int li[MAXD + 1]
    cdef unsigned char chosen[MAXD + 1]
    cdef int depth = 0, letter, x, y, layer, i

    sx[0] = 0
    sy[0] = 0
    sl[0] = 0
    li[0] = 0
    while depth >= 0:
        if depth == max_len or li[depth] == 3:
            depth -= 1
            continue
        letter = li[depth]
        li[depth] += 1
        cstep(sx[depth], sy[depth], sl[depth], letter, &x, &y, &layer)
        depth += 1
        sx[depth] = x
        sy[depth] = y
        sl[depth] = layer
        li[depth] = 0
        chosen[depth] = <unsigned char> letter
        if depth > closed_length(x, y, layer):
            out.append(bytes(bytearray([chosen[i] for i in range(1, depth + 1)])))
    return out


cdef int _load_path(const unsigned char[::1] word, int *wx, int *wy, int *wl) except -1:
    cdef int T = word.shape[0]
    if T > MAXW:
        raise ValueError("word length exceeds kernel bound")
    cdef int t
    wx[0] = 0
    wy[0] = 0
    wl[0] = 0
    for t in range(T):
        cstep(wx[t], wy[t], wl[t], word[t], &wx[t + 1], &wy[t + 1], &wl[t + 1])
    return T


cdef void _suffix_max(int T, int *wx, int *wy, int *wl, int *suf) nogil:
    # suf[s] = max distance from path tail points[s:] to the endpoint
    cdef int s, d
    suf[T + 1] = 0
    for s in range(T, -1, -1):
        suf[s] = suf[s + 1]
        d = cdist(wx[s], wy[s], wl[s], wx[T], wy[T], wl[T])
        if d > suf[s]:
            suf[s] = d


def feasible(const unsigned char[::1] word, int len_bound, int k):
    """Same sweep as `min_fftp`, for a caller-chosen length bound and k."""
    cdef int wx[MAXW + 1]
    cdef int wy[MAXW + 1]
    cdef int wl[MAXW + 1]
    cdef int suf[MAXW + 2]
    cdef int T = _load_path(word, wx, wy, wl)
    if not 0 <= len_bound < T:
        raise ValueError("len_bound must satisfy 0 <= len_bound < len(word)")
    if k < 0:
        raise ValueError("k must be nonnegative")
    _suffix_max(T, wx, wy, wl, suf)

    cdef unsigned char *seen = <unsigned char *> malloc(NCELLS)
    cdef int *buf = <int *> malloc(6 * NCELLS * sizeof(int))
    if seen is NULL or buf is NULL:
        free(seen)
        free(buf)
        raise MemoryError()
    cdef int *cx = buf
    cdef int *cy = buf + NCELLS
    cdef int *cl = buf + 2 * NCELLS
    cdef int *nx = buf + 3 * NCELLS
    cdef int *ny = buf + 4 * NCELLS
    cdef int *nl = buf + 5 * NCELLS

    cdef bint ok = False
    cdef int ncur = 1, nnxt, t, i, letter, qx, qy, ql
    cdef int tx = wx[T], ty = wy[T], tl = wl[T]
    cx[0] = 0
    cy[0] = 0
    cl[0] = 0
    try:
        for t in range(0, len_bound + 1):
            # accept: some word of length t sits at the endpoint and the
            # remaining reference tail stays within k of it
            for i in range(ncur):
                if cx[i] == tx and cy[i] == ty and cl[i] == tl and suf[t + 1] <= k:
                    ok = True
                    break
            if ok or t == len_bound:
                break
            memset(seen, 0, NCELLS)
            nnxt = 0
            for i in range(ncur):
                for letter in range(3):
                    cstep(cx[i], cy[i], cl[i], letter, &qx, &qy, &ql)
                    if cdist(qx, qy, ql, wx[t + 1], wy[t + 1], wl[t + 1]) > k:
                        continue
                    if seen[cell_of(qx, qy, ql)]:
                        continue
                    seen[cell_of(qx, qy, ql)] = 1
                    nx[nnxt] = qx
                    ny[nnxt] = qy
                    nl[nnxt] = ql
                    nnxt += 1
            if nnxt == 0:
                break
            for i in range(nnxt):
                cx[i] = nx[i]
                cy[i] = ny[i]
                cl[i] = nl[i]
            ncur = nnxt
    finally:
        free(seen)
        free(buf)
    return bool(ok)


def min_fftp(const unsigned char[::1] word):
    """Least falsification constant and lexicographically least witness."""
    cdef int wx[MAXW + 1]
    cdef int wy[MAXW + 1]
    cdef int wl[MAXW + 1]
    cdef int suf[MAXW + 2]
    cdef int T = _load_path(word, wx, wy, wl)
    cdef int tx = wx[T], ty = wy[T], tl = wl[T]
    if T <= closed_length(tx, ty, tl):
        raise ValueError("word is geodesic; no shorter equivalent exists")
    cdef int L = T - 1
    _suffix_max(T, wx, wy, wl, suf)

    # grids[t * NCELLS + cell] == stamp: position reachable at time t within
    # the current k (stamping avoids wiping the whole buffer per k)
    cdef int *grids = <int *> malloc((L + 1) * NCELLS * sizeof(int))
    cdef unsigned char *comp = <unsigned char *> malloc((L + 1) * NCELLS)
    cdef int *buf = <int *> malloc(6 * NCELLS * sizeof(int))
    if grids is NULL or comp is NULL or buf is NULL:
        free(grids)
        free(comp)
        free(buf)
        raise MemoryError()
    memset(grids, 0, (L + 1) * NCELLS * sizeof(int))
    cdef int *cx = buf
    cdef int *cy = buf + NCELLS
    cdef int *cl = buf + 2 * NCELLS
    cdef int *nx = buf + 3 * NCELLS
    cdef int *ny = buf + 4 * NCELLS
    cdef int *nl = buf + 5 * NCELLS

    cdef int k, t, i, letter, qx, qy, ql, x, y, layer, c, nlay, ncur, nnxt
    cdef int stamp
    cdef bint ok, found
    cdef list letters

    try:
        for k in range(0, 2 * T + 1):
            stamp = k + 1
            cx[0] = 0
            cy[0] = 0
            cl[0] = 0
            ncur = 1
            grids[cell_of(0, 0, 0)] = stamp
            nlay = 1
            for t in range(1, L + 1):
                nnxt = 0
                for i in range(ncur):
                    for letter in range(3):
                        cstep(cx[i], cy[i], cl[i], letter, &qx, &qy, &ql)
                        if cdist(qx, qy, ql, wx[t], wy[t], wl[t]) > k:
                            continue
                        c = t * NCELLS + cell_of(qx, qy, ql)
                        if grids[c] == stamp:
                            continue
                        grids[c] = stamp
                        nx[nnxt] = qx
                        ny[nnxt] = qy
                        nl[nnxt] = ql
                        nnxt += 1
                if nnxt == 0:
                    break
                for i in range(nnxt):
                    cx[i] = nx[i]
                    cy[i] = ny[i]
                    cl[i] = nl[i]
                ncur = nnxt
                nlay = t + 1
            ok = False
            for t in range(nlay):
                if grids[t * NCELLS + cell_of(tx, ty, tl)] == stamp and suf[t + 1] <= k:
                    ok = True
                    break
            if not ok:
                continue

            # completability pass (backward), then greedy forward extraction:
            # halting at the endpoint is preferred over any letter, letters in
            # order a < a^-1 < t, which yields the lexicographically least
            # witness under the prefix-first word order.
            memset(comp, 0, (L + 1) * NCELLS)
            for t in range(nlay - 1, -1, -1):
                for c in range(NCELLS):
                    if grids[t * NCELLS + c] != stamp:
                        continue
                    layer = c & 1
                    x = (c >> 1) / DIM - MAXW
                    y = (c >> 1) % DIM - MAXW
                    if x == tx and y == ty and layer == tl and suf[t + 1] <= k:
                        comp[t * NCELLS + c] = 1
                        continue
                    if t + 1 >= nlay:
                        continue
                    for letter in range(3):
                        cstep(x, y, layer, letter, &qx, &qy, &ql)
                        if comp[(t + 1) * NCELLS + cell_of(qx, qy, ql)]:
                            comp[t * NCELLS + c] = 1
                            break
            letters = []
            x = 0
            y = 0
            layer = 0
            t = 0
            while True:
                if x == tx and y == ty and layer == tl and suf[t + 1] <= k:
                    return k, bytes(bytearray(letters))
                found = False
                for letter in range(3):
                    cstep(x, y, layer, letter, &qx, &qy, &ql)
                    if t + 1 < nlay and comp[(t + 1) * NCELLS + cell_of(qx, qy, ql)]:
                        letters.append(letter)
                        x = qx
                        y = qy
                        layer = ql
                        t += 1
                        found = True
                        break
                if not found:
                    raise AssertionError("witness extraction lost the feasible path")
    finally:
        free(grids)
        free(comp)
        free(buf)
    raise AssertionError("sweep failed below the 2|w| safety cap")
