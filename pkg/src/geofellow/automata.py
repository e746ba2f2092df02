"""Deterministic finite automata over the generator alphabet.

Transitions are stored total: every automaton carries an explicit dead
state where needed, which keeps complementation a matter of flipping the
accepting set.  State ids are dense integers in construction order, and
``canonical_form`` renumbers by BFS from the start state so that equal
languages built the same way serialize identically.

``build_geodesic_acceptor`` constructs the acceptor for the language of
all geodesic words: plain powers of ``a``, one-``t`` words ``a^x t a^y``,
and two-``t`` words ``a^x1 t a^y t a^x2`` with ``y != 0`` and ``x1, x2``
not of opposite signs.  The exhaustive sweeps in the test suite check it
against the brute-force geodesic predicate.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .group import ALPHABET, Letter, Word

__all__ = [
    "Dfa",
    "accepts",
    "build_geodesic_acceptor",
    "enumerate_language",
    "product",
    "complement",
    "minimize",
    "minimize_brzozowski",
    "equivalent",
    "is_empty",
    "canonical_form",
    "isomorphic",
    "to_text",
    "from_text",
    "dfa_from_words",
    "length_filter_dfa",
    "random_dfa",
]


@dataclass(frozen=True)
class Dfa:
    """Total DFA: ``transitions[state][i]`` follows ``alphabet[i]``."""

    alphabet: tuple[Letter, ...]
    transitions: tuple[tuple[int, ...], ...]
    accepting: frozenset[int]
    start: int

    def __post_init__(self):
        n = len(self.transitions)
        if not self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet must be a nonempty set of letters")
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        if not all(0 <= s < n for s in self.accepting):
            raise ValueError("accepting state out of range")
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition table must be total")
            if not all(0 <= t < n for t in row):
                raise ValueError("transition target out of range")

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def letter_index(self, letter: Letter) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} not in automaton alphabet") from None


def accepts(d: Dfa, word: Iterable[Letter]) -> bool:
    """Run the automaton; the empty word is accepted iff start accepts."""
    idx = {letter: i for i, letter in enumerate(d.alphabet)}
    state = d.start
    for letter in word:
        if letter not in idx:
            raise ValueError(f"letter {letter!r} not in automaton alphabet")
        state = d.transitions[state][idx[letter]]
    return state in d.accepting


_DEAD = ("dead",)


def _acceptor_delta(key: tuple, letter: Letter) -> tuple:
    """Symbolic transition of the geodesic acceptor.

    States track which segment the word is in (run before the first t,
    between the two t's, after the second t), the sign of each completed or
    in-progress run, and whether the middle run is still empty.  Runs must
    be sign-consistent, the middle run may not be empty when the second t
    arrives, a third t is fatal, and the outer runs may not take opposite
    signs.
    """
    if key is _DEAD:
        return _DEAD
    kind = key[0]
    sign = 1 if letter is Letter.A else -1
    if kind == "x1":
        if letter is Letter.T:
            return ("y", key[1], 0)
        return ("x1", sign) if key[1] in (0, sign) else _DEAD
    if kind == "y":
        _, x1sign, ysign = key
        if letter is Letter.T:
            return ("x2", x1sign, 0) if ysign != 0 else _DEAD
        return ("y", x1sign, sign) if ysign in (0, sign) else _DEAD
    # kind == "x2"
    _, x1sign, x2sign = key
    if letter is Letter.T:
        return _DEAD
    if x2sign == 0:
        return ("x2", x1sign, sign) if x1sign in (0, sign) else _DEAD
    return key if x2sign == sign else _DEAD


def build_geodesic_acceptor() -> Dfa:
    """The acceptor whose language is exactly the geodesic words."""
    return _densify(("x1", 0), _acceptor_delta, lambda key: key is not _DEAD)


def _densify(
    start_key, delta: Callable, accepting_pred: Callable, alphabet=ALPHABET
) -> Dfa:
    """Materialize a symbolic automaton with dense ids in BFS order."""
    ids = {start_key: 0}
    order = [start_key]
    queue = deque([start_key])
    while queue:
        key = queue.popleft()
        for letter in alphabet:
            nxt = delta(key, letter)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
    rows = tuple(
        tuple(ids[delta(key, letter)] for letter in alphabet) for key in order
    )
    accepting = frozenset(ids[key] for key in order if accepting_pred(key))
    return Dfa(tuple(alphabet), rows, accepting, 0)


def _coaccessible(d: Dfa) -> set[int]:
    """States from which some accepting state is reachable."""
    preds: list[set[int]] = [set() for _ in d.states]
    for s, row in enumerate(d.transitions):
        for tgt in row:
            preds[tgt].add(s)
    live = set(d.accepting)
    queue = deque(live)
    while queue:
        s = queue.popleft()
        for p in preds[s]:
            if p not in live:
                live.add(p)
                queue.append(p)
    return live


def enumerate_language(d: Dfa, max_len: int) -> list[Word]:
    """All accepted words of length <= max_len, in lexicographic order.

    The walk only descends into live states (those that can still reach an
    accepting state), so the cost is proportional to the language fragment,
    not to the full tree of words.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    live = _coaccessible(d)
    out: list[Word] = []
    rows = d.transitions
    accepting = d.accepting

    def walk(state: int, prefix: list[Letter]) -> None:
        if state in accepting:
            out.append(Word(prefix))
        if len(prefix) == max_len:
            return
        for i, letter in enumerate(d.alphabet):
            nxt = rows[state][i]
            if nxt in live:
                prefix.append(letter)
                walk(nxt, prefix)
                prefix.pop()

    if d.start in live:
        walk(d.start, [])
    return out


_PRODUCT_MODES = {
    "intersect": lambda p, q: p and q,
    "union": lambda p, q: p or q,
    "difference": lambda p, q: p and not q,
}


def product(d1: Dfa, d2: Dfa, mode: str) -> Dfa:
    """Pair-state construction; only reachable pairs are materialized."""
    if d1.alphabet != d2.alphabet:
        raise ValueError("product requires equal alphabets")
    try:
        combine = _PRODUCT_MODES[mode]
    except KeyError:
        raise ValueError(f"unknown product mode {mode!r}") from None

    def delta(pair, letter):
        i = d1.letter_index(letter)
        return (d1.transitions[pair[0]][i], d2.transitions[pair[1]][i])

    return _densify(
        (d1.start, d2.start),
        delta,
        lambda pair: combine(pair[0] in d1.accepting, pair[1] in d2.accepting),
        d1.alphabet,
    )


def complement(d: Dfa) -> Dfa:
    return Dfa(
        d.alphabet,
        d.transitions,
        frozenset(d.states) - d.accepting,
        d.start,
    )


def is_empty(d: Dfa) -> bool:
    """True iff no accepting state is reachable from start."""
    seen = {d.start}
    queue = deque([d.start])
    while queue:
        s = queue.popleft()
        if s in d.accepting:
            return False
        for tgt in d.transitions[s]:
            if tgt not in seen:
                seen.add(tgt)
                queue.append(tgt)
    return True


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality via emptiness of both directed differences."""
    if d1.alphabet != d2.alphabet:
        raise ValueError("equivalence requires equal alphabets")
    return is_empty(product(d1, d2, "difference")) and is_empty(
        product(d2, d1, "difference")
    )


def _trim(d: Dfa) -> Dfa:
    """Restrict to states reachable from start (BFS renumbering)."""
    ids = {d.start: 0}
    order = [d.start]
    queue = deque([d.start])
    while queue:
        s = queue.popleft()
        for tgt in d.transitions[s]:
            if tgt not in ids:
                ids[tgt] = len(order)
                order.append(tgt)
                queue.append(tgt)
    rows = tuple(tuple(ids[t] for t in d.transitions[s]) for s in order)
    accepting = frozenset(ids[s] for s in order if s in d.accepting)
    return Dfa(d.alphabet, rows, accepting, 0)


def canonical_form(d: Dfa) -> Dfa:
    """Drop unreachable states and renumber by BFS from start."""
    return _trim(d)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Equality up to renaming of (reachable) states."""
    return canonical_form(d1) == canonical_form(d2)


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal automaton via partition refinement (Hopcroft)."""
    d = _trim(d)
    n = len(d.transitions)
    nletters = len(d.alphabet)
    preds: list[list[list[int]]] = [
        [[] for _ in range(n)] for _ in range(nletters)
    ]
    for s in range(n):
        for li in range(nletters):
            preds[li][d.transitions[s][li]].append(s)

    acc = frozenset(d.accepting)
    rest = frozenset(range(n)) - acc
    partition = {b for b in (acc, rest) if b}
    work = set()
    if acc and rest:
        work.add(min((acc, rest), key=len))
    block_of = {}
    for block in partition:
        for s in block:
            block_of[s] = block

    while work:
        splitter = work.pop()
        for li in range(nletters):
            moved: dict[frozenset, set[int]] = {}
            for tgt in splitter:
                for s in preds[li][tgt]:
                    moved.setdefault(block_of[s], set()).add(s)
            for block, inside in moved.items():
                if len(inside) == len(block):
                    continue
                part1 = frozenset(inside)
                part2 = block - part1
                partition.remove(block)
                partition.update((part1, part2))
                for s in part1:
                    block_of[s] = part1
                for s in part2:
                    block_of[s] = part2
                if block in work:
                    work.remove(block)
                    work.update((part1, part2))
                else:
                    work.add(min((part1, part2), key=len))

    def delta(block, letter):
        s = next(iter(block))
        return block_of[d.transitions[s][d.letter_index(letter)]]

    return _densify(
        block_of[d.start],
        delta,
        lambda block: next(iter(block)) in acc,
        d.alphabet,
    )


def _reverse_determinize(d: Dfa) -> Dfa:
    """Subset construction on the reversed automaton.

    Returns a total DFA accepting the reverse language; two applications
    give the double-reversal minimization, an independent route used to
    cross-check :func:`minimize`.
    """
    n = len(d.transitions)
    preds: list[list[tuple[int, ...]]] = []
    for li in range(len(d.alphabet)):
        cols: list[list[int]] = [[] for _ in range(n)]
        for s in range(n):
            cols[d.transitions[s][li]].append(s)
        preds.append([tuple(c) for c in cols])

    def delta(subset: frozenset, letter: Letter) -> frozenset:
        li = d.letter_index(letter)
        out = set()
        for s in subset:
            out.update(preds[li][s])
        return frozenset(out)

    return _densify(
        frozenset(d.accepting),
        delta,
        lambda subset: d.start in subset,
        d.alphabet,
    )


def minimize_brzozowski(d: Dfa) -> Dfa:
    """Minimal automaton by determinizing the reverse, twice."""
    return _reverse_determinize(_reverse_determinize(_trim(d)))


def to_text(d: Dfa) -> str:
    """Plain-text serialization: header lines, then one line per transition."""
    lines = [
        "alphabet " + " ".join(letter.char for letter in d.alphabet),
        f"states {len(d.transitions)}",
        f"start {d.start}",
        "accepting " + " ".join(str(s) for s in sorted(d.accepting)),
    ]
    for s in d.states:
        for i, letter in enumerate(d.alphabet):
            lines.append(f"{s} {letter.char} {d.transitions[s][i]}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


_CHAR_TO_LETTER = {"a": Letter.A, "A": Letter.A_INV, "t": Letter.T}


def from_text(text: str) -> Dfa:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) < 4:
        raise ValueError("truncated automaton text")
    fields = {}
    for name in ("alphabet", "states", "start", "accepting"):
        head, _, rest = lines.pop(0).partition(" ")
        if head != name:
            raise ValueError(f"expected {name!r} header line, got {head!r}")
        fields[name] = rest.split()
    try:
        alphabet = tuple(_CHAR_TO_LETTER[c] for c in fields["alphabet"])
    except KeyError as exc:
        raise ValueError(f"unknown letter {exc.args[0]!r} in alphabet") from None
    n = int(fields["states"][0])
    start = int(fields["start"][0])
    accepting = frozenset(int(s) for s in fields["accepting"])
    table: dict[tuple[int, Letter], int] = {}
    for line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"malformed transition line {line!r}")
        src, char, tgt = parts
        if char not in _CHAR_TO_LETTER:
            raise ValueError(f"unknown letter {char!r} in transition")
        table[(int(src), _CHAR_TO_LETTER[char])] = int(tgt)
    try:
        rows = tuple(
            tuple(table[(s, letter)] for letter in alphabet) for s in range(n)
        )
    except KeyError as exc:
        raise ValueError(f"missing transition for {exc.args[0]!r}") from None
    return Dfa(alphabet, rows, accepting, start)


def dfa_from_words(words: Iterable[Sequence[Letter]], alphabet=ALPHABET) -> Dfa:
    """Trie acceptor for a finite word set (plus one dead state)."""
    children: list[dict[Letter, int]] = [{}]
    accepting = set()
    for w in sorted(tuple(w) for w in set(map(tuple, words))):
        node = 0
        for letter in w:
            nxt = children[node].get(letter)
            if nxt is None:
                nxt = len(children)
                children.append({})
                children[node][letter] = nxt
            node = nxt
        accepting.add(node)
    dead = len(children)
    rows = [
        tuple(kids.get(letter, dead) for letter in alphabet) for kids in children
    ]
    rows.append(tuple(dead for _ in alphabet))
    return Dfa(tuple(alphabet), tuple(rows), frozenset(accepting), 0)


def length_filter_dfa(max_len: int, alphabet=ALPHABET) -> Dfa:
    """Acceptor for all words of length <= max_len."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    dead = max_len + 1
    rows = [
        tuple(min(s + 1, dead) for _ in alphabet) for s in range(max_len + 1)
    ]
    rows.append(tuple(dead for _ in alphabet))
    return Dfa(tuple(alphabet), tuple(rows), frozenset(range(max_len + 1)), 0)


def random_dfa(rng: random.Random, max_states: int = 8, alphabet=ALPHABET) -> Dfa:
    """Seeded random total DFA, for algebra-law testing."""
    n = rng.randint(1, max_states)
    rows = tuple(
        tuple(rng.randrange(n) for _ in alphabet) for _ in range(n)
    )
    accepting = frozenset(s for s in range(n) if rng.random() < 0.5)
    return Dfa(tuple(alphabet), rows, accepting, 0)
