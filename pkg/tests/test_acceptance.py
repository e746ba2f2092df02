"""Acceptance suite: one test per criterion, exact tolerances, pass lines.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines alongside pytest's own pass/fail output.
"""

import random
import time

from geofellow import (
    ALPHABET,
    GroupElement,
    Layer,
    Letter,
    Word,
    ball,
    canonical_geodesic,
    evaluate,
    geodesic_length,
    parse_word,
)
from geofellow.automata import (
    build_geodesic_acceptor,
    complement,
    equivalent,
    isomorphic,
    minimize,
    minimize_brzozowski,
    product,
    random_dfa,
)
from geofellow.cli import main
from geofellow.fellow import (
    async_constant,
    fftp_scan,
    min_fftp_constant,
    sync_constant,
)
from geofellow.geodesics import (
    geodesics_to,
    is_geodesic,
    shorter_equivalent_words,
    two_t_exponents,
)
from geofellow.kernels import dfa_tables, min_fftp, nongeodesic_words
from geofellow.kernels import parity_mismatches, theorem5_mismatches
from oracles import frechet_bruteforce, min_fftp_bruteforce

WORDS_UP_TO_11 = (3**12 - 1) // 2  # 265720
BALL12_SIZE = 490


def _report(num, name, detail):
    print(f"ACCEPTANCE {num:02d} {name}: PASS ({detail})")


def _witness_word(n):
    return parse_word(f"ta^{n}ta^{n}t")


def test_criterion_01_theorem5_equivalence(ball12):
    started = time.perf_counter()
    # the sweep compares against the closed form, which this ball equates
    # with BFS distance over every endpoint a length-11 word can reach
    for g, d in ball12.entries.items():
        assert geodesic_length(g) == d
    tables = dfa_tables(build_geodesic_acceptor())
    count, mismatches = theorem5_mismatches(11, *tables)
    elapsed = time.perf_counter() - started
    assert count == WORDS_UP_TO_11
    assert mismatches == []
    assert elapsed < 30.0
    _report(1, "theorem5-equivalence", f"{count} words, 0 mismatches, {elapsed:.2f}s")


def test_criterion_02_closed_form_distance(ball12):
    assert len(ball12.entries) == BALL12_SIZE
    bad = [g for g, d in ball12.entries.items() if geodesic_length(g) != d]
    assert bad == []
    _report(2, "closed-form-distance", f"{BALL12_SIZE} elements, 0 mismatches")


def test_criterion_03_layer_parity():
    count, bad = parity_mismatches(11)
    assert count == WORDS_UP_TO_11
    assert bad == 0
    _report(3, "layer-parity", f"{count} words, 0 mismatches")


def test_criterion_04_three_t_words_not_geodesic():
    cases = 0
    for n in range(-5, 6):
        for m in range(-5, 6):
            letters = (
                [Letter.T]
                + [Letter.A if n > 0 else Letter.A_INV] * abs(n)
                + [Letter.T]
                + [Letter.A if m > 0 else Letter.A_INV] * abs(m)
                + [Letter.T]
            )
            assert not is_geodesic(Word(letters))
            cases += 1
    assert cases == 121
    _report(4, "three-t-words-not-geodesic", f"{cases} cases")


def test_criterion_05_geodesic_families():
    tops = bottoms = 0
    for x in range(-4, 5):
        for y in range(-4, 5):
            target = GroupElement(x, y, Layer.TOP)
            family = geodesics_to(target)
            assert family.words == {canonical_geodesic(target)}
            tops += 1
    for x in range(-4, 5):
        for y in [v for v in range(-4, 5) if v != 0]:
            target = GroupElement(x, y, Layer.BOTTOM)
            family = geodesics_to(target)
            assert len(family.words) == abs(x) + 1
            for w in family.words:
                assert evaluate(w) == target
                parts = two_t_exponents(w)
                assert parts is not None
                x1, mid, x2 = parts
                assert mid == y and x1 + x2 == x and x1 * x2 >= 0
            bottoms += 1
    _report(5, "geodesic-families", f"{tops} top + {bottoms} bottom targets")


def test_criterion_06_witness_family_diverges():
    started = time.perf_counter()
    ks = []
    for n in range(1, 6):
        report = min_fftp_constant(_witness_word(n))
        assert report.min_k >= n + 2
        ks.append(report.min_k)
    assert all(a < b for a, b in zip(ks, ks[1:]))
    assert ks == [4, 6, 8, 10, 12]

    # oracle confirmation, exhaustive over shorter equivalents
    for n in (1, 2, 3):
        expect_k, expect_witness = min_fftp_bruteforce(_witness_word(n))
        assert ks[n - 1] == expect_k
        report = min_fftp_constant(_witness_word(n))
        assert report.witness == expect_witness
    w2 = _witness_word(2)
    assert shorter_equivalent_words(w2) == {parse_word("a^2ta^2")}
    report = min_fftp_constant(w2)
    assert report.min_k == 6 and report.witness == parse_word("a^2ta^2")
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    _report(6, "witness-family-divergence", f"min_k={ks}, {elapsed:.2f}s")


def test_criterion_07_sweep_matches_bruteforce_oracle():
    checked = 0
    for raw in nongeodesic_words(7):
        w = Word(raw)
        expect_k, expect_witness = min_fftp_bruteforce(w)
        got_k, got_witness = min_fftp(raw)
        assert got_k == expect_k, w
        assert Word(got_witness) == expect_witness, w
        checked += 1
    _report(7, "fftp-oracle-equivalence", f"{checked} non-geodesic words")


def test_criterion_08_automata_algebra(acceptor):
    small = minimize(acceptor)
    assert len(minimize(small).transitions) == len(small.transitions)
    other = minimize_brzozowski(acceptor)
    assert len(small.transitions) == len(other.transitions) == 16
    assert isomorphic(small, other)
    assert equivalent(acceptor, small)

    def assert_agree_up_to(d1, d2, max_len):
        t1, t2, a1, a2 = d1.transitions, d2.transitions, d1.accepting, d2.accepting

        def walk(s1, s2, depth):
            assert (s1 in a1) == (s2 in a2)
            if depth == max_len:
                return
            for i in range(3):
                walk(t1[s1][i], t2[s2][i], depth + 1)

        walk(d1.start, d2.start, 0)

    for seed in range(100):
        rng = random.Random(1000 + seed)
        r = random_dfa(rng, max_states=6)
        lhs = complement(product(acceptor, r, "union"))
        rhs = product(complement(acceptor), complement(r), "intersect")
        assert_agree_up_to(lhs, rhs, 8)
        assert equivalent(lhs, rhs)
        lhs = complement(product(acceptor, r, "intersect"))
        rhs = product(complement(acceptor), complement(r), "union")
        assert_agree_up_to(lhs, rhs, 8)
        assert equivalent(lhs, rhs)
        assert len(minimize(minimize(r)).transitions) == len(
            minimize(r).transitions
        )
    _report(8, "automata-algebra", "double minimization + 100 seeded De Morgan")


def test_criterion_09_frechet_dp_matches_bruteforce():
    rng = random.Random(90210)
    pairs = 0
    for _ in range(1000):
        u = Word(rng.choice(ALPHABET) for _ in range(rng.randint(0, 6)))
        v = Word(rng.choice(ALPHABET) for _ in range(rng.randint(0, 6)))
        dp = async_constant(u, v)
        assert dp == frechet_bruteforce(u, v)
        assert dp <= sync_constant(u, v)
        pairs += 1
    assert pairs == 1000
    _report(9, "frechet-dp-oracle", f"{pairs} seeded pairs")


def test_criterion_10_scan_determinism(tmp_path, capsys):
    out_many = tmp_path / "many.csv"
    out_one = tmp_path / "one.csv"
    assert main(
        ["fftp-scan", "--max-len", "9", "--workers", "4", "--out", str(out_many)]
    ) == 0
    assert main(
        ["fftp-scan", "--max-len", "9", "--workers", "1", "--out", str(out_one)]
    ) == 0
    capsys.readouterr()
    assert out_many.read_bytes() == out_one.read_bytes()
    summary_many = (tmp_path / "many.summary.csv").read_bytes()
    summary_one = (tmp_path / "one.summary.csv").read_bytes()
    assert summary_many == summary_one
    rows = out_one.read_bytes().count(b"\n") - 1
    _report(10, "scan-determinism", f"{rows} rows byte-identical across workers")
