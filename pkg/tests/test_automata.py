import itertools
import random

import pytest

from geofellow import ALPHABET, Letter, Word, parse_word
from geofellow.automata import (
    Dfa,
    accepts,
    build_geodesic_acceptor,
    canonical_form,
    complement,
    dfa_from_words,
    enumerate_language,
    equivalent,
    from_text,
    is_empty,
    isomorphic,
    length_filter_dfa,
    minimize,
    minimize_brzozowski,
    product,
    random_dfa,
    to_text,
)
from geofellow.geodesics import geodesic_words_up_to, is_geodesic

ALL_ACCEPTING = Dfa(ALPHABET, ((0, 0, 0),), frozenset([0]), 0)
NONE_ACCEPTING = Dfa(ALPHABET, ((0, 0, 0),), frozenset(), 0)


def test_acceptor_word_examples(acceptor):
    assert accepts(acceptor, parse_word("a^2ta^3"))
    assert not accepts(acceptor, parse_word("atata^-1"))
    assert not accepts(acceptor, parse_word("tatat"))
    assert accepts(acceptor, Word())
    assert accepts(acceptor, parse_word("AtA"))
    assert not accepts(acceptor, parse_word("a^2tt"))


def test_accepts_rejects_foreign_letter():
    d = Dfa((Letter.A,), ((0,),), frozenset([0]), 0)
    with pytest.raises(ValueError):
        accepts(d, [Letter.T])


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(ALPHABET, ((0, 0, 0),), frozenset(), 1)  # bad start
    with pytest.raises(ValueError):
        Dfa(ALPHABET, ((0, 0),), frozenset(), 0)  # partial row
    with pytest.raises(ValueError):
        Dfa(ALPHABET, ((0, 0, 5),), frozenset(), 0)  # bad target
    with pytest.raises(ValueError):
        Dfa((), (), frozenset(), 0)  # empty alphabet


def test_acceptor_language_small(acceptor):
    assert enumerate_language(acceptor, 0) == [Word()]
    assert set(enumerate_language(acceptor, 1)) == {
        Word(),
        Word([Letter.A]),
        Word([Letter.A_INV]),
        Word([Letter.T]),
    }


def test_acceptor_matches_bruteforce_up_to_len_5(acceptor):
    brute = {
        Word(p)
        for n in range(6)
        for p in itertools.product(ALPHABET, repeat=n)
        if is_geodesic(Word(p))
    }
    assert set(enumerate_language(acceptor, 5)) == brute


def test_enumeration_is_lexicographic(acceptor):
    found = enumerate_language(acceptor, 4)
    assert found == sorted(found)
    assert len(found) == len(set(found))


def test_product_and_complement_laws(acceptor):
    comp = complement(acceptor)
    assert is_empty(product(acceptor, comp, "intersect"))
    assert equivalent(product(acceptor, comp, "union"), ALL_ACCEPTING)
    assert is_empty(product(acceptor, acceptor, "difference"))


def test_product_rejects_alphabet_mismatch(acceptor):
    other = Dfa((Letter.A,), ((0,),), frozenset([0]), 0)
    with pytest.raises(ValueError):
        product(acceptor, other, "intersect")
    with pytest.raises(ValueError):
        product(acceptor, acceptor, "xor")


def test_complement_involution(acceptor):
    assert equivalent(complement(complement(acceptor)), acceptor)
    assert accepts(complement(acceptor), parse_word("tatat"))
    assert is_empty(complement(ALL_ACCEPTING))


def test_is_empty_basics(acceptor):
    assert is_empty(NONE_ACCEPTING)
    assert not is_empty(acceptor)


def test_acceptor_equals_trie_of_geodesics_up_to_10(acceptor):
    words = geodesic_words_up_to(10)
    trie = dfa_from_words(words)
    bound = length_filter_dfa(10)
    bounded_acceptor = product(acceptor, bound, "intersect")
    bounded_trie = product(trie, bound, "intersect")
    # the unbounded acceptor accepts longer words, so only the bounded
    # languages coincide
    assert not is_empty(product(acceptor, trie, "difference"))
    assert is_empty(product(bounded_acceptor, bounded_trie, "difference"))
    assert is_empty(product(bounded_trie, bounded_acceptor, "difference"))


def test_minimize_acceptor_is_sixteen_states(acceptor):
    small = minimize(acceptor)
    assert len(small.transitions) == 16
    assert len(small.accepting) == 15


def test_minimize_is_idempotent(acceptor):
    small = minimize(acceptor)
    assert len(minimize(small).transitions) == len(small.transitions)
    assert isomorphic(minimize(small), small)


def test_two_minimizers_agree(acceptor):
    hopcroft = minimize(acceptor)
    double_reversal = minimize_brzozowski(acceptor)
    assert len(hopcroft.transitions) == len(double_reversal.transitions)
    assert isomorphic(hopcroft, double_reversal)


def test_minimize_preserves_language(acceptor):
    small = minimize(acceptor)
    assert equivalent(acceptor, small)
    assert enumerate_language(acceptor, 8) == enumerate_language(small, 8)


def test_minimize_random_dfas():
    for seed in range(25):
        d = random_dfa(random.Random(seed))
        small = minimize(d)
        assert equivalent(d, small)
        assert len(small.transitions) == len(minimize_brzozowski(d).transitions)
        assert len(minimize(small).transitions) == len(small.transitions)


def test_equivalent_examples(acceptor):
    assert equivalent(acceptor, acceptor)
    assert equivalent(acceptor, minimize(acceptor))
    assert not equivalent(acceptor, ALL_ACCEPTING)


def test_serialization_roundtrip(acceptor):
    for d in (canonical_form(acceptor), minimize(acceptor)):
        assert from_text(to_text(d)) == d
    rng = random.Random(7)
    d = canonical_form(random_dfa(rng))
    assert from_text(to_text(d)) == d


def test_serialization_is_byte_stable(acceptor):
    assert to_text(canonical_form(acceptor)) == to_text(canonical_form(acceptor))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "alphabet a\nstates 1\nstart 0\n",  # missing accepting header
        "alphabet q\nstates 1\nstart 0\naccepting\n0 q 0",  # bad letter
        "alphabet a\nstates 2\nstart 0\naccepting 0\n0 a 1",  # missing row
    ],
)
def test_from_text_rejects_malformed(text):
    with pytest.raises(ValueError):
        from_text(text)


def test_trie_accepts_exactly_its_words():
    words = [parse_word("at"), parse_word("ta"), Word()]
    trie = dfa_from_words(words)
    for w in words:
        assert accepts(trie, w)
    assert not accepts(trie, parse_word("a"))
    assert not accepts(trie, parse_word("att"))


def test_length_filter():
    d = length_filter_dfa(2)
    assert accepts(d, Word())
    assert accepts(d, parse_word("aa"))
    assert not accepts(d, parse_word("aaa"))
