import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splicekit import (
    Alphabet,
    AlphabetMismatchError,
    Nfa,
    automaton_from_json,
    automaton_to_dot,
    automaton_to_json,
    complement,
    determinize,
    difference,
    enumerate_words,
    equivalent,
    intersect,
    length_lex_cmp,
    minimize,
    parse_regex,
    union,
    words_shorter_than,
)
from splicekit.automata import occurrences

from helpers import all_words_upto, random_min_dfa

A = Alphabet.from_string("a")
AB = Alphabet.from_string("ab")


def lang(regex, alphabet=AB):
    return minimize(determinize(parse_regex(regex, alphabet)))


def test_alphabet_rejects_duplicates_and_long_symbols():
    with pytest.raises(ValueError):
        Alphabet.from_string("aa")
    with pytest.raises(ValueError):
        Alphabet(("ab",))


def test_length_lex_examples():
    assert length_lex_cmp(AB, "b", "aa") == -1
    assert length_lex_cmp(AB, "ab", "ba") == -1
    assert length_lex_cmp(AB, "ba", "ba") == 0
    assert length_lex_cmp(AB, "aa", "b") == 1


def test_length_lex_respects_alphabet_order():
    # order is the alphabet's, not ASCII
    ba = Alphabet.from_string("ba")
    assert length_lex_cmp(ba, "b", "a") == -1


def test_words_shorter_than_order_and_count():
    words = list(words_shorter_than(AB, 3))
    assert words == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert list(words_shorter_than(AB, 0)) == []


def test_occurrences_overlapping_and_empty():
    assert occurrences("aaa", "aa") == [0, 1]
    assert occurrences("ab", "") == [0, 1, 2]
    assert occurrences("ab", "ba") == []


def test_determinize_parity_by_hand():
    # two-state NFA for (aa)*: subset construction reaches exactly {0} and {1}
    nfa = Nfa(
        alphabet=A,
        state_count=2,
        initial=frozenset({0}),
        accepting=frozenset({0}),
        labeled_edges=frozenset({(0, "a", 1), (1, "a", 0)}),
        epsilon_edges=frozenset(),
    )
    dfa = determinize(nfa)
    assert dfa.state_count == 2
    assert dfa.accepts("aa") and not dfa.accepts("a")


def test_determinize_epsilon_language():
    dfa = determinize(parse_regex("()", A))
    assert dfa.state_count == 2  # accepting start plus sink
    assert dfa.accepts("") and not dfa.accepts("a")


def test_determinize_empty_language():
    nfa = Nfa(A, 1, frozenset({0}), frozenset(), frozenset(), frozenset())
    dfa = determinize(nfa)
    assert enumerate_words(dfa, 5) == []


def test_minimize_sizes():
    assert lang("(aa)*", A).state_count == 2
    assert lang("a+b+").state_count == 4  # start, a-seen, b-seen, sink
    assert lang("(a|b)*").state_count == 1


def test_minimize_idempotent_and_preserving():
    rng = random.Random(7)
    for _ in range(25):
        d = random_min_dfa(rng, AB, 5)
        m1 = minimize(d)
        m2 = minimize(m1)
        assert m2.state_count == m1.state_count
        assert equivalent(m1, d)[0]


def test_boolean_ops_examples():
    paa = lang("(aa)*", A)
    astar = lang("a*", A)
    assert enumerate_words(intersect(paa, complement(paa)), 6) == []
    assert equivalent(intersect(paa, astar), paa)[0]
    # words of a* \ (aa)* up to length 6, checked against raw parity
    got = enumerate_words(difference(astar, paa), 6)
    want = [w for w in all_words_upto(A, 6) if len(w) % 2 == 1]
    assert got == want


def test_boolean_ops_reject_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        intersect(lang("a*", A), lang("a*", AB))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**30), st.integers(0, 2**30))
def test_de_morgan_difference(seed1, seed2):
    rng1, rng2 = random.Random(seed1), random.Random(seed2)
    a = random_min_dfa(rng1, AB, 4)
    b = random_min_dfa(rng2, AB, 4)
    assert equivalent(difference(a, b), intersect(a, complement(b)))[0]


def test_union_matches_membership():
    rng = random.Random(3)
    for _ in range(10):
        a = random_min_dfa(rng, AB, 4)
        b = random_min_dfa(rng, AB, 4)
        u = union(a, b)
        for w in all_words_upto(AB, 4):
            assert u.accepts(w) == (a.accepts(w) or b.accepts(w))


def test_equivalent_examples():
    assert equivalent(lang("a*", A), lang("(aa)*", A)) == (False, "a")
    d = lang("a+b+")
    assert equivalent(d, minimize(determinize(parse_regex("a+b+", AB)))) == (True, None)


def test_witness_is_ll_least():
    rng = random.Random(11)
    for _ in range(30):
        a = random_min_dfa(rng, AB, 4)
        b = random_min_dfa(rng, AB, 4)
        equal, witness = equivalent(a, b)
        if equal:
            continue
        assert a.accepts(witness) != b.accepts(witness)
        for w in all_words_upto(AB, len(witness)):
            if a.accepts(w) != b.accepts(w):
                assert (len(w), w) >= (len(witness), witness) or w == witness
                break


def test_enumerate_words_examples():
    assert enumerate_words(lang("a+b+"), 3) == ["ab", "aab", "abb"]
    assert enumerate_words(lang("(a|b)*"), 0) == [""]
    assert enumerate_words(lang("(aa)*", A), 5) == ["", "aa", "aaaa"]


def test_json_round_trip_and_key_order():
    d = lang("(aa)*", A)
    text = automaton_to_json(d)
    doc = json.loads(text)
    assert list(doc.keys()) == ["alphabet", "states", "initial", "accepting", "edges", "epsilon"]
    back = automaton_from_json(text)
    assert equivalent(minimize(determinize(back)), d)[0]
    assert automaton_to_json(d) == text  # stable bytes


def test_json_golden_bytes():
    nfa = Nfa(
        alphabet=A,
        state_count=2,
        initial=frozenset({0}),
        accepting=frozenset({1}),
        labeled_edges=frozenset({(0, "a", 1)}),
        epsilon_edges=frozenset({(1, 0)}),
    )
    assert (
        automaton_to_json(nfa)
        == '{"alphabet":["a"],"states":2,"initial":[0],"accepting":[1],'
        '"edges":[[0,"a",1]],"epsilon":[[1,0]]}'
    )


def test_dot_output_mentions_all_parts():
    dot = automaton_to_dot(lang("(aa)*", A))
    assert dot.startswith("digraph")
    assert "doublecircle" in dot and 'label="a"' in dot


def test_dfa_run_and_accepts():
    d = lang("a+b+")
    assert d.accepts("aabb") and not d.accepts("ba") and not d.accepts("")
    s = d.run(d.initial, "aa")
    assert d.run(s, "b") in d.accepting
