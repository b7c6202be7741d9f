"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms wherever
they are used as a second route: regex membership goes through Python's re
module, syntactic congruence through raw context enumeration over DFA word
membership, and closure words through literal splicing iteration.
"""

from __future__ import annotations

import itertools
import random
import re

from splicekit import (
    Alphabet,
    ClassicRule,
    Dfa,
    PixtonRule,
    minimize,
)


def ll_sorted(alphabet: Alphabet, words) -> list[str]:
    return sorted(words, key=lambda w: (len(w), tuple(alphabet.index(c) for c in w)))


def all_words_upto(alphabet: Alphabet, max_len: int) -> list[str]:
    out = []
    for length in range(max_len + 1):
        for tup in itertools.product(alphabet.symbols, repeat=length):
            out.append("".join(tup))
    return out


def random_regex(
    rng: random.Random, symbols: str, depth: int, no_epsilon: bool = False
) -> tuple[str, str]:
    """(our dialect, python re dialect) for the same random language.

    Quantified subexpressions are kept non-nullable so the re-module oracle
    cannot hit catastrophic backtracking; the DFA side has no such limits.
    """
    if depth == 0 or rng.random() < 0.3:
        if not no_epsilon and rng.random() < 0.15:
            return "()", "()"
        ch = rng.choice(symbols)
        return ch, re.escape(ch)
    ops = ("cat", "alt", "plus") if no_epsilon else ("cat", "alt", "star", "plus")
    op = rng.choice(ops)
    if op in ("star", "plus"):
        left, pleft = random_regex(rng, symbols, depth - 1, no_epsilon=True)
        mark = "*" if op == "star" else "+"
        return f"({left}){mark}", f"({pleft}){mark}"
    left, pleft = random_regex(rng, symbols, depth - 1, no_epsilon)
    right, pright = random_regex(rng, symbols, depth - 1, no_epsilon)
    if op == "cat":
        return f"({left})({right})", f"({pleft})({pright})"
    return f"(({left})|({right}))", f"(({pleft})|({pright}))"


def random_min_dfa(rng: random.Random, alphabet: Alphabet, max_states: int) -> Dfa:
    """A random minimal complete DFA with at most max_states states."""
    n = rng.randint(1, max_states)
    transitions = tuple(
        tuple(rng.randrange(n) for _ in alphabet.symbols) for _ in range(n)
    )
    accepting = frozenset(s for s in range(n) if rng.random() < 0.5)
    return minimize(
        Dfa(
            alphabet=alphabet,
            state_count=n,
            initial=0,
            accepting=accepting,
            transitions=transitions,
        )
    )


def random_word(rng: random.Random, alphabet: Alphabet, max_len: int) -> str:
    return "".join(rng.choice(alphabet.symbols) for _ in range(rng.randint(0, max_len)))


def random_classic_rule(rng, alphabet, max_len) -> ClassicRule:
    return ClassicRule(*(random_word(rng, alphabet, max_len) for _ in range(4)))


def random_pixton_rule(rng, alphabet, max_len) -> PixtonRule:
    return PixtonRule(*(random_word(rng, alphabet, max_len) for _ in range(3)))


def congruence_classes_brute(
    lang: Dfa, words: list[str], context_len: int
) -> dict[str, int]:
    """Word -> class id under brute-force syntactic congruence.

    Two words are congruent when every context (x, y) with |x|, |y| up to
    context_len treats them alike.  For a minimal complete DFA with n states
    contexts of length n are exact: every state is reached by a word shorter
    than n and distinct states are separated by a word shorter than n.
    """
    contexts = all_words_upto(lang.alphabet, context_len)
    signatures: dict[tuple, int] = {}
    out: dict[str, int] = {}
    for w in words:
        sig = tuple(
            lang.accepts(x + w + y) for x in contexts for y in contexts
        )
        if sig not in signatures:
            signatures[sig] = len(signatures)
        out[w] = signatures[sig]
    return out
