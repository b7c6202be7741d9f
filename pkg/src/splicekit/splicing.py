"""Splicing rules, systems, single splicing steps, and the bounded oracle.

Two rule flavors are supported: the classic quadruple (u1,v1;u2,v2), which
cuts between u1/v1 and u2/v2 and recombines to x1 u1 v2 y2, and the triplet
form (u1,u2;v), which replaces everything from the left site onward in the
first word and up to the right site in the second word by the bridge v.
Every classic rule has an exact triplet counterpart (u1v1, u2v2; u1v2) that
performs the same splicings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .automata import (
    Alphabet,
    Dfa,
    Nfa,
    NfaBuilder,
    automaton_from_json,
    determinize,
    has_cycle,
    length_lex_key,
    minimize,
    occurrences,
    trim,
)
from .automata import automaton_to_json as _automaton_json
from .errors import InfiniteAxiomLanguageError

CLASSIC = "classic"
PIXTON = "pixton"


@dataclass(frozen=True)
class ClassicRule:
    """Quadruple rule; left site u1v1, right site u2v2."""

    u1: str
    v1: str
    u2: str
    v2: str

    @property
    def components(self) -> tuple[str, str, str, str]:
        return (self.u1, self.v1, self.u2, self.v2)

    @property
    def left_site(self) -> str:
        return self.u1 + self.v1

    @property
    def right_site(self) -> str:
        return self.u2 + self.v2

    def pixton_equivalent(self) -> "PixtonRule":
        """The triplet performing exactly the same splicings."""
        return PixtonRule(self.u1 + self.v1, self.u2 + self.v2, self.u1 + self.v2)


@dataclass(frozen=True)
class PixtonRule:
    """Triplet rule; sites u1/u2 and bridge v."""

    u1: str
    u2: str
    v: str

    @property
    def components(self) -> tuple[str, str, str]:
        return (self.u1, self.u2, self.v)


Rule = ClassicRule | PixtonRule


def splice_classic(w1: str, w2: str, r: ClassicRule) -> set[tuple[str, int]]:
    """All results of splicing w1 with w2, each with its splicing position.

    The position is the boundary between the retained prefix x1·u1 and the
    adopted suffix v2·y2 in the result.
    """
    out = set()
    left = r.left_site
    right = r.right_site
    for k1 in occurrences(w1, left):
        x1 = w1[:k1]
        for k2 in occurrences(w2, right):
            y2 = w2[k2 + len(right):]
            out.add((x1 + r.u1 + r.v2 + y2, k1 + len(r.u1)))
    return out


def splice_pixton(w1: str, w2: str, r: PixtonRule) -> set[str]:
    """All words x1·v·y2 over factorizations w1 = x1 u1 y1, w2 = x2 u2 y2."""
    out = set()
    for k1 in occurrences(w1, r.u1):
        x1 = w1[:k1]
        for k2 in occurrences(w2, r.u2):
            out.add(x1 + r.v + w2[k2 + len(r.u2):])
    return out


def splice_words(w1: str, w2: str, rule: Rule) -> set[str]:
    if isinstance(rule, ClassicRule):
        return {z for z, _pos in splice_classic(w1, w2, rule)}
    return splice_pixton(w1, w2, rule)


def sigma_step(words: set[str], rules) -> set[str]:
    """One application of the splicing operator: the union over all rules."""
    out: set[str] = set()
    pool = sorted(words)
    for rule in rules:
        for w1 in pool:
            for w2 in pool:
                out |= splice_words(w1, w2, rule)
    return out


@dataclass(frozen=True)
class SplicingSystem:
    """Axioms plus rules of one variant.

    Axioms are either an explicit word tuple or an automaton whose language
    must be finite (canonical systems keep the large-but-regular axiom sets
    symbolic).
    """

    variant: str
    alphabet: Alphabet
    axioms: tuple[str, ...] | Nfa | Dfa
    rules: tuple[Rule, ...]

    def __post_init__(self):
        if self.variant not in (CLASSIC, PIXTON):
            raise ValueError(f"unknown variant {self.variant!r}")
        want = ClassicRule if self.variant == CLASSIC else PixtonRule
        for rule in self.rules:
            if not isinstance(rule, want):
                raise ValueError(f"{self.variant} system holds a {type(rule).__name__}")
            for comp in rule.components:
                self.alphabet.check_word(comp)
        if isinstance(self.axioms, tuple):
            for w in self.axioms:
                self.alphabet.check_word(w)

    @property
    def symbolic_axioms(self) -> bool:
        return not isinstance(self.axioms, tuple)

    def axiom_nfa(self) -> Nfa:
        """Trimmed automaton for the axiom set; rejects infinite languages."""
        if isinstance(self.axioms, tuple):
            return _chains_nfa(self.alphabet, self.axioms)
        nfa = self.axioms.to_nfa() if isinstance(self.axioms, Dfa) else self.axioms
        trimmed = trim(nfa)
        if has_cycle(trimmed):
            raise InfiniteAxiomLanguageError("axiom automaton accepts an infinite language")
        return trimmed

    def axiom_words(self) -> tuple[str, ...]:
        """The axiom set as an ll-ordered word tuple (enumerated if symbolic)."""
        if isinstance(self.axioms, tuple):
            return tuple(sorted(set(self.axioms), key=length_lex_key(self.alphabet)))
        trimmed = self.axiom_nfa()
        dfa = minimize(determinize(trimmed))
        # A trimmed acyclic automaton accepts no word longer than its path count.
        from .automata import enumerate_words

        return tuple(enumerate_words(dfa, max(trimmed.state_count, 1)))


def _chains_nfa(alphabet: Alphabet, words: tuple[str, ...]) -> Nfa:
    """One disjoint chain per axiom word; deduplicated, ll-ordered."""
    builder = NfaBuilder(alphabet)
    initial, accepting = [], []
    for word in sorted(set(words), key=length_lex_key(alphabet)):
        state = builder.state()
        initial.append(state)
        for ch in word:
            nxt = builder.state()
            builder.edge(state, ch, nxt)
            state = nxt
        accepting.append(state)
    return builder.build(initial, accepting)


def longest_rule_component(rules) -> int:
    return max((len(c) for r in rules for c in r.components), default=0)


def default_cap_len(system: SplicingSystem, report_len: int) -> int:
    """Heuristic headroom for intermediate words in the bounded oracle."""
    longest_axiom = max((len(w) for w in system.axiom_words()), default=0)
    return report_len + 2 * (longest_axiom + longest_rule_component(system.rules))


def bounded_closure(
    system: SplicingSystem, report_len: int, cap_len: int | None = None
) -> set[str]:
    """Truncated fixpoint of the splicing operator, reported up to report_len.

    Words longer than cap_len are discarded each round, so the result is a
    sound under-approximation of the closure restricted to length
    <= report_len: every returned word is derivable, but derivations passing
    through words longer than cap_len are lost.  Test oracle, not a decision
    procedure.
    """
    if report_len < 0:
        raise ValueError("report_len must be non-negative")
    if cap_len is None:
        cap_len = default_cap_len(system, report_len)
    if cap_len < report_len:
        raise ValueError("cap_len must be at least report_len")
    current = {w for w in system.axiom_words() if len(w) <= cap_len}
    frontier = set(current)
    while frontier:
        # Pairs of older words were spliced in the round both became known,
        # so only pairs touching the frontier can contribute anything new.
        produced: set[str] = set()
        older = sorted(current - frontier)
        fresh_pool = sorted(frontier)
        for rule in system.rules:
            for w1 in fresh_pool:
                for w2 in fresh_pool:
                    produced |= splice_words(w1, w2, rule)
            for w1 in older:
                for w2 in fresh_pool:
                    produced |= splice_words(w1, w2, rule)
                    produced |= splice_words(w2, w1, rule)
        frontier = {z for z in produced if len(z) <= cap_len} - current
        current |= frontier
    return {w for w in current if len(w) <= report_len}


# -- rule/system text and JSON forms ------------------------------------------


def parse_rule(text: str, variant: str, alphabet: Alphabet) -> Rule:
    """CLI rule syntax: classic "u1,v1;u2,v2", triplet "u1,u2;v"."""
    halves = text.split(";")
    if len(halves) != 2:
        raise ValueError(f"rule {text!r} must contain exactly one ';'")
    if variant == CLASSIC:
        left, right = halves[0].split(","), halves[1].split(",")
        if len(left) != 2 or len(right) != 2:
            raise ValueError(f"classic rule {text!r} must be 'u1,v1;u2,v2'")
        rule: Rule = ClassicRule(left[0], left[1], right[0], right[1])
    elif variant == PIXTON:
        left = halves[0].split(",")
        if len(left) != 2 or "," in halves[1]:
            raise ValueError(f"pixton rule {text!r} must be 'u1,u2;v'")
        rule = PixtonRule(left[0], left[1], halves[1])
    else:
        raise ValueError(f"unknown variant {variant!r}")
    for comp in rule.components:
        alphabet.check_word(comp)
    return rule


def rule_to_text(rule: Rule) -> str:
    if isinstance(rule, ClassicRule):
        return f"{rule.u1},{rule.v1};{rule.u2},{rule.v2}"
    return f"{rule.u1},{rule.u2};{rule.v}"


def system_to_json(system: SplicingSystem) -> str:
    if isinstance(system.axioms, tuple):
        axioms = list(system.axiom_words())
    else:
        axioms = json.loads(_automaton_json(system.axioms))
    doc = {
        "variant": system.variant,
        "alphabet": list(system.alphabet.symbols),
        "axioms": axioms,
        "rules": [list(r.components) for r in system.rules],
    }
    return json.dumps(doc, separators=(",", ":"))


def system_from_json(text: str | dict) -> SplicingSystem:
    doc = json.loads(text) if isinstance(text, str) else text
    alphabet = Alphabet(tuple(doc["alphabet"]))
    variant = doc["variant"]
    raw_axioms = doc["axioms"]
    axioms: tuple[str, ...] | Nfa
    if isinstance(raw_axioms, dict):
        axioms = automaton_from_json(raw_axioms)
    else:
        axioms = tuple(raw_axioms)
    rules: list[Rule] = []
    for comps in doc["rules"]:
        if variant == CLASSIC:
            if len(comps) != 4:
                raise ValueError("classic rules serialize as 4-element arrays")
            rules.append(ClassicRule(*comps))
        else:
            if len(comps) != 3:
                raise ValueError("pixton rules serialize as 3-element arrays")
            rules.append(PixtonRule(*comps))
    return SplicingSystem(variant, alphabet, axioms, tuple(rules))
