"""Finite automaton for the language a splicing system generates.

The construction saturates a fixed state set with epsilon edges.  The base
automaton accepts exactly the axioms; for every rule a fresh labeled path is
appended that spells the word the rule inserts between the retained prefix
and the adopted suffix (the bridge v for a triplet rule, u1·v2 for a classic
rule, which is the exact triplet form of the quadruple).  A saturation round
recomputes, inside the current automaton,

  LeftPoints(s)  = reachable states from which the left-site word s can be
                   read on a path that stays co-reachable, and
  RightPoints(t) = co-reachable states at the end of a right-site read that
                   starts in a reachable state,

then adds epsilon edges LeftPoint -> left hub of s and right hub of t ->
RightPoint.  The hubs are shared per distinct site word and are wired to the
entries and exits of the rules carrying that site once, at construction;
they exist so that canonical systems with thousands of rules sharing a few
dozen site words need O(states x sites) saturation edges rather than
O(states x rules).

States are never added after construction, so the rounds hit a fixpoint; at
the fixpoint a word is accepted iff it lies in the closure of the axioms
under every rule: each new edge corresponds to genuine splicings of
already-accepted words, and every splicing of accepted words is realized by
edges the fixpoint must contain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import sparse

from .automata import Dfa, Nfa, determinize, minimize, tarjan_scc
from .splicing import ClassicRule, Rule, SplicingSystem


class AddedEdge(NamedTuple):
    """Provenance-tagged epsilon edge inserted by saturation.

    ``side`` is "in" for a point feeding the left hub of ``site`` and "out"
    for the right hub of ``site`` feeding a point.
    """

    src: int
    dst: int
    site: str
    side: str
    round: int


@dataclass(frozen=True)
class ClosureAutomaton:
    """Saturated automaton with bridge provenance.

    ``base`` holds the axiom part, the per-rule insert paths, the per-site
    hubs, and the static hub-to-entry / exit-to-hub wiring; the epsilon
    edges discovered by saturation live in ``added``, so traces and DOT
    output can attribute every discovered edge to its site word (and through
    the hub wiring to the rules that carry it).
    """

    base: Nfa
    rule_entries: tuple[int, ...]
    rule_exits: tuple[int, ...]
    left_hubs: tuple[tuple[str, int], ...]
    right_hubs: tuple[tuple[str, int], ...]
    added: tuple[AddedEdge, ...]
    rounds: int

    @property
    def added_epsilon(self) -> frozenset[tuple[int, int]]:
        return frozenset((e.src, e.dst) for e in self.added)

    def nfa(self) -> Nfa:
        return Nfa(
            alphabet=self.base.alphabet,
            state_count=self.base.state_count,
            initial=self.base.initial,
            accepting=self.base.accepting,
            labeled_edges=self.base.labeled_edges,
            epsilon_edges=self.base.epsilon_edges | self.added_epsilon,
        )


def insert_word(rule: Rule) -> str:
    """The word a rule writes between retained prefix and adopted suffix."""
    if isinstance(rule, ClassicRule):
        return rule.u1 + rule.v2
    return rule.v


def rule_sites(rule: Rule) -> tuple[str, str]:
    if isinstance(rule, ClassicRule):
        return rule.left_site, rule.right_site
    return rule.u1, rule.u2


class _Saturator:
    """Sparse boolean adjacency working set for the saturation rounds.

    State sets are numpy bool vectors; one-letter moves and epsilon sweeps
    are sparse matrix-vector products, which keeps canonical systems with
    thousands of rules tractable.  Epsilon edges accumulate in a pair list
    and the epsilon matrices are rebuilt once per round (edges are merged at
    round end, so the matrices are constant within a round).
    """

    def __init__(self, nfa: Nfa, alphabet_symbols: tuple[str, ...]):
        n = nfa.state_count
        self.n = n
        by_sym: dict[str, tuple[list[int], list[int]]] = {
            sym: ([], []) for sym in alphabet_symbols
        }
        for p, sym, q in nfa.labeled_edges:
            rows, cols = by_sym[sym]
            rows.append(q)
            cols.append(p)
        self.fwd = {}
        self.bwd = {}
        label_any = sparse.csr_matrix((n, n), dtype=np.int32)
        for sym in alphabet_symbols:
            rows, cols = by_sym[sym]
            mat = sparse.csr_matrix(
                (np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n)
            )
            self.fwd[sym] = mat
            self.bwd[sym] = mat.T.tocsr()
            label_any = label_any + mat
        self._label_any = label_any
        self.eps_pairs: list[tuple[int, int]] = list(nfa.epsilon_edges)
        self.init_vec = np.zeros(n, dtype=bool)
        self.acc_vec = np.zeros(n, dtype=bool)
        for s in nfa.initial:
            self.init_vec[s] = True
        for s in nfa.accepting:
            self.acc_vec[s] = True
        self._eps_fwd = None
        self._eps_bwd = None
        self._any_fwd = None
        self._any_bwd = None

    def add_eps(self, p: int, q: int) -> None:
        self.eps_pairs.append((p, q))

    def refresh(self) -> None:
        """Rebuild the epsilon-dependent matrices; call at round start."""
        n = self.n
        if self.eps_pairs:
            rows = [q for _p, q in self.eps_pairs]
            cols = [p for p, _q in self.eps_pairs]
            eps = sparse.csr_matrix(
                (np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n)
            )
        else:
            eps = sparse.csr_matrix((n, n), dtype=np.int32)
        self._eps_fwd = eps
        self._eps_bwd = eps.T.tocsr()
        self._any_fwd = self._label_any + eps
        self._any_bwd = self._any_fwd.T.tocsr()

    @staticmethod
    def _sweep(vec, mat):
        closed = vec.copy()
        frontier = vec
        while frontier.any():
            step = (mat @ frontier.astype(np.int32)) != 0
            frontier = step & ~closed
            closed |= frontier
        return closed

    def reachable(self):
        return self._sweep(self.init_vec, self._any_fwd)

    def coreachable(self):
        return self._sweep(self.acc_vec, self._any_bwd)

    def post_word(self, vec, word: str, assume_closed: bool = False):
        """States reachable by reading word (epsilon moves interleaved).

        ``assume_closed`` skips the leading epsilon sweep when the input is
        already closed under forward epsilon edges, as the reachable set is.
        """
        cur = vec if assume_closed else self._sweep(vec, self._eps_fwd)
        for ch in word:
            moved = (self.fwd[ch] @ cur.astype(np.int32)) != 0
            cur = self._sweep(moved, self._eps_fwd)
        return cur

    def pre_word(self, vec, word: str, assume_closed: bool = False):
        cur = vec if assume_closed else self._sweep(vec, self._eps_bwd)
        for ch in reversed(word):
            moved = (self.bwd[ch] @ cur.astype(np.int32)) != 0
            cur = self._sweep(moved, self._eps_bwd)
        return cur


def build_closure(system: SplicingSystem) -> ClosureAutomaton:
    """Saturation fixpoint; the accepted language is the generated closure."""
    base_axioms = system.axiom_nfa()
    count = base_axioms.state_count
    labeled = set(base_axioms.labeled_edges)
    static_eps = set(base_axioms.epsilon_edges)

    entries, exits = [], []
    for rule in system.rules:
        word = insert_word(rule)
        entry = count
        count += 1
        state = entry
        for ch in word:
            nxt = count
            count += 1
            labeled.add((state, ch, nxt))
            state = nxt
        entries.append(entry)
        exits.append(state)

    left_hub: dict[str, int] = {}
    right_hub: dict[str, int] = {}
    for rid, rule in enumerate(system.rules):
        left_site, right_site = rule_sites(rule)
        if left_site not in left_hub:
            left_hub[left_site] = count
            count += 1
        if right_site not in right_hub:
            right_hub[right_site] = count
            count += 1
        static_eps.add((left_hub[left_site], entries[rid]))
        static_eps.add((exits[rid], right_hub[right_site]))

    base = Nfa(
        alphabet=system.alphabet,
        state_count=count,
        initial=base_axioms.initial,
        accepting=base_axioms.accepting,
        labeled_edges=frozenset(labeled),
        epsilon_edges=frozenset(static_eps),
    )

    sat = _Saturator(base, system.alphabet.symbols)
    left_seen = {site: np.zeros(count, dtype=bool) for site in left_hub}
    right_seen = {site: np.zeros(count, dtype=bool) for site in right_hub}
    added: list[AddedEdge] = []
    rounds = 0
    while True:
        sat.refresh()
        reach = sat.reachable()
        coreach = sat.coreachable()
        new_edges: list[AddedEdge] = []
        for site, hub in left_hub.items():
            points = reach & sat.pre_word(coreach, site, assume_closed=True)
            for p in np.nonzero(points & ~left_seen[site])[0]:
                new_edges.append(AddedEdge(int(p), hub, site, "in", rounds + 1))
            left_seen[site] |= points
        for site, hub in right_hub.items():
            points = coreach & sat.post_word(reach, site, assume_closed=True)
            for q in np.nonzero(points & ~right_seen[site])[0]:
                new_edges.append(AddedEdge(hub, int(q), site, "out", rounds + 1))
            right_seen[site] |= points
        if not new_edges:
            break
        rounds += 1
        if rounds > count * count:
            raise AssertionError("saturation failed to converge within |states|^2 rounds")
        for edge in new_edges:
            sat.add_eps(edge.src, edge.dst)
        added.extend(new_edges)
    return ClosureAutomaton(
        base=base,
        rule_entries=tuple(entries),
        rule_exits=tuple(exits),
        left_hubs=tuple(sorted(left_hub.items())),
        right_hubs=tuple(sorted(right_hub.items())),
        added=tuple(added),
        rounds=rounds,
    )


def _epsilon_scc_quotient(nfa: Nfa) -> Nfa:
    """Merge states that are mutually epsilon-reachable (language-preserving).

    Saturated automata are epsilon-dense; collapsing the epsilon SCCs keeps
    determinization tractable.
    """
    adj: dict[int, list[int]] = {}
    for p, q in nfa.epsilon_edges:
        adj.setdefault(p, []).append(q)
    ncomp, comp = tarjan_scc(nfa.state_count, adj)
    return Nfa(
        alphabet=nfa.alphabet,
        state_count=ncomp,
        initial=frozenset(comp[s] for s in nfa.initial),
        accepting=frozenset(comp[s] for s in nfa.accepting),
        labeled_edges=frozenset((comp[p], sym, comp[q]) for p, sym, q in nfa.labeled_edges),
        epsilon_edges=frozenset(
            (comp[p], comp[q]) for p, q in nfa.epsilon_edges if comp[p] != comp[q]
        ),
    )


def closure_dfa(closure: ClosureAutomaton) -> Dfa:
    """Minimal complete DFA for the language an already-built closure accepts."""
    return minimize(determinize(_epsilon_scc_quotient(closure.nfa())))


def closure_language(system: SplicingSystem) -> Dfa:
    """Minimal complete DFA for the language the system generates."""
    return closure_dfa(build_closure(system))
