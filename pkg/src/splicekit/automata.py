"""Regular-language core: alphabets, NFAs, DFAs, and the standard algorithms.

All types are immutable after construction and safe to share across threads;
every operation is a pure function returning fresh values.  DFAs are always
complete (an explicit sink is materialized where needed) and carry a
canonical state numbering (BFS from the initial state, symbols taken in
alphabet order), so serialized output is stable byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .errors import AlphabetMismatchError, UnknownSymbolError


@dataclass(frozen=True)
class Alphabet:
    """An ordered, finite sequence of distinct single characters.

    The order is total and fixed; it supplies the lexicographic component of
    the length-lexicographic order on words.
    """

    symbols: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not all(isinstance(s, str) and len(s) == 1 for s in self.symbols):
            raise ValueError("alphabet symbols must be single characters")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbolError(f"symbol {symbol!r} not in alphabet") from None

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def check_word(self, word: str) -> str:
        for ch in word:
            if ch not in self._index:
                raise UnknownSymbolError(f"symbol {ch!r} not in alphabet")
        return word


def length_lex_key(alphabet: Alphabet) -> Callable[[str], tuple]:
    """Sort key realizing the length-lexicographic order for this alphabet."""

    def key(word: str) -> tuple:
        return (len(word), tuple(alphabet.index(ch) for ch in word))

    return key


def length_lex_cmp(alphabet: Alphabet, u: str, v: str) -> int:
    """Compare two words length-lexicographically: -1, 0, or +1.

    Shorter words come first; words of equal length are ordered by the
    alphabet order of their first differing character.
    """
    ku, kv = length_lex_key(alphabet)(u), length_lex_key(alphabet)(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def words_shorter_than(alphabet: Alphabet, bound: int) -> Iterator[str]:
    """All words of length < bound, in length-lexicographic order."""
    if bound <= 0:
        return
    level = [""]
    for length in range(bound):
        yield from level
        if length + 1 < bound:
            level = [w + s for w in level for s in alphabet.symbols]


def count_words_shorter_than(alphabet_size: int, bound: int) -> int:
    """|Sigma^{<bound}| computed exactly."""
    if bound <= 0:
        return 0
    if alphabet_size <= 1:
        return bound
    return (alphabet_size**bound - 1) // (alphabet_size - 1)


def occurrences(word: str, factor: str) -> list[int]:
    """Start positions of every (possibly overlapping) occurrence of factor.

    The empty factor occurs at every position, including both ends.
    """
    if factor == "":
        return list(range(len(word) + 1))
    out = []
    start = word.find(factor)
    while start != -1:
        out.append(start)
        start = word.find(factor, start + 1)
    return out


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton with epsilon edges.

    The universal carrier for regular languages in this package.  States are
    0 .. state_count-1; edges are (source, symbol, target) triples and
    epsilon edges are (source, target) pairs.
    """

    alphabet: Alphabet
    state_count: int
    initial: frozenset[int]
    accepting: frozenset[int]
    labeled_edges: frozenset[tuple[int, str, int]]
    epsilon_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.state_count
        if n < 0:
            raise ValueError("state_count must be non-negative")
        for group in (self.initial, self.accepting):
            if any(not (0 <= s < n) for s in group):
                raise ValueError("state id out of range")
        for p, sym, q in self.labeled_edges:
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError("edge state id out of range")
            self.alphabet.index(sym)
        for p, q in self.epsilon_edges:
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError("epsilon edge state id out of range")

    def accepts(self, word: str) -> bool:
        eps = _eps_adjacency(self)
        current = _eps_close(self.initial, eps)
        step: dict[tuple[int, str], set[int]] = {}
        for p, sym, q in self.labeled_edges:
            step.setdefault((p, sym), set()).add(q)
        for ch in word:
            self.alphabet.index(ch)
            nxt: set[int] = set()
            for s in current:
                nxt |= step.get((s, ch), set())
            current = _eps_close(nxt, eps)
        return bool(current & self.accepting)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    ``transitions[state][symbol_index]`` is total; complement is then just a
    flip of the accepting set.
    """

    alphabet: Alphabet
    state_count: int
    initial: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.state_count
        if n <= 0:
            raise ValueError("a complete DFA needs at least one state")
        if not (0 <= self.initial < n):
            raise ValueError("initial state out of range")
        if any(not (0 <= s < n) for s in self.accepting):
            raise ValueError("accepting state out of range")
        if len(self.transitions) != n:
            raise ValueError("transition table must have one row per state")
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row must cover the whole alphabet")
            if any(not (0 <= t < n) for t in row):
                raise ValueError("transition target out of range")

    def run(self, state: int, word: str) -> int:
        for ch in word:
            state = self.transitions[state][self.alphabet.index(ch)]
        return state

    def accepts(self, word: str) -> bool:
        return self.run(self.initial, word) in self.accepting

    def to_nfa(self) -> Nfa:
        edges = frozenset(
            (p, sym, self.transitions[p][i])
            for p in range(self.state_count)
            for i, sym in enumerate(self.alphabet.symbols)
        )
        return Nfa(
            alphabet=self.alphabet,
            state_count=self.state_count,
            initial=frozenset({self.initial}),
            accepting=self.accepting,
            labeled_edges=edges,
            epsilon_edges=frozenset(),
        )


class NfaBuilder:
    """Mutable scratch structure for assembling an Nfa."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.count = 0
        self.labeled: set[tuple[int, str, int]] = set()
        self.eps: set[tuple[int, int]] = set()

    def state(self) -> int:
        s = self.count
        self.count += 1
        return s

    def edge(self, p: int, sym: str, q: int) -> None:
        self.labeled.add((p, sym, q))

    def eps_edge(self, p: int, q: int) -> None:
        self.eps.add((p, q))

    def build(self, initial: Iterable[int], accepting: Iterable[int]) -> Nfa:
        return Nfa(
            alphabet=self.alphabet,
            state_count=self.count,
            initial=frozenset(initial),
            accepting=frozenset(accepting),
            labeled_edges=frozenset(self.labeled),
            epsilon_edges=frozenset(self.eps),
        )


# -- internal set/mask plumbing ---------------------------------------------


def _eps_adjacency(nfa: Nfa) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for p, q in nfa.epsilon_edges:
        adj.setdefault(p, set()).add(q)
    return adj


def _eps_close(states: Iterable[int], adj: dict[int, set[int]]) -> frozenset[int]:
    closed = set(states)
    stack = list(closed)
    while stack:
        s = stack.pop()
        for t in adj.get(s, ()):
            if t not in closed:
                closed.add(t)
                stack.append(t)
    return frozenset(closed)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_tables(nfa: Nfa) -> tuple[dict[str, list[int]], list[int]]:
    """Per-symbol and epsilon successor masks, one int per state."""
    n = nfa.state_count
    fwd = {sym: [0] * n for sym in nfa.alphabet.symbols}
    eps = [0] * n
    for p, sym, q in nfa.labeled_edges:
        fwd[sym][p] |= 1 << q
    for p, q in nfa.epsilon_edges:
        eps[p] |= 1 << q
    return fwd, eps


def tarjan_scc(state_count: int, adj: dict[int, list[int]]) -> tuple[int, list[int]]:
    """Strongly connected components, iteratively.

    Returns (component count, state -> component id).  Components are
    numbered in emission order, which is reverse topological order of the
    condensation: a component only points at lower-numbered ones.
    """
    index = [0] * state_count
    low = [0] * state_count
    on_stack = [False] * state_count
    comp = [-1] * state_count
    counter = 1
    ncomp = 0
    stack: list[int] = []
    for root in range(state_count):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            succs = adj.get(v, [])
            while pi < len(succs):
                w = succs[pi]
                pi += 1
                if index[w] == 0:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return ncomp, comp


def _all_epsilon_closures(n: int, eps: list[int]) -> list[int]:
    """Epsilon closure mask of every state, via the condensation DAG."""
    adj = {s: list(_bits(eps[s])) for s in range(n) if eps[s]}
    ncomp, comp = tarjan_scc(n, adj)
    members = [0] * ncomp
    for s in range(n):
        members[comp[s]] |= 1 << s
    comp_succs: list[set[int]] = [set() for _ in range(ncomp)]
    for s in range(n):
        for t in adj.get(s, ()):
            if comp[t] != comp[s]:
                comp_succs[comp[s]].add(comp[t])
    closure = [0] * ncomp
    for c in range(ncomp):  # successors carry smaller ids, already done
        acc = members[c]
        for d in comp_succs[c]:
            acc |= closure[d]
        closure[c] = acc
    return [closure[comp[s]] for s in range(n)]


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction.  The result is complete and BFS-numbered."""
    fwd, eps = _mask_tables(nfa)
    n = nfa.state_count
    acc_mask = 0
    for s in nfa.accepting:
        acc_mask |= 1 << s
    # Epsilon closure of every single state, reused for move steps.
    eclose = _all_epsilon_closures(n, eps)
    estep = {
        sym: [_union_closures(fwd[sym][s], eclose) for s in range(n)]
        for sym in nfa.alphabet.symbols
    }

    start = 0
    for s in nfa.initial:
        start |= eclose[s]
    ids: dict[int, int] = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for sym in nfa.alphabet.symbols:
            target = 0
            table = estep[sym]
            for s in _bits(subset):
                target |= table[s]
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        rows.append(row)
        i += 1
    accepting = frozenset(i for i, subset in enumerate(order) if subset & acc_mask)
    return Dfa(
        alphabet=nfa.alphabet,
        state_count=len(order),
        initial=0,
        accepting=accepting,
        transitions=tuple(tuple(row) for row in rows),
    )


def _union_closures(mask: int, eclose: list[int]) -> int:
    out = 0
    for s in _bits(mask):
        out |= eclose[s]
    return out


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA, canonically numbered (BFS, alphabet order)."""
    n = dfa.state_count
    # Restrict to reachable states first.
    reach = [dfa.initial]
    seen = {dfa.initial}
    for s in reach:
        for t in dfa.transitions[s]:
            if t not in seen:
                seen.add(t)
                reach.append(t)
    states = reach
    cls = {s: (1 if s in dfa.accepting else 0) for s in states}
    while True:
        sigs: dict[tuple, int] = {}
        new_cls = {}
        for s in states:
            sig = (cls[s],) + tuple(
                cls[dfa.transitions[s][i]] for i in range(len(dfa.alphabet))
            )
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new_cls[s] = sigs[sig]
        if len(sigs) == len(set(cls.values())):
            cls = new_cls
            break
        cls = new_cls
    # Canonical renumbering by BFS from the initial class.
    rep_of_class: dict[int, int] = {}
    for s in states:
        rep_of_class.setdefault(cls[s], s)
    numbering = {cls[dfa.initial]: 0}
    order = [cls[dfa.initial]]
    for c in order:
        rep = rep_of_class[c]
        for i in range(len(dfa.alphabet)):
            tc = cls[dfa.transitions[rep][i]]
            if tc not in numbering:
                numbering[tc] = len(order)
                order.append(tc)
    rows = []
    for c in order:
        rep = rep_of_class[c]
        rows.append(
            tuple(numbering[cls[dfa.transitions[rep][i]]] for i in range(len(dfa.alphabet)))
        )
    accepting = frozenset(
        numbering[c] for c in order if rep_of_class[c] in dfa.accepting
    )
    return Dfa(
        alphabet=dfa.alphabet,
        state_count=len(order),
        initial=0,
        accepting=accepting,
        transitions=tuple(rows),
    )


def _require_same_alphabet(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("operands use different alphabets")


def complement(d: Dfa) -> Dfa:
    return Dfa(
        alphabet=d.alphabet,
        state_count=d.state_count,
        initial=d.initial,
        accepting=frozenset(range(d.state_count)) - d.accepting,
        transitions=d.transitions,
    )


def _product(a: Dfa, b: Dfa, keep: Callable[[bool, bool], bool]) -> Dfa:
    _require_same_alphabet(a, b)
    start = (a.initial, b.initial)
    ids = {start: 0}
    order = [start]
    rows: list[tuple[int, ...]] = []
    for pa, pb in order:
        row = []
        for i in range(len(a.alphabet)):
            t = (a.transitions[pa][i], b.transitions[pb][i])
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
    accepting = frozenset(
        ids[(pa, pb)]
        for pa, pb in order
        if keep(pa in a.accepting, pb in b.accepting)
    )
    return Dfa(
        alphabet=a.alphabet,
        state_count=len(order),
        initial=0,
        accepting=accepting,
        transitions=tuple(rows),
    )


def intersect(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and y)


def union(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x or y)


def difference(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and not y)


def _least_product_witness(
    a: Dfa, b: Dfa, pred: Callable[[bool, bool], bool]
) -> str | None:
    """Length-lexicographically least word whose pair of verdicts satisfies pred.

    BFS over the product automaton, expanding symbols in alphabet order, finds
    each product state by its least word; the first state satisfying pred
    therefore yields the least witness overall.
    """
    _require_same_alphabet(a, b)
    start = (a.initial, b.initial)
    if pred(a.initial in a.accepting, b.initial in b.accepting):
        return ""
    parent: dict[tuple[int, int], tuple[tuple[int, int], str]] = {}
    seen = {start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        pa, pb = queue[qi]
        qi += 1
        for i, sym in enumerate(a.alphabet.symbols):
            t = (a.transitions[pa][i], b.transitions[pb][i])
            if t in seen:
                continue
            seen.add(t)
            parent[t] = ((pa, pb), sym)
            if pred(t[0] in a.accepting, t[1] in b.accepting):
                out = []
                cur = t
                while cur != start:
                    cur, sym2 = parent[cur]
                    out.append(sym2)
                return "".join(reversed(out))
            queue.append(t)
    return None


def equivalent(a: Dfa, b: Dfa) -> tuple[bool, str | None]:
    """Language equality with the least distinguishing word as witness."""
    witness = _least_product_witness(a, b, lambda x, y: x != y)
    return (witness is None, witness)


def difference_witness(a: Dfa, b: Dfa) -> str | None:
    """Least word in L(a) \\ L(b), or None if L(a) is a subset of L(b)."""
    return _least_product_witness(a, b, lambda x, y: x and not y)


def enumerate_words(d: Dfa, max_len: int) -> list[str]:
    """Exactly the accepted words of length <= max_len, in ll-order."""
    if max_len < 0:
        return []
    # Prune states that cannot reach acceptance; keeps the frontier equal to
    # the set of viable prefixes.
    back: dict[int, set[int]] = {}
    for s in range(d.state_count):
        for t in d.transitions[s]:
            back.setdefault(t, set()).add(s)
    alive = set(d.accepting)
    stack = list(alive)
    while stack:
        s = stack.pop()
        for p in back.get(s, ()):
            if p not in alive:
                alive.add(p)
                stack.append(p)
    out: list[str] = []
    level: list[tuple[str, int]] = []
    if d.initial in alive:
        level = [("", d.initial)]
    for length in range(max_len + 1):
        for word, s in level:
            if s in d.accepting:
                out.append(word)
        if length == max_len:
            break
        level = [
            (word + sym, t)
            for word, s in level
            for i, sym in enumerate(d.alphabet.symbols)
            if (t := d.transitions[s][i]) in alive
        ]
    return out


def trim(nfa: Nfa) -> Nfa:
    """Restrict to states both reachable and co-reachable, renumbered densely."""
    fwd: dict[int, set[int]] = {}
    bwd: dict[int, set[int]] = {}
    for p, _sym, q in nfa.labeled_edges:
        fwd.setdefault(p, set()).add(q)
        bwd.setdefault(q, set()).add(p)
    for p, q in nfa.epsilon_edges:
        fwd.setdefault(p, set()).add(q)
        bwd.setdefault(q, set()).add(p)

    def sweep(start: Iterable[int], adj: dict[int, set[int]]) -> set[int]:
        seen = set(start)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in adj.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    keep = sweep(nfa.initial, fwd) & sweep(nfa.accepting, bwd)
    renum = {s: i for i, s in enumerate(sorted(keep))}
    return Nfa(
        alphabet=nfa.alphabet,
        state_count=len(renum),
        initial=frozenset(renum[s] for s in nfa.initial if s in keep),
        accepting=frozenset(renum[s] for s in nfa.accepting if s in keep),
        labeled_edges=frozenset(
            (renum[p], sym, renum[q])
            for p, sym, q in nfa.labeled_edges
            if p in keep and q in keep
        ),
        epsilon_edges=frozenset(
            (renum[p], renum[q])
            for p, q in nfa.epsilon_edges
            if p in keep and q in keep
        ),
    )


def has_cycle(nfa: Nfa) -> bool:
    """True when the edge relation (labels and epsilons together) has a cycle."""
    adj: dict[int, list[int]] = {}
    for p, _sym, q in nfa.labeled_edges:
        adj.setdefault(p, []).append(q)
    for p, q in nfa.epsilon_edges:
        adj.setdefault(p, []).append(q)
    color = [0] * nfa.state_count  # 0 new, 1 on stack, 2 done
    for root in range(nfa.state_count):
        if color[root]:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        color[root] = 1
        while stack:
            s, i = stack[-1]
            succs = adj.get(s, [])
            if i < len(succs):
                stack[-1] = (s, i + 1)
                t = succs[i]
                if color[t] == 1:
                    return True
                if color[t] == 0:
                    color[t] = 1
                    stack.append((t, 0))
            else:
                color[s] = 2
                stack.pop()
    return False


# -- serialization -----------------------------------------------------------


def automaton_to_json(a: Nfa | Dfa) -> str:
    """Automaton JSON, bit-exact: fixed key order, edges sorted as triples."""
    nfa = a.to_nfa() if isinstance(a, Dfa) else a
    doc = {
        "alphabet": list(nfa.alphabet.symbols),
        "states": nfa.state_count,
        "initial": sorted(nfa.initial),
        "accepting": sorted(nfa.accepting),
        "edges": sorted([p, sym, q] for p, sym, q in nfa.labeled_edges),
        "epsilon": sorted([p, q] for p, q in nfa.epsilon_edges),
    }
    return json.dumps(doc, separators=(",", ":"))


def automaton_from_json(text: str | dict) -> Nfa:
    doc = json.loads(text) if isinstance(text, str) else text
    alphabet = Alphabet(tuple(doc["alphabet"]))
    return Nfa(
        alphabet=alphabet,
        state_count=int(doc["states"]),
        initial=frozenset(int(s) for s in doc["initial"]),
        accepting=frozenset(int(s) for s in doc["accepting"]),
        labeled_edges=frozenset((int(p), sym, int(q)) for p, sym, q in doc["edges"]),
        epsilon_edges=frozenset((int(p), int(q)) for p, q in doc.get("epsilon", [])),
    )


def automaton_to_dot(
    a: Nfa | Dfa,
    epsilon_colors: dict[tuple[int, int], str] | None = None,
) -> str:
    """GraphViz rendering; epsilon edges may carry per-edge colors."""
    nfa = a.to_nfa() if isinstance(a, Dfa) else a
    lines = ["digraph automaton {", "  rankdir=LR;", '  node [shape=circle];']
    for s in sorted(nfa.accepting):
        lines.append(f"  {s} [shape=doublecircle];")
    for i, s in enumerate(sorted(nfa.initial)):
        lines.append(f"  __start{i} [shape=point];")
        lines.append(f"  __start{i} -> {s};")
    for p, sym, q in sorted(nfa.labeled_edges):
        lines.append(f'  {p} -> {q} [label="{sym}"];')
    for p, q in sorted(nfa.epsilon_edges):
        color = (epsilon_colors or {}).get((p, q))
        attr = f', color="{color}"' if color else ""
        lines.append(f'  {p} -> {q} [label="ε", style=dashed{attr}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
