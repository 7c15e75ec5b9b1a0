"""Complete deterministic automata and the classical constructions on them.

Every :class:`Dfa` is complete: the transition table has an entry for each
(state, symbol) pair, with an explicit dead state where needed.  Partiality
lives only in the preaction layer.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import AlphabetError, SchemaError
from .words import (
    Alphabet, Concat, EmptySet, Epsilon, RegularExpr, Star, Sym, Union, Word,
    parse_regex,
)


@dataclass(frozen=True, eq=False)
class Dfa:
    alphabet: Alphabet
    table: np.ndarray
    initial: int
    accepting: np.ndarray
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int32, copy=True)
        accepting = np.array(self.accepting, dtype=bool, copy=True)
        n = table.shape[0]
        if table.ndim != 2 or table.shape[1] != len(self.alphabet):
            raise ValueError(f"table must have shape (states, {len(self.alphabet)})")
        if n == 0:
            raise ValueError("a complete automaton needs at least one state")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("transition target out of range")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        if accepting.shape != (n,):
            raise ValueError("accepting mask must have one entry per state")
        if self.names is not None:
            if len(self.names) != n or len(set(self.names)) != n:
                raise ValueError("state names must be distinct, one per state")
            object.__setattr__(self, "names", tuple(self.names))
        table.setflags(write=False)
        accepting.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "accepting", accepting)

    @property
    def n_states(self) -> int:
        return self.table.shape[0]

    @property
    def state_names(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        return tuple(f"q{i}" for i in range(self.n_states))

    def state_index(self, name: str) -> int:
        try:
            return self.state_names.index(name)
        except ValueError:
            raise SchemaError(f"unknown state {name!r}") from None

    def run(self, state: int, word: Word) -> int:
        pos = self.alphabet.position
        for ch in word:
            state = self.table[state, pos(ch)]
        return int(state)

    def run_many(self, words: Sequence[Word], start: int | None = None) -> np.ndarray:
        codes, lengths = self.alphabet.encode(words)
        s = self.initial if start is None else start
        starts = np.full(len(words), s, dtype=np.int32)
        return _kernels.run_batch(self.table, starts, codes, lengths)

    def accepts(self, word: Word) -> bool:
        return bool(self.accepting[self.run(self.initial, self.alphabet.check(word))])

    def accepts_many(self, words: Sequence[Word]) -> np.ndarray:
        return self.accepting[self.run_many(words)]

    def language_upto(self, n: int) -> list[Word]:
        words = self.alphabet.words_upto(n)
        mask = self.accepts_many(words)
        return [w for w, ok in zip(words, mask) if ok]

    def with_initial(self, initial: int) -> "Dfa":
        return Dfa(self.alphabet, self.table, initial, self.accepting, self.names)

    def with_accepting(self, accepting: Iterable[int]) -> "Dfa":
        mask = np.zeros(self.n_states, dtype=bool)
        mask[list(accepting)] = True
        return Dfa(self.alphabet, self.table, self.initial, mask, self.names)

    def __repr__(self):
        return (f"Dfa(alphabet={str(self.alphabet)!r}, states={self.n_states}, "
                f"initial={self.initial}, accepting={np.flatnonzero(self.accepting).tolist()})")


def member(dfa: Dfa, word: Word) -> bool:
    return dfa.accepts(word)


# -- nondeterministic automata ---------------------------------------------------

class Nfa:
    """Automaton with ε-moves, used only as a compilation target."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.eps: list[set[int]] = []
        self.delta: list[dict[int, set[int]]] = []
        self.initial: set[int] = set()
        self.accepting: set[int] = set()

    def add_state(self) -> int:
        self.eps.append(set())
        self.delta.append({})
        return len(self.eps) - 1

    def add_edge(self, src: int, symbol: int | None, dst: int):
        if symbol is None:
            self.eps[src].add(dst)
        else:
            self.delta[src].setdefault(symbol, set()).add(dst)

    def embed(self, dfa: Dfa) -> tuple[int, list[int]]:
        """Copy ``dfa`` in; return its initial state and accepting states."""
        base = len(self.eps)
        for _ in range(dfa.n_states):
            self.add_state()
        for s in range(dfa.n_states):
            for a in range(len(self.alphabet)):
                self.add_edge(base + s, a, base + int(dfa.table[s, a]))
        return base + dfa.initial, [base + int(s) for s in np.flatnonzero(dfa.accepting)]

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.eps[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def determinize(self) -> Dfa:
        k = len(self.alphabet)
        start = self.closure(self.initial)
        index = {start: 0}
        order = [start]
        rows = []
        queue = deque([start])
        while queue:
            current = queue.popleft()
            row = []
            for a in range(k):
                step = set()
                for s in current:
                    step |= self.delta[s].get(a, set())
                target = self.closure(step)
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)
                row.append(index[target])
            rows.append(row)
        accepting = [bool(subset & self.accepting) for subset in order]
        return Dfa(self.alphabet, np.array(rows, dtype=np.int32), 0, np.array(accepting))


def _thompson(nfa: Nfa, expr: RegularExpr) -> tuple[int, int]:
    start, end = nfa.add_state(), nfa.add_state()
    if isinstance(expr, Sym):
        nfa.add_edge(start, nfa.alphabet.position(expr.symbol), end)
    elif isinstance(expr, Epsilon):
        nfa.add_edge(start, None, end)
    elif isinstance(expr, EmptySet):
        pass
    elif isinstance(expr, Concat):
        s1, e1 = _thompson(nfa, expr.left)
        s2, e2 = _thompson(nfa, expr.right)
        nfa.add_edge(start, None, s1)
        nfa.add_edge(e1, None, s2)
        nfa.add_edge(e2, None, end)
    elif isinstance(expr, Union):
        for part in (expr.left, expr.right):
            s, e = _thompson(nfa, part)
            nfa.add_edge(start, None, s)
            nfa.add_edge(e, None, end)
    elif isinstance(expr, Star):
        s, e = _thompson(nfa, expr.inner)
        nfa.add_edge(start, None, s)
        nfa.add_edge(start, None, end)
        nfa.add_edge(e, None, s)
        nfa.add_edge(e, None, end)
    else:
        raise TypeError(f"not a regular expression: {expr!r}")
    return start, end


def compile_regex(expr: RegularExpr | str, alphabet: Alphabet) -> Dfa:
    """Minimal complete automaton of a regular expression."""
    if isinstance(expr, str):
        expr = parse_regex(expr, alphabet)
    nfa = Nfa(alphabet)
    start, end = _thompson(nfa, expr)
    nfa.initial = {start}
    nfa.accepting = {end}
    return minimize(nfa.determinize())


def from_words(alphabet: Alphabet, words: Iterable[Word]) -> Dfa:
    """Minimal automaton of a finite language."""
    k = len(alphabet)
    rows = [[-1] * k]
    final = [False]
    for w in words:
        node = 0
        for ch in alphabet.check(w):
            a = alphabet.position(ch)
            if rows[node][a] == -1:
                rows.append([-1] * k)
                final.append(False)
                rows[node][a] = len(rows) - 1
            node = rows[node][a]
        final[node] = True
    dead = len(rows)
    rows.append([dead] * k)
    final.append(False)
    table = np.array([[dead if t == -1 else t for t in row] for row in rows], dtype=np.int32)
    return minimize(Dfa(alphabet, table, 0, np.array(final)))


def universal(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, np.zeros((1, len(alphabet)), dtype=np.int32), 0, np.array([True]))


def empty(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, np.zeros((1, len(alphabet)), dtype=np.int32), 0, np.array([False]))


def epsilon_only(alphabet: Alphabet) -> Dfa:
    return from_words(alphabet, [""])


def nonempty_words(alphabet: Alphabet) -> Dfa:
    table = np.ones((2, len(alphabet)), dtype=np.int32)
    return Dfa(alphabet, table, 0, np.array([False, True]))


# -- boolean operations -----------------------------------------------------------

def _same_alphabet(*dfas: Dfa) -> Alphabet:
    first = dfas[0].alphabet
    for d in dfas[1:]:
        if d.alphabet != first:
            raise AlphabetError(f"alphabet mismatch: {first} vs {d.alphabet}")
    return first


def _product(d1: Dfa, d2: Dfa, accept: Callable[[bool, bool], bool]) -> Dfa:
    alphabet = _same_alphabet(d1, d2)
    k = len(alphabet)
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    rows = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row = []
        for a in range(k):
            nxt = (int(d1.table[p, a]), int(d2.table[q, a]))
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        rows.append(row)
    mask = [accept(bool(d1.accepting[p]), bool(d2.accepting[q])) for p, q in order]
    return minimize(Dfa(alphabet, np.array(rows, dtype=np.int32), 0, np.array(mask)))


def intersect(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and y)


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x or y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and not y)


def symmetric_difference(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x != y)


def complement(d: Dfa) -> Dfa:
    return Dfa(d.alphabet, d.table, d.initial, ~d.accepting, d.names)


def concat(d1: Dfa, d2: Dfa) -> Dfa:
    alphabet = _same_alphabet(d1, d2)
    nfa = Nfa(alphabet)
    i1, f1 = nfa.embed(d1)
    i2, f2 = nfa.embed(d2)
    for f in f1:
        nfa.add_edge(f, None, i2)
    nfa.initial = {i1}
    nfa.accepting = set(f2)
    return minimize(nfa.determinize())


def star(d: Dfa) -> Dfa:
    nfa = Nfa(d.alphabet)
    hub = nfa.add_state()
    i, finals = nfa.embed(d)
    nfa.add_edge(hub, None, i)
    for f in finals:
        nfa.add_edge(f, None, hub)
    nfa.initial = {hub}
    nfa.accepting = {hub}
    return minimize(nfa.determinize())


# -- decision procedures ----------------------------------------------------------

def reachable(d: Dfa) -> list[int]:
    """States reachable from the initial state, in breadth-first letter order."""
    seen = {d.initial}
    order = [d.initial]
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        for t in d.table[s].tolist():
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def is_empty(d: Dfa) -> bool:
    return not any(d.accepting[s] for s in reachable(d))


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return is_empty(symmetric_difference(d1, d2))


def minimize(d: Dfa) -> Dfa:
    """Unique minimal complete automaton, states numbered in BFS letter order."""
    live = reachable(d)
    local = {s: i for i, s in enumerate(live)}
    sub = np.array([[local[int(t)] for t in d.table[s]] for s in live], dtype=np.int32)
    blocks = _kernels.moore_blocks(sub, d.accepting[live])
    n_blocks = int(blocks.max()) + 1
    quotient = np.zeros((n_blocks, len(d.alphabet)), dtype=np.int32)
    accepting = np.zeros(n_blocks, dtype=bool)
    for i, b in enumerate(blocks.tolist()):
        quotient[b] = blocks[sub[i]]
        accepting[b] = d.accepting[live[i]]
    q = Dfa(d.alphabet, quotient, int(blocks[0]), accepting)
    # renumber canonically so equal languages give identical tables
    order = reachable(q)
    rank = {s: i for i, s in enumerate(order)}
    table = np.array([[rank[int(t)] for t in q.table[s]] for s in order], dtype=np.int32)
    return Dfa(d.alphabet, table, 0, q.accepting[order])


def same_canonical_form(d1: Dfa, d2: Dfa) -> bool:
    m1, m2 = minimize(d1), minimize(d2)
    return (m1.alphabet == m2.alphabet and np.array_equal(m1.table, m2.table)
            and np.array_equal(m1.accepting, m2.accepting))


# -- prefix codes and right congruence --------------------------------------------

def proper_extensions(d: Dfa) -> Dfa:
    """L·Σ⁺, the words having a proper prefix in L."""
    return concat(d, nonempty_words(d.alphabet))


def is_prefix_code(d: Dfa) -> bool:
    if d.accepts("") and not equivalent(d, epsilon_only(d.alphabet)):
        return False
    return is_empty(intersect(d, proper_extensions(d)))


def prefix_free_kernel(d: Dfa) -> Dfa:
    """Words of L none of whose proper prefixes lie in L."""
    return difference(d, proper_extensions(d))


@dataclass(frozen=True)
class NerodeClass:
    state: int
    representative: Word
    inside: bool


def access_words(d: Dfa) -> dict[int, Word]:
    """Shortlex-least word reaching each reachable state."""
    words = {d.initial: ""}
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        for a, t in enumerate(d.table[s].tolist()):
            if t not in words:
                words[t] = words[s] + d.alphabet.symbols[a]
                queue.append(t)
    return words


def shortest_word(d: Dfa) -> Word | None:
    """Shortlex-least accepted word, or None for the empty language."""
    found = [w for s, w in access_words(d).items() if d.accepting[s]]
    return min(found, key=d.alphabet.shortlex_key) if found else None


def nerode_classes(d: Dfa) -> tuple[Dfa, list[NerodeClass]]:
    """Classes of the right syntactic congruence of L(d), via its minimal automaton.

    Returns the minimal automaton together with one record per state; the
    state of a word ``w`` in the minimal automaton names its class.
    """
    m = minimize(d)
    reps = access_words(m)
    classes = [NerodeClass(s, w, bool(m.accepting[s])) for s, w in reps.items()]
    classes.sort(key=lambda c: m.alphabet.shortlex_key(c.representative))
    return m, classes


# -- text and JSON forms ----------------------------------------------------------

def to_json(d: Dfa) -> dict:
    names = d.state_names
    return {
        "states": list(names),
        "initial": names[d.initial],
        "accepting": [names[i] for i in np.flatnonzero(d.accepting)],
        "transitions": [[names[s], a, names[int(d.table[s, i])]]
                        for s in range(d.n_states) for i, a in enumerate(d.alphabet)],
    }


def from_json(data: dict, alphabet: Alphabet) -> Dfa:
    try:
        names = [str(s) for s in data["states"]]
        index = {n: i for i, n in enumerate(names)}
        if len(index) != len(names):
            raise SchemaError("duplicate state names")
        table = np.full((len(names), len(alphabet)), -1, dtype=np.int32)
        for src, sym, dst in data["transitions"]:
            table[index[str(src)], alphabet.position(sym)] = index[str(dst)]
        accepting = np.zeros(len(names), dtype=bool)
        for s in data.get("accepting", []):
            accepting[index[str(s)]] = True
        initial = index[str(data["initial"])]
    except KeyError as exc:
        raise SchemaError(f"automaton description: unknown or missing {exc}") from None
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"automaton description: {exc}") from None
    if (table < 0).any():
        raise SchemaError("automaton must be complete (a transition for every state and symbol)")
    return Dfa(alphabet, table, initial, accepting, tuple(names))


def to_text(d: Dfa) -> str:
    data = to_json(d)
    lines = ["states " + " ".join(data["states"]),
             "initial " + data["initial"],
             "accepting " + " ".join(data["accepting"])]
    lines.extend(" ".join(t) for t in data["transitions"])
    return "\n".join(lines) + "\n"


def from_text(text: str, alphabet: Alphabet) -> Dfa:
    data: dict = {"transitions": [], "accepting": []}
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        head, rest = parts[0], parts[1:]
        if head == "states":
            data["states"] = rest
        elif head == "initial" and len(rest) == 1:
            data["initial"] = rest[0]
        elif head == "accepting":
            data["accepting"] = rest
        elif len(parts) == 3:
            data["transitions"].append(parts)
        else:
            raise SchemaError(f"cannot read automaton line {raw!r}")
    return from_json(data, alphabet)
