"""Preautomata: partial actions of the free monoid evaluated on whole words.

A machine is a finite set of observable state names plus a backend that
computes ``eval(x, w)`` for an entire word ``w``.  ``None`` stands for
"undefined".  Backends never compose letter transitions: the partial map on
words is not determined by its values on letters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import _kernels, regular
from .errors import AlphabetError, NotAPrefixCodeError, UnknownStateError
from .languages import Language
from .regular import Dfa
from .words import Alphabet, Word, show_word


class PreactionMachine:
    """Base class of all backends."""

    kind = "abstract"
    alphabet: Alphabet
    states: tuple[str, ...]

    def __init__(self, alphabet: Alphabet, states: Iterable[str]):
        self.alphabet = alphabet
        self.states = tuple(states)
        if not self.states:
            raise ValueError("a machine needs at least one observable state")
        if len(set(self.states)) != len(self.states):
            raise ValueError(f"duplicate state names in {self.states}")
        self._index = {s: i for i, s in enumerate(self.states)}

    def state_index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownStateError(f"unknown state {x!r}; states are {list(self.states)}") from None

    def eval(self, x: str, w: Word) -> str | None:
        self.state_index(x)
        self.alphabet.check(w)
        if not w:
            return x
        return self._eval(x, w)

    def _eval(self, x: str, w: Word) -> str | None:
        raise NotImplementedError

    def eval_table(self, words: Sequence[Word]) -> np.ndarray:
        """``out[i, j]`` is the index of ``eval(states[i], words[j])`` or -1."""
        out = np.full((len(self.states), len(words)), -1, dtype=np.int64)
        for i, x in enumerate(self.states):
            for j, w in enumerate(words):
                y = self.eval(x, w)
                if y is not None:
                    out[i, j] = self._index[y]
        return out

    def language_dfa(self, initial: str, terminal: Iterable[str]) -> Dfa | None:
        """Automaton of ``{w : eval(initial, w) in terminal}`` when one is known."""
        return None

    def describe(self) -> str:
        return f"{self.kind} machine on {len(self.states)} states"


def _require_same_alphabet(a: Alphabet, b: Alphabet):
    if a != b:
        raise AlphabetError(f"alphabet mismatch: {a} vs {b}")


class FiniteRestriction(PreactionMachine):
    """Restriction of a total letter action on a finite host to observable states.

    Intermediate host states along the run need not be observable; only the
    endpoint decides definedness.
    """

    kind = "finite_restriction"

    def __init__(self, host: Dfa, observable: Iterable[str]):
        observable = list(observable)
        names = host.state_names
        missing = [x for x in observable if x not in names]
        if missing:
            raise UnknownStateError(f"observable states {missing} are not host states")
        super().__init__(host.alphabet, observable)
        self.host = host
        self._host_index = [names.index(x) for x in self.states]
        self._observed = {names.index(x): i for i, x in enumerate(self.states)}

    def _eval(self, x, w):
        end = self.host.run(self._host_index[self._index[x]], w)
        i = self._observed.get(end)
        return None if i is None else self.states[i]

    def eval_table(self, words):
        codes, lengths = self.alphabet.encode(words)
        lookup = np.full(self.host.n_states, -1, dtype=np.int64)
        for h, i in self._observed.items():
            lookup[h] = i
        out = np.empty((len(self.states), len(words)), dtype=np.int64)
        for i, h in enumerate(self._host_index):
            starts = np.full(len(words), h, dtype=np.int32)
            out[i] = lookup[_kernels.run_batch(self.host.table, starts, codes, lengths)]
        return out

    def language_dfa(self, initial, terminal):
        names = self.host.state_names
        d = self.host.with_initial(names.index(initial))
        return d.with_accepting(names.index(t) for t in terminal)


class IntegerTranslation(PreactionMachine):
    """Restriction of the translation action of Σ* on ℤᵏ to finitely many points."""

    kind = "integer_translation"

    def __init__(self, alphabet: Alphabet, vectors: Mapping[str, Sequence[int]],
                 observable: Iterable[Sequence[int]]):
        vecs = {a: tuple(int(c) for c in vectors[a]) for a in alphabet}
        dims = {len(v) for v in vecs.values()}
        if len(dims) != 1:
            raise ValueError("all letter vectors must have the same dimension")
        self.dimension = dims.pop()
        points = [tuple(int(c) for c in p) for p in observable]
        if any(len(p) != self.dimension for p in points):
            raise ValueError("observable points must match the vector dimension")
        self.vectors = vecs
        self.points = points
        super().__init__(alphabet, [self.point_name(p) for p in points])
        self._by_point = {p: self.point_name(p) for p in points}

    @staticmethod
    def point_name(point: Sequence[int]) -> str:
        return ",".join(str(c) for c in point)

    def _eval(self, x, w):
        total = list(self.points[self._index[x]])
        for ch in w:
            for d, c in enumerate(self.vectors[ch]):
                total[d] += c
        return self._by_point.get(tuple(total))


class PLanguageMachine(PreactionMachine):
    """Single-terminal machine recognizing HC* for prefix codes H and C.

    Three shapes: H empty (two states under the trivial total action),
    H = {ε} (one state acting as C*), and the general two-state machine.
    """

    kind = "p_language"

    def __init__(self, H: Dfa, C: Dfa, check: bool = True):
        _require_same_alphabet(H.alphabet, C.alphabet)
        if check:
            for name, code in (("H", H), ("C", C)):
                if not regular.is_prefix_code(code):
                    raise NotAPrefixCodeError(f"{name} is not a prefix code")
        self.H, self.C = regular.minimize(H), regular.minimize(C)
        alphabet = H.alphabet
        self.c_star = regular.star(self.C)
        if regular.is_empty(self.H):
            self.case = "empty"
            states = ("x0", "y")
        elif regular.equivalent(self.H, regular.epsilon_only(alphabet)):
            self.case = "star"
            states = ("x0",)
        else:
            self.case = "general"
            states = ("x0", "y")
            self.hc_star = regular.concat(self.H, self.c_star)
        super().__init__(alphabet, states)
        self.initial = "x0"
        self.terminal = "x0" if self.case == "star" else "y"

    def _eval(self, x, w):
        if self.case == "empty":
            return x
        if x == "y" or self.case == "star":
            return x if self.c_star.accepts(w) else None
        return "y" if self.hc_star.accepts(w) else None

    def _pair_dfa(self, src, dst) -> Dfa:
        alphabet = self.alphabet
        if self.case == "empty":
            return regular.universal(alphabet) if src == dst else regular.empty(alphabet)
        if src == dst == "x0" and self.case == "general":
            return regular.epsilon_only(alphabet)
        if src == dst:
            return self.c_star
        if src == "x0":
            return self.hc_star
        return regular.empty(alphabet)

    def language_dfa(self, initial, terminal):
        out = regular.empty(self.alphabet)
        for t in terminal:
            out = regular.union(out, self._pair_dfa(initial, t))
        return out


def class_state_name(rep: Word) -> str:
    return "[ε]" if rep == "" else f"[{rep}]"


class MembershipDriven(PreactionMachine):
    """Machine on ``[ε], [u₁] … [u_k]`` for representatives of classes inside L.

    ``eval([u], w)`` for nonempty ``w`` is ``[uw]`` when ``uw`` lies in L and
    undefined otherwise.  The class of ``uw`` comes from ``classify``, which
    defaults to the language's exact class rule.
    """

    kind = "membership"

    def __init__(self, language: Language, representatives: Sequence[Word] | None = None,
                 classify: Callable[[Word], Hashable] | None = None, provenance: str = "exact",
                 bounds: tuple[int, int] | None = None):
        self.language = language
        self.bounds = bounds
        self.classify = classify or language.class_key
        self.provenance = provenance
        self._exact_classes = classify is None and language.exact
        reps = list(language.representatives() if representatives is None else representatives)
        reps = language.alphabet.sorted(reps)
        for u in reps:
            if not language.contains(u):
                raise ValueError(f"representative {u!r} is not in the language")
        self.representatives = reps
        self._state_of_key = {}
        for u in reps:
            key = self.classify(u)
            if key in self._state_of_key:
                raise ValueError(f"representatives {u!r} and {self._state_of_key[key]!r} share a class")
            self._state_of_key[key] = class_state_name(u)
        names = [class_state_name(u) for u in reps]
        if "" not in reps:
            names.insert(0, class_state_name(""))
        super().__init__(language.alphabet, names)
        self._rep_of_state = {class_state_name(u): u for u in reps}
        self._rep_of_state.setdefault(class_state_name(""), "")
        self.initial = class_state_name("")
        self.terminal = tuple(class_state_name(u) for u in reps)

    def representative_of(self, state: str) -> Word:
        self.state_index(state)
        return self._rep_of_state[state]

    def _eval(self, x, w):
        z = self._rep_of_state[x] + w
        if not self.language.contains(z):
            return None
        return self._state_of_key.get(self.classify(z))

    def language_dfa(self, initial, terminal):
        if not self._exact_classes:
            return None
        m = getattr(self.language, "minimal", None)
        if m is None:
            return None
        terminal = set(terminal)
        start = m.run(m.initial, self._rep_of_state[initial])
        targets = [m.run(m.initial, self._rep_of_state[t]) for t in terminal
                   if self._rep_of_state[t] in self.representatives]
        d = m.with_initial(start).with_accepting(targets)
        if initial in terminal:
            d = regular.union(d, regular.epsilon_only(self.alphabet))
        return d


class Product(PreactionMachine):
    kind = "product"

    def __init__(self, first: PreactionMachine, second: PreactionMachine):
        _require_same_alphabet(first.alphabet, second.alphabet)
        self.first, self.second = first, second
        self.pairs = [(x, y) for x in first.states for y in second.states]
        self._pair_name = {p: self.pair_name(*p) for p in self.pairs}
        super().__init__(first.alphabet, [self._pair_name[p] for p in self.pairs])
        self._pair_of = {n: p for p, n in self._pair_name.items()}

    @staticmethod
    def pair_name(x: str, y: str) -> str:
        return f"({x},{y})"

    def split(self, state: str) -> tuple[str, str]:
        self.state_index(state)
        return self._pair_of[state]

    def _eval(self, x, w):
        x1, x2 = self._pair_of[x]
        y1 = self.first.eval(x1, w)
        if y1 is None:
            return None
        y2 = self.second.eval(x2, w)
        if y2 is None:
            return None
        return self._pair_name[(y1, y2)]

    def language_dfa(self, initial, terminal):
        x1, x2 = self._pair_of[initial]
        out = regular.empty(self.alphabet)
        for t in terminal:
            t1, t2 = self._pair_of[t]
            d1 = self.first.language_dfa(x1, [t1])
            d2 = self.second.language_dfa(x2, [t2])
            if d1 is None or d2 is None:
                return None
            out = regular.union(out, regular.intersect(d1, d2))
        return out


class SubMachine(PreactionMachine):
    """Restriction of a machine to a subset of its states."""

    kind = "subset"

    def __init__(self, base: PreactionMachine, states: Iterable[str]):
        keep = set(states)
        for x in keep:
            base.state_index(x)
        self.base = base
        super().__init__(base.alphabet, [x for x in base.states if x in keep])

    def _eval(self, x, w):
        y = self.base.eval(x, w)
        return y if y in self._index else None

    def language_dfa(self, initial, terminal):
        return self.base.language_dfa(initial, terminal)


def restrict(host: Dfa, observable: Iterable[str]) -> FiniteRestriction:
    observable = list(observable)
    if not observable:
        raise ValueError("observable set must be nonempty")
    return FiniteRestriction(host, observable)


def product(m1: PreactionMachine, m2: PreactionMachine) -> Product:
    return Product(m1, m2)


def trivial_machine(alphabet: Alphabet) -> FiniteRestriction:
    """One state on which every word acts as the identity."""
    host = Dfa(alphabet, np.zeros((1, len(alphabet)), dtype=np.int32), 0, np.array([False]), ("*",))
    return FiniteRestriction(host, ["*"])


def z_machine() -> IntegerTranslation:
    """ℤ under a ↦ +1, b ↦ −1, observed on {0, 1}."""
    return IntegerTranslation(Alphabet("ab"), {"a": [1], "b": [-1]}, [[0], [1]])


# -- axiom checking ----------------------------------------------------------------

AXIOM_NAMES = {_kernels.IDENTITY: "identity", _kernels.AXIOM_B: "b", _kernels.AXIOM_C: "c"}


@dataclass(frozen=True)
class AxiomWitness:
    state: str
    u: Word
    v: Word
    axiom: str

    def __str__(self):
        return f"axiom {self.axiom}: x={self.state} u={show_word(self.u)} v={show_word(self.v)}"


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    witnesses: list[AxiomWitness] = field(default_factory=list)
    bound: int = 0
    checked: int = 0


def check_axioms(m: PreactionMachine, max_len: int) -> AxiomReport:
    """Exhaustively test the identity law and both compatibility axioms.

    Every state x and every split (u, v) with ``|uv| <= max_len`` is checked.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    words = m.alphabet.words_upto(max_len)
    table = m.eval_table(words)
    rows = _kernels.axiom_scan(table, len(m.alphabet), max_len)
    witnesses = {AxiomWitness(m.states[x], words[iu], words[iv], AXIOM_NAMES[code])
                 for x, iu, iv, code in rows.tolist()}
    key = m.alphabet.shortlex_key
    ordered = sorted(witnesses, key=lambda t: (len(t.u) + len(t.v), key(t.u), key(t.v),
                                               m.state_index(t.state), t.axiom))
    pairs = sum((n + 1) * len(m.alphabet) ** n for n in range(max_len + 1))
    return AxiomReport(not ordered, ordered, max_len, len(m.states) * pairs)
