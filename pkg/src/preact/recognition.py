"""Preacceptors, bounded right-congruence analysis and non-recognizability evidence."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import AlphabetError, UnknownStateError
from .globalization import GlobalClass, act
from .languages import Language
from .preaction import PreactionMachine, Product
from .regular import Dfa
from .words import Alphabet, Word

Membership = Callable[[Word], bool]


@dataclass(frozen=True)
class Preacceptor:
    machine: PreactionMachine
    initial: str
    terminal: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "terminal", tuple(self.terminal))
        self.machine.state_index(self.initial)
        for t in self.terminal:
            self.machine.state_index(t)
        if len(set(self.terminal)) != len(self.terminal):
            raise UnknownStateError("terminal states must be distinct")

    @property
    def alphabet(self) -> Alphabet:
        return self.machine.alphabet

    def accepts(self, word: Word) -> bool:
        y = self.machine.eval(self.initial, word)
        return y is not None and y in self.terminal

    def __contains__(self, word: Word) -> bool:
        return self.accepts(word)

    def regular_language(self) -> Dfa | None:
        """Exact automaton of the recognized language, if the backend has one."""
        return self.machine.language_dfa(self.initial, self.terminal)


def accepts(acc: Preacceptor, word: Word) -> bool:
    return acc.accepts(word)


def accepts_via_globalization(acc: Preacceptor, word: Word) -> bool:
    c = act(acc.machine, GlobalClass(acc.initial, ""), word)
    return c.tail == "" and c.anchor in acc.terminal


def language_upto(acc: Preacceptor, n: int) -> list[Word]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [w for w in acc.alphabet.words_upto(n) if acc.accepts(w)]


def intersect_acceptors(a1: Preacceptor, a2: Preacceptor) -> Preacceptor:
    if a1.alphabet != a2.alphabet:
        raise AlphabetError(f"alphabet mismatch: {a1.alphabet} vs {a2.alphabet}")
    m = Product(a1.machine, a2.machine)
    terminal = [Product.pair_name(s, t) for s in a1.terminal for t in a2.terminal]
    return Preacceptor(m, Product.pair_name(a1.initial, a2.initial), tuple(terminal))


# -- bounded right congruence -------------------------------------------------------

def _membership(language) -> Membership:
    if isinstance(language, (Language, Preacceptor)):
        return language.__contains__
    if isinstance(language, Dfa):
        return language.accepts
    return language


@dataclass
class CongruencePartition:
    sample: list[Word]
    bound: int
    blocks: list[list[Word]]
    block_of: dict[Word, int] = field(default_factory=dict)

    @property
    def representatives(self) -> list[Word]:
        return [b[0] for b in self.blocks]

    def refines(self, other: "CongruencePartition") -> bool:
        """True if every block here lies inside a single block of ``other``."""
        return all(len({other.block_of[w] for w in b}) == 1 for b in self.blocks)


def bounded_right_congruence(language, sample: Sequence[Word], n: int,
                             alphabet: Alphabet | None = None) -> CongruencePartition:
    """Partition ``sample`` by agreement on all suffixes of length at most ``n``.

    ``language`` is a :class:`Language`, :class:`Preacceptor`, :class:`Dfa` or
    plain membership function (then ``alphabet`` is required).  Blocks and
    their members are in shortlex order; block ids follow that order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    alphabet = alphabet or language.alphabet
    contains = _membership(language)
    suffixes = alphabet.words_upto(n)
    sample = alphabet.sorted(dict.fromkeys(sample))
    groups: dict[tuple[bool, ...], list[Word]] = {}
    for u in sample:
        groups.setdefault(tuple(contains(u + w) for w in suffixes), []).append(u)
    blocks = list(groups.values())
    block_of = {w: i for i, b in enumerate(blocks) for w in b}
    return CongruencePartition(sample, n, blocks, block_of)


def default_sample(alphabet: Alphabet, n: int, extras: Iterable[Word] = ()) -> list[Word]:
    return alphabet.sorted(set(alphabet.words_upto(n)) | set(extras))


def separating_suffix(contains: Membership, u: Word, v: Word,
                      suffixes: Iterable[Word]) -> Word | None:
    for w in suffixes:
        if contains(u + w) != contains(v + w):
            return w
    return None


@dataclass
class NonrecognizabilityEvidence:
    """Bounded evidence that a language has many right classes inside it."""

    bound: int
    members: list[Word]
    classes_inside: int
    candidates: list[Word]
    candidate_blocks: dict[Word, int]
    separators: dict[tuple[Word, Word], Word | None]

    @property
    def pairwise_inequivalent(self) -> bool:
        return all(s is not None for s in self.separators.values())

    @property
    def inequivalent_candidates(self) -> int:
        return len(set(self.candidate_blocks.values()))


def nonrecognizability_witness(language, n: int, candidates: Sequence[Word] | None = None,
                               suffixes: Sequence[Word] | None = None,
                               alphabet: Alphabet | None = None) -> NonrecognizabilityEvidence:
    """Count ~ₙ-classes among members of length ≤ n and separate the candidates.

    ``candidates`` default to all members; ``suffixes`` (the family searched
    for separators, in order) default to every word of length ≤ n.  A class
    count that keeps growing with ``n`` is evidence, never proof, that no
    finite union of right classes gives the language.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    alphabet = alphabet or language.alphabet
    contains = _membership(language)
    members = [w for w in alphabet.words_upto(n) if contains(w)]
    partition = bounded_right_congruence(contains, members, n, alphabet)
    candidates = list(members if candidates is None else candidates)
    for c in candidates:
        if not contains(c):
            raise ValueError(f"candidate {c!r} is not in the language")
    suffixes = alphabet.words_upto(n) if suffixes is None else list(suffixes)
    cand = bounded_right_congruence(contains, candidates, n, alphabet)
    separators = {(u, v): separating_suffix(contains, u, v, suffixes)
                  for u, v in combinations(cand.sample, 2)}
    return NonrecognizabilityEvidence(n, members, len(partition.blocks), cand.sample,
                                      cand.block_of, separators)


# -- unary languages ---------------------------------------------------------------

def unary_periodicity_probe(acc: Preacceptor, bound: int) -> tuple[int, int] | None:
    """Least (preperiod, period), ordered by preperiod first, with p + 2q ≤ bound."""
    if len(acc.alphabet) != 1:
        raise AlphabetError("unary probe needs a one-letter alphabet")
    letter = acc.alphabet.symbols[0]
    seen = [acc.accepts(letter * k) for k in range(bound + 1)]
    for p in range(bound + 1):
        for q in range(1, (bound - p) // 2 + 1):
            if all(seen[k] == seen[k + q] for k in range(p, bound - q + 1)):
                return p, q
    return None
