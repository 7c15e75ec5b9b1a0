"""Prefix codes, p-languages HC* and the decomposition of recognized languages."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import regular
from .errors import NotAPrefixCodeError, UnknownStateError
from .preaction import PLanguageMachine
from .recognition import Preacceptor
from .regular import Dfa
from .words import Alphabet, Word, parse_regex


@dataclass(frozen=True, eq=False)
class PLanguage:
    H: Dfa
    C: Dfa

    def __post_init__(self):
        if self.H.alphabet != self.C.alphabet:
            raise ValueError("H and C must share an alphabet")
        for name, code in (("H", self.H), ("C", self.C)):
            if not regular.is_prefix_code(code):
                raise NotAPrefixCodeError(f"{name} is not a prefix code")

    @classmethod
    def from_words(cls, alphabet: Alphabet, H: Iterable[Word], C: Iterable[Word]) -> "PLanguage":
        return cls(regular.from_words(alphabet, H), regular.from_words(alphabet, C))

    @classmethod
    def from_regex(cls, alphabet: Alphabet, H: str, C: str) -> "PLanguage":
        return cls(regular.compile_regex(H, alphabet), regular.compile_regex(C, alphabet))

    @property
    def alphabet(self) -> Alphabet:
        return self.H.alphabet

    def dfa(self) -> Dfa:
        return regular.concat(self.H, regular.star(self.C))


def hc_star_member(word: Word, H: Iterable[Word], C: Iterable[Word]) -> bool:
    """Membership in HC* for finite codes by dynamic programming over split points."""
    H, C = set(H), set(C)
    n = len(word)
    reach = [i in {len(h) for h in H if word.startswith(h)} for i in range(n + 1)]
    for j in range(n + 1):
        if reach[j]:
            continue
        reach[j] = any(reach[i] and word[i:j] in C for i in range(j))
    return reach[n]


def build_preacceptor(p: PLanguage) -> Preacceptor:
    m = PLanguageMachine(p.H, p.C, check=False)
    return Preacceptor(m, m.initial, (m.terminal,))


@dataclass(frozen=True, eq=False)
class ExtractedCodes:
    state: str
    H: Dfa
    C: Dfa
    exact: bool
    bound: int | None

    def words(self, n: int) -> tuple[list[Word], list[Word]]:
        return self.H.language_upto(n), self.C.language_upto(n)

    def as_planguage(self) -> PLanguage:
        return PLanguage(self.H, self.C)

    @cached_property
    def _language(self) -> Dfa:
        return regular.concat(self.H, regular.star(self.C))

    def contains(self, word: Word) -> bool:
        """Membership in H·C*; exact, or exact up to the extraction bound."""
        if self.exact:
            return self._language.accepts(word)
        if len(word) > self.bound:
            raise ValueError(f"word longer than the extraction bound {self.bound}")
        return hc_star_member(word, *self.words(self.bound))


def _first_visits(acc: Preacceptor, start: str, target: str, bound: int, nonempty: bool) -> list[Word]:
    m = acc.machine
    out = []
    for w in acc.alphabet.words_upto(bound):
        if nonempty and not w:
            continue
        if m.eval(start, w) != target:
            continue
        lo = 1 if nonempty else 0
        if all(m.eval(start, w[:i]) != target for i in range(lo, len(w))):
            out.append(w)
    return out


def extract_codes(acc: Preacceptor, y: str, bound: int | None = None) -> ExtractedCodes:
    """First-visit code H_y and first-return code C_y of a terminal state.

    H_y holds the words taking the initial state to ``y`` with no proper
    prefix doing so; C_y the nonempty words returning ``y`` to itself with no
    nonempty proper prefix doing so.  Exact whenever the backend exposes its
    reaching languages as automata; otherwise enumerated up to ``bound``.
    """
    if y not in acc.terminal:
        raise UnknownStateError(f"{y!r} is not a terminal state")
    alphabet = acc.alphabet
    reach = acc.machine.language_dfa(acc.initial, [y])
    back = acc.machine.language_dfa(y, [y])
    if reach is not None and back is not None:
        H = regular.prefix_free_kernel(reach)
        C = regular.prefix_free_kernel(regular.intersect(back, regular.nonempty_words(alphabet)))
        return ExtractedCodes(y, H, C, True, None)
    if bound is None:
        raise ValueError("this backend has no exact reaching language; pass a bound")
    H = regular.from_words(alphabet, _first_visits(acc, acc.initial, y, bound, nonempty=False))
    C = regular.from_words(alphabet, _first_visits(acc, y, y, bound, nonempty=True))
    return ExtractedCodes(y, H, C, False, bound)


def decompose(acc: Preacceptor, bound: int | None = None) -> list[ExtractedCodes]:
    """One p-language per terminal state, in declaration order; pairwise disjoint."""
    return [extract_codes(acc, y, bound) for y in acc.terminal]


def decomposition_check(acc: Preacceptor, parts: Sequence[ExtractedCodes],
                        n: int) -> tuple[bool, bool]:
    """(pairwise disjoint, union equals the accepted language) on words up to length n."""
    disjoint = covers = True
    for w in acc.alphabet.words_upto(n):
        hits = sum(p.contains(w) for p in parts)
        disjoint &= hits <= 1
        covers &= (hits > 0) == acc.accepts(w)
    return disjoint, covers


def is_prefix_code_words(words: Iterable[Word]) -> bool:
    words = set(words)
    if "" in words:
        return words == {""}
    return not any(w[:i] in words for w in words for i in range(1, len(w)))


def prefix_code_violation(code: Dfa) -> tuple[Word, Word] | None:
    """A pair (u, v) of distinct members with u a prefix of v, shortlex-least v."""
    v = regular.shortest_word(regular.intersect(code, regular.proper_extensions(code)))
    if v is None:
        return None
    u = next(v[:i] for i in range(len(v)) if code.accepts(v[:i]))
    return u, v


def unique_factorization(word: Word, codes: Sequence) -> tuple[Word, ...] | None:
    """The factorization ``w = w1...wn`` with ``wi`` in code ``i``, or None.

    ``codes`` are automata or finite word collections.  A word has at most
    one prefix in a prefix code, so a single left-to-right scan suffices.
    """
    if not codes:
        raise ValueError("need at least one code")
    checks = []
    for i, code in enumerate(codes):
        if isinstance(code, Dfa):
            ok, contains = regular.is_prefix_code(code), code.accepts
        else:
            code = frozenset(code)
            ok, contains = is_prefix_code_words(code), code.__contains__
        if not ok:
            raise NotAPrefixCodeError(f"code {i + 1} is not a prefix code")
        checks.append(contains)
    pos = 0
    parts = []
    for contains in checks:
        for end in range(pos, len(word) + 1):
            if contains(word[pos:end]):
                parts.append(word[pos:end])
                pos = end
                break
        else:
            return None
    return tuple(parts) if pos == len(word) else None


def parse_code(text: str | Sequence[Word], alphabet: Alphabet) -> Dfa:
    """A code given as a regex string or as an explicit word list."""
    if isinstance(text, str):
        return regular.compile_regex(parse_regex(text, alphabet), alphabet)
    return regular.from_words(alphabet, text)
