"""Membership procedures for languages that need not be regular.

Each family either knows its right syntactic classes exactly (``exact`` is
True and :meth:`Language.class_key` names the class of a member) or only
answers membership.  The non-closure examples are built from the exact
families with the pointwise combinators at the bottom of this module.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Iterable, Sequence

from . import regular
from .regular import Dfa
from .words import Alphabet, Word, balance, format_regex, parse_regex


class Language:
    alphabet: Alphabet
    exact = False

    def contains(self, word: Word) -> bool:
        raise NotImplementedError

    def __contains__(self, word: Word) -> bool:
        return self.contains(word)

    def class_key(self, word: Word) -> Hashable:
        """Key of the right syntactic class of ``word``, which must be a member."""
        raise NotImplementedError(f"{type(self).__name__} has no exact class rule")

    def representatives(self) -> list[Word]:
        """Shortlex-least member of every class inside the language."""
        raise NotImplementedError(f"{type(self).__name__} has no exact class rule")

    def dfa(self) -> Dfa | None:
        return None

    def members_upto(self, n: int) -> list[Word]:
        return [w for w in self.alphabet.words_upto(n) if self.contains(w)]

    def describe(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        raise NotImplementedError

    # pointwise set operations
    def __or__(self, other: "Language") -> "Language":
        return UnionLanguage([self, other])

    def __and__(self, other: "Language") -> "Language":
        return IntersectionLanguage([self, other])

    def __add__(self, other: "Language") -> "Language":
        return ConcatLanguage([self, other])

    def star(self) -> "Language":
        return StarLanguage(self)


class RegularLanguage(Language):
    exact = True

    def __init__(self, dfa: Dfa, source: str | None = None):
        self.alphabet = dfa.alphabet
        self.minimal, self.classes = regular.nerode_classes(dfa)
        self.source = source

    @classmethod
    def from_regex(cls, text: str, alphabet: Alphabet) -> "RegularLanguage":
        expr = parse_regex(text, alphabet)
        return cls(regular.compile_regex(expr, alphabet), format_regex(expr))

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Word]) -> "RegularLanguage":
        words = alphabet.sorted(set(words))
        return cls(regular.from_words(alphabet, words), "|".join(w or "%e" for w in words) or "%0")

    def contains(self, word):
        return self.minimal.accepts(word)

    def class_key(self, word):
        return self.minimal.run(self.minimal.initial, word)

    def representatives(self):
        return [c.representative for c in self.classes if c.inside]

    def dfa(self):
        return self.minimal

    label: str | None = None

    def describe(self):
        return self.source or self.label or f"regular ({self.minimal.n_states} states)"

    def to_json(self):
        if self.source is not None:
            return {"regex": self.source}
        return {"dfa": regular.to_json(self.minimal)}


class EqualBlocks(Language):
    """{ aⁿbⁿ : n ≥ 1 }, one right syntactic class inside the language."""

    exact = True

    def __init__(self, alphabet: Alphabet, first: str = "a", second: str = "b"):
        alphabet.position(first)
        alphabet.position(second)
        self.alphabet, self.first, self.second = alphabet, first, second

    def contains(self, word):
        n, odd = divmod(len(word), 2)
        return (not odd and n > 0 and word[:n] == self.first * n
                and word[n:] == self.second * n)

    def class_key(self, word):
        return 0

    def representatives(self):
        return [self.first + self.second]

    def describe(self):
        return f"{{{self.first}^n{self.second}^n : n>=1}}"

    def to_json(self):
        return {"family": "equal_blocks", "first": self.first, "second": self.second}


class BalanceLanguage(Language):
    """Words w with ``balance(w, plus, minus) == value``; a single class."""

    exact = True

    def __init__(self, alphabet: Alphabet, plus: str = "a", minus: str = "b", value: int = 0):
        balance("", plus, minus, alphabet)
        self.alphabet, self.plus, self.minus, self.value = alphabet, plus, minus, value

    def contains(self, word):
        return balance(word, self.plus, self.minus) == self.value

    def class_key(self, word):
        return 0

    def representatives(self):
        if self.value >= 0:
            return [self.plus * self.value]
        return [self.minus * -self.value]

    def describe(self):
        return f"{{w : |w|_{self.plus} - |w|_{self.minus} = {self.value}}}"

    def to_json(self):
        return {"family": "balance", "plus": self.plus, "minus": self.minus, "value": self.value}


class IdealLanguage(Language):
    """Two-sided ideal Σ*FΣ* generated by a finite nonempty set F."""

    exact = True

    def __init__(self, alphabet: Alphabet, factors: Iterable[Word]):
        self.alphabet = alphabet
        self.factors = tuple(alphabet.sorted({alphabet.check(f) for f in factors}))
        if not self.factors:
            raise ValueError("an ideal needs at least one generating factor")

    def contains(self, word):
        return any(f in word for f in self.factors)

    def class_key(self, word):
        return 0

    def representatives(self):
        # the shortest members are exactly the shortest factors
        return [self.factors[0]]

    def dfa(self):
        sigma_star = regular.universal(self.alphabet)
        core = regular.from_words(self.alphabet, self.factors)
        return regular.concat(regular.concat(sigma_star, core), sigma_star)

    def describe(self):
        return "S*(" + "|".join(f or "%e" for f in self.factors) + ")S*"

    def to_json(self):
        return {"family": "ideal", "factors": list(self.factors)}


class PredicateLanguage(Language):
    """Any membership function, with no class information."""

    def __init__(self, alphabet: Alphabet, predicate, name: str = "predicate"):
        self.alphabet, self.predicate, self.name = alphabet, predicate, name

    def contains(self, word):
        return bool(self.predicate(word))

    def describe(self):
        return self.name


# -- pointwise combinators --------------------------------------------------------

class _Combined(Language):
    def __init__(self, parts: Sequence[Language]):
        self.parts = list(parts)
        self.alphabet = self.parts[0].alphabet
        for p in self.parts[1:]:
            if p.alphabet != self.alphabet:
                raise ValueError("alphabet mismatch between combined languages")
        self.contains = lru_cache(maxsize=None)(self._contains)

    def _contains(self, word):
        raise NotImplementedError

    def _regular_parts(self):
        dfas = [p.dfa() for p in self.parts]
        return None if any(d is None for d in dfas) else dfas


class UnionLanguage(_Combined):
    def _contains(self, word):
        return any(p.contains(word) for p in self.parts)

    def dfa(self):
        dfas = self._regular_parts()
        if dfas is None:
            return None
        out = dfas[0]
        for d in dfas[1:]:
            out = regular.union(out, d)
        return out

    def describe(self):
        return " | ".join(f"({p.describe()})" for p in self.parts)

    def to_json(self):
        return {"union": [p.to_json() for p in self.parts]}


class IntersectionLanguage(_Combined):
    def _contains(self, word):
        return all(p.contains(word) for p in self.parts)

    def dfa(self):
        dfas = self._regular_parts()
        if dfas is None:
            return None
        out = dfas[0]
        for d in dfas[1:]:
            out = regular.intersect(out, d)
        return out

    def describe(self):
        return " & ".join(f"({p.describe()})" for p in self.parts)

    def to_json(self):
        return {"intersection": [p.to_json() for p in self.parts]}


class ConcatLanguage(_Combined):
    def _contains(self, word):
        ends = {0}
        for part in self.parts:
            ends = {j for i in ends for j in range(i, len(word) + 1) if part.contains(word[i:j])}
            if not ends:
                return False
        return len(word) in ends

    def dfa(self):
        dfas = self._regular_parts()
        if dfas is None:
            return None
        out = dfas[0]
        for d in dfas[1:]:
            out = regular.concat(out, d)
        return out

    def describe(self):
        return "".join(f"({p.describe()})" for p in self.parts)

    def to_json(self):
        return {"concat": [p.to_json() for p in self.parts]}


class StarLanguage(_Combined):
    def __init__(self, inner: Language):
        super().__init__([inner])
        self.inner = inner

    def _contains(self, word):
        n = len(word)
        reach = [False] * (n + 1)
        reach[0] = True
        for j in range(1, n + 1):
            reach[j] = any(reach[i] and self.inner.contains(word[i:j]) for i in range(j))
        return reach[n]

    def dfa(self):
        d = self.inner.dfa()
        return None if d is None else regular.star(d)

    def describe(self):
        return f"({self.inner.describe()})*"

    def to_json(self):
        return {"star": self.inner.to_json()}


class ComplementLanguage(_Combined):
    def __init__(self, inner: Language):
        super().__init__([inner])
        self.inner = inner

    def _contains(self, word):
        return not self.inner.contains(word)

    def dfa(self):
        d = self.inner.dfa()
        return None if d is None else regular.complement(d)

    def describe(self):
        return f"~({self.inner.describe()})"

    def to_json(self):
        return {"complement": self.inner.to_json()}


def as_exact(language: Language) -> Language:
    """Promote a regular-backed combination to an exact :class:`RegularLanguage`."""
    if language.exact:
        return language
    d = language.dfa()
    if d is None:
        return language
    out = RegularLanguage(d)
    out.label = language.describe()
    return out


# -- the languages of the worked examples ------------------------------------------

AB = Alphabet("ab")


def a_plus(alphabet: Alphabet = AB) -> Language:
    return RegularLanguage.from_regex("aa*", alphabet)


def example3_language(alphabet: Alphabet = AB) -> Language:
    """a⁺ ∪ {aⁿbⁿ : n ≥ 1}."""
    return UnionLanguage([a_plus(alphabet), EqualBlocks(alphabet)])


def example4_language(alphabet: Alphabet = AB) -> Language:
    """{aⁿbⁿ}* · a⁺."""
    return ConcatLanguage([StarLanguage(EqualBlocks(alphabet)), a_plus(alphabet)])


def example5_language(alphabet: Alphabet = AB) -> Language:
    """({aⁿbⁿ} ∪ {a})*."""
    single_a = RegularLanguage.from_regex("a", alphabet)
    return StarLanguage(UnionLanguage([EqualBlocks(alphabet), single_a]))
