"""Alphabets, words and the small regular-expression dialect.

Words are plain ``str`` values whose characters are alphabet symbols; the
empty string is the empty word.  Every canonical enumeration in the package
uses shortlex order (shorter words first, ties broken by alphabet order).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence, Union as TUnion

import numpy as np

from .errors import AlphabetError, RegexSyntaxError

Word = str

EPSILON_TEXT = "%e"
EMPTY_TEXT = "%0"
_METACHARS = set("|*()%")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __init__(self, symbols: TUnion[str, Iterable[str]]):
        syms = tuple(symbols)
        if not syms:
            raise AlphabetError("alphabet must be nonempty")
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise AlphabetError(f"symbols must be single characters, got {s!r}")
            if s in _METACHARS or s.isspace():
                raise AlphabetError(f"{s!r} is reserved and cannot be a symbol")
        if len(set(syms)) != len(syms):
            raise AlphabetError(f"duplicate symbols in {syms!r}")
        object.__setattr__(self, "symbols", syms)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._position

    def __str__(self) -> str:
        return "".join(self.symbols)

    @cached_property
    def _position(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def position(self, symbol: str) -> int:
        try:
            return self._position[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet {self}") from None

    def check(self, word: Word) -> Word:
        for ch in word:
            if ch not in self._position:
                raise AlphabetError(f"symbol {ch!r} of word {word!r} not in alphabet {self}")
        return word

    def shortlex_key(self, word: Word) -> tuple:
        return (len(word), tuple(self._position[c] for c in word))

    def sorted(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.shortlex_key)

    def words_of_length(self, n: int) -> Iterator[Word]:
        for letters in product(self.symbols, repeat=n):
            yield "".join(letters)

    def words_upto(self, n: int) -> list[Word]:
        """All words of length at most ``n`` in shortlex order."""
        out = []
        for length in range(n + 1):
            out.extend(self.words_of_length(length))
        return out

    def count_upto(self, n: int) -> int:
        k = len(self.symbols)
        return n + 1 if k == 1 else (k ** (n + 1) - 1) // (k - 1)

    def index(self, word: Word) -> int:
        """Position of ``word`` in the shortlex enumeration starting at 0 for ε."""
        k = len(self.symbols)
        rank = 0
        for ch in word:
            rank = rank * k + self.position(ch)
        return self.count_upto(len(word) - 1) + rank if word else 0

    def encode(self, words: Sequence[Word]) -> tuple[np.ndarray, np.ndarray]:
        """Pack words into a padded int32 code matrix plus a length vector."""
        width = max((len(w) for w in words), default=0)
        codes = np.zeros((len(words), max(width, 1)), dtype=np.int32)
        lengths = np.zeros(len(words), dtype=np.int32)
        for i, w in enumerate(words):
            lengths[i] = len(w)
            for j, ch in enumerate(w):
                codes[i, j] = self.position(ch)
        return codes, lengths


def balance(word: Word, plus: str, minus: str, alphabet: Alphabet | None = None) -> int:
    """Occurrences of ``plus`` minus occurrences of ``minus``."""
    if plus == minus:
        raise AlphabetError("plus and minus symbols must differ")
    if alphabet is not None:
        alphabet.position(plus)
        alphabet.position(minus)
        alphabet.check(word)
    return word.count(plus) - word.count(minus)


def proper_prefixes(word: Word) -> list[Word]:
    return [word[:i] for i in range(len(word))]


def show_word(word: Word) -> str:
    return word if word else "-"


def read_word(text: str) -> Word:
    return "" if text in ("-", EPSILON_TEXT) else text


# -- regular expressions -----------------------------------------------------

@dataclass(frozen=True)
class Sym:
    symbol: str


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class Concat:
    left: "RegularExpr"
    right: "RegularExpr"


@dataclass(frozen=True)
class Union:
    left: "RegularExpr"
    right: "RegularExpr"


@dataclass(frozen=True)
class Star:
    inner: "RegularExpr"


RegularExpr = TUnion[Sym, Epsilon, EmptySet, Concat, Union, Star]


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> RegularExpr:
        expr = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return expr

    def union(self) -> RegularExpr:
        expr = self.concat()
        while self.peek() == "|":
            self.pos += 1
            expr = Union(expr, self.concat())
        return expr

    def concat(self) -> RegularExpr:
        expr = None
        while (ch := self.peek()) is not None and ch not in "|)":
            item = self.starred()
            expr = item if expr is None else Concat(expr, item)
        if expr is None:
            raise RegexSyntaxError("empty expression (use %e for the empty word)", self.pos)
        return expr

    def starred(self) -> RegularExpr:
        expr = self.atom()
        while self.peek() == "*":
            self.pos += 1
            expr = Star(expr)
        return expr

    def atom(self) -> RegularExpr:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            expr = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pos)
            self.pos += 1
            return expr
        if ch == "%":
            code = self.text[self.pos:self.pos + 2]
            self.pos += 2
            if code == EPSILON_TEXT:
                return Epsilon()
            if code == EMPTY_TEXT:
                return EmptySet()
            raise RegexSyntaxError(f"unknown escape {code!r}", start)
        if ch == "*":
            raise RegexSyntaxError("'*' without operand", start)
        if ch not in self.alphabet:
            raise RegexSyntaxError(f"unknown symbol {ch!r}", start)
        self.pos += 1
        return Sym(ch)


def parse_regex(text: str, alphabet: Alphabet) -> RegularExpr:
    return _Parser(text, alphabet).parse()


def format_regex(expr: RegularExpr) -> str:
    """Inverse of :func:`parse_regex` up to whitespace."""
    if isinstance(expr, Sym):
        return expr.symbol
    if isinstance(expr, Epsilon):
        return EPSILON_TEXT
    if isinstance(expr, EmptySet):
        return EMPTY_TEXT
    if isinstance(expr, Star):
        inner = format_regex(expr.inner)
        if isinstance(expr.inner, (Concat, Union)):
            inner = f"({inner})"
        return inner + "*"
    if isinstance(expr, Concat):
        left = format_regex(expr.left)
        right = format_regex(expr.right)
        if isinstance(expr.left, Union):
            left = f"({left})"
        if isinstance(expr.right, (Union, Concat)):
            right = f"({right})"
        return left + right
    if isinstance(expr, Union):
        right = format_regex(expr.right)
        if isinstance(expr.right, Union):
            right = f"({right})"
        return f"{format_regex(expr.left)}|{right}"
    raise TypeError(f"not a regular expression: {expr!r}")
