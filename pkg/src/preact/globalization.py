"""The globalization of a preautomaton, represented lazily by normal forms.

A class of pairs (x, w) is written ``[x|w]`` where no nonempty prefix of
``w`` acts on ``x``.  Reducing a pair to this form takes one step: strip the
longest prefix of ``w`` that acts on ``x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .preaction import PreactionMachine
from .words import Word, show_word


@dataclass(frozen=True, order=True)
class GlobalClass:
    anchor: str
    tail: Word

    def __str__(self):
        return f"[{self.anchor}|{show_word(self.tail)}]"


def is_normal(m: PreactionMachine, anchor: str, tail: Word) -> bool:
    return all(m.eval(anchor, tail[:i]) is None for i in range(1, len(tail) + 1))


def normalize(m: PreactionMachine, x: str, w: Word) -> GlobalClass:
    for i in range(len(w), -1, -1):
        y = m.eval(x, w[:i])
        if y is not None:
            return GlobalClass(y, w[i:])
    raise AssertionError("eval(x, ε) must be defined")  # pragma: no cover


def classes_equal(m: PreactionMachine, first: tuple[str, Word], second: tuple[str, Word]) -> bool:
    return normalize(m, *first) == normalize(m, *second)


def approx_related(m: PreactionMachine, first: tuple[str, Word], second: tuple[str, Word]) -> bool:
    """Direct test: a = a'p, b = b'p with x·a' = y·b' defined."""
    (x, a), (y, b) = first, second
    for n in range(min(len(a), len(b)) + 1):
        if a[len(a) - n:] != b[len(b) - n:]:
            break
        xa = m.eval(x, a[:len(a) - n])
        if xa is not None and xa == m.eval(y, b[:len(b) - n]):
            return True
    return False


def act(m: PreactionMachine, c: GlobalClass, w: Word) -> GlobalClass:
    return normalize(m, c.anchor, c.tail + w)


def embed_alpha(m: PreactionMachine, x: str) -> GlobalClass:
    m.state_index(x)
    return GlobalClass(x, "")


def expand(m: PreactionMachine, depth: int) -> list[GlobalClass]:
    """Every normal-form class with tail length at most ``depth``.

    Sorted by tail in shortlex order, then by anchor declaration order.
    A tail that is not normal has no normal extension, so only normal
    nonempty tails are extended.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    found = [GlobalClass(x, "") for x in m.states]
    frontier = [(x, "") for x in m.states]
    for _ in range(depth):
        grown = []
        for x, tail in frontier:
            for a in m.alphabet:
                w = tail + a
                if m.eval(x, w) is None:
                    grown.append((x, w))
        found.extend(GlobalClass(x, w) for x, w in grown)
        frontier = grown
    key = m.alphabet.shortlex_key
    return sorted(found, key=lambda c: (key(c.tail), m.state_index(c.anchor)))


@dataclass
class FreenessReport:
    word_len: int
    depth: int
    separated: list[tuple[Word, Word, GlobalClass]] = field(default_factory=list)
    unseparated: list[tuple[Word, Word]] = field(default_factory=list)

    @property
    def all_separated(self) -> bool:
        return not self.unseparated

    @property
    def first_unseparated(self) -> tuple[Word, Word] | None:
        return self.unseparated[0] if self.unseparated else None


def freeness_probe(m: PreactionMachine, word_len: int, depth: int) -> FreenessReport:
    """Look for a class that tells apart each pair of distinct short words."""
    if word_len < 1 or depth < 0:
        raise ValueError("word_len must be positive and depth nonnegative")
    classes = expand(m, depth)
    words = m.alphabet.words_upto(word_len)
    images = {w: [act(m, c, w) for c in classes] for w in words}
    report = FreenessReport(word_len, depth)
    for u, v in combinations(words, 2):
        for c, cu, cv in zip(classes, images[u], images[v]):
            if cu != cv:
                report.separated.append((u, v, c))
                break
        else:
            report.unseparated.append((u, v))
    return report


def balance_blocks_simple(word: Word, lead: str, follow: str) -> bool:
    """Block-wise simplicity test for the ℤ example.

    ``word`` must split into blocks ``lead^i follow^j`` (first block starting
    with ``lead``) and the running balance of ``lead`` over ``follow`` at the
    end of every block must be positive.  With ``lead='a'`` this is the
    1-simple predicate; with ``lead='b'`` (balance of b over a) the 0-simple one.
    """
    if not word:
        return True
    if word[0] != lead:
        return False
    total = 0
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == lead:
            j += 1
        k = j
        while k < len(word) and word[k] == follow:
            k += 1
        if j == i:
            return False
        total += (j - i) - (k - j)
        if total <= 0:
            return False
        i = k
    return True


def is_one_simple(word: Word) -> bool:
    return balance_blocks_simple(word, "a", "b")


def is_zero_simple(word: Word) -> bool:
    return balance_blocks_simple(word, "b", "a")
