"""Brute-force reference implementations used to check the library.

Nothing here calls the automaton layer: regexes are evaluated as explicit
word sets over their syntax tree, and the ℤ example uses its closed formula.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product as iproduct

from preact.preaction import PreactionMachine
from preact.words import Alphabet, Concat, EmptySet, Epsilon, Star, Sym, Union, parse_regex


def all_words(symbols: str, n: int) -> list[str]:
    """Words of length ≤ n in shortlex order (independent of Alphabet)."""
    out = []
    for k in range(n + 1):
        out.extend("".join(p) for p in iproduct(symbols, repeat=k))
    return out


def _words_of(expr, n: int) -> frozenset[str]:
    """Set semantics of a regex syntax tree, truncated to length n."""
    if isinstance(expr, Sym):
        return frozenset([expr.symbol]) if n >= 1 else frozenset()
    if isinstance(expr, Epsilon):
        return frozenset([""])
    if isinstance(expr, EmptySet):
        return frozenset()
    if isinstance(expr, Union):
        return _words_of(expr.left, n) | _words_of(expr.right, n)
    if isinstance(expr, Concat):
        left, right = _words_of(expr.left, n), _words_of(expr.right, n)
        return frozenset(u + v for u in left for v in right if len(u) + len(v) <= n)
    if isinstance(expr, Star):
        return frozenset(star_upto(set(_words_of(expr.inner, n)), n))
    raise TypeError(expr)


@lru_cache(maxsize=None)
def regex_words(text: str, symbols: str, n: int) -> frozenset[str]:
    return _words_of(parse_regex(text, Alphabet(symbols)), n)


def regex_match(text: str, word: str, symbols: str = "ab") -> bool:
    return word in regex_words(text, symbols, len(word))


def z_formula(x: int, w: str) -> int | None:
    """The displayed case table for the ℤ machine on {0, 1}."""
    norm = w.count("a") - w.count("b")
    if x == 0:
        return {0: 0, 1: 1}.get(norm)
    return {-1: 0, 0: 1}.get(norm)


def prefix_kernel(words: set[str]) -> set[str]:
    return {w for w in words if not any(w[:i] in words for i in range(len(w)))}


def is_prefix_code(words: set[str]) -> bool:
    if "" in words:
        return words == {""}
    return all(not any(w[:i] in words for i in range(1, len(w))) for w in words)


def star_upto(code: set[str], n: int) -> set[str]:
    """C* ∩ Σ^{≤n} by closing under concatenation."""
    out = {""}
    frontier = {""}
    while frontier:
        frontier = {u + c for u in frontier for c in code if c and len(u + c) <= n} - out
        out |= frontier
    return out


def hc_star_upto(H: set[str], C: set[str], n: int) -> set[str]:
    stars = star_upto(C, n)
    return {h + s for h in H for s in stars if len(h + s) <= n}


def suffix_signature(member, u: str, suffixes) -> tuple[bool, ...]:
    return tuple(member(u + s) for s in suffixes)


def reduction_components(m: PreactionMachine, max_tail: int) -> dict[tuple[str, str], int]:
    """Connected components of (x, uv) -- (xu, v) on pairs with tails ≤ max_tail.

    Breadth-first search over both directions of the reduction relation.
    """
    symbols = "".join(m.alphabet.symbols)
    tails = all_words(symbols, max_tail)
    nodes = [(x, w) for x in m.states for w in tails]
    adj: dict[tuple[str, str], list] = {p: [] for p in nodes}
    for x, w in nodes:
        for i in range(1, len(w) + 1):
            y = m.eval(x, w[:i])
            if y is not None:
                adj[(x, w)].append((y, w[i:]))
                adj[(y, w[i:])].append((x, w))
    comp: dict[tuple[str, str], int] = {}
    for start in nodes:
        if start in comp:
            continue
        cid = len(set(comp.values()))
        comp[start] = cid
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in adj[p]:
                if q not in comp:
                    comp[q] = cid
                    queue.append(q)
    return comp


def prefix_balances(w: str, plus: str, minus: str) -> list[int]:
    total, out = 0, []
    for ch in w:
        total += (ch == plus) - (ch == minus)
        out.append(total)
    return out


def zero_simple_direct(w: str) -> bool:
    """Every nonempty prefix has strictly negative a-minus-b balance."""
    return all(s < 0 for s in prefix_balances(w, "a", "b"))


def one_simple_direct(w: str) -> bool:
    return all(s > 0 for s in prefix_balances(w, "a", "b"))


def least_period(seq: list[bool], bound: int) -> tuple[int, int] | None:
    for p in range(bound + 1):
        for q in range(1, (bound - p) // 2 + 1):
            if all(seq[k] == seq[k + q] for k in range(p, bound - q + 1)):
                return p, q
    return None


def equal_blocks_direct(w: str) -> bool:
    n = len(w) // 2
    return n >= 1 and w == "a" * n + "b" * n


def _star_of(w: str, piece) -> bool:
    reach = [True] + [False] * len(w)
    for j in range(1, len(w) + 1):
        reach[j] = any(reach[i] and piece(w[i:j]) for i in range(j))
    return reach[len(w)]


def in_example3(w: str) -> bool:
    """a⁺ ∪ {aⁿbⁿ}."""
    return (w != "" and set(w) == {"a"}) or equal_blocks_direct(w)


def in_example4(w: str) -> bool:
    """{aⁿbⁿ}* a⁺."""
    k = len(w) - len(w.rstrip("a"))
    return any(_star_of(w[:len(w) - j], equal_blocks_direct) for j in range(1, k + 1))


def in_example5(w: str) -> bool:
    """({aⁿbⁿ} ∪ {a})*."""
    return _star_of(w, lambda p: p == "a" or equal_blocks_direct(p))
