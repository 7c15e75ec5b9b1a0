"""Machines and languages shared by the test modules."""
from __future__ import annotations

import numpy as np

from preact import regular
from preact.languages import AB, EqualBlocks, IdealLanguage, RegularLanguage
from preact.preaction import (
    FiniteRestriction, MembershipDriven, PLanguageMachine, product, restrict, trivial_machine,
    z_machine,
)
from preact.recognition import Preacceptor
from preact.regular import Dfa
from preact.words import Alphabet, balance

A1 = Alphabet("a")


def host(alphabet: Alphabet, rows, names, initial=0, accepting=()) -> Dfa:
    acc = np.zeros(len(rows), dtype=bool)
    acc[list(accepting)] = True
    return Dfa(alphabet, np.array(rows, dtype=np.int32), initial, acc, tuple(names))


def mod3_restriction() -> FiniteRestriction:
    """ℤ/3 under a: +1, b: -1, observed on {0, 1}."""
    h = host(AB, [[1, 2], [2, 0], [0, 1]], ["0", "1", "2"])
    return restrict(h, ["0", "1"])


def chain_restriction() -> FiniteRestriction:
    """A 3-state host with a sink-like top state, observed on its ends."""
    h = host(AB, [[1, 0], [2, 0], [2, 1]], ["p", "q", "r"])
    return restrict(h, ["p", "r"])


def three_cycle() -> Dfa:
    return host(A1, [[1], [2], [0]], ["0", "1", "2"])


class ClampedLetterwise(FiniteRestriction):
    """A corrupted restriction of ℤ: truncated host, letter-by-letter endpoint.

    The host is ℤ clamped to {-1, 0, 1, 2}.  Definedness is decided by the
    true balance, as if intermediate states did not matter, but the endpoint
    is read off the clamped letter-by-letter run.
    """

    def __init__(self):
        h = host(AB, [[1, 0], [2, 0], [3, 1], [3, 2]], ["-1", "0", "1", "2"])
        super().__init__(h, ["0", "1"])

    def _eval(self, x, w):
        if int(x) + balance(w, "a", "b") not in (0, 1):
            return None
        return super()._eval(x, w)

    def eval_table(self, words):
        return super(FiniteRestriction, self).eval_table(words)


def z_acceptor(terminal=("1",)) -> Preacceptor:
    return Preacceptor(z_machine(), "0", tuple(terminal))


def equal_blocks_acceptor() -> Preacceptor:
    m = MembershipDriven(EqualBlocks(AB))
    return Preacceptor(m, m.initial, m.terminal)


def ideal_acceptor() -> Preacceptor:
    m = MembershipDriven(IdealLanguage(AB, ["ab"]))
    return Preacceptor(m, m.initial, m.terminal)


def dfa_acceptor(regex: str, alphabet: Alphabet = AB) -> Preacceptor:
    """Full-observable restriction of the minimal automaton of a regex."""
    d = regular.compile_regex(regex, alphabet)
    m = restrict(d, d.state_names)
    return Preacceptor(m, d.state_names[d.initial],
                       tuple(d.state_names[i] for i in np.flatnonzero(d.accepting)))


# (name, H, C) with codes as regexes in the package dialect
P_CORPUS = [
    ("ab-aa", "ab", "aa"),
    ("empty-H", "%0", "ab"),
    ("eps-H", "%e", "ab"),
    ("eps-C", "a|ba", "%e"),
    ("regular", "a*b", "ab|b"),
    ("mixed", "b|ab", "aa|ab|b"),
]


def p_machine(H: str, C: str) -> PLanguageMachine:
    return PLanguageMachine(regular.compile_regex(H, AB), regular.compile_regex(C, AB))


def shipped_machines():
    """Every backend instance the axiom criterion covers, by name."""
    z = z_machine()
    out = {"z": z, "mod3": mod3_restriction(), "chain": chain_restriction(),
           "three-cycle": restrict(three_cycle(), ["0"]),
           "trivial": trivial_machine(AB),
           "example1": MembershipDriven(EqualBlocks(AB)),
           "example2": MembershipDriven(IdealLanguage(AB, ["ab"])),
           "z x z": product(z, z),
           "z x mod3": product(z, mod3_restriction()),
           "example1 x example2": product(MembershipDriven(EqualBlocks(AB)),
                                          MembershipDriven(IdealLanguage(AB, ["ab"])))}
    for name, H, C in P_CORPUS:
        out[f"p:{name}"] = p_machine(H, C)
    return out


def unary_corpus():
    """(name, acceptor) pairs over the one-letter alphabet, all regular-backed."""
    even = restrict(host(A1, [[1], [0]], ["e", "o"]), ["e"])
    finite = host(A1, [[1], [2], [3], [3]], ["0", "1", "2", "3"])
    out = [
        ("even", Preacceptor(even, "e", ("e",))),
        ("finite {a, aa}", Preacceptor(restrict(finite, ["0", "1", "2"]), "0", ("1", "2"))),
        ("a*", Preacceptor(trivial_machine(A1), "*", ("*",))),
        ("mod 3 offset 1", Preacceptor(restrict(three_cycle(), ["0", "1"]), "0", ("1",))),
    ]
    pm = PLanguageMachine(regular.compile_regex("aa", A1), regular.compile_regex("aaa", A1))
    out.append(("aa(aaa)*", Preacceptor(pm, pm.initial, (pm.terminal,))))
    rl = MembershipDriven(RegularLanguage.from_regex("a(aa)*|aaaa", A1))
    out.append(("a(aa)*|aaaa", Preacceptor(rl, rl.initial, rl.terminal)))
    return out
