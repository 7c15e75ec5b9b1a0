"""Trimming, syntactic equivalence and minimal preacceptors."""
from __future__ import annotations

from dataclasses import dataclass

from . import regular
from .errors import AlphabetError
from .languages import Language, PredicateLanguage, RegularLanguage
from .preaction import FiniteRestriction, MembershipDriven, SubMachine
from .recognition import Preacceptor, bounded_right_congruence
from .regular import Dfa
from .words import Alphabet, Word


def trim(acc: Preacceptor) -> Preacceptor:
    """Restrict the machine to the initial and terminal states."""
    keep = {acc.initial, *acc.terminal}
    m = acc.machine
    if isinstance(m, FiniteRestriction):
        sub = FiniteRestriction(m.host, [x for x in m.states if x in keep])
    elif keep == set(m.states):
        sub = m
    else:
        sub = SubMachine(m, keep)
    return Preacceptor(sub, acc.initial, acc.terminal)


@dataclass
class MinimalPreacceptor:
    representatives: list[Word]
    acceptor: Preacceptor
    provenance: str

    @property
    def machine(self) -> MembershipDriven:
        return self.acceptor.machine

    @property
    def n_states(self) -> int:
        return len(self.acceptor.machine.states)

    @property
    def exact(self) -> bool:
        return self.provenance == "exact"

    def class_table(self) -> list[tuple[str, Word, bool, bool]]:
        """Rows (state, representative, initial?, terminal?)."""
        m = self.acceptor.machine
        rows = []
        for x in m.states:
            rep = m.representative_of(x)
            rows.append((x, rep, x == self.acceptor.initial, x in self.acceptor.terminal))
        return rows


def _from_machine(m: MembershipDriven) -> MinimalPreacceptor:
    acc = Preacceptor(m, m.initial, m.terminal)
    reps = [m.representative_of(x) for x in m.states]
    return MinimalPreacceptor(reps, acc, m.provenance)


def minimal_preacceptor(language: Language) -> MinimalPreacceptor:
    """Exact construction for any language with an exact class rule."""
    if not language.exact:
        raise ValueError(f"{language.describe()} has no exact class rule; use the bounded variant")
    return _from_machine(MembershipDriven(language))


def minimal_preacceptor_regular(L: Dfa | RegularLanguage) -> MinimalPreacceptor:
    language = L if isinstance(L, RegularLanguage) else RegularLanguage(L)
    return minimal_preacceptor(language)


def minimal_preacceptor_bounded(language, m: int, n: int,
                                alphabet: Alphabet | None = None) -> MinimalPreacceptor:
    """Classes from ~ₙ on the members of length at most ``m``.

    States are identified by their suffix signature, so the machine is only
    trustworthy on the lengths that were tested.
    """
    if m < 1 or n < 1:
        raise ValueError("bounds must be positive")
    if not isinstance(language, Language):
        language = PredicateLanguage(alphabet, language)
    suffixes = language.alphabet.words_upto(n)

    def signature(word: Word):
        return tuple(language.contains(word + w) for w in suffixes)

    members = language.members_upto(m)
    partition = bounded_right_congruence(language, members, n)
    machine = MembershipDriven(language, partition.representatives, classify=signature,
                               provenance=f"bounded({n})", bounds=(m, n))
    return _from_machine(machine)


@dataclass
class EquivalenceReport:
    equivalent: bool
    exact: bool
    bound: int | None
    witness: Word | None = None


def compare_acceptors(a1: Preacceptor, a2: Preacceptor, n: int = 6,
                      exact: bool = False) -> EquivalenceReport:
    if a1.alphabet != a2.alphabet:
        raise AlphabetError(f"alphabet mismatch: {a1.alphabet} vs {a2.alphabet}")
    if exact:
        d1, d2 = a1.regular_language(), a2.regular_language()
        if d1 is None or d2 is None:
            raise ValueError("exact comparison needs both languages to be regular-backed")
        diff = regular.symmetric_difference(d1, d2)
        witness = regular.shortest_word(diff)
        return EquivalenceReport(witness is None, True, None, witness)
    for w in a1.alphabet.words_upto(n):
        if a1.accepts(w) != a2.accepts(w):
            return EquivalenceReport(False, False, n, w)
    return EquivalenceReport(True, False, n)


def syntactically_equivalent(a1: Preacceptor, a2: Preacceptor, n: int = 6,
                             exact: bool = False) -> bool:
    return compare_acceptors(a1, a2, n, exact).equivalent

