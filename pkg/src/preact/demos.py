"""Self-contained reproductions of the worked examples.

Each demo builds its machines from embedded descriptions and returns a
:class:`Report` holding printable lines, a JSON mirror and a verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .globalization import expand, freeness_probe, is_one_simple, is_zero_simple
from .languages import (
    AB, EqualBlocks, IdealLanguage, example3_language, example4_language, example5_language,
)
from .minimization import minimal_preacceptor_bounded
from .preaction import check_axioms, trivial_machine, z_machine
from .recognition import language_upto, nonrecognizability_witness
from .words import show_word


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    ok: bool = True

    def add(self, line: str = ""):
        self.lines.append(line)


def _show_words(words, limit: int = 12) -> str:
    shown = ", ".join(show_word(w) for w in words[:limit])
    if len(words) > limit:
        shown += f", ... ({len(words)} words)"
    return "{" + shown + "}"


def _minimal_demo(name: str, language, bound: int) -> Report:
    m_len = max(bound, 2)
    minimal = minimal_preacceptor_bounded(language, m_len, bound)
    accepted = language_upto(minimal.acceptor, bound)
    expected = language.members_upto(bound)
    axioms = check_axioms(minimal.machine, bound)
    rep = Report()
    rep.add(f"{name}: {language.describe()}")
    rep.add(f"bound: members up to length {m_len}, suffixes up to length {bound}")
    rep.add(f"minimal preacceptor: {minimal.n_states} states ({minimal.provenance})")
    for state, word, initial, terminal in minimal.class_table():
        flags = ",".join(f for f, on in (("initial", initial), ("terminal", terminal)) if on)
        rep.add(f"  {state:<8} rep={show_word(word):<6} {flags}")
    rep.add(f"accepted up to length {bound}: {_show_words(accepted)}")
    rep.add(f"matches membership up to length {bound}: {accepted == expected}")
    rep.add(f"axioms up to length {bound}: {'PASS' if axioms.passed else 'FAIL'}")
    rep.ok = accepted == expected and axioms.passed
    rep.data = {
        "demo": name, "language": language.to_json(), "bound": bound, "length_bound": m_len,
        "states": minimal.n_states, "provenance": minimal.provenance,
        "classes": [{"state": s, "representative": w, "initial": i, "terminal": t}
                    for s, w, i, t in minimal.class_table()],
        "accepted": accepted, "matches": accepted == expected, "axioms": axioms.passed,
    }
    return rep


def example1(bound: int = 6) -> Report:
    return _minimal_demo("example1", EqualBlocks(AB), bound)


def example2(bound: int = 6) -> Report:
    return _minimal_demo("example2", IdealLanguage(AB, ["ab"]), bound)


# Every word of K ends in a, so the b-blocks need a closing a to land in K.
_NONREC = {
    "example3": (example3_language, ""),
    "example4": (example4_language, "a"),
    "example5": (example5_language, ""),
}


def nonrec_demo(name: str, bound: int = 6) -> Report:
    build, closing = _NONREC[name]
    language = build()
    candidates = ["a" * i for i in range(1, bound + 1)]
    suffixes = ["b" * i + closing for i in range(1, bound + 1)]
    ev = nonrecognizability_witness(language, bound, candidates, suffixes)
    rep = Report()
    rep.add(f"{name}: {language.describe()}")
    rep.add(f"bound: {bound}")
    rep.add(f"candidates: a^1 .. a^{bound}; separators searched in b^k{closing} for k <= {bound}")
    rep.add(f"{'u':<10} {'v':<10} separator")
    for (u, v), s in ev.separators.items():
        rep.add(f"{u:<10} {v:<10} {'-' if s is None else s}")
    rep.add(f"pairwise inequivalent: {ev.inequivalent_candidates} of {len(candidates)}"
            f" ({'all separated' if ev.pairwise_inequivalent else 'some pairs unseparated'})")
    rep.add(f"right classes inside the language among members up to length {bound}: {ev.classes_inside}")
    rep.ok = ev.pairwise_inequivalent
    rep.data = {
        "demo": name, "language": language.to_json(), "bound": bound,
        "candidates": candidates, "suffix_family": suffixes,
        "separators": [{"u": u, "v": v, "suffix": s} for (u, v), s in ev.separators.items()],
        "inequivalent_candidates": ev.inequivalent_candidates,
        "classes_inside": ev.classes_inside, "all_separated": ev.pairwise_inequivalent,
    }
    return rep


def z_globalization(depth: int = 6) -> Report:
    m = z_machine()
    classes = expand(m, depth)
    rep = Report()
    rep.add(f"z-globalization: integer translation a:+1 b:-1 observed on {{0,1}}")
    rep.add(f"depth: {depth}")
    rows, ok = [], True
    for c in classes:
        simple = is_zero_simple(c.tail) if c.anchor == "0" else is_one_simple(c.tail)
        kind = "0-simple" if c.anchor == "0" else "1-simple"
        ok &= simple
        rows.append({"class": str(c), "anchor": c.anchor, "tail": c.tail, "check": kind, "holds": simple})
        rep.add(f"  {str(c):<12} {kind} {'yes' if simple else 'NO'}")
    rep.add(f"classes: {len(classes)}; all tails simple for their anchor: {ok}")
    rep.ok = ok
    rep.data = {"demo": "z-globalization", "depth": depth, "classes": rows, "all_simple": ok}
    return rep


def prop1(word_len: int = 3, depth: int = 6) -> Report:
    rep = Report()
    rep.add(f"prop1: freeness probe, word length {word_len}, depth {depth}")
    data = {"demo": "prop1", "word_len": word_len, "depth": depth}
    for label, m in (("z machine", z_machine()), ("one-state total machine", trivial_machine(AB))):
        r = freeness_probe(m, word_len, depth)
        if r.all_separated:
            verdict = f"all word pairs up to length {word_len} separated"
        else:
            u, v = r.first_unseparated
            verdict = f"no separation found for ({show_word(u)},{show_word(v)})"
        rep.add(f"  {label}: {verdict} ({len(r.separated)} separated, {len(r.unseparated)} not)")
        data[label.replace(" ", "_").replace("-", "_")] = {
            "all_separated": r.all_separated, "separated": len(r.separated),
            "unseparated": [list(p) for p in r.unseparated],
        }
    rep.ok = data["z_machine"]["all_separated"]
    rep.data = data
    return rep


DEMOS = ("example1", "example2", "example3", "example4", "example5", "z-globalization", "prop1")


def run_demo(name: str, bound: int = 6, depth: int = 6, max_len: int = 3) -> Report:
    if name == "example1":
        return example1(bound)
    if name == "example2":
        return example2(bound)
    if name in _NONREC:
        return nonrec_demo(name, bound)
    if name == "z-globalization":
        return z_globalization(depth)
    if name == "prop1":
        return prop1(max_len, depth)
    raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}")
