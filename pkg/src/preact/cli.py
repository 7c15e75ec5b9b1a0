"""Command-line driver: ``preact <command> ...``.

Exit status is 0 on success, 1 when a check reports a negative result
(axiom violation, non-equivalence, unseparated pair, not a prefix code)
and 2 on usage, file or schema errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import regular
from .demos import DEMOS, Report, run_demo
from .errors import PreactError
from .globalization import (
    act, approx_related, expand, freeness_probe, normalize,
)
from .io import MachineFile, load_json, document, dumps, read_language
from .languages import Language, PredicateLanguage, RegularLanguage
from .minimization import (
    compare_acceptors, minimal_preacceptor, minimal_preacceptor_bounded, trim,
)
from .preaction import MembershipDriven, check_axioms
from .prefix import (
    decompose, decomposition_check, parse_code, prefix_code_violation, unique_factorization,
)
from .recognition import (
    bounded_right_congruence, default_sample, intersect_acceptors, language_upto,
    nonrecognizability_witness, unary_periodicity_probe,
)
from .words import Alphabet, read_word, show_word

DEFAULT_BOUND = 6


class UsageError(Exception):
    pass


# -- helpers -----------------------------------------------------------------------

def _words(items) -> str:
    return "{" + ", ".join(show_word(w) for w in items) + "}"


def _word_list(text: str | None, alphabet: Alphabet) -> list[str] | None:
    if text is None:
        return None
    if text.strip() == "":
        return []
    return [alphabet.check(read_word(t.strip())) for t in text.split(",")]


def _word(text: str | None, alphabet: Alphabet, flag: str = "--word") -> str:
    if text is None:
        raise UsageError(f"{flag} is required")
    return alphabet.check(read_word(text))


def _state(text: str | None, mf: MachineFile) -> str:
    if text is None:
        raise UsageError("--state is required")
    mf.machine.state_index(text)
    return text


def _nonneg(value: int, flag: str) -> int:
    if value < 0:
        raise UsageError(f"{flag} must be nonnegative")
    return value


def _language_source(path: str) -> Language:
    """A language file, or a machine file whose acceptor defines the language."""
    data = load_json(path)
    if isinstance(data, dict) and "language" in data:
        return read_language(data["language"], Alphabet(data.get("alphabet", "")))
    mf = MachineFile(data, path)
    acc = mf.require_acceptor()
    m = acc.machine
    if isinstance(m, MembershipDriven) and (acc.initial, acc.terminal) == (m.initial, m.terminal):
        return m.language
    d = acc.regular_language()
    if d is not None:
        return RegularLanguage(d)
    return PredicateLanguage(acc.alphabet, acc.accepts, f"language of {Path(path).name}")


def _alphabet_arg(args) -> Alphabet:
    return Alphabet(args.alphabet)


def _code(text: str, alphabet: Alphabet, as_words: bool):
    if as_words:
        return regular.from_words(alphabet, _word_list(text, alphabet))
    return parse_code(text, alphabet)


# -- commands ----------------------------------------------------------------------

def cmd_eval(args) -> Report:
    mf = MachineFile.load(args.file)
    x = _state(args.state, mf)
    w = _word(args.word, mf.alphabet)
    y = mf.machine.eval(x, w)
    return Report([y if y is not None else "undefined"],
                  {"state": x, "word": w, "result": y, "defined": y is not None})


def cmd_check_axioms(args) -> Report:
    mf = MachineFile.load(args.file)
    n = args.max_len
    if n < 1:
        raise UsageError("--max-len must be at least 1")
    r = check_axioms(mf.machine, n)
    lines = ["PASS" if r.passed else "FAIL", f"max-len: {n}",
             f"checked: {r.checked} (state, u, v) triples"]
    shown = r.witnesses[:args.limit]
    lines += [f"  {w}" for w in shown]
    if len(r.witnesses) > len(shown):
        lines.append(f"  ... {len(r.witnesses) - len(shown)} more witnesses")
    data = {"passed": r.passed, "max_len": n, "checked": r.checked,
            "witnesses": [{"state": w.state, "u": w.u, "v": w.v, "axiom": w.axiom}
                          for w in r.witnesses]}
    return Report(lines, data, r.passed)


def cmd_globalize(args) -> Report:
    mf = MachineFile.load(args.file)
    if args.word is not None or args.state is not None:
        x = _state(args.state, mf)
        w = _word(args.word, mf.alphabet)
        c = normalize(mf.machine, x, w)
        return Report([str(c)], {"state": x, "word": w, "class": str(c),
                                 "anchor": c.anchor, "tail": c.tail})
    depth = _nonneg(args.depth, "--depth")
    classes = expand(mf.machine, depth)
    lines = [f"depth: {depth}", f"classes: {len(classes)}"] + [f"  {c}" for c in classes]
    return Report(lines, {"depth": depth,
                          "classes": [{"anchor": c.anchor, "tail": c.tail} for c in classes]})


def cmd_classes_equal(args) -> Report:
    mf = MachineFile.load(args.file)
    m = mf.machine
    p = (_state(args.x1, mf), _word(args.w1, mf.alphabet, "first word"))
    q = (_state(args.x2, mf), _word(args.w2, mf.alphabet, "second word"))
    c1, c2 = normalize(m, *p), normalize(m, *q)
    direct = approx_related(m, p, q)
    equal = c1 == c2
    lines = ["equal" if equal else "not equal", f"normal forms: {c1} {c2}",
             f"direct decomposition test agrees: {direct == equal}"]
    return Report(lines, {"equal": equal, "first": str(c1), "second": str(c2),
                          "direct": direct})


def cmd_act(args) -> Report:
    mf = MachineFile.load(args.file)
    x = _state(args.state, mf)
    tail = _word(args.tail or "", mf.alphabet, "--tail")
    w = _word(args.word, mf.alphabet)
    c = normalize(mf.machine, x, tail)
    out = act(mf.machine, c, w)
    return Report([str(out)], {"class": str(c), "word": w, "result": str(out),
                               "anchor": out.anchor, "tail": out.tail})


def cmd_freeness(args) -> Report:
    mf = MachineFile.load(args.file)
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    depth = _nonneg(args.depth, "--depth")
    r = freeness_probe(mf.machine, args.max_len, depth)
    lines = [f"max-len: {args.max_len}", f"depth: {depth}"]
    if r.all_separated:
        lines.insert(0, f"all word pairs up to length {args.max_len} separated")
    else:
        u, v = r.first_unseparated
        lines.insert(0, f"no separation found for ({show_word(u)},{show_word(v)})")
    lines.append(f"separated pairs: {len(r.separated)}; unseparated: {len(r.unseparated)}")
    if args.verbose:
        lines += [f"  {show_word(u)} {show_word(v)} by {c}" for u, v, c in r.separated]
    data = {"max_len": args.max_len, "depth": depth, "all_separated": r.all_separated,
            "separated": [{"u": u, "v": v, "class": str(c)} for u, v, c in r.separated],
            "unseparated": [{"u": u, "v": v} for u, v in r.unseparated]}
    return Report(lines, data, r.all_separated)


def cmd_member(args) -> Report:
    mf = MachineFile.load(args.file)
    acc = mf.require_acceptor()
    w = _word(args.word, mf.alphabet)
    ok = acc.accepts(w)
    return Report(["accepted" if ok else "rejected"], {"word": w, "accepted": ok})


def cmd_lang(args) -> Report:
    mf = MachineFile.load(args.file)
    n = _nonneg(args.bound, "--bound")
    words = language_upto(mf.require_acceptor(), n)
    lines = [f"bound: {n}", f"count: {len(words)}"] + [f"  {show_word(w)}" for w in words]
    return Report(lines, {"bound": n, "words": words})


def cmd_congruence(args) -> Report:
    language = _language_source(args.file)
    n = _nonneg(args.bound, "--bound")
    sample_len = n if args.max_len is None else _nonneg(args.max_len, "--max-len")
    extras = _word_list(args.sample, language.alphabet) or []
    sample = default_sample(language.alphabet, sample_len, extras)
    if args.only_sample:
        sample = language.alphabet.sorted(set(extras))
    part = bounded_right_congruence(language, sample, n)
    lines = [f"bound: {n}", f"sample: {len(part.sample)} words", f"blocks: {len(part.blocks)}",
             f"{'word':<12} block"]
    lines += [f"{show_word(w):<12} {part.block_of[w]}" for w in part.sample]
    data = {"bound": n, "sample_max_len": sample_len,
            "blocks": part.blocks, "block_of": part.block_of}
    return Report(lines, data)


def cmd_witness_nonrec(args) -> Report:
    language = _language_source(args.file)
    n = args.bound
    if n < 1:
        raise UsageError("--bound must be at least 1")
    candidates = _word_list(args.candidates, language.alphabet)
    suffixes = _word_list(args.suffixes, language.alphabet)
    ev = nonrecognizability_witness(language, n, candidates, suffixes)
    lines = [f"bound: {n}", f"members up to length {n}: {len(ev.members)}",
             f"right classes inside the language among them: {ev.classes_inside}",
             f"candidates: {len(ev.candidates)}; pairwise inequivalent: {ev.inequivalent_candidates}",
             f"{'u':<12} {'v':<12} separator"]
    lines += [f"{show_word(u):<12} {show_word(v):<12} {'none' if s is None else show_word(s)}"
              for (u, v), s in ev.separators.items()]
    data = {"bound": n, "members": len(ev.members), "classes_inside": ev.classes_inside,
            "candidates": ev.candidates, "candidate_blocks": ev.candidate_blocks,
            "inequivalent_candidates": ev.inequivalent_candidates,
            "separators": [{"u": u, "v": v, "suffix": s} for (u, v), s in ev.separators.items()]}
    return Report(lines, data)


def cmd_intersect(args) -> Report:
    a1 = MachineFile.load(args.first).require_acceptor()
    a2 = MachineFile.load(args.second).require_acceptor()
    n = _nonneg(args.bound, "--bound")
    acc = intersect_acceptors(a1, a2)
    words = language_upto(acc, n)
    pointwise = all(acc.accepts(w) == (a1.accepts(w) and a2.accepts(w))
                    for w in acc.alphabet.words_upto(n))
    doc = document(acc.machine, acc)
    lines = [f"bound: {n}", f"product states: {len(acc.machine.states)}",
             f"initial: {acc.initial}", f"terminal: {', '.join(acc.terminal) or '(none)'}",
             f"accepted up to length {n}: {_words(words)}",
             f"agrees with pointwise conjunction up to length {n}: {pointwise}"]
    _write_or_show(args.output, doc, lines)
    return Report(lines, {"bound": n, "words": words, "pointwise": pointwise, "machine": doc},
                  pointwise)


def cmd_unary_probe(args) -> Report:
    acc = MachineFile.load(args.file).require_acceptor()
    n = _nonneg(args.bound, "--bound")
    found = unary_periodicity_probe(acc, n)
    if found is None:
        line = f"no periodic pattern within bound {n}"
    else:
        line = f"preperiod {found[0]}, period {found[1]}"
    return Report([line, f"bound: {n}"], {"bound": n,
                                          "preperiod": None if found is None else found[0],
                                          "period": None if found is None else found[1]})


def _parse_mn(text: str) -> tuple[int, int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"--bound expects M,N or N, got {text!r}") from None
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or min(parts) < 1:
        raise UsageError(f"--bound expects two positive integers M,N, got {text!r}")
    return parts[0], parts[1]


def cmd_minimize(args) -> Report:
    language = _language_source(args.file)
    if args.exact:
        if not language.exact:
            raise UsageError("this language has no exact class rule; use --bound M,N")
        minimal = minimal_preacceptor(language)
        bound_line = "bound: exact"
        bounds = None
    else:
        m, n = _parse_mn(args.bound)
        minimal = minimal_preacceptor_bounded(language, m, n)
        bound_line = f"bound: members up to length {m}, suffixes up to length {n}"
        bounds = [m, n]
    doc = document(minimal.machine, minimal.acceptor)
    lines = [bound_line, f"states: {minimal.n_states} ({minimal.provenance})",
             f"{'state':<10} {'rep':<10} flags"]
    for state, rep, initial, terminal in minimal.class_table():
        flags = ",".join(f for f, on in (("initial", initial), ("terminal", terminal)) if on)
        lines.append(f"{state:<10} {show_word(rep):<10} {flags}")
    _write_or_show(args.output, doc, lines)
    data = {"bounds": bounds, "provenance": minimal.provenance, "states": minimal.n_states,
            "classes": [{"state": s, "representative": r, "initial": i, "terminal": t}
                        for s, r, i, t in minimal.class_table()],
            "machine": doc}
    return Report(lines, data)


def cmd_equiv(args) -> Report:
    a1 = MachineFile.load(args.first).require_acceptor()
    a2 = MachineFile.load(args.second).require_acceptor()
    n = _nonneg(args.bound, "--bound")
    r = compare_acceptors(a1, a2, n, exact=args.exact)
    scope = "exact" if r.exact else f"up to length {n}"
    lines = [("equivalent" if r.equivalent else "not equivalent") + f" ({scope})"]
    if r.witness is not None:
        lines.append(f"witness: {show_word(r.witness)}")
    lines.append(f"bound: {'exact' if r.exact else n}")
    return Report(lines, {"equivalent": r.equivalent, "exact": r.exact, "bound": r.bound,
                          "witness": r.witness}, r.equivalent)


def cmd_trim(args) -> Report:
    mf = MachineFile.load(args.file)
    acc = mf.require_acceptor()
    n = _nonneg(args.bound, "--bound")
    t = trim(acc)
    same = all(acc.accepts(w) == t.accepts(w) for w in acc.alphabet.words_upto(n))
    doc = document(t.machine, t)
    lines = [f"states: {len(acc.machine.states)} -> {len(t.machine.states)}",
             f"kept: {', '.join(t.machine.states)}",
             f"same language up to length {n}: {same}", f"bound: {n}"]
    _write_or_show(args.output, doc, lines)
    return Report(lines, {"bound": n, "before": len(acc.machine.states),
                          "after": len(t.machine.states), "same_language": same,
                          "machine": doc}, same)


def cmd_decompose(args) -> Report:
    acc = MachineFile.load(args.file).require_acceptor()
    n = _nonneg(args.bound, "--bound")
    parts = decompose(acc, n)
    disjoint, covers = decomposition_check(acc, parts, n)
    lines = [f"bound: {n}", f"components: {len(parts)}"]
    data = {"bound": n, "components": [], "disjoint": disjoint, "covers": covers}
    for p in parts:
        H, C = p.words(n)
        how = "exact" if p.exact else f"enumerated up to length {p.bound}"
        lines += [f"terminal {p.state} ({how}):",
                  f"  H up to length {n}: {_words(H)}", f"  C up to length {n}: {_words(C)}"]
        entry = {"state": p.state, "exact": p.exact, "H": H, "C": C}
        if p.exact:
            entry["H_dfa"], entry["C_dfa"] = regular.to_json(p.H), regular.to_json(p.C)
        data["components"].append(entry)
    lines += [f"pairwise disjoint up to length {n}: {disjoint}",
              f"union equals the accepted language up to length {n}: {covers}"]
    return Report(lines, data, disjoint and covers)


def cmd_prefix_check(args) -> Report:
    alphabet = _alphabet_arg(args)
    code = _code(args.code, alphabet, args.words)
    bad = prefix_code_violation(code)
    if bad is None:
        return Report(["prefix code"], {"prefix_code": True, "witness": None})
    u, v = bad
    return Report(["not a prefix code", f"witness: {show_word(u)} is a proper prefix of {show_word(v)}"],
                  {"prefix_code": False, "witness": {"prefix": u, "word": v}}, False)


def cmd_factorize(args) -> Report:
    alphabet = _alphabet_arg(args)
    w = _word(args.word, alphabet, "word")
    codes = [_code(c, alphabet, args.words) for c in args.codes]
    parts = unique_factorization(w, codes)
    if parts is None:
        return Report(["not a member"], {"word": w, "factorization": None})
    return Report([" ".join(show_word(p) for p in parts)], {"word": w, "factorization": list(parts)})


def cmd_demo(args) -> Report:
    rep = run_demo(args.name, bound=args.bound, depth=args.depth, max_len=args.max_len)
    return rep


def _write_or_show(output: str | None, doc: dict, lines: list[str]):
    if output:
        Path(output).write_text(dumps(doc) + "\n")
        lines.append(f"machine written to {output}")
    else:
        lines.append("machine:")
        lines.extend(dumps(doc).splitlines())


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    p = argparse.ArgumentParser(prog="preact", description="Preautomata toolkit.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(func=func)
        return sp

    def bound(sp, default=DEFAULT_BOUND, help_text="length bound"):
        sp.add_argument("--bound", type=int, default=default, help=f"{help_text} (default {default})")

    sp = add("eval", cmd_eval, "evaluate a word on a state")
    sp.add_argument("file")
    sp.add_argument("--state")
    sp.add_argument("--word")

    sp = add("check-axioms", cmd_check_axioms, "exhaustively check the preaction axioms")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--limit", type=int, default=20, help="witnesses to print")

    sp = add("globalize", cmd_globalize, "normal form of a pair, or all classes up to a depth")
    sp.add_argument("file")
    sp.add_argument("--state")
    sp.add_argument("--word")
    sp.add_argument("--depth", type=int, default=DEFAULT_BOUND)

    sp = add("classes-equal", cmd_classes_equal, "compare the classes of two pairs")
    sp.add_argument("file")
    for name in ("x1", "w1", "x2", "w2"):
        sp.add_argument(name)

    sp = add("act", cmd_act, "act on a class [state|tail] by a word")
    sp.add_argument("file")
    sp.add_argument("--state")
    sp.add_argument("--tail", default="")
    sp.add_argument("--word")

    sp = add("freeness", cmd_freeness, "separate short words by globalized classes")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--depth", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--verbose", action="store_true")

    sp = add("member", cmd_member, "membership in the recognized language")
    sp.add_argument("file")
    sp.add_argument("--word")

    sp = add("lang", cmd_lang, "list the recognized language up to a length")
    sp.add_argument("file")
    bound(sp)

    sp = add("congruence", cmd_congruence, "bounded right congruence on a sample")
    sp.add_argument("file", help="language file or machine file with an acceptor")
    bound(sp, help_text="suffix length")
    sp.add_argument("--max-len", type=int, help="sample word length (default: the bound)")
    sp.add_argument("--sample", help="extra sample words, comma separated")
    sp.add_argument("--only-sample", action="store_true", help="use only the --sample words")

    sp = add("witness-nonrec", cmd_witness_nonrec, "bounded evidence of many classes")
    sp.add_argument("file")
    bound(sp)
    sp.add_argument("--candidates", help="comma separated candidate words")
    sp.add_argument("--suffixes", help="comma separated separator family, in search order")

    sp = add("intersect", cmd_intersect, "product of two preacceptors")
    sp.add_argument("first")
    sp.add_argument("second")
    bound(sp)
    sp.add_argument("--output")

    sp = add("unary-probe", cmd_unary_probe, "ultimately periodic pattern of a unary acceptor")
    sp.add_argument("file")
    bound(sp)

    sp = add("minimize", cmd_minimize, "minimal preacceptor of a language")
    sp.add_argument("file")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--bound", help="M,N: member length and suffix length")
    sp.add_argument("--output")

    sp = add("equiv", cmd_equiv, "syntactic equivalence of two preacceptors")
    sp.add_argument("first")
    sp.add_argument("second")
    bound(sp)
    sp.add_argument("--exact", action="store_true")

    sp = add("trim", cmd_trim, "restrict to the initial and terminal states")
    sp.add_argument("file")
    bound(sp)
    sp.add_argument("--output")

    sp = add("decompose", cmd_decompose, "split the language into p-languages")
    sp.add_argument("file")
    bound(sp)

    sp = add("prefix-check", cmd_prefix_check, "is a language a prefix code")
    sp.add_argument("code", help="regex, or comma separated words with --words")
    sp.add_argument("--alphabet", default="ab")
    sp.add_argument("--words", action="store_true")

    sp = add("factorize", cmd_factorize, "unique factorization over prefix codes")
    sp.add_argument("word")
    sp.add_argument("codes", nargs="+")
    sp.add_argument("--alphabet", default="ab")
    sp.add_argument("--words", action="store_true")

    sp = add("demo", cmd_demo, "reproduce a worked example")
    sp.add_argument("name", choices=DEMOS)
    bound(sp)
    sp.add_argument("--depth", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--max-len", type=int, default=3, help="word length for prop1 (default 3)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"preact {args.command}: {exc}", file=sys.stderr)
        return 2
    except (PreactError, OSError, ValueError) as exc:
        print(f"preact {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(report.lines))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
