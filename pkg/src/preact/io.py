"""Reading and writing machine and language description files (JSON).

A machine file looks like::

    {"alphabet": "ab",
     "machine": {"kind": "integer_translation",
                 "vectors": {"a": [1], "b": [-1]}, "observable": [[0], [1]]},
     "acceptor": {"initial": "0", "terminal": ["1"]}}

Machine kinds: ``finite_restriction`` (``host``, ``observable``),
``integer_translation`` (``vectors``, ``observable``), ``p_language``
(``H``, ``C``), ``membership`` (``language``, optional ``representatives``
and ``bounds``), ``product`` (``first``, ``second``) and ``subset``
(``base``, ``states``).  Hosts and codes may be given inline as automata
(``states``/``initial``/``accepting``/``transitions`` or the line-oriented
text form); codes may also be regex strings or word lists.

A language is one of ``{"regex": ...}``, ``{"words": [...]}``,
``{"dfa": {...}}``, ``{"family": "equal_blocks" | "balance" | "ideal", ...}``,
``{"union" | "intersection" | "concat": [...]}``, ``{"star": ...}``,
``{"complement": ...}`` or ``{"builtin": "example3" | "example4" | "example5"}``.
"""
from __future__ import annotations

import json
from pathlib import Path

from . import languages as lang
from . import regular
from .errors import PreactError, SchemaError
from .minimization import minimal_preacceptor_bounded
from .preaction import (
    FiniteRestriction, IntegerTranslation, MembershipDriven, PLanguageMachine,
    PreactionMachine, Product, SubMachine,
)
from .recognition import Preacceptor
from .regular import Dfa
from .words import Alphabet

BUILTIN_LANGUAGES = {
    "example1": lambda a: lang.EqualBlocks(a),
    "example2": lambda a: lang.IdealLanguage(a, ["ab"]),
    "example3": lang.example3_language,
    "example4": lang.example4_language,
    "example5": lang.example5_language,
}


def _alphabet(data) -> Alphabet:
    try:
        return Alphabet(data["alphabet"])
    except KeyError:
        raise SchemaError("missing 'alphabet'") from None


def read_dfa(data, alphabet: Alphabet) -> Dfa:
    if isinstance(data, str):
        return regular.from_text(data, alphabet)
    if isinstance(data, dict):
        return regular.from_json(data, alphabet)
    raise SchemaError(f"cannot read an automaton from {type(data).__name__}")


def read_code(data, alphabet: Alphabet) -> Dfa:
    if isinstance(data, str):
        return regular.compile_regex(data, alphabet)
    if isinstance(data, list):
        return regular.from_words(alphabet, data)
    return read_dfa(data, alphabet)


def read_language(data, alphabet: Alphabet) -> lang.Language:
    if not isinstance(data, dict) or len(data) == 0:
        raise SchemaError(f"bad language description {data!r}")
    if "regex" in data:
        return lang.RegularLanguage.from_regex(data["regex"], alphabet)
    if "words" in data:
        return lang.RegularLanguage.from_words(alphabet, data["words"])
    if "dfa" in data:
        return lang.RegularLanguage(read_dfa(data["dfa"], alphabet))
    if "builtin" in data:
        try:
            return BUILTIN_LANGUAGES[data["builtin"]](alphabet)
        except KeyError:
            raise SchemaError(f"unknown builtin language {data['builtin']!r}") from None
    if "family" in data:
        family = data["family"]
        if family == "equal_blocks":
            return lang.EqualBlocks(alphabet, data.get("first", "a"), data.get("second", "b"))
        if family == "balance":
            return lang.BalanceLanguage(alphabet, data.get("plus", "a"), data.get("minus", "b"),
                                        int(data.get("value", 0)))
        if family == "ideal":
            return lang.IdealLanguage(alphabet, data["factors"])
        if family == "regular":
            return lang.RegularLanguage.from_regex(data["regex"], alphabet)
        raise SchemaError(f"unknown language family {family!r}")
    for key, cls in (("union", lang.UnionLanguage), ("intersection", lang.IntersectionLanguage),
                     ("concat", lang.ConcatLanguage)):
        if key in data:
            return cls([read_language(part, alphabet) for part in data[key]])
    if "star" in data:
        return lang.StarLanguage(read_language(data["star"], alphabet))
    if "complement" in data:
        return lang.ComplementLanguage(read_language(data["complement"], alphabet))
    raise SchemaError(f"unknown language description keys {sorted(data)}")


def read_machine(data, alphabet: Alphabet) -> PreactionMachine:
    try:
        kind = data["kind"]
        if kind == "finite_restriction":
            return FiniteRestriction(read_dfa(data["host"], alphabet), [str(x) for x in data["observable"]])
        if kind == "integer_translation":
            return IntegerTranslation(alphabet, data["vectors"], data["observable"])
        if kind == "p_language":
            return PLanguageMachine(read_code(data["H"], alphabet), read_code(data["C"], alphabet))
        if kind == "membership":
            language = read_language(data["language"], alphabet)
            reps = data.get("representatives")
            if data.get("bounds") is not None:
                m, n = data["bounds"]
                machine = minimal_preacceptor_bounded(language, int(m), int(n)).machine
                if reps is not None and list(reps) != machine.representatives:
                    raise SchemaError("representatives do not match the bounded classes")
                return machine
            return MembershipDriven(language, reps)
        if kind == "product":
            return Product(read_machine(data["first"], alphabet), read_machine(data["second"], alphabet))
        if kind == "subset":
            return SubMachine(read_machine(data["base"], alphabet), data["states"])
    except KeyError as exc:
        raise SchemaError(f"machine of kind {data.get('kind')!r}: missing field {exc}") from None
    except SchemaError:
        raise
    except (PreactError, ValueError, TypeError) as exc:
        raise SchemaError(f"machine of kind {data.get('kind')!r}: {exc}") from None
    raise SchemaError(f"unknown machine kind {kind!r}")


def machine_to_json(m: PreactionMachine) -> dict:
    if isinstance(m, FiniteRestriction):
        return {"kind": m.kind, "host": regular.to_json(m.host), "observable": list(m.states)}
    if isinstance(m, IntegerTranslation):
        return {"kind": m.kind, "vectors": {a: list(v) for a, v in m.vectors.items()},
                "observable": [list(p) for p in m.points]}
    if isinstance(m, PLanguageMachine):
        return {"kind": m.kind, "H": regular.to_json(m.H), "C": regular.to_json(m.C)}
    if isinstance(m, MembershipDriven):
        try:
            language = m.language.to_json()
        except NotImplementedError:
            raise SchemaError(f"cannot serialize the language {m.language.describe()}") from None
        out = {"kind": m.kind, "language": language,
               "representatives": list(m.representatives)}
        if m.bounds is not None:
            out["bounds"] = list(m.bounds)
        return out
    if isinstance(m, Product):
        return {"kind": m.kind, "first": machine_to_json(m.first), "second": machine_to_json(m.second)}
    if isinstance(m, SubMachine):
        return {"kind": m.kind, "base": machine_to_json(m.base), "states": list(m.states)}
    raise SchemaError(f"cannot serialize {type(m).__name__}")


def document(machine: PreactionMachine, acceptor: Preacceptor | None = None) -> dict:
    doc = {"alphabet": str(machine.alphabet), "machine": machine_to_json(machine)}
    if acceptor is not None:
        doc["acceptor"] = {"initial": acceptor.initial, "terminal": list(acceptor.terminal)}
    return doc


class MachineFile:
    """A parsed machine description file."""

    def __init__(self, data: dict, path: str | None = None):
        if not isinstance(data, dict):
            raise SchemaError("a machine file must hold a JSON object")
        self.path = path
        self.data = data
        self.alphabet = _alphabet(data)
        if "machine" not in data:
            raise SchemaError("missing 'machine'")
        self.machine = read_machine(data["machine"], self.alphabet)
        self.acceptor = None
        if data.get("acceptor") is not None:
            spec = data["acceptor"]
            try:
                self.acceptor = Preacceptor(self.machine, str(spec["initial"]),
                                            tuple(str(t) for t in spec.get("terminal", [])))
            except KeyError as exc:
                raise SchemaError(f"acceptor: missing field {exc}") from None
            except PreactError as exc:
                raise SchemaError(f"acceptor: {exc}") from None

    @classmethod
    def load(cls, path) -> "MachineFile":
        return cls(load_json(path), str(path))

    def require_acceptor(self) -> Preacceptor:
        if self.acceptor is None:
            raise SchemaError(f"{self.path or 'machine file'} has no 'acceptor' section")
        return self.acceptor


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def load_language_file(path) -> lang.Language:
    data = load_json(path)
    if not isinstance(data, dict) or "language" not in data:
        raise SchemaError(f"{path}: expected an object with 'alphabet' and 'language'")
    return read_language(data["language"], _alphabet(data))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
