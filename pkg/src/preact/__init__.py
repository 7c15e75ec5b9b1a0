"""Preautomata: partial actions of the free monoid, their globalization,
recognized languages, minimal preacceptors and prefix-code decompositions."""
from .errors import (
    AlphabetError, NotAPrefixCodeError, PreactError, RegexSyntaxError, SchemaError,
    UnknownStateError,
)
from .globalization import (
    GlobalClass, act, classes_equal, embed_alpha, expand, freeness_probe, normalize,
)
from .minimization import (
    minimal_preacceptor, minimal_preacceptor_bounded, minimal_preacceptor_regular,
    syntactically_equivalent, trim,
)
from .preaction import (
    FiniteRestriction, IntegerTranslation, MembershipDriven, PLanguageMachine,
    PreactionMachine, Product, check_axioms, product, restrict, z_machine,
)
from .prefix import PLanguage, build_preacceptor, decompose, extract_codes, unique_factorization
from .recognition import (
    Preacceptor, bounded_right_congruence, intersect_acceptors, language_upto,
    nonrecognizability_witness, unary_periodicity_probe,
)
from .regular import Dfa, compile_regex
from .words import Alphabet, balance, parse_regex, proper_prefixes

__version__ = "0.1.0"
