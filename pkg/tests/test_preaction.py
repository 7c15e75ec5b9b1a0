import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from preact import regular
from preact.errors import AlphabetError, UnknownStateError
from preact.languages import AB, EqualBlocks
from preact.preaction import (
    IntegerTranslation, MembershipDriven, check_axioms, product, restrict, trivial_machine,
    z_machine,
)
from preact.words import Alphabet

from corpus import (
    ClampedLetterwise, host, p_machine, shipped_machines, three_cycle,
)
from oracles import all_words, z_formula


class TestZMachine:
    @pytest.mark.parametrize("x, w, expected", [
        ("0", "ab", "0"), ("0", "b", None), ("1", "b", "0"), ("0", "", "0"), ("1", "", "1"),
    ])
    def test_examples(self, x, w, expected):
        assert z_machine().eval(x, w) == expected

    def test_matches_case_table(self):
        m = z_machine()
        for w in all_words("ab", 8):
            for x in (0, 1):
                y = z_formula(x, w)
                assert m.eval(str(x), w) == (None if y is None else str(y))

    def test_errors(self):
        m = z_machine()
        with pytest.raises(UnknownStateError):
            m.eval("2", "a")
        with pytest.raises(AlphabetError):
            m.eval("0", "ac")

    def test_not_determined_by_letters(self):
        m = z_machine()
        assert m.eval("0", "b") is None and m.eval("0", "ba") == "0"


class TestAxiomChecker:
    @pytest.mark.parametrize("name", sorted(shipped_machines()))
    def test_shipped_backends_pass(self, name):
        r = check_axioms(shipped_machines()[name], 6)
        assert r.passed and not r.witnesses and r.bound == 6

    def test_z_machine_count(self):
        r = check_axioms(z_machine(), 6)
        assert r.checked == 2 * sum((n + 1) * 2 ** n for n in range(7))

    def test_all_undefined_machine_passes(self):
        h = host(AB, [[1, 1], [1, 1]], ["0", "sink"])
        m = restrict(h, ["0"])
        assert all(m.eval("0", w) is None for w in all_words("ab", 4)[1:])
        assert check_axioms(m, 6).passed

    def test_mutant_fails_with_witness(self):
        r = check_axioms(ClampedLetterwise(), 6)
        assert not r.passed
        found = {(w.state, w.u, w.v, w.axiom) for w in r.witnesses}
        assert ("0", "bbaa", "b", "b") in found
        # the witness really violates axiom (b)
        m = ClampedLetterwise()
        assert m.eval("0", "bbaa") == "1" and m.eval("1", "b") == "0"
        assert m.eval("0", "bbaab") is None

    def test_witnesses_are_sorted(self):
        r = check_axioms(ClampedLetterwise(), 6)
        keys = [(len(w.u + w.v), AB.shortlex_key(w.u), AB.shortlex_key(w.v)) for w in r.witnesses]
        assert keys == sorted(keys)

    def test_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            check_axioms(z_machine(), 0)


@st.composite
def restrictions(draw, k=2, max_states=5):
    n = draw(st.integers(1, max_states))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k), min_size=n, max_size=n))
    observable = draw(st.sets(st.integers(0, n - 1), min_size=1))
    h = host(Alphabet("ab"[:k]), rows, [f"s{i}" for i in range(n)])
    return restrict(h, [f"s{i}" for i in sorted(observable)])


class TestFiniteRestriction:
    def test_three_cycle(self):
        m = restrict(three_cycle(), ["0"])
        assert m.eval("0", "aaa") == "0" and m.eval("0", "a") is None

    def test_ab_star_host(self):
        d = regular.compile_regex("(ab)*", AB)
        q0 = d.state_names[d.initial]
        m = restrict(d, [q0])
        assert m.eval(q0, "ab") == q0 and m.eval(q0, "a") is None

    def test_full_observable_is_the_host(self):
        d = regular.compile_regex("(a|bb)*a", AB)
        m = restrict(d, d.state_names)
        for x in d.state_names:
            for w in all_words("ab", 8):
                assert m.eval(x, w) == d.state_names[d.run(d.state_index(x), w)]

    def test_observable_must_be_host_states(self):
        with pytest.raises(UnknownStateError):
            restrict(three_cycle(), ["7"])
        with pytest.raises(ValueError):
            restrict(three_cycle(), [])

    @settings(max_examples=40, deadline=None)
    @given(restrictions())
    def test_vectorized_table_matches_eval(self, m):
        words = m.alphabet.words_upto(5)
        tab = m.eval_table(words)
        for i, x in enumerate(m.states):
            for j, w in enumerate(words):
                y = m.eval(x, w)
                assert tab[i, j] == (-1 if y is None else m.states.index(y))

    @settings(max_examples=40, deadline=None)
    @given(restrictions())
    def test_every_restriction_is_a_preaction(self, m):
        assert check_axioms(m, 5).passed


class TestIntegerTranslation:
    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=4, unique=True),
           st.text(alphabet="ab", max_size=8), st.randoms(use_true_random=False))
    def test_sum_endpoint_and_permutation_invariance(self, points, w, rnd):
        m = IntegerTranslation(AB, {"a": [1, 0], "b": [-1, 1]}, points)
        shuffled = "".join(rnd.sample(w, len(w)))
        total = (w.count("a") - w.count("b"), w.count("b"))
        for p in points:
            x = m.point_name(p)
            y = m.eval(x, w)
            target = (p[0] + total[0], p[1] + total[1])
            assert (y is not None) == (target in points)
            if y is not None:
                assert y == m.point_name(target)
            assert m.eval(x, shuffled) == y

    def test_dimension_checks(self):
        with pytest.raises(ValueError):
            IntegerTranslation(AB, {"a": [1], "b": [1, 0]}, [[0]])
        with pytest.raises(ValueError):
            IntegerTranslation(AB, {"a": [1], "b": [-1]}, [[0, 0]])


class TestProduct:
    def test_examples(self):
        zz = product(z_machine(), z_machine())
        assert zz.eval("(0,1)", "b") is None
        assert zz.eval("(0,0)", "ab") == "(0,0)"

    def test_trivial_factor_is_an_identity(self):
        z = z_machine()
        zt = product(z, trivial_machine(AB))
        for x in z.states:
            for w in all_words("ab", 6):
                y = z.eval(x, w)
                assert zt.eval(f"({x},*)", w) == (None if y is None else f"({y},*)")

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetError):
            product(z_machine(), trivial_machine(Alphabet("a")))

    @settings(max_examples=25, deadline=None)
    @given(restrictions(max_states=3), restrictions(max_states=3))
    def test_axioms_hold_componentwise(self, m1, m2):
        assert check_axioms(m1, 4).passed and check_axioms(m2, 4).passed
        assert check_axioms(product(m1, m2), 4).passed


class TestOtherBackends:
    def test_p_language_shapes(self):
        assert p_machine("%0", "ab").case == "empty"
        assert p_machine("%e", "ab").states == ("x0",)
        g = p_machine("ab", "aa")
        assert g.case == "general" and g.states == ("x0", "y")
        assert g.eval("x0", "abaa") == "y" and g.eval("x0", "aba") is None
        assert g.eval("y", "aa") == "y" and g.eval("y", "ab") is None

    def test_p_language_rejects_non_codes(self):
        with pytest.raises(ValueError):
            p_machine("a|ab", "b")

    def test_membership_states(self):
        m = MembershipDriven(EqualBlocks(AB))
        assert m.states == ("[ε]", "[ab]")
        assert m.eval("[ε]", "aabb") == "[ab]" and m.eval("[ab]", "ab") is None
        assert m.eval("[ε]", "aab") is None

    def test_membership_rejects_bad_representatives(self):
        with pytest.raises(ValueError):
            MembershipDriven(EqualBlocks(AB), ["ab", "aabb"])
        with pytest.raises(ValueError):
            MembershipDriven(EqualBlocks(AB), ["ba"])

    def test_eval_is_deterministic(self):
        for m in shipped_machines().values():
            words = m.alphabet.words_upto(4)
            assert np.array_equal(m.eval_table(words), m.eval_table(words))
