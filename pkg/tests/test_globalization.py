import pytest
from hypothesis import given, settings, strategies as st

from preact.globalization import (
    GlobalClass, act, approx_related, classes_equal, embed_alpha, expand, freeness_probe,
    is_normal, is_one_simple, is_zero_simple, normalize,
)
from preact.languages import AB
from preact.preaction import trivial_machine, z_machine

from corpus import chain_restriction, mod3_restriction
from oracles import all_words, one_simple_direct, reduction_components, zero_simple_direct

Z = z_machine()
MACHINES = {"z": Z, "mod3": mod3_restriction(), "chain": chain_restriction()}
short_words = st.text(alphabet="ab", max_size=8)


def C(x, w):
    return GlobalClass(x, w)


class TestNormalize:
    @pytest.mark.parametrize("x, w, expected", [
        ("0", "ab", C("0", "")), ("0", "bba", C("0", "bba")), ("1", "ba", C("1", "")),
        ("0", "", C("0", "")), ("1", "", C("1", "")),
    ])
    def test_examples(self, x, w, expected):
        assert normalize(Z, x, w) == expected

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(sorted(MACHINES)), st.data(), short_words)
    def test_output_is_normal_and_idempotent(self, name, data, w):
        m = MACHINES[name]
        x = data.draw(st.sampled_from(m.states))
        c = normalize(m, x, w)
        assert is_normal(m, c.anchor, c.tail)
        assert all(m.eval(c.anchor, c.tail[:i]) is None for i in range(1, len(c.tail) + 1))
        assert w.endswith(c.tail)
        assert m.eval(x, w[:len(w) - len(c.tail)]) == c.anchor
        assert normalize(m, c.anchor, c.tail) == c


class TestClassesEqual:
    def test_examples(self):
        assert classes_equal(Z, ("1", "ba"), ("0", "a"))
        assert classes_equal(Z, ("1", "bb"), ("0", "b"))
        assert not classes_equal(Z, ("0", "b"), ("0", "a"))

    @pytest.mark.parametrize("name", sorted(MACHINES))
    def test_agrees_with_reduction_closure(self, name):
        m = MACHINES[name]
        comp = reduction_components(m, 4)
        pairs = list(comp)
        for p in pairs:
            for q in pairs:
                same = comp[p] == comp[q]
                assert classes_equal(m, p, q) == same
                assert approx_related(m, p, q) == same

    def test_is_an_equivalence_on_a_sample(self):
        pairs = [(x, w) for x in Z.states for w in all_words("ab", 3)]
        rel = {(p, q): classes_equal(Z, p, q) for p in pairs for q in pairs}
        for p in pairs:
            assert rel[p, p]
            for q in pairs:
                assert rel[p, q] == rel[q, p]
                if rel[p, q]:
                    assert all(rel[p, r] == rel[q, r] for r in pairs)


class TestAct:
    def test_examples(self):
        assert act(Z, C("0", "b"), "a") == C("0", "")
        assert act(Z, C("0", ""), "b") == C("0", "b")
        assert act(Z, C("1", "aa"), "") == C("1", "aa")

    @pytest.mark.parametrize("name", sorted(MACHINES))
    def test_is_a_full_action(self, name):
        m = MACHINES[name]
        for c in expand(m, 3):
            for w in all_words("ab", 6):
                whole = act(m, c, w)
                for i in range(len(w) + 1):
                    assert act(m, act(m, c, w[:i]), w[i:]) == whole


class TestExpand:
    def test_examples(self):
        assert expand(Z, 0) == [C("0", ""), C("1", "")]
        assert set(expand(Z, 1)) - set(expand(Z, 0)) == {C("0", "b"), C("1", "a")}
        assert set(expand(Z, 2)) - set(expand(Z, 1)) == {C("0", "bb"), C("1", "aa")}

    @pytest.mark.parametrize("name", sorted(MACHINES))
    def test_matches_brute_force_scan(self, name):
        m = MACHINES[name]
        brute = {C(x, w) for x in m.states for w in all_words("ab", 5)
                 if all(m.eval(x, w[:i]) is None for i in range(1, len(w) + 1))}
        got = expand(m, 5)
        assert set(got) == brute and len(got) == len(brute)

    def test_order_is_shortlex_by_tail(self):
        got = expand(Z, 4)
        keys = [(AB.shortlex_key(c.tail), Z.state_index(c.anchor)) for c in got]
        assert keys == sorted(keys)

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            expand(Z, -1)


class TestEmbedding:
    def test_alpha_is_injective_and_a_morphism(self):
        for m in MACHINES.values():
            images = [embed_alpha(m, x) for x in m.states]
            assert len(set(images)) == len(images)
            for x in m.states:
                for w in all_words("ab", 6):
                    y = m.eval(x, w)
                    if y is not None:
                        assert act(m, embed_alpha(m, x), w) == C(y, "")


class TestSimpleWords:
    def test_block_and_prefix_definitions_agree(self):
        for w in all_words("ab", 10):
            assert is_one_simple(w) == one_simple_direct(w)
            assert is_zero_simple(w) == zero_simple_direct(w)

    def test_z_tails_are_simple(self):
        for c in expand(Z, 5):
            check = zero_simple_direct if c.anchor == "0" else one_simple_direct
            assert check(c.tail)

    def test_simple_tails_are_exactly_the_normal_ones(self):
        for w in all_words("ab", 7):
            assert is_normal(Z, "0", w) == zero_simple_direct(w)
            assert is_normal(Z, "1", w) == one_simple_direct(w)


class TestFreeness:
    def test_z_machine_separates_short_words(self):
        r = freeness_probe(Z, 2, 4)
        assert r.all_separated and r.first_unseparated is None

    def test_single_letters_at_depth_zero(self):
        r = freeness_probe(Z, 1, 0)
        sep = {(u, v): c for u, v, c in r.separated}
        assert sep[("a", "b")] == C("0", "")
        assert act(Z, C("0", ""), "a") == C("1", "") and act(Z, C("0", ""), "b") == C("0", "b")

    @pytest.mark.parametrize("depth", [0, 2, 5])
    def test_trivial_machine_separates_nothing(self, depth):
        r = freeness_probe(trivial_machine(AB), 1, depth)
        assert not r.all_separated
        assert ("a", "b") in r.unseparated
        assert r.first_unseparated == ("", "a")
