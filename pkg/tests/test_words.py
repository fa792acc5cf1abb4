import pytest

from racgcomp.graph import cycle_graph, edgeless_graph, path_graph
from racgcomp.words import (accepts, conjugate, equal, first_letters, format_word, inverse,
                            involution_clique_form, is_involution, is_reduced, last_letters,
                            make_reflection, normalize_reflection, parse_word, parse_words,
                            power_normal_form, power_word, prefix_in_weak_order, reduce, shortlex)

from oracles import all_words, make_oracle


def w(g, text):
    return parse_word(g, text)


def test_parse_letters_and_tokens(p3):
    assert parse_word(p3, "cab") == (2, 0, 1)
    assert parse_word(p3, "c a b") == (2, 0, 1)
    assert parse_word(p3, "") == ()
    assert parse_words(p3, "c a, c b") == [(2, 0), (2, 1)]


def test_parse_multichar_names():
    from racgcomp.graph import DefiningGraph
    g = DefiningGraph(["s1", "s2", "s12"], [("s1", "s2")])
    assert parse_word(g, "s12 s1") == (2, 0)
    assert format_word(g, (2, 0)) == "s12 s1"


def test_unknown_generator_rejected(p3):
    with pytest.raises(ValueError):
        parse_word(p3, "a x")


def test_reduce_deletes_pairs_through_commuting_letters(p3):
    # b commutes with a, so bab = a
    assert format_word(p3, reduce(p3, w(p3, "bab"))) == "a"
    assert reduce(p3, w(p3, "aca")) == w(p3, "aca")
    assert shortlex(p3, w(p3, "abcacb")) == w(p3, "acac")


def test_reduce_cycle(c4):
    assert reduce(c4, w(c4, "abcd")) == w(c4, "abcd")
    assert reduce(c4, w(c4, "abab")) == ()


def test_inverse_is_reversal(p3):
    x = w(p3, "abca")
    assert reduce(p3, x + inverse(x)) == ()


def test_automaton_states(p3):
    assert last_letters(p3, w(p3, "ab")) == 0b011
    assert first_letters(p3, w(p3, "ca")) == 0b100
    assert not accepts(p3, w(p3, "aba"))
    with pytest.raises(ValueError):
        last_letters(p3, w(p3, "aa"))


def test_weak_prefix(p3):
    assert prefix_in_weak_order(p3, w(p3, "b"), w(p3, "ab"))
    assert not prefix_in_weak_order(p3, w(p3, "c"), w(p3, "ac"))


def test_shortlex_is_canonical(p3):
    assert shortlex(p3, w(p3, "ba")) == w(p3, "ab")
    assert shortlex(p3, w(p3, "cb")) == w(p3, "bc")


def test_reflections(p3):
    r = normalize_reflection(p3, w(p3, "aca"))
    assert r.conjugator == (0,) and r.core == 2 and len(r) == 3
    assert normalize_reflection(p3, w(p3, "ac")) is None
    assert normalize_reflection(p3, w(p3, "bab")).word == (0,)
    assert make_reflection(p3, w(p3, "b"), 0).word == (0,)
    assert r.format(p3) == {"conjugator": "a", "core": "c"}


def test_involutions(p3):
    assert is_involution(p3, w(p3, "ab"))
    assert not is_involution(p3, w(p3, "ac"))
    x, k = involution_clique_form(p3, w(p3, "cabc"))
    assert format_word(p3, x) == "c" and format_word(p3, k) == "a b"
    assert involution_clique_form(p3, w(p3, "ac")) is None


def test_power_normal_form(p4):
    g = w(p4, "acbd")
    x, h, k = power_normal_form(p4, g)
    for n in range(1, 6):
        assert equal(p4, power_word(x, h, k, n), g * n)
        assert is_reduced(p4, power_word(x, h, k, n))


def test_conjugate(p3):
    assert conjugate(p3, w(p3, "c"), w(p3, "a")) == w(p3, "cac")


@pytest.mark.parametrize("graph", [path_graph("abc"), cycle_graph("abcd"), edgeless_graph("abc")],
                         ids=["p3", "c4", "free3"])
def test_reduce_matches_oracle_length_5(graph):
    canon = make_oracle(graph)
    for x in all_words(len(graph), 5):
        r = reduce(graph, x)
        assert len(r) == len(canon(x))
        assert canon(r) == canon(x)
