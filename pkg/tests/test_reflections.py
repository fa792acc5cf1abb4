import pytest

from racgcomp.graph import DefiningGraph, cycle_graph, edgeless_graph, path_graph
from racgcomp.reflections import (as_reflection, involutions_to_reflections, is_trimmed,
                                  reflection_completion, standard_gens_graph, trim)
from racgcomp.subgroups import handle_from_complex, membership, quasiconvexity, subgroup
from racgcomp.words import normalize_reflection, parse_word, parse_words


def test_as_reflection_forms(p3):
    r = as_reflection(p3, parse_word(p3, "aca"))
    assert as_reflection(p3, r) == r
    assert as_reflection(p3, ((0,), 2)) == r
    with pytest.raises(ValueError):
        as_reflection(p3, parse_word(p3, "ac"))


def test_trim_shortens(p3):
    rs = trim(p3, parse_words(p3, "a, a c a c a"))
    assert rs.trimmed
    assert [r.format(p3) for r in rs.reflections] == [
        {"conjugator": "", "core": "a"}, {"conjugator": "c", "core": "a"}]


def test_trim_drops_duplicates(p3):
    rs = trim(p3, parse_words(p3, "a, b a b, a"))
    assert len(rs) == 1


def test_trim_keeps_subgroup(p4):
    words = parse_words(p4, "a, a b c b a, c, b c d c b")
    rs = trim(p4, words)
    assert is_trimmed(p4, rs.reflections)
    h_in, h_out = subgroup(p4, words), subgroup(p4, rs.words())
    for w in words:
        assert membership(h_out, w)
    for w in rs.words():
        assert membership(h_in, w)


def test_path_abcd_set_is_not_trimmed():
    # over a-b-c-d the words normalize to (d) b (d) and d
    g = path_graph("abcd")
    rs = trim(g, parse_words(g, "d a c b c a d, d c d c d"))
    assert sorted(r.word for r in rs.reflections) == [(1,), (3,)]


def test_path_bdac_set_completes():
    g = path_graph("bdac")
    words = parse_words(g, "d a c b c a d, d c d c d")
    assert is_trimmed(g, words)
    cx = reflection_completion(g, words).complex
    assert cx.summary() == {"vertices": 6, "edges": 10, "cubes": 4}
    h = handle_from_complex(cx)
    assert quasiconvexity(h).M == 3
    for w in words:
        assert membership(h, w)


def test_single_reflection_completion(p3):
    cx = reflection_completion(p3, [parse_word(p3, "cac")]).complex
    assert cx.summary() == {"vertices": 2, "edges": 2, "cubes": 0}


def test_generating_reflections_give_whole_group(p3):
    cx = reflection_completion(p3, [(0,), (1,), (2,)]).complex
    assert len(cx.verts) == 1 and cx.is_full_valence()


def test_reflection_completion_matches_standard(p4):
    import random
    words = parse_words(p4, "a, c a c, d")
    fast = handle_from_complex(reflection_completion(p4, words).complex)
    slow = subgroup(p4, words)
    rng = random.Random(11)
    for _ in range(300):
        w = tuple(rng.randrange(4) for _ in range(rng.randint(0, 9)))
        assert membership(fast, w) == membership(slow, w)


def test_standard_gens_graph(p3):
    assert not standard_gens_graph(p3, [(0,), (2,)]).edges
    assert len(standard_gens_graph(p3, [(0,), (1,)]).edges) == 1
    g = path_graph("bdac")
    d = standard_gens_graph(g, parse_words(g, "d a c b c a d, d c d c d"))
    assert len(d) == 2


def test_involutions_to_reflections(p4):
    rel = DefiningGraph(["x", "y"], [("x", "y")])
    rs = involutions_to_reflections(p4, parse_words(p4, "a, a b"), rel)
    assert sorted(r.word for r in rs.reflections) == [(0,), (1,)]


def test_involutions_hypotheses(p4):
    rel = DefiningGraph(["x", "y"], [("x", "y")])
    with pytest.raises(ValueError):
        involutions_to_reflections(p4, parse_words(p4, "a, c"), rel)
    with pytest.raises(ValueError):
        involutions_to_reflections(p4, parse_words(p4, "a c, a"), rel)
    with pytest.raises(ValueError):
        involutions_to_reflections(p4, parse_words(p4, "a, b"), DefiningGraph(["x", "y"], []))


def test_involutions_already_reflections(c4):
    rel = DefiningGraph(["x", "y", "z"], [("x", "y"), ("y", "z")])
    rs = involutions_to_reflections(c4, parse_words(c4, "a, b, c"), rel)
    assert sorted(r.word for r in rs.reflections) == [(0,), (1,), (2,)]


def test_involution_conversion_keeps_subgroup():
    g = cycle_graph("abcde")
    rel = DefiningGraph(["x", "y"], [("x", "y")])
    # d b c d is an involution of clique type commuting with c, not a reflection
    words = parse_words(g, "c, d b c d")
    assert normalize_reflection(g, words[1]) is None
    rs = involutions_to_reflections(g, words, rel)
    h_in, h_out = subgroup(g, words), subgroup(g, rs.words())
    for w in words:
        assert membership(h_out, w)
    for w in rs.words():
        assert membership(h_in, w)


def test_free_product_reflections():
    g = edgeless_graph("abc")
    cx = reflection_completion(g, parse_words(g, "a, b a b")).complex
    assert not cx.is_full_valence()
