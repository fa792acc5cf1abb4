import random

import pytest

from racgcomp.completion import Budget
from racgcomp.graph import complete_graph, edgeless_graph, path_graph
from racgcomp.subgroups import (Finite, IncompleteError, Infinite, Quasiconvex, Unknown,
                                change_basepoint, core_graph, full_valence_extension,
                                handle_from_complex, index, is_normal, is_torsion_free,
                                loop_generators, membership, power_membership, quasiconvexity,
                                retract, rooted_isomorphic, separate, subgroup)
from racgcomp.words import equal, parse_word, parse_words, reduce

from oracles import parity_image_rank


def rose_ca_cb(g):
    return subgroup(g, parse_words(g, "c a, c b"))


def test_membership_against_parity(p3):
    h = rose_ca_cb(p3)
    rng = random.Random(3)
    for _ in range(200):
        word = tuple(rng.randrange(3) for _ in range(rng.randint(0, 8)))
        # ⟨ca, cb⟩ is the kernel of the total-parity map
        assert membership(h, word) == (len(word) % 2 == 0)


def test_quasiconvex_and_unknown(p3, c4):
    v = quasiconvexity(rose_ca_cb(p3))
    assert isinstance(v, Quasiconvex) and v.M == 1
    v = quasiconvexity(subgroup(c4, [parse_word(c4, "abcd")], Budget(300, 10**6)))
    assert isinstance(v, Unknown) and v.peak_cells > 300


def test_incomplete_questions_refuse(c4):
    h = subgroup(c4, [parse_word(c4, "abcd")], Budget(100, 10**6))
    with pytest.raises(IncompleteError):
        membership(h, ())


def test_index_variants(p3):
    assert isinstance(index(subgroup(p3, [parse_word(p3, "aa")])), Infinite)
    assert index(subgroup(p3, [(0,), (1,), (2,)])).n == 1
    # W = Z2 x D_inf with ⟨ac⟩ the translations of the dihedral factor
    assert index(subgroup(p3, [parse_word(p3, "ac")])).n == 4
    assert isinstance(index(subgroup(path_graph("abcd"), [parse_word(path_graph("abcd"), "ac")])), Infinite)


def test_index_against_abelianisation():
    # subgroups containing every square-of-product are pulled back from (Z/2)^n
    g = path_graph("abcd")
    for gens in (["a", "b c"], ["a b", "c d", "a c"], ["a", "b", "c", "d"], ["a b c d"]):
        words = [parse_word(g, x) for x in gens]
        comm = [reduce(g, (i, j, i, j)) for i in range(4) for j in range(4) if i < j]
        words_full = words + [w for w in comm if w]
        v = index(subgroup(g, words_full))
        assert isinstance(v, Finite)
        assert v.n == 2 ** (4 - parity_image_rank(words, 4))


def test_coset_representatives_are_distinct(p3):
    v = index(rose_ca_cb(p3))
    h = rose_ca_cb(p3)
    reps = v.representatives
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not membership(h, reps[i] + reps[j][::-1])


def test_torsion(p3):
    assert not is_torsion_free(rose_ca_cb(p3))
    assert is_torsion_free(subgroup(p3, [parse_word(p3, "ac")]))
    assert not is_torsion_free(subgroup(p3, [(0,)]))


def test_normality(p3):
    assert is_normal(rose_ca_cb(p3)).verdict
    rep = is_normal(subgroup(p3, [(0,)]))
    assert not rep.verdict and not rep.n1_ok


def test_power_membership_dihedral():
    g = edgeless_graph("ab")
    h = subgroup(g, [(0,)])
    assert not power_membership(h, parse_word(g, "ab"))
    assert power_membership(h, parse_word(g, "a"))
    assert power_membership(h, ())


def test_core_graphs_and_basepoints(p3):
    h = rose_ca_cb(p3)
    c = core_graph(h)
    assert len(c.edges) == 3
    for v in h.complex.verts:
        h2 = change_basepoint(h, v)
        assert rooted_isomorphic(c, core_graph(h2)) is not None
        for w in h2.gens:
            assert membership(h2, w)


def test_loop_generators_generate(p3):
    h = rose_ca_cb(p3)
    gens = loop_generators(h.complex)
    h2 = subgroup(p3, gens)
    for w in h.gens:
        assert membership(h2, w)
    for w in gens:
        assert membership(h, w)


def test_full_valence_extension_and_retraction(p3):
    h = subgroup(p3, [parse_word(p3, "ac")])
    ext = full_valence_extension(h)
    assert ext.complex.is_full_valence() and ext.index == len(h.complex.verts)
    big = handle_from_complex(ext.complex)
    for w in big.gens:
        r = retract(ext, w)
        assert membership(h, r)
    assert equal(p3, retract(ext, parse_word(p3, "acac")), parse_word(p3, "acac"))


def test_separate_small(p3):
    sep = separate(p3, parse_word(p3, "a"))
    assert sep.index == 2
    assert not membership(sep.handle, (0,))
    with pytest.raises(ValueError):
        separate(p3, parse_word(p3, "aa"))


def test_finite_group_index():
    g = complete_graph("ab")
    v = index(subgroup(g, [(0,)]))
    assert isinstance(v, Finite) and v.n == 2
