import random

import pytest

from racgcomp.embedding import (No, ResourcesExhausted, SearchCaps, Yes, candidate_sets,
                                check_candidate, compute_M, decide_embeddability,
                                dihedral_witness, doubling_vertex, finite_index_of_reflections,
                                growth_coefficients, index_via_double, join_sides,
                                kernel_generators, reduced_elements, reflections_up_to,
                                verify_candidate)
from racgcomp.graph import (DefiningGraph, complete_graph, cycle_graph, double, edgeless_graph,
                            path_graph)
from racgcomp.reflections import is_trimmed, trim
from racgcomp.subgroups import Finite, Infinite, index, subgroup

from conftest import TEST_GRAPHS
from oracles import parity_vector


def test_compute_M():
    assert compute_M(cycle_graph("abcde"), 7) == 75
    assert compute_M(complete_graph("a"), 1) == 3
    assert compute_M(path_graph("abc"), 2) == 15
    with pytest.raises(ValueError):
        compute_M(path_graph("abc"), 0)


def test_kernel_generators():
    p3 = path_graph("abc")
    # b is adjacent to both, so b a b = a and b c b = c
    assert kernel_generators(p3, "b") == [(0,), (2,)]
    c5 = cycle_graph("abcde")
    assert len(kernel_generators(c5, 0)) == 6
    with pytest.raises(ValueError):
        kernel_generators(c5, 9)


def test_kernel_generators_generate_the_parity_kernel():
    c5 = cycle_graph("abcde")
    h = subgroup(c5, kernel_generators(c5, 0))
    v = index(h)
    assert isinstance(v, Finite) and v.n == 2
    rng = random.Random(1)
    from racgcomp.subgroups import membership
    for _ in range(150):
        w = tuple(rng.randrange(5) for _ in range(rng.randint(0, 8)))
        assert membership(h, w) == (parity_vector(w, 5)[0] == 0)


def test_verify_examples():
    p3 = path_graph("abc")
    r = check_candidate(p3, p3, [(0,), (1,), (2,)])
    assert r.ok and r.index == 1
    c5 = cycle_graph("abcde")
    r = check_candidate(c5, double(c5, 0), kernel_generators(c5, 0))
    assert r.ok and r.index == 2
    assert not verify_candidate(p3, complete_graph("xyz"), [(0,), (1,), (2,)])
    assert not verify_candidate(p3, p3, [(0,), (1,)])
    assert check_candidate(p3, p3, [(0, 2)]).reason
    with pytest.raises(ValueError):
        verify_candidate(complete_graph("abc"), p3, [(0,)])


def test_infinite_index_candidate_rejected():
    c5 = cycle_graph("abcde")
    # a and c generate a dihedral group of infinite index
    target = edgeless_graph("xy")
    r = check_candidate(c5, target, [(0,), (2,)])
    assert not r.ok and isinstance(r.index, Infinite)


def test_growth_matches_enumeration():
    for g in (path_graph("abc"), cycle_graph("abcd"), edgeless_graph("abc"), complete_graph("ab")):
        counts = growth_coefficients(g, 5)
        elems = reduced_elements(g, 5)
        for n in range(6):
            assert counts[n] == sum(1 for e in elems if len(e) == n)


def test_reflection_enumeration_is_distinct():
    g = cycle_graph("abcde")
    refl = reflections_up_to(g, 2)
    words = [r.word for r in refl]
    assert len(set(words)) == len(words)
    lens = [len(r.conjugator) for r in refl]
    assert lens == sorted(lens)


def test_candidates_are_trimmed_and_ordered():
    g = cycle_graph("abcd")
    totals = []
    for k, items in enumerate(candidate_sets(g, 3, 2)):
        assert is_trimmed(g, items)
        totals.append(sum(len(r.conjugator) for r in items))
        if k > 400:
            break
    assert totals == sorted(totals)


def test_index_through_double_agrees():
    rng = random.Random(5)
    for name, g in (("p4", path_graph("abcd")), ("p5", path_graph("abcde")),
                    ("star", DefiningGraph(list("sabc"), [("s", x) for x in "abc"]))):
        refl = reflections_up_to(g, 2)
        for _ in range(25):
            items = trim(g, rng.sample(refl, rng.randint(1, min(4, len(refl))))).reflections
            direct = finite_index_of_reflections(g, items)
            # the identity holds for every doubling vertex, not only the chosen one
            u = rng.randrange(len(g))
            alt = index_via_double(g, [r.word for r in items], u)
            if isinstance(direct, Finite):
                assert isinstance(alt, Finite) and alt.n == direct.n, name
            else:
                assert isinstance(alt, Infinite), name


def test_doubling_vertex():
    assert doubling_vertex(path_graph("abc")) == 1
    g = path_graph("abcd")
    u = doubling_vertex(g)
    assert g.adj[u].bit_count() == 1


def test_join_sides():
    assert join_sides(cycle_graph("abcd")) is not None
    assert join_sides(path_graph("abc")) is None
    assert join_sides(cycle_graph("abcde")) is None


@pytest.mark.parametrize("name", ["p3", "p4", "c4", "c5", "ladder", "k23", "edge"])
def test_identity_embeds(name):
    g = TEST_GRAPHS[name]
    v = decide_embeddability(g, g, SearchCaps(max_conjugator_length=1))
    assert isinstance(v, Yes) and v.index == 1
    assert verify_candidate(g, g, v.witness.reflections)


def test_small_table():
    edge = complete_graph("ab")
    assert decide_embeddability(edge, complete_graph("xy")).index == 1
    single = complete_graph("a")
    v = decide_embeddability(single, DefiningGraph([], []))
    assert isinstance(v, Yes) and v.index == 2
    v = decide_embeddability(edgeless_graph("ab"), complete_graph("xy"))
    assert isinstance(v, No)
    with pytest.raises(ValueError):
        decide_embeddability(edge, edgeless_graph("xy"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dihedral_witnesses(n):
    g = edgeless_graph("ab")
    wit = dihedral_witness(g, n)
    r = check_candidate(g, edgeless_graph("xy"), wit.reflections)
    assert r.ok and r.index == n


def test_join_case():
    c4 = cycle_graph("abcd")
    v = decide_embeddability(c4, cycle_graph("wxyz"))
    assert isinstance(v, Yes) and v.case == "iii"
    v = decide_embeddability(c4, path_graph("wxyz"))
    assert isinstance(v, No) and v.case == "iii"


def test_join_case_rejects_wrong_factor():
    # a free product of three Z/2 is not of finite index in the infinite dihedral group
    c4 = cycle_graph("abcd")
    target = DefiningGraph(list("wxyzv"), [(p, q) for p in "wx" for q in "yzv"])
    v = decide_embeddability(c4, target, SearchCaps(max_conjugator_length=1))
    assert isinstance(v, No)


def test_doubling_target_found_quickly():
    c5 = cycle_graph("abcde")
    v = decide_embeddability(c5, double(c5, 0), SearchCaps(max_conjugator_length=1))
    assert isinstance(v, Yes) and v.index == 2 and v.case == "i"
    assert verify_candidate(c5, double(c5, 0), v.witness.reflections)


def test_truncated_search_is_not_no():
    c5 = cycle_graph("abcde")
    v = decide_embeddability(c5, cycle_graph("123456789"), SearchCaps(max_conjugator_length=1))
    assert isinstance(v, ResourcesExhausted)
    v = decide_embeddability(c5, cycle_graph("123456789"),
                             SearchCaps(max_conjugator_length=2, max_candidates=1))
    assert isinstance(v, ResourcesExhausted) and v.stats["truncated"]


def test_nine_cycle_has_index_five():
    # Euler characteristics 1 - n/4 give the ratio (1 - 9/4) / (1 - 5/4) = 5
    c5 = cycle_graph("abcde")
    v = decide_embeddability(c5, cycle_graph("123456789"), SearchCaps(max_conjugator_length=2))
    assert isinstance(v, Yes) and v.index == 5


def test_almost_star_never_says_no():
    p3 = path_graph("abc")
    v = decide_embeddability(p3, complete_graph("xyz"), SearchCaps(max_conjugator_length=1))
    assert isinstance(v, ResourcesExhausted) and v.case == "iv"


def test_almost_star_finds_index_two():
    p4 = path_graph("abcd")
    target = double(p4, doubling_vertex(p4))
    v = decide_embeddability(p4, target, SearchCaps(max_conjugator_length=1))
    assert isinstance(v, Yes) and v.index == 2 and v.case == "iv"
