"""Reflection subgroups: trimming, their completions, Dyer graphs, involutions."""

from dataclasses import dataclass

from .completion import complete_with_graph_loops, tree_complete
from .complex import CubeComplex
from .graph import DefiningGraph, is_triangle_free
from .words import (Reflection, conjugate, equal, format_word, inverse, involution_clique_form,
                    is_involution, normalize_reflection, prefix_in_weak_order, reduce)


class CollisionError(AssertionError):
    """A re-attached graph-loop met an edge with its label (impossible for trimmed input)."""


@dataclass
class ReflectionSet:
    reflections: list
    trimmed: bool

    def words(self):
        return [r.word for r in self.reflections]

    def __len__(self):
        return len(self.reflections)

    def format(self, graph):
        return [r.format(graph) for r in self.reflections]


def as_reflection(graph, r):
    """Accept a Reflection, a word, or a (conjugator, core) pair."""
    if isinstance(r, Reflection):
        w = r.word
    elif isinstance(r, tuple) and len(r) == 2 and isinstance(r[0], tuple):
        w = tuple(r[0]) + (r[1],) + inverse(r[0])
    else:
        w = tuple(r)
    out = normalize_reflection(graph, w)
    if out is None:
        raise ValueError(f"{format_word(graph, w)!r} is not a reflection")
    return out


def _violation(graph, refl):
    """First (i, j) with the stem of i a weak-order prefix of the conjugator of j."""
    for j, rj in enumerate(refl):
        for i, ri in enumerate(refl):
            if i != j and len(ri.stem) <= len(rj.conjugator) \
                    and prefix_in_weak_order(graph, ri.stem, rj.conjugator):
                return i, j
    return None


def is_trimmed(graph, refl):
    refl = [as_reflection(graph, r) for r in refl]
    return _violation(graph, refl) is None


def trim(graph, refl):
    """Shorten reflections until no conjugator extends another reflection's stem.

    Duplicated elements are dropped first.  Each replacement conjugates by a
    generator of the set, so the subgroup is unchanged.
    """
    out = []
    for r in refl:
        r = as_reflection(graph, r)
        if not any(equal(graph, r.word, q.word) for q in out):
            out.append(r)
    while True:
        bad = _violation(graph, out)
        if bad is None:
            return ReflectionSet(out, True)
        i, j = bad
        h = out[i].word
        new = normalize_reflection(graph, h + out[j].word + h)
        assert new is not None and len(new) < len(out[j])
        if any(equal(graph, new.word, q.word) for k, q in enumerate(out) if k != j):
            del out[j]
        else:
            out[j] = new


def reflection_completion(graph, refl):
    """Completion of the subgroup generated by a trimmed reflection set.

    The stems w_i are laid out as a tree from the basepoint, the tree is
    completed, the s_i graph-loops are put back at the images of the stem
    ends and a graph-loop completion finishes the job.
    """
    from .completion import FINISHED, CompletionOutcome, Stats
    rs = refl if isinstance(refl, ReflectionSet) else None
    items = [as_reflection(graph, r) for r in (rs.reflections if rs else refl)]
    if _violation(graph, items) is not None:
        items = trim(graph, items).reflections
    tree = CubeComplex(graph)
    b = tree.add_vertex()
    ends = []
    for r in items:
        v = b
        for s in r.conjugator:
            u = tree.add_vertex()
            tree.add_edge(v, u, s, origin=True)
            v = u
        ends.append((v, r.core))
    omega = tree_complete(tree)
    loops = []
    for v, s in ends:
        vv = omega.find_vertex(v)
        if omega.edge_with_label(vv, s) is not None:
            raise CollisionError(f"vertex {vv} already has an edge labeled {graph.vertices[s]}")
        if (vv, s) not in loops:
            loops.append((vv, s))
    cx = complete_with_graph_loops(omega, loops)
    return CompletionOutcome(FINISHED, cx, Stats(peak_cells=cx.cell_count))


def standard_gens_graph(graph, refl, names=None):
    """One vertex per reflection, edges between commuting reflections."""
    items = [as_reflection(graph, r) for r in refl]
    names = names or [f"r{i}" for i in range(len(items))]
    edges = []
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            a, b = items[i].word, items[j].word
            if equal(graph, a + b, b + a):
                edges.append((names[i], names[j]))
    return DefiningGraph(names, edges)


def involutions_to_reflections(graph, words, relations):
    """Turn involutions realizing ``relations`` into reflections generating the same subgroup.

    ``words[i]`` corresponds to ``relations.vertices[i]``.  The caller is
    responsible for the involutions being a faithful generating set of a
    Coxeter group with that defining graph; only involutivity and the
    announced commutations are checked.
    """
    if not is_triangle_free(graph):
        raise ValueError("the ambient defining graph must be triangle-free")
    words = [reduce(graph, w) for w in words]
    if len(words) != len(relations):
        raise ValueError("need exactly one word per vertex of the relation graph")
    for i, w in enumerate(words):
        if not is_involution(graph, w):
            raise ValueError(f"{format_word(graph, w)!r} is not an involution")
        if not relations.adj[i]:
            raise ValueError(f"relation vertex {relations.vertices[i]} is isolated")
    for i, j in relations.edges:
        if not equal(graph, words[i] + words[j], words[j] + words[i]):
            raise ValueError(f"words for {relations.vertices[i]} and {relations.vertices[j]} do not commute")
    cur = list(words)
    for _ in range(10 * sum(len(w) for w in cur) + 10):
        todo = [i for i, w in enumerate(cur) if normalize_reflection(graph, w) is None]
        if not todo:
            break
        i = todo[0]
        partners = [j for j in range(len(cur)) if relations.adj[i] >> j & 1]
        j = partners[0]
        form = involution_clique_form(graph, cur[j])
        if form is None:
            raise AssertionError("partner is not an involution of clique type")
        wp, kp = form
        x = conjugate(graph, inverse(wp), cur[i])
        xform = involution_clique_form(graph, x)
        if xform is None or len(xform[1]) != 2 or len(kp) != 1 or kp[0] not in xform[1]:
            raise AssertionError("conversion step does not match the expected case "
                                 f"(partner core {format_word(graph, kp)!r}, conjugated word {format_word(graph, x)!r})")
        y = reduce(graph, kp + x)
        cur[i] = conjugate(graph, wp, y)
        assert normalize_reflection(graph, cur[i]) is not None
    else:
        raise AssertionError("conversion did not terminate")
    return trim(graph, cur)
