"""Questions about a subgroup answered from one of its completions."""

from collections import deque
from dataclasses import dataclass, field

from .completion import (Budget, CompletionOutcome, complete_subgroup, complete_with_graph_loops,
                         tree_complete)
from .complex import CubeComplex
from .graph import bits, maximal_cliques
from .words import (automaton_step, format_word, inverse, power_normal_form, power_word, reduce,
                    support)


class IncompleteError(ValueError):
    """Raised when a question needs a finished completion."""


@dataclass
class SubgroupHandle:
    graph: object
    gens: list
    outcome: CompletionOutcome
    basepoint: int
    conjugator: tuple = ()

    @property
    def complex(self):
        return self.outcome.complex

    @property
    def finished(self):
        return self.outcome.finished

    def require_finished(self):
        if not self.outcome.finished:
            raise IncompleteError("this question needs a finished completion")
        return self.outcome.complex


def subgroup(graph, gens, budget=None, record_trace=False, trace_path=None):
    """Complete the rose of ``gens`` and wrap the outcome."""
    gens = [tuple(w) for w in gens]
    out = complete_subgroup(graph, gens, budget, record_trace=record_trace, trace_path=trace_path)
    return SubgroupHandle(graph, gens, out, out.complex.basepoint)


def handle_from_complex(cx, basepoint=None, gens=None):
    """Wrap an existing finished completion (generators read off a spanning tree)."""
    from .completion import FINISHED, Stats
    b = cx.basepoint if basepoint is None else basepoint
    if gens is None:
        gens = loop_generators(cx, b)
    return SubgroupHandle(cx.graph, gens, CompletionOutcome(FINISHED, cx, Stats(peak_cells=cx.cell_count)), b)


def loop_generators(cx, basepoint=None):
    """Labels of the fundamental loops at the basepoint; they generate the subgroup."""
    b = cx.basepoint if basepoint is None else basepoint
    _, parent = cx.bfs(b)
    tree = {e for e in parent.values() if e is not None}
    out = []
    for e in sorted(cx.edges):
        if e in tree:
            continue
        u, v, s = cx.edges[e]
        w = cx.path_label(b, u, parent) + (s,) + inverse(cx.path_label(b, v, parent))
        w = reduce(cx.graph, w)
        if w and w not in out:
            out.append(w)
    return out


def membership(h, w):
    cx = h.require_finished()
    return cx.end_of(h.basepoint, reduce(h.graph, w)) == h.basepoint


# verdicts ---------------------------------------------------------------

@dataclass
class Quasiconvex:
    M: int
    complex: CubeComplex
    verdict: str = "quasiconvex"


@dataclass
class Unknown:
    partial: object = None
    peak_cells: int = 0
    verdict: str = "unknown"


@dataclass
class Finite:
    n: int
    representatives: list
    verdict: str = "finite"


@dataclass
class Infinite:
    verdict: str = "infinite"


def quasiconvexity(h):
    """Finished completion gives M = eccentricity of the basepoint; otherwise Unknown."""
    if not h.finished:
        return Unknown(h.complex, h.outcome.stats.peak_cells)
    return Quasiconvex(h.complex.eccentricity_from(h.basepoint), h.complex)


def index(h, budget=None):
    """Index of the subgroup, read off the completion of the resolved generators."""
    out = complete_subgroup(h.graph, h.gens, budget, resolved=True)
    if not out.finished:
        return Unknown(out.complex, out.stats.peak_cells)
    return index_from_complex(out.complex)


def index_from_complex(cx, basepoint=None):
    """Finite(n, reps) for a finished, resolved, full-valence completion, else Infinite."""
    if not cx.is_full_valence():
        return Infinite()
    b = cx.basepoint if basepoint is None else basepoint
    dist, parent = cx.bfs(b)
    order = sorted(dist, key=lambda v: (dist[v], _discovery(parent, v)))
    reps = [cx.path_label(b, v, parent) for v in order]
    return Finite(len(cx.verts), reps)


def _discovery(parent, v):
    e = parent[v]
    return -1 if e is None else e


def is_torsion_free(h):
    """No loop in a clique-labeled subgraph has odd parity in some letter."""
    cx = h.require_finished()
    g = h.graph
    for clique in maximal_cliques(g):
        edges = [e for e, (u, v, s) in cx.edges.items() if clique >> s & 1]
        if not edges:
            continue
        inc = {}
        for e in edges:
            u, v, _ = cx.edges[e]
            inc.setdefault(u, []).append(e)
            if v != u:
                inc.setdefault(v, []).append(e)
        parity = {}
        tree = set()
        for root in sorted(inc):
            if root in parity:
                continue
            parity[root] = 0
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for e in sorted(inc[x]):
                    y = cx.other_end(e, x)
                    if y not in parity:
                        parity[y] = parity[x] ^ (1 << cx.edges[e][2])
                        tree.add(e)
                        queue.append(y)
        for e in edges:
            if e in tree:
                continue
            u, v, s = cx.edges[e]
            if parity[u] ^ parity[v] ^ (1 << s):
                return False
    return True


@dataclass
class NormalityReport:
    delta: int
    n1_ok: bool
    n2_ok: bool

    @property
    def verdict(self):
        return self.n1_ok and self.n2_ok


def is_normal(h):
    cx = h.require_finished()
    g = h.graph
    delta = 0
    for s in range(len(g)):
        star = g.star(s)
        if all(not (support(w) & ~star) for w in h.gens):
            delta |= 1 << s
    here = cx.label_mask_at(h.basepoint)
    outside = g.full_mask & ~delta
    n1 = not (outside & ~here)
    reduced = [reduce(g, w) for w in h.gens]
    n2 = all(cx.end_of(v, w) == v for v in sorted(cx.verts) for w in reduced)
    return NormalityReport(delta, n1, n2)


def power_membership(h, w):
    """Is some positive power of w in the subgroup?  Checks w^(2l) for l up to the vertex count."""
    cx = h.require_finished()
    w = reduce(h.graph, w)
    if not w:
        return True
    x, hh, k = power_normal_form(h.graph, w)
    for l in range(1, len(cx.verts) + 1):
        if cx.end_of(h.basepoint, power_word(x, hh, k, 2 * l)) == h.basepoint:
            return True
    return False


# core graphs --------------------------------------------------------------

@dataclass
class CoreGraph:
    root: int
    vertices: set
    edges: dict = field(default_factory=dict)

    def labels_at(self, v):
        out = {}
        for e, (a, b, s) in self.edges.items():
            if v in (a, b):
                out[s] = b if a == v else a
        return out


def core_graph(h, basepoint=None):
    """Union of the reduced-label loops at the basepoint."""
    cx = h.require_finished()
    g = h.graph
    root = h.basepoint if basepoint is None else basepoint
    start = (root, 0)
    fwd = {start}
    queue = deque([start])
    trans = []
    while queue:
        v, st = queue.popleft()
        for e in sorted(cx.inc[v]):
            s = cx.edges[e][2]
            nst = automaton_step(g, st, s)
            if nst is None:
                continue
            y = (cx.other_end(e, v), nst)
            trans.append(((v, st), e, y))
            if y not in fwd:
                fwd.add(y)
                queue.append(y)
    back_adj = {}
    for p, e, q in trans:
        back_adj.setdefault(q, []).append(p)
    good = {p for p in fwd if p[0] == root}
    queue = deque(good)
    while queue:
        q = queue.popleft()
        for p in back_adj.get(q, ()):
            if p not in good:
                good.add(p)
                queue.append(p)
    edges = {}
    verts = {root}
    for p, e, q in trans:
        if q in good:
            u, v, s = cx.edges[e]
            edges[e] = (u, v, s)
            verts.update((u, v))
    return CoreGraph(root, verts, edges)


def rooted_isomorphic(c1, c2):
    """Label- and root-preserving isomorphism of folded core graphs, as a vertex map or None."""
    if len(c1.vertices) != len(c2.vertices) or len(c1.edges) != len(c2.edges):
        return None
    lab1 = {v: {} for v in c1.vertices}
    for e, (a, b, s) in c1.edges.items():
        lab1[a][s] = b
        lab1[b][s] = a
    lab2 = {v: {} for v in c2.vertices}
    for e, (a, b, s) in c2.edges.items():
        lab2[a][s] = b
        lab2[b][s] = a
    phi = {c1.root: c2.root}
    queue = deque([c1.root])
    while queue:
        x = queue.popleft()
        y = phi[x]
        if set(lab1[x]) != set(lab2[y]):
            return None
        for s, x2 in lab1[x].items():
            y2 = lab2[y][s]
            if x2 in phi:
                if phi[x2] != y2:
                    return None
            else:
                phi[x2] = y2
                queue.append(x2)
    if len(set(phi.values())) != len(phi) or len(phi) != len(c1.vertices):
        return None
    return phi


# full valence extension, retraction, separation -----------------------------

@dataclass
class Extension:
    complex: CubeComplex
    added_loops: set
    index: int


def full_valence_extension(h):
    cx = h.require_finished()
    full = h.graph.full_mask
    loops = []
    for v in sorted(cx.verts):
        missing = full & ~cx.label_mask_at(v)
        loops.extend((v, s) for s in bits(missing))
    before = set(cx.edges)
    ext = complete_with_graph_loops(cx, loops)
    added = set(ext.edges) - before
    return Extension(ext, added, len(ext.verts))


def retract(ext, h_word, basepoint=None):
    """Drop the letters of h that run along added graph-loops."""
    cx = ext.complex
    b = cx.basepoint if basepoint is None else basepoint
    t = cx.trace(b, tuple(h_word))
    if t is None or t[0] != b:
        raise ValueError("word is not in the finite-index overgroup")
    return tuple(cx.edges[e][2] for e, _ in t[1] if e not in ext.added_loops)


@dataclass
class Separation:
    handle: SubgroupHandle
    index: int
    extension: Extension


def separate(graph, g):
    """A finite-index subgroup missing g, built from the completion of a path labeled g."""
    g = reduce(graph, g)
    if not g:
        raise ValueError("the trivial element cannot be separated")
    tree = CubeComplex.path(graph, g)
    omega = tree_complete(tree)
    inner = handle_from_complex(omega, gens=[])
    ext = full_valence_extension(inner)
    h = handle_from_complex(ext.complex)
    assert not membership(h, g), "separating subgroup contains the element"
    return Separation(h, ext.index, ext)


def change_basepoint(h, v):
    cx = h.require_finished()
    if v not in cx.verts:
        raise ValueError("not a vertex of the completion")
    path = cx.path_label(h.basepoint, v)
    gens = [reduce(h.graph, inverse(path) + tuple(w) + path) for w in h.gens]
    return SubgroupHandle(h.graph, gens, h.outcome, v, h.conjugator + path)


def describe_word(graph, w):
    return format_word(graph, w) if w else ""
