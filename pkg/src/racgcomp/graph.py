"""Defining graphs of right-angled Coxeter groups.

Vertices are generator names; internally a generator is the integer index of
its name in ``graph.vertices`` and vertex sets are int bitmasks.
"""

from itertools import combinations

import networkx as nx

PRIME = "'"


class DefiningGraph:
    """Finite simplicial graph.  Immutable after construction.

    >>> g = DefiningGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> g.names(g.link(g.index("b")))
    ['a', 'c']
    """

    __slots__ = ("vertices", "adj", "_index", "_edges")

    def __init__(self, vertices, edges=()):
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex names must be unique")
        index = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for a, b in edges:
            if a not in index or b not in index:
                raise ValueError(f"edge {a}-{b} uses an unknown vertex")
            if a == b:
                raise ValueError(f"self-edge at {a} is not allowed")
            i, j = index[a], index[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_index", index)
        es = sorted((i, j) for i in range(len(adj)) for j in range(i + 1, len(adj)) if adj[i] >> j & 1)
        object.__setattr__(self, "_edges", tuple(es))

    def __setattr__(self, key, value):
        raise AttributeError("DefiningGraph is immutable")

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, DefiningGraph) and self.vertices == other.vertices and self.adj == other.adj

    def __hash__(self):
        return hash((self.vertices, self.adj))

    def __repr__(self):
        es = ", ".join(f"{self.vertices[i]}-{self.vertices[j]}" for i, j in self._edges)
        return f"DefiningGraph([{', '.join(self.vertices)}]; {es})"

    @property
    def edges(self):
        """Edges as sorted index pairs."""
        return self._edges

    @property
    def full_mask(self):
        return (1 << len(self.vertices)) - 1

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def has_vertex(self, name):
        return name in self._index

    def names(self, mask_or_seq):
        if isinstance(mask_or_seq, int):
            return [self.vertices[i] for i in bits(mask_or_seq)]
        return [self.vertices[i] for i in mask_or_seq]

    def adjacent(self, i, j):
        return bool(self.adj[i] >> j & 1)

    def _check(self, s):
        if not 0 <= s < len(self.vertices):
            raise ValueError(f"unknown generator index {s}")

    def link(self, s):
        self._check(s)
        return self.adj[s]

    def star(self, s):
        self._check(s)
        return self.adj[s] | (1 << s)

    def is_clique(self, mask):
        for i in bits(mask):
            if (mask & ~(1 << i)) & ~self.adj[i]:
                return False
        return True

    def induced(self, mask):
        """Induced subgraph on a vertex bitmask (keeps names)."""
        keep = list(bits(mask))
        return DefiningGraph([self.vertices[i] for i in keep],
                             [(self.vertices[i], self.vertices[j]) for i, j in self._edges
                              if mask >> i & 1 and mask >> j & 1])

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self._edges)
        return g


def bits(mask):
    """Indices of set bits, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask):
    return bin(mask).count("1")


def is_triangle_free(graph):
    for i, j in graph.edges:
        if graph.adj[i] & graph.adj[j]:
            return False
    return True


def maximal_cliques(graph):
    """Maximal cliques as bitmasks (Bron-Kerbosch via networkx), sorted."""
    if not len(graph):
        return []
    out = [sum(1 << v for v in c) for c in nx.find_cliques(graph.to_networkx())]
    return sorted(out, key=lambda m: (popcount(m), m))


def enumerate_cliques(graph):
    """Every nonempty clique exactly once, ordered by size then bitmask."""
    seen = set()
    for m in maximal_cliques(graph):
        members = list(bits(m))
        for r in range(1, len(members) + 1):
            for sub in combinations(members, r):
                seen.add(sum(1 << v for v in sub))
    return sorted(seen, key=lambda m: (popcount(m), m))


def link(graph, s):
    return graph.link(s)


def star(graph, s):
    return graph.star(s)


def join_decomposition(graph):
    """Split V = A + B with all A-B pairs adjacent, or None.

    Components of the complement graph are grouped so that A is the
    component containing vertex 0 and B is everything else.
    """
    n = len(graph)
    if n < 2:
        return None
    full = graph.full_mask
    comps = complement_components(graph)
    if len(comps) < 2:
        return None
    a = comps[0]
    return a, full & ~a


def complement_components(graph):
    """Connected components of the complement graph as bitmasks."""
    n = len(graph)
    full = graph.full_mask
    left = full
    comps = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            nbrs = full & ~graph.adj[v] & ~(1 << v) & ~comp
            for u in bits(nbrs):
                comp |= 1 << u
                frontier.append(u)
        comps.append(comp)
        left &= ~comp
    return comps


def is_almost_star(graph):
    """Witness (s, t) with V = star(s) + {t}; s == t when s is dominating."""
    full = graph.full_mask
    n = len(graph)
    if n == 0:
        return None
    for s in range(n):
        if graph.star(s) == full:
            return s, s
    for s in range(n):
        rest = full & ~graph.star(s)
        if rest & (rest - 1) == 0:
            return s, rest.bit_length() - 1
    return None


def dominating_vertices(graph):
    return [s for s in range(len(graph)) if graph.star(s) == graph.full_mask]


def double(graph, s):
    """Two copies of graph minus s glued along link(s).

    Shared link vertices keep their names; second-copy vertices get a
    trailing prime.
    """
    lk = graph.link(s)
    keep = [v for v in range(len(graph)) if v != s]
    copy2 = [v for v in keep if not lk >> v & 1]
    taken = set(graph.vertices)
    names2 = {}
    for v in copy2:
        name = graph.vertices[v] + PRIME
        while name in taken:
            name += PRIME
        taken.add(name)
        names2[v] = name
    verts = [graph.vertices[v] for v in keep] + [names2[v] for v in copy2]

    def second(v):
        return names2.get(v, graph.vertices[v])

    edges = set()
    for i, j in graph.edges:
        if s in (i, j):
            continue
        edges.add((graph.vertices[i], graph.vertices[j]))
        edges.add((second(i), second(j)))
    return DefiningGraph(verts, sorted(edges))


def double_vertex_map(graph, s):
    """Per original vertex t != s: (name of t, name of sts) in double(graph, s)."""
    d = double(graph, s)
    lk = graph.link(s)
    copy2 = [v for v in range(len(graph)) if v != s and not lk >> v & 1]
    keep = len(graph) - 1
    out = {}
    for v in range(len(graph)):
        if v == s:
            continue
        name = graph.vertices[v]
        out[v] = (d.index(name), d.index(name) if lk >> v & 1 else keep + copy2.index(v))
    return d, out


def graph_isomorphic(g1, g2):
    """A vertex bijection (dict index -> index) that is a graph isomorphism, or None.

    Plain backtracking; candidates are pruned by degree and by adjacency to
    already-mapped vertices.
    """
    n = len(g1)
    if n != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    deg1 = [popcount(a) for a in g1.adj]
    deg2 = [popcount(a) for a in g2.adj]
    if sorted(deg1) != sorted(deg2):
        return None
    order = sorted(range(n), key=lambda v: -deg1[v])
    mapping = {}
    used = 0

    def extend(k):
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or deg2[w] != deg1[v]:
                continue
            if any(g1.adjacent(v, u) != g2.adjacent(w, mapping[u]) for u in mapping):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return dict(mapping) if extend(0) else None


# named constructors used by tests, demos and the CLI

def path_graph(names):
    names = list(names)
    return DefiningGraph(names, list(zip(names, names[1:])))


def cycle_graph(names):
    names = list(names)
    return DefiningGraph(names, list(zip(names, names[1:] + names[:1])))


def complete_graph(names):
    names = list(names)
    return DefiningGraph(names, list(combinations(names, 2)))


def edgeless_graph(names):
    return DefiningGraph(list(names), [])
