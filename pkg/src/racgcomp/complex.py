"""Graph-labeled cube complexes and the three elementary moves.

Vertices, edges and cubes have integer ids.  An edge is ``[u, v, label]``;
``u == v`` is a graph-loop.  A d-cube (d >= 2) stores its axis labels sorted
by generator index, its ``2**d`` corners indexed by bit-vectors (bit k set =
far side along axis k) and its edges indexed by *slots* ``(corner, axis)``
where the corner has bit ``axis`` clear.  Every face of dimension >= 2 of an
attached cube is stored as a cube of its own.

Quotients rewrite ids eagerly; merged ids are forwarded so callers holding old
ids can map them with :meth:`CubeComplex.find_vertex` / ``find_edge``.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import bits, enumerate_cliques, popcount


@lru_cache(maxsize=None)
def slots(d):
    """Cube-edge slots (corner, axis), axis-major."""
    return tuple((c, k) for k in range(d) for c in range(1 << d) if not c >> k & 1)


@lru_cache(maxsize=None)
def slot_index(d):
    return {s: i for i, s in enumerate(slots(d))}


@lru_cache(maxsize=None)
def reflection_perms(d):
    """Per reflection mask: (corner permutation, slot permutation)."""
    idx = slot_index(d)
    out = []
    for m in range(1 << d):
        cp = tuple(c ^ m for c in range(1 << d))
        sp = tuple(idx[(c ^ (m & ~(1 << k)), k)] for c, k in slots(d))
        out.append((cp, sp))
    return tuple(out)


@lru_cache(maxsize=None)
def faces(d):
    """Proper faces of dimension >= 2: (axes, corner map, slot map)."""
    idx = slot_index(d)
    out = []
    for r in range(2, d):
        for axes in combinations(range(d), r):
            others = [k for k in range(d) if k not in axes]
            for fixed_bits in range(1 << len(others)):
                fixed = sum(1 << others[i] for i in range(len(others)) if fixed_bits >> i & 1)

                def spread(c, axes=axes, fixed=fixed):
                    return fixed | sum(1 << axes[i] for i in range(len(axes)) if c >> i & 1)

                cmap = tuple(spread(c) for c in range(1 << r))
                smap = tuple(idx[(spread(c), axes[k])] for c, k in slots(r))
                out.append((axes, cmap, smap))
    return tuple(out)


class Cube:
    __slots__ = ("dim", "labels", "corners", "edges", "key")

    def __init__(self, labels, corners, edges):
        self.dim = len(labels)
        self.labels = tuple(labels)
        self.corners = list(corners)
        self.edges = list(edges)
        self.key = None

    def edge_at(self, corner, axis):
        return self.edges[slot_index(self.dim)[(corner & ~(1 << axis), axis)]]

    def corner_edges(self, corner):
        """Edge ids of the cube incident to a corner, one per axis."""
        return [self.edge_at(corner, k) for k in range(self.dim)]

    def axis_edges(self, axis):
        return [self.edges[i] for i, (c, k) in enumerate(slots(self.dim)) if k == axis]

    def canonical(self):
        """Boundary data up to the per-axis reflections of the cube."""
        best = None
        for cp, sp in reflection_perms(self.dim):
            cand = (tuple(self.corners[c] for c in cp), tuple(self.edges[s] for s in sp))
            if best is None or cand < best:
                best = cand
        return (self.labels, best)


@dataclass(frozen=True)
class Hyperplane:
    edges: frozenset
    label: int


class CubeComplex:
    """A Gamma-labeled cube complex with a basepoint."""

    def __init__(self, graph):
        self.graph = graph
        self.verts = set()
        self.edges = {}
        self.cubes = {}
        self.origin = set()
        self.basepoint = None
        self._next = [0, 0, 0]
        self._vfwd = {}
        self._efwd = {}
        self.inc = {}
        self.vcubes = {}
        self.ecubes = {}
        self.keys = {}
        # drained by the completion engine
        self.touched_vertices = set()
        self.touched_cubes = set()

    # construction -------------------------------------------------------

    def copy(self):
        c = CubeComplex(self.graph)
        c.verts = set(self.verts)
        c.edges = {e: list(d) for e, d in self.edges.items()}
        c.cubes = {}
        for cid, cube in self.cubes.items():
            n = Cube(cube.labels, cube.corners, cube.edges)
            n.key = cube.key
            c.cubes[cid] = n
        c.origin = set(self.origin)
        c.basepoint = self.basepoint
        c._next = list(self._next)
        c._vfwd = dict(self._vfwd)
        c._efwd = dict(self._efwd)
        c.inc = {v: set(s) for v, s in self.inc.items()}
        c.vcubes = {v: set(s) for v, s in self.vcubes.items()}
        c.ecubes = {e: set(s) for e, s in self.ecubes.items()}
        c.keys = dict(self.keys)
        c.touched_vertices = set(self.touched_vertices)
        c.touched_cubes = set(self.touched_cubes)
        return c

    def add_vertex(self):
        v = self._next[0]
        self._next[0] += 1
        self.verts.add(v)
        self.inc[v] = set()
        self.vcubes[v] = set()
        if self.basepoint is None:
            self.basepoint = v
        self.touched_vertices.add(v)
        return v

    def add_edge(self, u, v, label, origin=False):
        if u not in self.verts or v not in self.verts:
            raise ValueError("edge endpoint is not a vertex")
        if not 0 <= label < len(self.graph):
            raise ValueError("edge label is not a generator")
        e = self._next[1]
        self._next[1] += 1
        self.edges[e] = [u, v, label]
        self.inc[u].add(e)
        self.inc[v].add(e)
        self.ecubes[e] = set()
        if origin:
            self.origin.add(e)
        self.touched_vertices.update((u, v))
        return e

    def add_cube(self, labels, corners, edges):
        cid = self._next[2]
        self._next[2] += 1
        cube = Cube(labels, corners, edges)
        self.cubes[cid] = cube
        for v in set(cube.corners):
            self.vcubes[v].add(cid)
        for e in set(cube.edges):
            self.ecubes[e].add(cid)
        self.touched_cubes.add(cid)
        self.touched_vertices.update(cube.corners)
        return cid

    # basic queries ------------------------------------------------------

    @property
    def cell_count(self):
        return len(self.verts) + len(self.edges) + len(self.cubes)

    def find_vertex(self, v):
        while v in self._vfwd:
            v = self._vfwd[v]
        return v

    def find_edge(self, e):
        while e in self._efwd:
            e = self._efwd[e]
        return e

    def other_end(self, e, v):
        a, b, _ = self.edges[e]
        if a == v:
            return b
        if b == v:
            return a
        raise ValueError(f"edge {e} is not incident to vertex {v}")

    def label(self, e):
        return self.edges[e][2]

    def is_loop(self, e):
        a, b, _ = self.edges[e]
        return a == b

    def edges_at(self, v):
        return sorted(self.inc[v])

    def labels_at(self, v):
        """label -> sorted list of incident edge ids."""
        out = {}
        for e in sorted(self.inc[v]):
            out.setdefault(self.edges[e][2], []).append(e)
        return out

    def label_mask_at(self, v):
        m = 0
        for e in self.inc[v]:
            m |= 1 << self.edges[e][2]
        return m

    def edge_with_label(self, v, s):
        for e in self.inc[v]:
            if self.edges[e][2] == s:
                return e
        return None

    def is_full_valence(self):
        full = self.graph.full_mask
        return all(self.label_mask_at(v) == full for v in self.verts)

    # elementary moves ---------------------------------------------------

    def _merge_vertices(self, a, b):
        keep, drop = min(a, b), max(a, b)
        for e in self.inc.pop(drop):
            d = self.edges[e]
            if d[0] == drop:
                d[0] = keep
            if d[1] == drop:
                d[1] = keep
            self.inc[keep].add(e)
        for cid in self.vcubes.pop(drop):
            cube = self.cubes[cid]
            cube.corners = [keep if x == drop else x for x in cube.corners]
            self.vcubes[keep].add(cid)
            self._dirty_cube(cid)
        self.verts.discard(drop)
        self._vfwd[drop] = keep
        if self.basepoint == drop:
            self.basepoint = keep
        self.touched_vertices.add(keep)
        return keep

    def _merge_edges(self, a, b):
        keep, drop = min(a, b), max(a, b)
        u, v, _ = self.edges.pop(drop)
        self.inc[u].discard(drop)
        self.inc[v].discard(drop)
        for cid in self.ecubes.pop(drop):
            cube = self.cubes[cid]
            cube.edges = [keep if x == drop else x for x in cube.edges]
            self.ecubes[keep].add(cid)
            self._dirty_cube(cid)
        if drop in self.origin:
            self.origin.discard(drop)
            self.origin.add(keep)
        self._efwd[drop] = keep
        self.touched_vertices.update(self.edges[keep][:2])
        return keep

    def _dirty_cube(self, cid):
        cube = self.cubes[cid]
        if cube.key is not None and self.keys.get(cube.key) == cid:
            del self.keys[cube.key]
        cube.key = None
        self.touched_cubes.add(cid)

    def fold(self, e1, e2):
        """Identify two same-label edges sharing an endpoint, and their far ends.

        The shared vertex with the smaller id is used as the pivot; for a
        graph-loop the far end is the pivot itself.  Returns the surviving
        edge id.
        """
        if e1 == e2:
            raise ValueError("fold needs two distinct edges")
        u1, v1, l1 = self.edges[e1]
        u2, v2, l2 = self.edges[e2]
        if l1 != l2:
            raise ValueError("fold needs edges with the same label")
        shared = {u1, v1} & {u2, v2}
        if not shared:
            raise ValueError("fold needs edges sharing an endpoint")
        pivot = min(shared)
        f1, f2 = self.other_end(e1, pivot), self.other_end(e2, pivot)
        if f1 != f2:
            self._merge_vertices(f1, f2)
        return self._merge_edges(e1, e2)

    def identify_cubes(self, c1, c2):
        """Merge two cubes with equal boundaries; returns the survivor."""
        if c1 == c2:
            raise ValueError("identify needs two distinct cubes")
        a, b = self.cubes[c1], self.cubes[c2]
        if a.dim != b.dim or a.canonical() != b.canonical():
            raise ValueError("cube boundaries are not equal")
        keep, drop = min(c1, c2), max(c1, c2)
        cube = self.cubes.pop(drop)
        if cube.key is not None and self.keys.get(cube.key) == drop:
            del self.keys[cube.key]
        for v in set(cube.corners):
            self.vcubes[v].discard(drop)
        for e in set(cube.edges):
            self.ecubes[e].discard(drop)
        self.touched_cubes.discard(drop)
        return keep

    def attach_cube(self, v, edge_ids):
        """Glue a new cube along incident edges at corner 0 = v.

        Graph-loops among the edges put the corresponding corner back at v;
        all other non-adjacent corners are new vertices.  Faces of dimension
        >= 2 are added as cubes too.  No folding happens here.
        """
        if len(edge_ids) < 2:
            raise ValueError("a cube needs at least two edges")
        for e in edge_ids:
            if e not in self.edges or v not in self.edges[e][:2]:
                raise ValueError(f"edge {e} is not incident to vertex {v}")
        edge_ids = sorted(edge_ids, key=lambda e: self.edges[e][2])
        labels = [self.edges[e][2] for e in edge_ids]
        mask = sum(1 << s for s in labels)
        if popcount(mask) != len(labels):
            raise ValueError("cube labels must be distinct")
        if not self.graph.is_clique(mask):
            raise ValueError("cube labels must form a clique")
        d = len(labels)
        corners = [None] * (1 << d)
        corners[0] = v
        for k, e in enumerate(edge_ids):
            corners[1 << k] = self.other_end(e, v)
        for c in range(1, 1 << d):
            if corners[c] is None:
                corners[c] = self.add_vertex()
        cube_edges = []
        for c, k in slots(d):
            if c == 0:
                cube_edges.append(edge_ids[k])
            else:
                cube_edges.append(self.add_edge(corners[c], corners[c | 1 << k], labels[k]))
        cid = self.add_cube(labels, corners, cube_edges)
        for axes, cmap, smap in faces(d):
            self.add_cube([labels[k] for k in axes], [corners[c] for c in cmap], [cube_edges[s] for s in smap])
        return cid

    # predicates ---------------------------------------------------------

    def fold_at(self, v):
        """A same-label pair of edges at v, or None."""
        seen = {}
        for e in sorted(self.inc[v]):
            s = self.edges[e][2]
            if s in seen:
                return seen[s], e
            seen[s] = e
        return None

    def find_fold(self):
        for v in sorted(self.verts):
            pair = self.fold_at(v)
            if pair:
                return pair
        return None

    def find_identifiable(self):
        seen = {}
        for cid in sorted(self.cubes):
            key = self.cubes[cid].canonical()
            if key in seen:
                return seen[key], cid
            seen[key] = cid
        return None

    def is_folded(self):
        return self.find_fold() is None and self.find_identifiable() is None

    def clique_masks(self):
        """Cliques of the defining graph with at least two vertices, largest first."""
        return _cliques(self.graph)

    def missing_at(self, v):
        """Inclusion-maximal unspanned clique-labeled edge tuples at v (folded)."""
        present = {}
        for e in self.inc[v]:
            present[self.edges[e][2]] = e
        pmask = sum(1 << s for s in present)
        if popcount(pmask) < 2:
            return []
        spanned = set()
        for cid in self.vcubes[v]:
            spanned.add(sum(1 << s for s in self.cubes[cid].labels))
        chosen = []
        for m in _cliques(self.graph):
            if m & pmask != m or m in spanned:
                continue
            if any(m & c == m for c in chosen):
                continue
            chosen.append(m)
        return [[present[s] for s in bits(m)] for m in chosen]

    def find_missing_tuple(self):
        if self.find_fold() is not None or self.find_identifiable() is not None:
            raise ValueError("find_missing_tuple needs a folded complex")
        for v in sorted(self.verts):
            miss = self.missing_at(v)
            if miss:
                return v, miss[0]
        return None

    def is_cube_full(self):
        return self.find_missing_tuple() is None

    def is_complete(self):
        return self.is_folded() and self.find_missing_tuple() is None

    # paths ----------------------------------------------------------------

    def trace(self, v, w):
        """Follow the letters of w from v; (end, [(edge, from_vertex)]) or None.

        Needs a folded complex so that each step is determined.
        """
        path = []
        for s in w:
            e = self.edge_with_label(v, s)
            if e is None:
                return None
            path.append((e, v))
            v = self.other_end(e, v)
        return v, path

    def end_of(self, v, w):
        t = self.trace(v, w)
        return None if t is None else t[0]

    def bfs(self, source):
        """(distance, parent edge) maps from source; edges visited by id order."""
        dist = {source: 0}
        parent = {source: None}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for e in sorted(self.inc[x]):
                y = self.other_end(e, x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = e
                    queue.append(y)
        return dist, parent

    def path_label(self, source, target, parent=None):
        """Label of the BFS geodesic from source to target."""
        if parent is None:
            _, parent = self.bfs(source)
        if target not in parent:
            raise ValueError("target is not reachable")
        out = []
        x = target
        while x != source:
            e = parent[x]
            out.append(self.edges[e][2])
            x = self.other_end(e, x)
        return tuple(reversed(out))

    def bfs_distance(self, u, v):
        dist, _ = self.bfs(u)
        if v not in dist:
            raise ValueError("vertices lie in different components")
        return dist[v]

    def eccentricity_from(self, v):
        dist, _ = self.bfs(v)
        if len(dist) != len(self.verts):
            raise ValueError("complex is disconnected")
        return max(dist.values())

    def diameter(self):
        return max((self.eccentricity_from(v) for v in self.verts), default=0)

    def is_connected(self):
        if not self.verts:
            return True
        dist, _ = self.bfs(next(iter(self.verts)))
        return len(dist) == len(self.verts)

    def cycle_basis_labels(self):
        """Label of the fundamental cycle at the basepoint for every non-tree edge."""
        dist, parent = self.bfs(self.basepoint)
        tree = {e for e in parent.values() if e is not None}
        out = []
        for e in sorted(self.edges):
            if e in tree:
                continue
            u, v, s = self.edges[e]
            out.append(self.path_label(self.basepoint, u, parent) + (s,)
                       + tuple(reversed(self.path_label(self.basepoint, v, parent))))
        return out

    # global structure ---------------------------------------------------

    def hyperplanes(self):
        parent = {e: e for e in self.edges}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cube in self.cubes.values():
            for k in range(cube.dim):
                es = cube.axis_edges(k)
                r = find(es[0])
                for e in es[1:]:
                    q = find(e)
                    if q != r:
                        parent[q] = r
        classes = {}
        for e in self.edges:
            classes.setdefault(find(e), set()).add(e)
        out = []
        for members in classes.values():
            labels = {self.edges[e][2] for e in members}
            if len(labels) != 1:
                raise AssertionError("hyperplane with mixed labels")
            out.append(Hyperplane(frozenset(members), labels.pop()))
        return sorted(out, key=lambda h: min(h.edges))

    def has_commuting_bigon(self):
        by_ends = {}
        for e, (u, v, s) in self.edges.items():
            by_ends.setdefault(frozenset((u, v)), []).append(s)
        adj = self.graph.adj
        for labels in by_ends.values():
            for i in range(len(labels)):
                for j in range(i + 1, len(labels)):
                    if adj[labels[i]] >> labels[j] & 1:
                        return True
        return False

    def check_npc(self):
        """Folded, no commuting bigon; needs cube-full or a triangle-free graph."""
        from .graph import is_triangle_free
        if not self.is_folded():
            return False
        if self.find_missing_tuple() is not None and not is_triangle_free(self.graph):
            raise ValueError("curvature test needs a cube-full complex or a triangle-free graph")
        return not self.has_commuting_bigon()

    def validate(self):
        """Raise AssertionError when a structural invariant is broken."""
        g = self.graph
        assert self.basepoint in self.verts, "basepoint missing"
        assert self.origin <= set(self.edges), "origin mark on a missing edge"
        for v in self.verts:
            for e in self.inc[v]:
                assert v in self.edges[e][:2], "incidence index out of date"
        for e, (u, v, s) in self.edges.items():
            assert u in self.verts and v in self.verts, "dangling edge"
            assert e in self.inc[u] and e in self.inc[v], "incidence index out of date"
        for cid, cube in self.cubes.items():
            d = cube.dim
            assert d >= 2 and len(cube.corners) == 1 << d and len(cube.edges) == len(slots(d))
            mask = sum(1 << s for s in cube.labels)
            assert popcount(mask) == d and g.is_clique(mask), "cube labels not a clique"
            assert list(cube.labels) == sorted(cube.labels)
            for i, (c, k) in enumerate(slots(d)):
                e = cube.edges[i]
                assert e in self.edges, "cube references a missing edge"
                u, v, s = self.edges[e]
                assert s == cube.labels[k], "cube edge carries the wrong label"
                assert {u, v} == {cube.corners[c], cube.corners[c | 1 << k]}, "cube edge endpoints disagree"
                assert cid in self.ecubes[e]
            for v in cube.corners:
                assert v in self.verts and cid in self.vcubes[v]
        return True

    # convenience constructors ----------------------------------------------

    @classmethod
    def rose(cls, graph, words):
        """Basepoint with one subdivided circle per nonempty word; all edges origin-marked."""
        c = cls(graph)
        b = c.add_vertex()
        for w in words:
            w = tuple(w)
            if not w:
                continue
            prev = b
            for i, s in enumerate(w):
                nxt = b if i == len(w) - 1 else c.add_vertex()
                c.add_edge(prev, nxt, s, origin=True)
                prev = nxt
        return c

    @classmethod
    def path(cls, graph, w):
        """A path from the basepoint labeled w; all edges origin-marked."""
        c = cls(graph)
        prev = c.add_vertex()
        for s in w:
            nxt = c.add_vertex()
            c.add_edge(prev, nxt, s, origin=True)
            prev = nxt
        return c

    def summary(self):
        return {"vertices": len(self.verts), "edges": len(self.edges), "cubes": len(self.cubes)}


_CLIQUE_CACHE = {}


def _cliques(graph):
    cached = _CLIQUE_CACHE.get(graph)
    if cached is None:
        cached = sorted((m for m in enumerate_cliques(graph) if popcount(m) >= 2),
                        key=lambda m: (-popcount(m), m))
        _CLIQUE_CACHE[graph] = cached
    return cached


def new_rose(graph, words):
    return CubeComplex.rose(graph, words)
