"""Finite-index embeddings of one right-angled Coxeter group in a 2-dimensional one.

Candidates are trimmed reflection sets.  A candidate is accepted when its
completion has finite index and its commutation graph is the target graph.
"""

from dataclasses import dataclass, field
from math import comb

from .completion import Budget, complete_subgroup
from .graph import (bits, complement_components, dominating_vertices,
                    double_vertex_map, enumerate_cliques, graph_isomorphic, is_almost_star,
                    is_triangle_free, popcount)
from .reflections import (ReflectionSet, _violation, as_reflection, reflection_completion,
                          standard_gens_graph, trim)
from .subgroups import Finite, Infinite, index_from_complex
from .words import inverse, is_reduced, normalize_reflection, reduce, shortlex


@dataclass(frozen=True)
class SearchCaps:
    max_conjugator_length: int = 2
    max_candidates: int = 200_000
    budget: Budget = field(default_factory=Budget.from_env)

    def __post_init__(self):
        if self.max_conjugator_length < 0 or self.max_candidates <= 0:
            raise ValueError("search caps must be positive")


@dataclass
class Yes:
    witness: ReflectionSet
    index: int
    case: str
    verdict: str = "yes"


@dataclass
class No:
    case: str
    reason: str
    verdict: str = "no"


@dataclass
class ResourcesExhausted:
    case: str
    stats: dict
    verdict: str = "exhausted"


@dataclass
class CandidateResult:
    ok: bool
    index: object = None
    reason: str = ""
    trimmed: ReflectionSet = None


def compute_M(graph, n):
    """Pigeonhole bound: a reduced word longer than this repeats some letter 2n+2 times."""
    if n < 1:
        raise ValueError("N must be at least 1")
    return (2 * n + 1) * len(graph)


def kernel_generators(graph, s):
    """t and s t s for t != s, deduplicated; they generate the kernel of the s-parity map."""
    if isinstance(s, str):
        s = graph.index(s)
    if not 0 <= s < len(graph):
        raise ValueError("unknown vertex")
    out = []
    for t in range(len(graph)):
        if t == s:
            continue
        for w in ((t,), reduce(graph, (s, t, s))):
            if w not in out:
                out.append(w)
    return out


def parity(w, s):
    return sum(1 for x in w if x == s) % 2


# candidate checks ------------------------------------------------------------

def check_candidate(graph, target, refl, budget=None):
    if not is_triangle_free(graph):
        raise ValueError("the ambient defining graph must be triangle-free")
    try:
        items = [as_reflection(graph, r) for r in refl]
    except ValueError as exc:
        return CandidateResult(False, reason=str(exc))
    rs = trim(graph, items)
    if len(rs) != len(target):
        return CandidateResult(False, reason="trimmed set has the wrong size", trimmed=rs)
    delta = standard_gens_graph(graph, rs.reflections)
    if graph_isomorphic(delta, target) is None:
        return CandidateResult(False, reason="commutation graph differs from the target", trimmed=rs)
    idx = finite_index_of_reflections(graph, rs.reflections, budget)
    if idx is None:
        return CandidateResult(False, reason="completion did not finish", trimmed=rs)
    if not isinstance(idx, Finite):
        return CandidateResult(False, index=idx, reason="infinite index", trimmed=rs)
    return CandidateResult(True, idx.n, "", rs)


def finite_index_of_reflections(graph, refl, budget=None):
    """Finite/Infinite for the subgroup generated by trimmed reflections; None if over budget.

    A dominating generator needs a resolved completion, so that case goes
    through the standard completion instead of the reflection pipeline.
    """
    if dominating_vertices(graph):
        out = complete_subgroup(graph, [r.word for r in refl], budget, resolved=True)
        if not out.finished:
            return None
        return index_from_complex(out.complex)
    return index_from_complex(reflection_completion(graph, refl).complex)


def verify_candidate(graph, target, refl, budget=None):
    return check_candidate(graph, target, refl, budget).ok


# index through the double --------------------------------------------------

def rewrite_into_double(graph, u, w, vmap):
    """Spell an element of the u-parity kernel in the generators of the double.

    The u-parity is tracked along the word; letters at odd parity become
    their second copy, u itself is dropped.
    """
    p = 0
    out = []
    for x in w:
        if x == u:
            p ^= 1
            continue
        out.append(vmap[x][p])
    if p:
        raise ValueError("word is not in the kernel")
    return tuple(out)


def index_via_double(graph, gens, u, budget=None):
    """[W : G] computed as 2 [K : K'] / [G : K'] with K the u-parity kernel, K' = G meet K."""
    gens = [reduce(graph, w) for w in gens]
    odd = [w for w in gens if parity(w, u)]
    r = odd[0] if odd else None
    schreier = []
    for x in gens:
        if parity(x, u):
            schreier += [x + inverse(r), r + x]
        else:
            schreier.append(x)
            if r is not None:
                schreier.append(r + x + inverse(r))
    d, vmap = double_vertex_map(graph, u)
    words = [reduce(d, rewrite_into_double(graph, u, reduce(graph, w), vmap)) for w in schreier]
    out = complete_subgroup(d, [w for w in words if w], budget, resolved=True)
    if not out.finished:
        return None
    k = index_from_complex(out.complex)
    if not isinstance(k, Finite):
        return Infinite()
    g_k = 2 if r is not None else 1
    n, rem = divmod(2 * k.n, g_k)
    assert rem == 0
    return Finite(n, [])


# enumeration ---------------------------------------------------------------

def reduced_elements(graph, max_len):
    """Shortlex forms of all elements of length <= max_len, shortest first."""
    layer = [()]
    out = [()]
    for _ in range(max_len):
        nxt = set()
        for w in layer:
            for s in range(len(graph)):
                ws = w + (s,)
                if is_reduced(graph, ws):
                    nxt.add(shortlex(graph, ws))
        layer = sorted(nxt)
        out.extend(layer)
    return out


def reflections_up_to(graph, max_len):
    """Distinct reflections with conjugator length <= max_len, sorted by (length, shortlex)."""
    seen = {}
    for x in reduced_elements(graph, max_len):
        for s in range(len(graph)):
            w = x + (s,) + inverse(x)
            if not is_reduced(graph, w):
                continue
            r = normalize_reflection(graph, w)
            key = shortlex(graph, r.word)
            seen.setdefault(key, r)
    return [seen[k] for k in sorted(seen, key=lambda k: (len(k), k))]


def candidate_sets(graph, size, max_len):
    """Trimmed reflection sets, by total conjugator length then lexicographic index."""
    refl = reflections_up_to(graph, max_len)
    lens = [len(r.conjugator) for r in refl]
    if size == 0:
        yield []
        return
    if len(refl) < size:
        return
    top = max(lens)
    # trimmedness is a pairwise condition, so it prunes during the search
    bad = [[_violation(graph, [refl[i], refl[j]]) is not None for j in range(len(refl))]
           for i in range(len(refl))]

    def pick(start, k, total, chosen):
        for i in range(start, len(refl)):
            l = lens[i]
            if l * k > total:
                break
            if l + (k - 1) * top < total or any(bad[i][j] for j in chosen):
                continue
            if k == 1:
                if l == total:
                    yield chosen + (i,)
                continue
            yield from pick(i + 1, k - 1, total - l, chosen + (i,))

    for total in range(size * top + 1):
        for combo in pick(0, size, total, ()):
            yield [refl[i] for i in combo]


def growth_coefficients(graph, n):
    """Number of elements of each length 0..n, from the clique polynomial."""
    cliques = [popcount(m) for m in enumerate_cliques(graph)]
    counts = {}
    for k in [0] + cliques:
        counts[k] = counts.get(k, 0) + 1
    d = max(counts)
    # (1+t)^d / sum_k c_k (-t)^k (1+t)^(d-k)
    den = [0] * (d + 1)
    for k, c in counts.items():
        for j in range(d - k + 1):
            den[k + j] += c * (-1) ** k * comb(d - k, j)
    num = [comb(d, j) for j in range(d + 1)]
    out = []
    for i in range(n + 1):
        v = num[i] if i < len(num) else 0
        v -= sum(den[j] * out[i - j] for j in range(1, min(i, d) + 1))
        out.append(v)
    return out


def candidate_space_bound(graph, size, max_len):
    """Upper bound on the number of reflection sets searched."""
    n_refl = len(graph) * sum(growth_coefficients(graph, max_len))
    return comb(n_refl, size)


# the decision procedure ------------------------------------------------------

def decide_embeddability(graph, target, caps=None):
    caps = caps or SearchCaps()
    if not is_triangle_free(graph):
        raise ValueError("the ambient defining graph must be triangle-free")
    for i in range(len(target)):
        if not target.adj[i]:
            raise ValueError(f"target vertex {target.vertices[i]} is isolated")
    return _decide(graph, target, caps)


def _decide(graph, target, caps):
    if len(graph) <= 2:
        return _small_case(graph, target)
    split = join_sides(graph)
    if split is not None:
        return _join_case(graph, target, caps, *split)
    if is_almost_star(graph) is None:
        return _search(graph, target, caps, "i", exhaustive_at=compute_M(graph, max(len(target), 1)))
    return _search(graph, target, caps, "iv", exhaustive_at=None)


def join_sides(graph):
    """(A, B) masks with V = A * B and both sides of size >= 2, or None."""
    comps = complement_components(graph)
    if len(comps) < 2:
        return None
    big = [c for c in comps if popcount(c) >= 2]
    small = [c for c in comps if popcount(c) < 2]
    # singleton components are dominating vertices; any grouping with two big sides works
    if len(comps) == 2:
        a, b = comps
    elif big:
        a = big[0]
        b = graph.full_mask & ~a
    else:
        a = small[0] | small[1]
        b = graph.full_mask & ~a
    if popcount(a) < 2 or popcount(b) < 2:
        return None
    return a, b


def _small_case(graph, target):
    k = len(graph)
    if graph.is_clique(graph.full_mask):
        j = len(target)
        if j > k or not target.is_clique(target.full_mask):
            return No("ii", "a finite group only contains finite special subgroups of smaller rank")
        wit = trim(graph, [(s,) for s in range(j)])
        return Yes(wit, 2 ** (k - j), "ii")
    # two isolated vertices: infinite dihedral group
    if len(target) == 2 and not target.edges:
        return Yes(dihedral_witness(graph, 1), 1, "ii")
    return No("ii", "the only finite-index Coxeter subgroups of the infinite dihedral group are dihedral")


def dihedral_witness(graph, n):
    """Reflections {a, b a b ... (2n-1 letters)} generating an index-n dihedral subgroup."""
    if len(graph) != 2 or graph.edges or n < 1:
        raise ValueError("needs two non-adjacent generators and n >= 1")
    alt = tuple((1, 0)[i % 2] for i in range(2 * n - 1))
    return trim(graph, [(0,), alt])


def _join_case(graph, target, caps, a, b):
    ga, gb = graph.induced(a), graph.induced(b)
    comps = complement_components(target)
    if len(comps) < 2:
        return No("iii", "the target is not a join")
    exhausted = None
    for mask in range(1, 2 ** (len(comps) - 1)):
        left = 0
        for i, c in enumerate(comps):
            if mask >> i & 1:
                left |= c
        right = target.full_mask & ~left
        for ta, tb in ((left, right), (right, left)):
            va = _decide(ga, target.induced(ta), caps)
            if isinstance(va, ResourcesExhausted):
                exhausted = va
            if not isinstance(va, Yes):
                continue
            vb = _decide(gb, target.induced(tb), caps)
            if isinstance(vb, ResourcesExhausted):
                exhausted = vb
            if not isinstance(vb, Yes):
                continue
            words = [_lift(graph, ga, w) for w in va.witness.words()]
            words += [_lift(graph, gb, w) for w in vb.witness.words()]
            return Yes(trim(graph, words), va.index * vb.index, "iii")
    if exhausted is not None:
        return ResourcesExhausted("iii", exhausted.stats)
    return No("iii", "no splitting of the target embeds factorwise")


def _lift(graph, sub, w):
    return tuple(graph.index(sub.vertices[s]) for s in w)


def doubling_vertex(graph):
    """The vertex whose parity kernel turns an almost star graph into one that is not."""
    dom = dominating_vertices(graph)
    if dom:
        return dom[0]
    s, t = is_almost_star(graph)
    for u in bits(graph.link(s)):
        if graph.adj[u] == 1 << s and u != t:
            return u
    raise AssertionError("almost star graph without a leaf at the centre")


def _search(graph, target, caps, case, exhaustive_at):
    size = len(target)
    limit = caps.max_conjugator_length
    if exhaustive_at is not None:
        limit = min(limit, exhaustive_at)
    stats = {"case": case, "conjugator_length": limit, "candidates": 0, "completions": 0,
             "theoretical_M": exhaustive_at}
    for items in candidate_sets(graph, size, limit):
        if stats["candidates"] >= caps.max_candidates:
            stats["truncated"] = True
            return ResourcesExhausted(case, stats)
        stats["candidates"] += 1
        delta = standard_gens_graph(graph, items)
        if graph_isomorphic(delta, target) is None:
            continue
        stats["completions"] += 1
        res = check_candidate(graph, target, items, caps.budget)
        if res.ok:
            if case == "iv":
                u = doubling_vertex(graph)
                alt = index_via_double(graph, res.trimmed.words(), u, caps.budget)
                assert alt is None or alt.n == res.index, "index through the double disagrees"
            return Yes(res.trimmed, res.index, case)
    if exhaustive_at is not None and caps.max_conjugator_length >= exhaustive_at:
        return No(case, "no admissible trimmed reflection set works")
    return ResourcesExhausted(case, stats)

