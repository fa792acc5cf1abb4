"""Words in a right-angled Coxeter group.

A word is a tuple of generator indices.  Every generator is an involution, so
the inverse of a word is the reversed word and no signed letters are stored.
"""

from dataclasses import dataclass

from .graph import bits, popcount

EMPTY = ()


def parse_word(graph, text):
    """Parse whitespace-separated generator names.

    A single token that is not itself a generator name but whose characters
    all are (e.g. ``"cab"``) is read letter by letter, which keeps fixtures
    with one-character names short.
    """
    if isinstance(text, tuple):
        return text
    tokens = text.split()
    if len(tokens) == 1 and not graph.has_vertex(tokens[0]):
        if all(graph.has_vertex(ch) for ch in tokens[0]):
            tokens = list(tokens[0])
    return tuple(graph.index(t) for t in tokens)


def parse_words(graph, text):
    """Comma-separated list of words; empty entries are kept as the empty word."""
    return [parse_word(graph, part.strip()) for part in text.split(",")]


def format_word(graph, w):
    return " ".join(graph.vertices[s] for s in w)


def inverse(w):
    return tuple(reversed(w))


def support(w):
    m = 0
    for s in w:
        m |= 1 << s
    return m


def reduce(graph, w):
    """Reduced expression obtained by repeated leftmost deletions.

    Scanning left to right keeps the processed prefix reduced, so the first
    deletable pair always ends at the current letter and its partner is the
    unique copy reachable through letters commuting with it.
    """
    adj = graph.adj
    out = []
    for s in w:
        j = len(out) - 1
        found = False
        while j >= 0:
            t = out[j]
            if t == s:
                del out[j]
                found = True
                break
            if not adj[s] >> t & 1:
                break
            j -= 1
        if not found:
            out.append(s)
    return tuple(out)


def is_reduced(graph, w):
    return len(reduce(graph, w)) == len(w)


def equal(graph, u, v):
    return not reduce(graph, tuple(u) + inverse(v))


def multiply(graph, *words):
    out = ()
    for w in words:
        out += tuple(w)
    return reduce(graph, out)


def conjugate(graph, x, w):
    """Reduced form of x w x^-1."""
    return reduce(graph, tuple(x) + tuple(w) + inverse(x))


def automaton_step(graph, state, s):
    """One step of the reduced-word recognizer.

    ``state`` is the bitmask of letters that can end the word read so far.
    Returns None when appending ``s`` makes the word non-reduced.
    """
    if state >> s & 1:
        return None
    return (1 << s) | (state & graph.adj[s])


def accepts(graph, w):
    state = 0
    for s in w:
        state = automaton_step(graph, state, s)
        if state is None:
            return False
    return True


def last_letters(graph, w):
    """Letters that can end some reduced expression of reduced w."""
    state = 0
    for s in w:
        state = automaton_step(graph, state, s)
        if state is None:
            raise ValueError("word is not reduced")
    return state


def first_letters(graph, w):
    return last_letters(graph, inverse(w))


def prefix_in_weak_order(graph, p, w):
    """True iff some reduced expression of w starts with p (both reduced)."""
    return len(reduce(graph, inverse(p) + tuple(w))) == len(w) - len(p)


def shortlex(graph, w):
    """Lexicographically least reduced expression of w (by generator index)."""
    rest = list(reduce(graph, w))
    out = []
    adj = graph.adj
    while rest:
        # a letter can move to the front iff everything before it commutes with it
        best = None
        seen = 0
        for pos, s in enumerate(rest):
            if not (seen & ~adj[s]) and (best is None or s < rest[best]):
                best = pos
            seen |= 1 << s
        out.append(rest.pop(best))
    return tuple(out)


def _peel(graph, y):
    """Strip matching outer letters, smallest index first.

    Returns (x, core) with y = x core x^-1 and both sides reduced.
    """
    x = []
    while len(y) >= 2:
        cands = first_letters(graph, y) & last_letters(graph, y)
        for s in bits(cands):
            inner = reduce(graph, (s,) + y + (s,))
            if len(inner) == len(y) - 2:
                x.append(s)
                y = inner
                break
        else:
            break
    return tuple(x), y


@dataclass(frozen=True)
class Reflection:
    """The element conjugator * core * conjugator^-1, stored reduced."""

    conjugator: tuple
    core: int

    @property
    def word(self):
        return self.conjugator + (self.core,) + inverse(self.conjugator)

    @property
    def stem(self):
        """conjugator followed by core; the path a trimmed set compares."""
        return self.conjugator + (self.core,)

    def __len__(self):
        return 2 * len(self.conjugator) + 1

    def format(self, graph):
        return {"conjugator": format_word(graph, self.conjugator), "core": graph.vertices[self.core]}


def normalize_reflection(graph, w):
    """Reduced Reflection form of w, or None when w is not a reflection."""
    x, core = _peel(graph, reduce(graph, w))
    if len(core) != 1:
        return None
    return Reflection(x, core[0])


def make_reflection(graph, conjugator, core):
    """Reflection from a conjugator and core, normalizing if not reduced."""
    w = tuple(conjugator) + (core,) + inverse(conjugator)
    r = normalize_reflection(graph, w)
    assert r is not None
    return r


def is_involution(graph, w):
    w = reduce(graph, w)
    return bool(w) and not reduce(graph, w + w)


def involution_clique_form(graph, w):
    """(x, k) with w = x k x^-1 and the letters of k pairwise commuting, or None."""
    w = reduce(graph, w)
    if not w or reduce(graph, w + w):
        return None
    x, core = _peel(graph, w)
    sup = support(core)
    if not graph.is_clique(sup) or popcount(sup) != len(core):
        return None
    return x, core


def power_normal_form(graph, w):
    """(x, h, k) with x h^n k^(n mod 2) x^-1 a reduced expression of w^n for n > 0."""
    w = tuple(w)
    if not is_reduced(graph, w):
        raise ValueError("power_normal_form needs a reduced word")
    x, y = _peel(graph, w)
    sup = support(y)
    central = 0
    for s in bits(sup):
        if y.count(s) == 1 and not (sup & ~(1 << s)) & ~graph.adj[s]:
            central |= 1 << s
    k = tuple(s for s in y if central >> s & 1)
    h = tuple(s for s in y if not central >> s & 1)
    return x, h, k


def power_word(x, h, k, n):
    """The reduced expression of w^n from its power normal form."""
    if not h and n % 2 == 0:
        # w is an involution and x x^-1 would not be reduced
        return ()
    return tuple(x) + tuple(h) * n + (tuple(k) if n % 2 else ()) + inverse(x)
