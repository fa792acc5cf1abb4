"""Index-two subgroup of the path group a - b - c, generated by ca and cb."""
from racgcomp import index, is_normal, is_torsion_free, membership, parse_word, parse_words, path_graph, subgroup
from racgcomp.words import format_word

g = path_graph("abc")
h = subgroup(g, parse_words(g, "c a, c b"))
print("completion:", h.complex.summary())

v = index(h)
print("index:", v.n, "coset representatives:", [format_word(g, r) or "1" for r in v.representatives])
print("normal:", is_normal(h).verdict)
print("torsion-free:", is_torsion_free(h))  # ab is an involution inside h

for text in ("a b", "a", "c a c b", "a b c"):
    print(f"  {text!r:12} in h: {membership(h, parse_word(g, text))}")
