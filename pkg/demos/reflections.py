"""Trim a set of reflections, complete it quickly and read off the generated group."""
from racgcomp import parse_words, path_graph, quasiconvexity, reflection_completion, standard_gens_graph, trim
from racgcomp.subgroups import handle_from_complex, membership

g = path_graph("bdac")
words = parse_words(g, "d a c b c a d, d c d c d, a c a c a")
rs = trim(g, words)
for r in rs.reflections:
    print("reflection", r.format(g))

cx = reflection_completion(g, rs).complex
print("completion:", cx.summary())
h = handle_from_complex(cx)
print("quasiconvexity constant:", quasiconvexity(h).M)
print("all inputs are members:", all(membership(h, w) for w in words))

d = standard_gens_graph(g, rs.reflections)
print("subgroup is a right-angled Coxeter group on", len(d), "generators with edges", sorted(d.edges))
