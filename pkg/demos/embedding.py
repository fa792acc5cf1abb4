"""Look for reflection subgroups of finite index isomorphic to a given target."""
from racgcomp import SearchCaps, cycle_graph, decide_embeddability, double, path_graph, verify_candidate

c5 = cycle_graph("abcde")
for name, target in (("double of C5", double(c5, 0)), ("C9", cycle_graph("123456789"))):
    v = decide_embeddability(c5, target, SearchCaps(max_conjugator_length=2))
    print(f"{name}: {v.verdict}, case {v.case}, index {getattr(v, 'index', None)}")
    if v.verdict == "yes":
        assert verify_candidate(c5, target, v.witness.reflections)

# a join splits the problem into its factors
v = decide_embeddability(cycle_graph("abcd"), path_graph("wxyz"))
print("C4 into P4:", v.verdict, "-", v.reason)
