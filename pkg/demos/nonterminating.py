"""A cyclic subgroup whose completion keeps growing: peak size rises with the budget."""
from racgcomp import Budget, Unknown, cycle_graph, parse_word, quasiconvexity, subgroup

g = cycle_graph("abcd")
w = parse_word(g, "a b c d")
for cells in (100, 1000, 10000):
    v = quasiconvexity(subgroup(g, [w], Budget(cells, 10**7)))
    assert isinstance(v, Unknown)
    print(f"budget {cells:>6} cells: stopped, peak {v.peak_cells}")
