"""Completions of subgroups of right-angled Coxeter groups."""

from .completion import (BUDGET_EXCEEDED, FINISHED, Budget, CompletionOutcome, complete_subgroup,
                         complete_with_graph_loops, resolve_generators, standard_complete,
                         tree_complete)
from .complex import CubeComplex
from .embedding import (No, ResourcesExhausted, SearchCaps, Yes, check_candidate, compute_M,
                        decide_embeddability, kernel_generators, verify_candidate)
from .graph import (DefiningGraph, complete_graph, cycle_graph, double, edgeless_graph,
                    graph_isomorphic, is_almost_star, join_decomposition, path_graph)
from .reflections import (ReflectionSet, involutions_to_reflections, reflection_completion,
                          standard_gens_graph, trim)
from .subgroups import (Finite, Infinite, Quasiconvex, Unknown, core_graph, index, is_normal,
                        is_torsion_free, membership, power_membership, quasiconvexity, separate,
                        subgroup)
from .words import (Reflection, equal, is_reduced, parse_word, parse_words, reduce, shortlex)

__version__ = "0.1.0"
