"""From Restricted Positive 1-in-3-SAT to matching cut.

Each variable becomes two cliques joined through its three occurrence
vertices; each clause becomes a small gadget whose "special" vertices are all
glued into one big clique. The formula has an assignment making exactly one
variable per clause true iff the graph has a matching cut.
"""

from matchcut import (
    Formula,
    assignment_to_cut,
    cut_to_assignment,
    reduce_to_graph,
    reduction_stats,
    sat_oracle_1in3,
    solve_branch,
    verify_matching_cut,
)
from matchcut.reduction import claim_violations, format_formula

triple = Formula.from_clauses(3, [[(0, k), (1, k), (2, k)] for k in (1, 2, 3)])
unsat = Formula.from_clauses(4, [
    [(0, 1), (1, 1), (2, 1)], [(0, 2), (1, 2), (3, 1)],
    [(0, 3), (2, 2), (3, 2)], [(1, 3), (2, 3), (3, 3)],
])

for name, f in [("triple clause", triple), ("four clauses", unsat)]:
    print(f"== {name} ==")
    print(format_formula(f), end="")
    print("graph:", reduction_stats(f).line())
    a = sat_oracle_1in3(f)
    print("oracle assignment:", a)
    lg = reduce_to_graph(f)
    out = solve_branch(lg.graph)
    print("solver:", out.decision)
    if a is not None:
        mc = assignment_to_cut(f, lg, a)
        print("constructed cut valid:", verify_matching_cut(lg.graph, mc), "| cut edges", len(mc.cut))
        print("read back:", cut_to_assignment(f, lg, mc))
        print("structural violations on the solver's coloring:", claim_violations(f, lg, out.coloring))
    print()
