"""Matching cuts, good colorings, and the two exact solvers.

A matching cut is a set of pairwise disjoint edges whose removal disconnects
the graph. Equivalently: color the vertices red and blue, use both colors,
and let no vertex see more than one neighbour of the other color.
"""

from matchcut import count_colorings, solve_branch, solve_bruteforce, verify_matching_cut
from matchcut.coloring import format_certificate
from matchcut.generators import complete_graph, connected_gnp, cycle_graph

print("== small cases ==")
for name, g in [("C6", cycle_graph(6)), ("K4", complete_graph(4))]:
    good, strong = count_colorings(g)
    out = solve_bruteforce(g)
    print(f"{name}: {good} good colorings, {strong} strong -> {out.decision}")

# C6: cut any two opposite edges
print(format_certificate(solve_bruteforce(cycle_graph(6)).certificate), end="")

print("\n== brute force vs branch-and-propagate on random graphs ==")
for seed in range(6):
    g = connected_gnp(12, 0.35, seed=seed)
    a, b = solve_bruteforce(g), solve_branch(g)
    line = f"seed {seed}: m={g.edge_count:2d} brute={a.decision:4s} branch={b.decision:4s}"
    if b.has_cut:
        line += f" certificate ok={verify_matching_cut(g, b.certificate)}"
    print(line + "  (" + b.stats_lines().strip().replace("\n", " ") + ")")

# brute force stops at 22 vertices; the branch solver keeps going
big = cycle_graph(200)
print("\nC200 via branch:", solve_branch(big).decision)
