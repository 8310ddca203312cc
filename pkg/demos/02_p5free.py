"""The polynomial-time route for P5-free graphs.

A connected P5-free graph always has a dominating set that induces a clique
or a P3. If that set is small, every good coloring is spelled out by a color
per dominating vertex plus at most one exception neighbour each. If it is a
clique of three or more vertices, one only asks whether a single component
of the remainder can be recolored.
"""

from matchcut import enumerate_good_colorings, find_dominating_structure, solve_bruteforce, solve_p5free
from matchcut.generators import random_cograph
from matchcut.graph import Graph

net = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
d = find_dominating_structure(net)
print("net: dominating", d.kind.value, d.vertices)
out = solve_p5free(net)
print("net:", out.decision, out.stats, "blue side", out.certificate.side_blue)

print("\nstar K1,3 with X = {centre}:")
star = Graph(4, [(0, 1), (0, 2), (0, 3)])
for c in enumerate_good_colorings(star, [0]):
    print("  ", "".join("RB"[x] for x in c))

print("\nrandom connected cographs:")
# cographs are dense in practice, so most of them have no matching cut
for n, seed in [(5, 0), (7, 5), (9, 2), (9, 4), (14, 0)]:
    g = random_cograph(n, seed, connected=True)
    out = solve_p5free(g)
    print(f"  n={n:2d} seed {seed}: m={g.edge_count:2d} {out.stats['kind']:6s} "
          f"-> {out.decision} (brute force says {solve_bruteforce(g).decision})")
