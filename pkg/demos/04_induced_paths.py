"""How long do induced paths get in reduction outputs?

The hardness argument wants the graphs to avoid long induced paths. Here is
the exact value for a few formula sizes. Small formulas have too few gadgets
for the longest path to reach its ceiling, so the value climbs at first and
then stays put. n = 6 takes around half a minute.
"""

import time

from matchcut import longest_induced_path, reduce_to_graph
from matchcut.generators import random_formula

for n in (3, 4, 5, 6):
    g = reduce_to_graph(random_formula(n, 0)).graph
    t = time.perf_counter()
    res = longest_induced_path(g, budget=10**9)
    print(f"n={n}: |V|={g.vertex_count:3d} longest induced path {res.length} "
          f"vertices ({time.perf_counter() - t:.1f}s)")
