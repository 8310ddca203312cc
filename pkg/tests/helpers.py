"""Independent oracles for the test suite.

Nothing here calls into the solver paths it is used to check; most of it is
plain itertools enumeration or networkx.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import networkx as nx

from matchcut.graph import Graph, is_connected


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def naive_is_good(g: Graph, c) -> bool:
    for v in range(g.vertex_count):
        opposite = sum(1 for w in range(g.vertex_count) if g.has_edge(v, w) and c[w] != c[v])
        if opposite > 1:
            return False
    return True


def naive_good_colorings(g: Graph) -> set:
    return {c for c in product((0, 1), repeat=g.vertex_count) if naive_is_good(g, c)}


def naive_has_matching_cut(g: Graph) -> bool:
    """Definition-level check: some edge set that is a matching disconnects g."""
    nxg = g.to_networkx()
    edges = list(nxg.edges())
    for k in range(len(edges) + 1):
        for cut in combinations(edges, k):
            ends = [v for e in cut for v in e]
            if len(set(ends)) != len(ends):
                continue
            h = nxg.copy()
            h.remove_edges_from(cut)
            if not nx.is_connected(h):
                return True
    return False


def is_valid_matching_cut_nx(g: Graph, red, blue, cut) -> bool:
    nxg = g.to_networkx()
    if not red or not blue or set(red) & set(blue) or set(red) | set(blue) != set(nxg):
        return False
    ends = [v for e in cut for v in e]
    if len(set(ends)) != len(ends):
        return False
    h = nxg.copy()
    h.remove_edges_from(cut)
    return not any(h.has_edge(u, v) for u in red for v in blue)


def induces_path(g: Graph, subset) -> bool:
    sub = g.to_networkx().subgraph(subset)
    k = len(subset)
    if k == 0:
        return False
    if k == 1:
        return True
    return (
        nx.is_connected(sub)
        and sub.number_of_edges() == k - 1
        and max(d for _, d in sub.degree()) <= 2
    )


def longest_induced_path_oracle(g: Graph) -> int:
    """Largest vertex subset whose induced subgraph is a path."""
    n = g.vertex_count
    for k in range(n, 0, -1):
        if any(induces_path(g, s) for s in combinations(range(n), k)):
            return k
    return 0


def is_p4_free_oracle(g: Graph) -> bool:
    return not any(len(s) == 4 and induces_path(g, s) for s in combinations(range(g.vertex_count), 4))


def brute_classify(g: Graph, s) -> str:
    s = sorted(s)
    sub = g.to_networkx().subgraph(s)
    k = len(s)
    if k == 1:
        return "K1"
    complete = sub.number_of_edges() == k * (k - 1) // 2
    if k == 2:
        return "K2" if complete else "OTHER"
    if complete:
        return "CLIQUE"
    if k == 3 and nx.is_isomorphic(sub, nx.path_graph(3)):
        return "P3"
    return "OTHER"


def graph_with_small_dominating_set(rng: random.Random, n: int, p: float):
    """Random graph plus a dominating set of 1..3 vertices, forced by adding edges."""
    k = rng.randint(1, min(3, n))
    dom = rng.sample(range(n), k)
    edges = {e for e in combinations(range(n), 2) if rng.random() < p}
    for v in range(n):
        if v in dom:
            continue
        if not any((min(v, x), max(v, x)) in edges for x in dom):
            x = rng.choice(dom)
            edges.add((min(v, x), max(v, x)))
    return Graph(n, sorted(edges)), sorted(dom)


def brute_1in3(f):
    """All 1-in-3 satisfying assignments by itertools.product."""
    return [
        a for a in product((True, False), repeat=f.n)
        if all(sum(a[x] for x, _ in c) == 1 for c in f.clauses)
    ]


def triple_clause_labelings():
    """Every occurrence-index labelling of (x, y, z) repeated three times."""
    from matchcut.reduction import Formula

    out = []
    for px, py, pz in product(permutations((1, 2, 3)), repeat=3):
        clauses = [((0, px[k]), (1, py[k]), (2, pz[k])) for k in range(3)]
        out.append(Formula(3, tuple(clauses)))
    return out


K = lambda n: Graph(n, combinations(range(n), 2))  # noqa: E731
P = lambda n: Graph(n, [(i, i + 1) for i in range(n - 1)])  # noqa: E731
C = lambda n: Graph(n, [(i, (i + 1) % n) for i in range(n)])  # noqa: E731
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
NET = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
# a, b, c = 0, 1, 2 form the triangles; d = 3 misses c
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


# one line per acceptance criterion, printed by the conftest summary hook
ACCEPTANCE_LINES: list[str] = []


def p5free_pool(seed: int, cographs: int, gnp: int, full_quota: int):
    """Connected P5-free graphs: random cographs plus rejection-sampled G(n, p).

    G(n, p) samples are kept only if connected and P5-free. At least
    ``full_quota`` of them are drawn from samples whose dominating structure
    is a clique of three or more, which plain sampling produces only a few
    percent of the time.
    """
    from matchcut.generators import random_cograph
    from matchcut.p5free import find_dominating_structure, is_pt_free

    rng = random.Random(seed)
    pool = [random_cograph(rng.randint(2, 14), rng, connected=True) for _ in range(cographs)]
    full, rest = [], []
    while len(full) < full_quota or len(full) + len(rest) < gnp:
        n = rng.randint(5, 12) if len(rest) < gnp - full_quota else rng.randint(6, 9)
        g = random_graph(rng, n, rng.choice([0.25, 0.3, 0.35, 0.4, 0.5]))
        if not is_connected(g) or not is_pt_free(g, 5):
            continue
        if find_dominating_structure(g).is_full:
            if len(full) < full_quota:
                full.append(g)
        elif len(rest) < gnp - full_quota:
            rest.append(g)
    return pool + full + rest
