"""Seeded instance generators: small graph families, cographs, formulas."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected
from .reduction import Formula

__all__ = [
    "complete_graph",
    "connected_gnp",
    "cycle_graph",
    "gnp_graph",
    "path_graph",
    "random_cograph",
    "random_formula",
]


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def gnp_graph(n: int, p: float, seed=None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def connected_gnp(n: int, p: float, seed=None, tries: int = 10_000) -> Graph:
    """G(n, p) conditioned on connectivity, by rejection."""
    rng = _rng(seed)
    for _ in range(tries):
        g = gnp_graph(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {tries} tries")


def random_cograph(n: int, seed=None, connected: bool = False) -> Graph:
    """Random cograph on ``n`` vertices from a random cotree.

    The vertex set is split recursively into two random nonempty parts that
    are combined by disjoint union or by join; with ``connected=True`` the
    root operation is always a join.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = _rng(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []

    def build(part: list[int], force_join: bool) -> None:
        if len(part) == 1:
            return
        cut = rng.randint(1, len(part) - 1)
        left, right = part[:cut], part[cut:]
        if force_join or rng.random() < 0.5:
            edges.extend((a, b) for a in left for b in right)
        build(left, False)
        build(right, False)

    build(verts, connected)
    return Graph(n, edges)


def random_formula(n: int, seed=None, tries: int = 100_000) -> Formula:
    """Random restricted positive 1-in-3 formula with ``n`` variables.

    Occurrence slots ``(x, i)`` are shuffled and cut into ``n`` triples until
    no triple repeats a variable, i.e. a perfect occurrence matching.
    """
    if n < 3:
        raise ValueError("a restricted formula needs at least 3 variables")
    rng = _rng(seed)
    slots = [(x, i) for x in range(n) for i in (1, 2, 3)]
    for _ in range(tries):
        rng.shuffle(slots)
        clauses = [tuple(slots[3 * k: 3 * k + 3]) for k in range(n)]
        if all(len({x for x, _ in c}) == 3 for c in clauses):
            return Formula(n, tuple(clauses))
    raise RuntimeError(f"no valid formula found in {tries} shuffles")

