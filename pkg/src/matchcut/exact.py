"""Exact matching-cut decision for arbitrary connected graphs.

Two certificate-producing solvers live here:

* :func:`solve_bruteforce` scans every coloring with vertex 0 red, vectorised
  over blocks of colorings with numpy. It is the oracle.
* :func:`solve_branch` contracts triangles into monochromatic classes and runs
  a depth-first search over class colorings with unit propagation.

Both return a :class:`SolveOutcome`; a ``CUT`` outcome always carries a
certificate that has already been through :func:`verify_matching_cut`.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np

from .coloring import (
    BLUE,
    RED,
    MatchingCut,
    cut_from_coloring,
    matching_cut_violation,
)
from .graph import Graph, bits, is_connected

__all__ = [
    "BRUTEFORCE_LIMIT",
    "DEFAULT_BUDGET",
    "DisconnectedGraphError",
    "Indeterminate",
    "SizeLimitError",
    "SolveOutcome",
    "count_colorings",
    "good_coloring_masks",
    "solve_branch",
    "solve_bruteforce",
    "triangle_classes",
]

BRUTEFORCE_LIMIT = 22
DEFAULT_BUDGET = 10**8
_BLOCK = 1 << 14


class DisconnectedGraphError(ValueError):
    """The matching-cut question is only posed for connected graphs."""


class SizeLimitError(ValueError):
    pass


class Indeterminate(RuntimeError):
    """A search ran out of budget before reaching a decision."""

    def __init__(self, message: str, stats: dict | None = None, best=None):
        super().__init__(message)
        self.stats = stats or {}
        self.best = best


@dataclass
class SolveOutcome:
    decision: str  # "CUT" or "NONE"
    certificate: MatchingCut | None = None
    stats: dict = field(default_factory=dict)
    coloring: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.decision not in ("CUT", "NONE"):
            raise ValueError(f"bad decision {self.decision!r}")
        if (self.decision == "CUT") != (self.certificate is not None):
            raise ValueError("a CUT decision needs a certificate and NONE must not carry one")

    @property
    def has_cut(self) -> bool:
        return self.decision == "CUT"

    def stats_lines(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.stats.items())


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(
            "graph is disconnected; solve its components separately"
        )


def certified(g: Graph, coloring, stats: dict) -> SolveOutcome:
    """Wrap a strong coloring as a verified CUT outcome."""
    mc = cut_from_coloring(g, coloring)
    reason = matching_cut_violation(g, mc)
    if reason is not None:
        raise AssertionError(f"solver produced an invalid certificate: {reason}")
    return SolveOutcome("CUT", mc, stats, tuple(coloring))


# -- brute force --------------------------------------------------------------

def _adjacency_matrix(g: Graph) -> np.ndarray:
    n = g.vertex_count
    a = np.zeros((n, n), dtype=np.float32)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _good_rows(codes: np.ndarray, n: int, a: np.ndarray, deg: np.ndarray) -> np.ndarray:
    # vertex v reads bit n-1-v, so increasing codes are lexicographic colorings
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    colors = ((codes[:, None] >> shifts) & 1).astype(np.float32)
    blue_nb = colors @ a
    opposite = np.where(colors > 0, deg - blue_nb, blue_nb)
    return (opposite <= 1).all(axis=1)


def _code_to_coloring(code: int, n: int) -> tuple[int, ...]:
    return tuple((code >> (n - 1 - v)) & 1 for v in range(n))


def good_coloring_masks(g: Graph, limit: int = BRUTEFORCE_LIMIT) -> list[tuple[int, ...]]:
    """Every good coloring of ``g``, in lexicographic order (red < blue)."""
    n = g.vertex_count
    if n > limit:
        raise SizeLimitError(f"{n} vertices exceeds brute-force limit {limit}")
    if n == 0:
        return [()]
    a = _adjacency_matrix(g)
    deg = a.sum(axis=0)
    out = []
    for start in range(0, 1 << n, _BLOCK):
        codes = np.arange(start, min(start + _BLOCK, 1 << n), dtype=np.int64)
        for code in codes[_good_rows(codes, n, a, deg)]:
            out.append(_code_to_coloring(int(code), n))
    return out


def count_colorings(g: Graph, limit: int = BRUTEFORCE_LIMIT) -> tuple[int, int]:
    """Exact ``(good, strong)`` counts over all ``2**n`` colorings."""
    n = g.vertex_count
    if n > limit:
        raise SizeLimitError(f"{n} vertices exceeds brute-force limit {limit}")
    if n == 0:
        return 1, 0
    a = _adjacency_matrix(g)
    deg = a.sum(axis=0)
    good = 0
    mono = 0
    full = (1 << n) - 1
    for start in range(0, 1 << n, _BLOCK):
        codes = np.arange(start, min(start + _BLOCK, 1 << n), dtype=np.int64)
        ok = _good_rows(codes, n, a, deg)
        good += int(ok.sum())
        mono += int(ok[(codes == 0) | (codes == full)].sum())
    return good, good - mono


def solve_bruteforce(g: Graph, limit: int = BRUTEFORCE_LIMIT) -> SolveOutcome:
    """Decide by scanning all ``2**(n-1)`` colorings that keep vertex 0 red."""
    require_connected(g)
    n = g.vertex_count
    if n > limit:
        raise SizeLimitError(f"{n} vertices exceeds brute-force limit {limit}")
    stats = {"colorings": 0}
    if n < 2:
        return SolveOutcome("NONE", stats=stats)
    a = _adjacency_matrix(g)
    deg = a.sum(axis=0)
    half = 1 << (n - 1)
    # code 0 is all red; strong colorings are the good codes in 1..half-1
    for start in range(1, half, _BLOCK):
        codes = np.arange(start, min(start + _BLOCK, half), dtype=np.int64)
        ok = np.flatnonzero(_good_rows(codes, n, a, deg))
        if ok.size:
            stats["colorings"] += int(ok[0]) + 1
            return certified(g, _code_to_coloring(int(codes[ok[0]]), n), stats)
        stats["colorings"] += len(codes)
    return SolveOutcome("NONE", stats=stats)


# -- branch and propagate -----------------------------------------------------

def triangle_classes(g: Graph) -> list[int]:
    """Union every triangle into one class; return a class id per vertex.

    Class ids are the smallest vertex of each class. Any strong coloring is
    constant on each class, since a triangle cannot be bichromatic in a good
    coloring.
    """
    parent = list(range(g.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv

    adj = g.adjacency_masks
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if common:
            union(u, v)
            for w in bits(common):
                union(u, w)
    return [find(v) for v in range(g.vertex_count)]


class _Search:
    def __init__(self, g: Graph, budget: int):
        n = g.vertex_count
        self.budget = budget
        self.nbrs = [g.neighbors(v) for v in range(n)]
        self.cls = triangle_classes(g)
        ids = sorted(set(self.cls))
        index = {c: i for i, c in enumerate(ids)}
        self.cls = [index[c] for c in self.cls]
        self.members = [[] for _ in ids]
        for v, k in enumerate(self.cls):
            self.members[k].append(v)
        adj = g.adjacency_masks

        def class_degree(k):
            inside = 0
            reach = 0
            for v in self.members[k]:
                inside |= 1 << v
                reach |= adj[v]
            return (reach & ~inside).bit_count()

        self.order = sorted(range(len(ids)), key=lambda k: (-class_degree(k), self.members[k][0]))
        self.color = [-1] * len(ids)
        self.count = ([0] * n, [0] * n)
        self.trail: list[int] = []
        self.nodes = 0
        self.propagations = 0

    def stats(self) -> dict:
        return {
            "classes": len(self.members),
            "nodes": self.nodes,
            "propagations": self.propagations,
            "steps": self.nodes + self.propagations,
        }

    def _spend(self):
        if self.nodes + self.propagations > self.budget:
            raise Indeterminate(f"budget of {self.budget} steps exhausted", self.stats())

    def assign(self, k: int, col: int) -> bool:
        """Color class ``k`` and propagate; False on contradiction."""
        color, cls, nbrs, count = self.color, self.cls, self.nbrs, self.count
        stack = [(k, col)]
        while stack:
            k, col = stack.pop()
            cur = color[k]
            if cur == col:
                continue
            if cur != -1:
                return False
            color[k] = col
            self.trail.append(k)
            self.propagations += 1
            self._spend()
            same = count[col]
            for v in self.members[k]:
                for w in nbrs[v]:
                    same[w] += 1
            for v in self.members[k]:
                opp = count[1 - col][v]
                if opp >= 2:
                    return False
                if opp == 1:
                    for w in nbrs[v]:
                        if color[cls[w]] == -1:
                            stack.append((cls[w], col))
                for w in nbrs[v]:
                    cw = color[cls[w]]
                    if cw == -1:
                        # two neighbours of one color leave w no other choice
                        if same[w] >= 2:
                            stack.append((cls[w], col))
                        continue
                    o = count[1 - cw][w]
                    if o >= 2:
                        return False
                    if o == 1:
                        for x in nbrs[w]:
                            if color[cls[x]] == -1:
                                stack.append((cls[x], cw))
        return True

    def undo(self, mark: int) -> None:
        color, nbrs, count = self.color, self.nbrs, self.count
        while len(self.trail) > mark:
            k = self.trail.pop()
            same = count[color[k]]
            for v in self.members[k]:
                for w in nbrs[v]:
                    same[w] -= 1
            color[k] = -1

    def dfs(self, pos: int) -> bool:
        order, color = self.order, self.color
        while pos < len(order) and color[order[pos]] != -1:
            pos += 1
        if pos == len(order):
            return BLUE in color
        self.nodes += 1
        self._spend()
        k = order[pos]
        for col in (RED, BLUE):
            mark = len(self.trail)
            if self.assign(k, col) and self.dfs(pos + 1):
                return True
            self.undo(mark)
        return False

    def run(self) -> bool:
        if len(self.members) < 2:
            return False
        self.nodes += 1
        if not self.assign(self.order[0], RED):
            return False
        return self.dfs(1)

    def vertex_coloring(self) -> tuple[int, ...]:
        return tuple(self.color[k] for k in self.cls)


def solve_branch(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveOutcome:
    """Exact decision by triangle contraction plus propagating DFS.

    Raises :class:`Indeterminate` if more than ``budget`` steps (branch nodes
    plus class assignments) are needed; it never guesses.
    """
    require_connected(g)
    search = _Search(g, budget)
    limit = sys.getrecursionlimit()
    if len(search.members) + 100 > limit:
        sys.setrecursionlimit(len(search.members) + 100)
    try:
        found = search.run()
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return SolveOutcome("NONE", stats=search.stats())
    return certified(g, search.vertex_coloring(), search.stats())

