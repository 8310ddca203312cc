"""Matching-cut in polynomial time on P5-free graphs.

Every connected P5-free graph has a dominating set that induces a clique or
a P3 (Bacsó and Tuza). With a dominating set of at most three vertices, all
good colorings can be listed: a vertex ``x`` of the dominating set tolerates
at most one outside neighbour of the opposite color, so each coloring is
pinned down by a color per dominating vertex plus one "exception" neighbour
(or none) for each. With a dominating clique of three or more vertices the
clique is monochromatic, every component of the rest is monochromatic, and a
cut exists iff some single component can be turned blue.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from .coloring import BLUE, RED, is_strong
from .exact import (
    DEFAULT_BUDGET,
    DisconnectedGraphError,
    Indeterminate,
    SolveOutcome,
    certified,
    require_connected,
)
from .graph import (
    Graph,
    InducedKind,
    bits,
    classify_induced,
    components,
    is_connected,
    is_dominating,
)

__all__ = [
    "DominatingStructure",
    "InducedPathResult",
    "NotP5FreeError",
    "enumerate_good_colorings",
    "find_dominating_structure",
    "is_pt_free",
    "iter_good_colorings",
    "longest_induced_path",
    "solve_p5free",
    "solve_with_structure",
]


class NotP5FreeError(ValueError):
    """No dominating clique or P3 exists, so the input cannot be P5-free."""


@dataclass(frozen=True)
class DominatingStructure:
    vertices: tuple[int, ...]
    kind: InducedKind

    @property
    def is_full(self) -> bool:
        return self.kind is InducedKind.CLIQUE and len(self.vertices) >= 3


@dataclass(frozen=True)
class InducedPathResult:
    """Longest induced path found.

    ``length`` counts vertices. When ``at_least`` is set the search stopped
    at the requested cap, so the true maximum is ``length`` or more.
    """

    length: int
    path: tuple[int, ...]
    at_least: bool = False


# -- induced paths ------------------------------------------------------------

def longest_induced_path(
    g: Graph, cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> InducedPathResult:
    """Maximum number of vertices on an induced path, by exhaustive DFS.

    A partial path ``p_1 .. p_k`` is extended by ``w`` iff ``w`` is adjacent
    to ``p_k`` and lies outside the closed neighbourhoods of ``p_1 .. p_{k-1}``.
    Stops early once a path with ``cap`` vertices is seen. Raises
    :class:`Indeterminate` (carrying the best result in ``.best``) if more
    than ``budget`` extensions are needed.
    """
    n = g.vertex_count
    if n == 0:
        return InducedPathResult(0, ())
    adj = g.adjacency_masks
    closed = [adj[v] | (1 << v) for v in range(n)]
    best: list[int] = [0]
    steps = 0

    class _Done(Exception):
        pass

    path: list[int] = []

    def extend(last: int, forbidden: int) -> None:
        nonlocal steps
        if len(path) > best[0]:
            best[:] = [len(path)] + path
            if cap is not None and len(path) >= cap:
                raise _Done
        nxt_forbidden = forbidden | closed[last]
        for w in bits(adj[last] & ~forbidden):
            steps += 1
            if steps > budget:
                raise Indeterminate(
                    f"budget of {budget} extensions exhausted",
                    {"steps": steps},
                    InducedPathResult(best[0], tuple(best[1:])),
                )
            path.append(w)
            extend(w, nxt_forbidden)
            path.pop()

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        for s in range(n):
            path.append(s)
            extend(s, 0)
            path.pop()
    except _Done:
        return InducedPathResult(best[0], tuple(best[1:]), at_least=True)
    finally:
        sys.setrecursionlimit(limit)
    return InducedPathResult(best[0], tuple(best[1:]))


def is_pt_free(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``g`` has no induced path on ``t`` vertices."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return longest_induced_path(g, cap=t, budget=budget).length < t


# -- dominating structure -----------------------------------------------------

def _induces_connected(adj, mask: int) -> bool:
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _dominates(adj, full: int, mask: int) -> bool:
    covered = mask
    for v in bits(mask):
        covered |= adj[v]
    return covered == full


def _small_structure(g: Graph) -> tuple[int, ...] | None:
    n = g.vertex_count
    adj = g.adjacency_masks
    full = (1 << n) - 1
    for v in range(n):
        if adj[v] | (1 << v) == full:
            return (v,)
    for u, v in g.edges():
        if _dominates(adj, full, (1 << u) | (1 << v)):
            return (u, v)
    # a connected triple (P3 or triangle) has a vertex adjacent to the other
    # two; triangles are tried first
    for want_triangle in (True, False):
        for v in range(n):
            for a, b in combinations(bits(adj[v]), 2):
                if (adj[a] >> b & 1) != want_triangle:
                    continue
                mask = (1 << v) | (1 << a) | (1 << b)
                if _dominates(adj, full, mask):
                    return tuple(sorted((v, a, b)))
    return None


def _greedy_connected_dominating(g: Graph) -> int:
    adj = g.adjacency_masks
    full = (1 << g.vertex_count) - 1
    current = full
    changed = True
    while changed:
        changed = False
        for v in bits(current):
            trial = current & ~(1 << v)
            if trial and _induces_connected(adj, trial) and _dominates(adj, full, trial):
                current = trial
                changed = True
    return current


def _is_clique(adj, mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def find_dominating_structure(g: Graph) -> DominatingStructure:
    """A dominating set of a connected graph inducing K1, K2, P3 or a clique.

    Tried in order: every vertex set of size at most three; an
    inclusion-minimal connected dominating set obtained by greedy deletion,
    if it happens to be a clique; finally every clique, smallest first.
    The last step is exponential in the worst case.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty graph has no dominating structure")
    if not is_connected(g):
        raise DisconnectedGraphError("dominating structure needs a connected graph")
    adj = g.adjacency_masks
    full = (1 << n) - 1

    found = _small_structure(g)
    if found is None:
        greedy = _greedy_connected_dominating(g)
        if _is_clique(adj, greedy):
            found = tuple(bits(greedy))
    if found is None:
        import networkx as nx

        for clique in nx.enumerate_all_cliques(g.to_networkx()):
            if len(clique) > 3 and _dominates(adj, full, sum(1 << v for v in clique)):
                found = tuple(sorted(clique))
                break
    if found is None:
        raise NotP5FreeError(
            "no dominating clique or P3 exists; the graph is not P5-free "
            "(check with is_pt_free(g, 5))"
        )

    kind = classify_induced(g, found)
    if kind is InducedKind.OTHER or not is_dominating(g, found):
        raise AssertionError(f"dominating structure contract violated for {found}")
    return DominatingStructure(found, kind)


# -- good colorings from a small dominating set --------------------------------

def iter_good_colorings(g: Graph, x: DominatingStructure | Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield every good coloring of ``g`` exactly once, given a dominating set
    ``x`` of at most three vertices."""
    dom = tuple(x.vertices) if isinstance(x, DominatingStructure) else tuple(sorted(set(x)))
    if not dom or len(dom) > 3:
        raise ValueError("need a dominating set of one to three vertices")
    if not is_dominating(g, dom):
        raise ValueError(f"{dom} does not dominate the graph")
    n = g.vertex_count
    adj = g.adjacency_masks
    full = (1 << n) - 1
    dom_mask = sum(1 << v for v in dom)
    outside = [adj[v] & ~dom_mask for v in dom]
    options = [[None] + list(bits(o)) for o in outside]

    seen = set()
    for dom_colors in product((RED, BLUE), repeat=len(dom)):
        dom_blue = sum(1 << v for v, c in zip(dom, dom_colors) if c == BLUE)
        for choice in product(*options):
            red = blue = 0
            for col, nb, ch in zip(dom_colors, outside, choice):
                flip = 0 if ch is None else 1 << ch
                if col == RED:
                    red |= nb & ~flip
                    blue |= flip
                else:
                    blue |= nb & ~flip
                    red |= flip
            if red & blue:
                continue
            blue_mask = dom_blue | blue
            if blue_mask in seen:
                continue
            seen.add(blue_mask)
            red_mask = full & ~blue_mask
            if all(
                (adj[v] & (red_mask if blue_mask >> v & 1 else blue_mask)).bit_count() <= 1
                for v in range(n)
            ):
                yield tuple((blue_mask >> v) & 1 for v in range(n))


def enumerate_good_colorings(g: Graph, x: DominatingStructure | Iterable[int]) -> list[tuple[int, ...]]:
    return list(iter_good_colorings(g, x))


# -- the solver ----------------------------------------------------------------

def solve_p5free(g: Graph) -> SolveOutcome:
    """Exact decision on a connected P5-free graph.

    P5-freeness is not checked here; on other inputs the answer may be wrong
    (run :func:`is_pt_free` first if unsure).
    """
    require_connected(g)
    if g.vertex_count < 2:
        return SolveOutcome("NONE", stats={"branch": "trivial"})
    return solve_with_structure(g, find_dominating_structure(g))


def solve_with_structure(g: Graph, dom: DominatingStructure) -> SolveOutcome:
    """Decide using a given dominating structure: the good-coloring scan when
    it has at most three vertices and is not a clique of three or more,
    otherwise the component test for a full graph."""
    if not is_dominating(g, dom.vertices) or classify_induced(g, dom.vertices) is not dom.kind:
        raise ValueError("structure does not dominate or is mislabelled")
    n = g.vertex_count
    stats = {"kind": dom.kind.value, "dominating": len(dom.vertices)}

    if not dom.is_full:
        stats["branch"] = "lemma"
        tried = 0
        for c in iter_good_colorings(g, dom):
            tried += 1
            if RED in c and BLUE in c:
                stats["colorings"] = tried
                return certified(g, c, stats)
        stats["colorings"] = tried
        return SolveOutcome("NONE", stats=stats)

    stats["branch"] = "full"
    adj = g.adjacency_masks
    dom_mask = sum(1 << v for v in dom.vertices)
    rest, labels = g.induced_subgraph(v for v in range(n) if not dom_mask >> v & 1)
    for block in components(rest):
        comp = [labels[i] for i in block]
        comp_mask = sum(1 << v for v in comp)
        if all((adj[v] & dom_mask).bit_count() <= 1 for v in comp) and all(
            (adj[x] & comp_mask).bit_count() <= 1 for x in dom.vertices
        ):
            coloring = tuple(BLUE if comp_mask >> v & 1 else RED for v in range(n))
            assert is_strong(g, coloring)
            return certified(g, coloring, stats)
    return SolveOutcome("NONE", stats=stats)
