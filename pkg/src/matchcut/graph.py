"""Simple undirected graphs on dense integer vertex ids.

Adjacency is stored as one Python ``int`` bitmask per vertex, so adjacency
tests are a shift-and-mask and neighbourhood intersections are a single
``&``. Graphs are immutable once built.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "InducedKind",
    "bits",
    "canonical_edge",
    "classify_induced",
    "components",
    "is_connected",
    "is_dominating",
    "parse_graph",
    "remove_edges",
    "serialize_graph",
]

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when graph text does not match its declared format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InducedKind(enum.Enum):
    K1 = "K1"
    K2 = "K2"
    P3 = "P3"
    CLIQUE = "CLIQUE"
    OTHER = "OTHER"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self._n = n
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def from_adjacency_masks(cls, masks: Sequence[int]) -> Graph:
        g = cls.__new__(cls)
        g._n = len(masks)
        g._adj = tuple(masks)
        g._m = sum(mask.bit_count() for mask in masks) // 2
        return g

    @classmethod
    def from_networkx(cls, nxg) -> Graph:
        """Build from a networkx graph, relabelling nodes in sorted order."""
        nodes = sorted(nxg.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self._n):
            for v in bits(self._adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        sub = [(index[u], index[v]) for u, v in combinations(old, 2) if self.has_edge(u, v)]
        return Graph(len(old), sub), old

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj = g.adjacency_masks
    unseen = (1 << g.vertex_count) - 1
    blocks = []
    while unseen:
        frontier = unseen & -unseen
        block = 0
        while frontier:
            block |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~block
        unseen &= ~block
        blocks.append(list(bits(block)))
    return blocks


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s``."""
    inside = _mask(s)
    covered = inside
    for v in bits(inside):
        covered |= g.neighbor_mask(v)
    return covered == (1 << g.vertex_count) - 1


def classify_induced(g: Graph, s: Iterable[int]) -> InducedKind:
    vs = sorted(set(s))
    if not vs:
        raise ValueError("cannot classify an empty vertex set")
    k = len(vs)
    if k == 1:
        return InducedKind.K1
    edges = sum(g.has_edge(u, v) for u, v in combinations(vs, 2))
    if k == 2:
        return InducedKind.K2 if edges == 1 else InducedKind.OTHER
    if edges == k * (k - 1) // 2:
        return InducedKind.CLIQUE
    # two edges on three vertices is always a path
    if k == 3 and edges == 2:
        return InducedKind.P3
    return InducedKind.OTHER


def remove_edges(g: Graph, cut: Iterable[Sequence[int]]) -> Graph:
    """Same vertex set, with the edges of ``cut`` deleted."""
    adj = list(g.adjacency_masks)
    for u, v in cut:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        if not adj[u] >> v & 1:
            raise ValueError(f"edge ({u}, {v}) listed twice")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph.from_adjacency_masks(adj)


# -- text formats -----------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n: int, m: int | None, edges: list[tuple[int, int, int]]) -> Graph:
    adj = [0] * n
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if adj[u] >> v & 1:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if m is not None and m != len(edges):
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_adjacency_masks(adj)


def _parse_dimacs(lines: list[str]) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("second header line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError("malformed header, expected 'p edge <n> <m>'", lineno)
            n, m = _ints(tokens[2:], lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return _build(n, m, edges)


def _parse_edgelist(lines: list[str]) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if len(tokens) != 2:
            raise GraphFormatError("expected two integers", lineno)
        a, b = _ints(tokens, lineno)
        if n is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            n, m = a, b
        else:
            edges.append((a, b, lineno))
    if n is None:
        raise GraphFormatError("missing '<n> <m>' header")
    return _build(n, m, edges)


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse DIMACS (``p edge``, 1-based) or EDGELIST (``n m``, 0-based) text."""
    fmt = format.lower()
    lines = text.splitlines()
    if fmt == "dimacs":
        return _parse_dimacs(lines)
    if fmt == "edgelist":
        return _parse_edgelist(lines)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    fmt = format.lower()
    edges = list(g.edges())
    if fmt == "dimacs":
        out = [f"p edge {g.vertex_count} {len(edges)}"]
        out += [f"e {u + 1} {v + 1}" for u, v in edges]
    elif fmt == "edgelist":
        out = [f"{g.vertex_count} {len(edges)}"]
        out += [f"{u} {v}" for u, v in edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(out) + "\n"
