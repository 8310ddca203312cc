"""Red/blue colorings and matching-cut certificates.

A coloring is a tuple indexed by vertex holding ``RED`` (0) or ``BLUE`` (1).
A coloring is *good* when every vertex sees at most one neighbour of the
other color, and *strong* when it is good and uses both colors. Strong
colorings and matching-cuts are the same thing: the cut is the set of
bichromatic edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Edge, Graph, bits, canonical_edge, components, remove_edges

__all__ = [
    "BLUE",
    "RED",
    "CertificateFormatError",
    "MatchingCut",
    "coloring_from_cut",
    "cut_from_coloring",
    "format_certificate",
    "is_good",
    "is_strong",
    "matching_cut_violation",
    "parse_certificate",
    "swap_colors",
    "verify_matching_cut",
]

RED = 0
BLUE = 1

Coloring = tuple[int, ...]


def _blue_mask(c: Sequence[int]) -> int:
    mask = 0
    for v, col in enumerate(c):
        if col:
            mask |= 1 << v
    return mask


def _check_total(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.vertex_count:
        raise ValueError(f"coloring has {len(c)} entries for {g.vertex_count} vertices")
    if any(col not in (RED, BLUE) for col in c):
        raise ValueError("coloring entries must be RED (0) or BLUE (1)")


def is_good(g: Graph, c: Sequence[int]) -> bool:
    _check_total(g, c)
    blue = _blue_mask(c)
    red = ((1 << g.vertex_count) - 1) & ~blue
    adj = g.adjacency_masks
    for v, col in enumerate(c):
        opposite = red if col else blue
        if (adj[v] & opposite).bit_count() > 1:
            return False
    return True


def is_strong(g: Graph, c: Sequence[int]) -> bool:
    return RED in c and BLUE in c and is_good(g, c)


def swap_colors(c: Sequence[int]) -> Coloring:
    return tuple(1 - col for col in c)


@dataclass(frozen=True)
class MatchingCut:
    """Certificate: the cut edges and the two-sided vertex partition."""

    cut: frozenset[Edge]
    side_red: frozenset[int]
    side_blue: frozenset[int]

    def sorted_cut(self) -> list[Edge]:
        return sorted(self.cut)


def cut_from_coloring(g: Graph, c: Sequence[int]) -> MatchingCut:
    if not is_strong(g, c):
        raise ValueError("coloring is not strong, it defines no matching-cut")
    cut = frozenset(canonical_edge(u, v) for u, v in g.edges() if c[u] != c[v])
    red = frozenset(v for v, col in enumerate(c) if col == RED)
    blue = frozenset(v for v, col in enumerate(c) if col == BLUE)
    return MatchingCut(cut, red, blue)


def coloring_from_cut(g: Graph, mc: MatchingCut) -> Coloring:
    """Read the partition of ``mc`` back as a coloring (red side -> RED)."""
    c = [None] * g.vertex_count
    for v in mc.side_red:
        c[v] = RED
    for v in mc.side_blue:
        c[v] = BLUE
    if any(col is None for col in c):
        raise ValueError("certificate partition does not cover every vertex")
    return tuple(c)


def matching_cut_violation(g: Graph, mc: MatchingCut) -> str | None:
    """Return ``None`` if ``mc`` is a valid matching-cut of ``g``, else a reason code.

    The crossing edges are recomputed from the partition; the stored edge set
    must match them exactly.
    """
    n = g.vertex_count
    red, blue = set(mc.side_red), set(mc.side_blue)
    if not red or not blue:
        return "empty-side"
    if red & blue:
        return "sides-overlap"
    if red | blue != set(range(n)):
        return "sides-not-partition"
    cut = set()
    for e in mc.cut:
        if len(e) != 2:
            return "malformed-edge"
        u, v = e
        if not (0 <= u < n and 0 <= v < n) or not g.has_edge(u, v):
            return "non-edge-in-cut"
        cut.add(canonical_edge(u, v))
    crossing = {(u, v) for u, v in g.edges() if (u in red) != (v in red)}
    if cut != crossing:
        return "cut-not-crossing-set"
    used = set()
    for u, v in cut:
        if u in used or v in used:
            return "cut-not-matching"
        used.update((u, v))
    rest = remove_edges(g, cut)
    red_mask = sum(1 << v for v in red)
    for v in blue:
        if rest.neighbor_mask(v) & red_mask:
            return "sides-still-adjacent"
    if len(components(rest)) < 2:
        return "remainder-connected"
    return None


def verify_matching_cut(g: Graph, mc: MatchingCut) -> bool:
    return matching_cut_violation(g, mc) is None


# -- certificate files --------------------------------------------------------

class CertificateFormatError(ValueError):
    pass


def format_certificate(mc: MatchingCut | None) -> str:
    if mc is None:
        return "s NONE\n"
    out = ["s CUT"]
    out += [f"e {u} {v}" for u, v in mc.sorted_cut()]
    out += [f"r {v}" for v in sorted(mc.side_red)]
    out += [f"b {v}" for v in sorted(mc.side_blue)]
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> MatchingCut | None:
    """Parse ``s CUT``/``s NONE`` certificate text; ``None`` means ``s NONE``."""
    status = None
    cut, red, blue = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        head = tokens[0]
        try:
            if head == "s":
                if status is not None or len(tokens) != 2 or tokens[1] not in ("CUT", "NONE"):
                    raise CertificateFormatError(f"line {lineno}: bad status line")
                status = tokens[1]
            elif head == "e" and len(tokens) == 3:
                cut.append((int(tokens[1]), int(tokens[2])))
            elif head in ("r", "b") and len(tokens) == 2:
                (red if head == "r" else blue).append(int(tokens[1]))
            else:
                raise CertificateFormatError(f"line {lineno}: unrecognised line {raw!r}")
        except ValueError as exc:
            if isinstance(exc, CertificateFormatError):
                raise
            raise CertificateFormatError(f"line {lineno}: expected integers") from None
    if status is None:
        raise CertificateFormatError("missing status line")
    if status == "NONE":
        if cut or red or blue:
            raise CertificateFormatError("'s NONE' certificate carries a body")
        return None
    if len(set(red)) != len(red) or len(set(blue)) != len(blue):
        raise CertificateFormatError("vertex listed twice on one side")
    return MatchingCut(frozenset(cut), frozenset(red), frozenset(blue))


def blue_mask(c: Sequence[int]) -> int:
    return _blue_mask(c)


def coloring_from_blue_mask(n: int, mask: int) -> Coloring:
    c = [RED] * n
    for v in bits(mask):
        c[v] = BLUE
    return tuple(c)
