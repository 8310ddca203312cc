"""Restricted Positive 1-in-3-SAT and its reduction to matching-cut.

A restricted formula has ``n`` variables and ``n`` clauses of three distinct
positive variables, each variable occurring exactly three times. Every
literal carries its occurrence index (1, 2 or 3), which selects the variable
vertex it attaches to.

The construction, for a fixed hub variable ``s``:

* each variable ``x`` gets two vertex-disjoint cliques ``C_x^v`` and
  ``C_x^u``. For ``x != s`` they hold five vertices: three variable vertices
  (one per occurrence), a plain vertex and one auxiliary vertex. For ``s``
  they hold ``n + 3`` vertices, with ``n - 1`` auxiliary vertices;
* auxiliary vertex ``j`` of the hub is tied to the auxiliary vertices of the
  ``j``-th other variable: ``v_s^j`` and ``u_s^j`` are both joined to both
  ``v_x^1`` and ``u_x^1``;
* each clause ``C`` gets ``v_C``, ``u_C^1``, ``u_C^2`` (the *special*
  vertices) and two occurrence vertices per literal. ``v_C`` is joined to
  the three ``v`` variable vertices; the occurrence vertex ``(t, C, a)`` is
  joined to ``t``'s ``u`` variable vertex and to ``u_C^a``;
* all special vertices form one clique.

The formula is 1-in-3 satisfiable iff the graph has a matching-cut.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

import numpy as np

from .coloring import BLUE, RED, MatchingCut, coloring_from_cut, cut_from_coloring, is_strong
from .graph import Graph

__all__ = [
    "Formula",
    "FormulaFormatError",
    "LabeledGraph",
    "ReductionStats",
    "Role",
    "assignment_to_coloring",
    "assignment_to_cut",
    "claim_violations",
    "cut_to_assignment",
    "format_formula",
    "format_roles",
    "is_1in3_satisfying",
    "parse_formula",
    "parse_roles",
    "reduce_to_graph",
    "reduction_stats",
    "sat_oracle_1in3",
    "validate_restricted",
]

ORACLE_LIMIT = 25

Literal = tuple[int, int]  # (variable, occurrence index)


@dataclass(frozen=True)
class Formula:
    """Variables are ``0..n-1``; clauses are triples of ``(variable, occurrence)``."""

    n: int
    clauses: tuple[tuple[Literal, ...], ...]

    @classmethod
    def from_clauses(cls, n: int, clauses) -> Formula:
        return cls(n, tuple(tuple((int(x), int(i)) for x, i in c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def renamed(self, perm: Sequence[int]) -> Formula:
        """Rename variable ``x`` to ``perm[x]``."""
        return Formula(self.n, tuple(tuple((perm[x], i) for x, i in c) for c in self.clauses))


def validate_restricted(f: Formula) -> list[str]:
    """All violations of the restricted-formula rules; empty means valid."""
    problems = []
    if f.m != f.n:
        problems.append(f"clause count {f.m} != variable count {f.n}")
    uses: dict[int, list[int]] = {x: [] for x in range(f.n)}
    for ci, clause in enumerate(f.clauses, 1):
        if len(clause) != 3:
            problems.append(f"clause {ci}: has {len(clause)} literals, expected 3")
        seen = Counter(x for x, _ in clause)
        for x, k in sorted(seen.items()):
            if k > 1:
                problems.append(f"clause {ci}: repeated variable in clause ({x + 1})")
        for x, i in clause:
            if not 0 <= x < f.n:
                problems.append(f"clause {ci}: variable {x + 1} out of range 1..{f.n}")
                continue
            if i not in (1, 2, 3):
                problems.append(f"clause {ci}: occurrence index {i} of variable {x + 1} not in 1..3")
            uses[x].append(i)
    for x, occ in uses.items():
        if len(occ) != 3:
            problems.append(f"variable {x + 1}: occurrence count {len(occ)} != 3")
        for i, k in sorted(Counter(occ).items()):
            if k > 1 and i in (1, 2, 3):
                problems.append(f"variable {x + 1}: occurrence index {i} used {k} times")
    return problems


def _require_valid(f: Formula) -> None:
    problems = validate_restricted(f)
    if problems:
        raise ValueError("invalid restricted formula: " + "; ".join(problems))


def is_1in3_satisfying(f: Formula, assignment: Sequence[bool]) -> bool:
    if len(assignment) != f.n:
        return False
    return all(sum(bool(assignment[x]) for x, _ in c) == 1 for c in f.clauses)


def sat_oracle_1in3(f: Formula, limit: int = ORACLE_LIMIT) -> tuple[bool, ...] | None:
    """Lexicographically first 1-in-3 assignment (``True`` before ``False``,
    variable 0 most significant), or ``None``. Exhaustive over ``2**n``."""
    _require_valid(f)
    n = f.n
    if n > limit:
        raise ValueError(f"{n} variables exceeds oracle limit {limit}")
    members = np.array([[x for x, _ in c] for c in f.clauses], dtype=np.int64).reshape(-1, 3)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    block = 1 << 16
    for start in range(0, 1 << n, block):
        codes = np.arange(start, min(start + block, 1 << n), dtype=np.int64)
        # bit clear means true, so increasing codes run True-first
        truth = ((codes[:, None] >> shifts) & 1) == 0
        per_clause = truth[:, members].sum(axis=2)
        hits = np.flatnonzero((per_clause == 1).all(axis=1))
        if hits.size:
            return tuple(bool(t) for t in truth[hits[0]])
    return None


# -- formula files ------------------------------------------------------------

class FormulaFormatError(ValueError):
    pass


_LITERAL = re.compile(r"^(\d+):(\d+)$")


def parse_formula(text: str) -> Formula:
    """Parse ``p r1in3 <n> <m>`` text with clause lines ``x:i y:j z:k`` (1-based ids)."""
    n = m = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None or len(tokens) != 4 or tokens[1] != "r1in3":
                raise FormulaFormatError(f"line {lineno}: malformed header, expected 'p r1in3 <n> <m>'")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise FormulaFormatError(f"line {lineno}: header counts must be integers") from None
            continue
        if n is None:
            raise FormulaFormatError(f"line {lineno}: clause before header")
        clause = []
        for tok in tokens:
            match = _LITERAL.match(tok)
            if not match:
                raise FormulaFormatError(f"line {lineno}: bad literal {tok!r}, expected '<var>:<occurrence>'")
            clause.append((int(match.group(1)) - 1, int(match.group(2))))
        clauses.append(tuple(clause))
    if n is None:
        raise FormulaFormatError("missing 'p r1in3' header")
    if m != len(clauses):
        raise FormulaFormatError(f"header declares {m} clauses, found {len(clauses)}")
    return Formula(n, tuple(clauses))


def format_formula(f: Formula) -> str:
    out = [f"p r1in3 {f.n} {f.m}"]
    out += [" ".join(f"{x + 1}:{i}" for x, i in c) for c in f.clauses]
    return "\n".join(out) + "\n"


# -- the construction -----------------------------------------------------------

class Role(NamedTuple):
    """Gadget role of a vertex. Variables and clauses are 0-based here and
    1-based in the text form, e.g. ``VVAR(1,2)`` or ``UOCC(3,1,2)``."""

    kind: str
    var: int | None = None
    clause: int | None = None
    index: int | None = None

    def __str__(self) -> str:
        k = self.kind
        if k in ("VVAR", "UVAR", "VAUX", "UAUX"):
            args = (self.var + 1, self.index)
        elif k in ("VPLAIN", "UPLAIN"):
            args = (self.var + 1,)
        elif k == "VC":
            args = (self.clause + 1,)
        elif k == "UC":
            args = (self.clause + 1, self.index)
        elif k == "UOCC":
            args = (self.var + 1, self.clause + 1, self.index)
        else:
            raise ValueError(f"unknown role kind {k!r}")
        return f"{k}({','.join(map(str, args))})"

    @classmethod
    def parse(cls, text: str) -> Role:
        match = re.fullmatch(r"([A-Z]+)\(([\d,]+)\)", text.strip())
        if not match:
            raise ValueError(f"bad role tag {text!r}")
        k = match.group(1)
        a = [int(t) for t in match.group(2).split(",")]
        shapes = {
            "VVAR": 2, "UVAR": 2, "VAUX": 2, "UAUX": 2,
            "VPLAIN": 1, "UPLAIN": 1, "VC": 1, "UC": 2, "UOCC": 3,
        }
        if shapes.get(k) != len(a):
            raise ValueError(f"bad role tag {text!r}")
        if k in ("VVAR", "UVAR", "VAUX", "UAUX"):
            return cls(k, var=a[0] - 1, index=a[1])
        if k in ("VPLAIN", "UPLAIN"):
            return cls(k, var=a[0] - 1)
        if k == "VC":
            return cls(k, clause=a[0] - 1)
        if k == "UC":
            return cls(k, clause=a[0] - 1, index=a[1])
        return cls(k, var=a[0] - 1, clause=a[1] - 1, index=a[2])


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    roles: tuple[Role, ...]
    hub: int
    index: dict = field(compare=False, repr=False)

    def vertex(self, kind: str, var=None, clause=None, index=None) -> int:
        return self.index[Role(kind, var, clause, index)]

    def v_circle(self, x: int) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r.var == x and r.kind in ("VVAR", "VPLAIN", "VAUX")]

    def u_circle(self, x: int) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r.var == x and r.kind in ("UVAR", "UPLAIN", "UAUX")]

    def special(self) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r.kind in ("VC", "UC")]


def reduce_to_graph(f: Formula, s: int = 0, pairing: Sequence[int] | None = None) -> LabeledGraph:
    """Build the matching-cut instance for ``f`` with hub variable ``s``.

    ``pairing`` lists the non-hub variables in the order their auxiliary
    vertices are tied to hub auxiliaries ``1..n-1``; default is index order.
    """
    _require_valid(f)
    n = f.n
    if not 0 <= s < n:
        raise ValueError(f"hub variable {s} out of range 0..{n - 1}")
    others = [x for x in range(n) if x != s]
    if pairing is None:
        pairing = others
    elif sorted(pairing) != others:
        raise ValueError("pairing must be a permutation of the non-hub variables")

    roles: list[Role] = []
    index: dict[Role, int] = {}

    def add(role: Role) -> int:
        index[role] = len(roles)
        roles.append(role)
        return index[role]

    edges = []
    for x in range(n):
        aux = n - 1 if x == s else 1
        for side in "VU":
            circle = [add(Role(side + "VAR", var=x, index=i)) for i in (1, 2, 3)]
            circle.append(add(Role(side + "PLAIN", var=x)))
            circle += [add(Role(side + "AUX", var=x, index=j)) for j in range(1, aux + 1)]
            edges += combinations(circle, 2)

    for j, x in enumerate(pairing, 1):
        vs, us = index[Role("VAUX", s, None, j)], index[Role("UAUX", s, None, j)]
        fx, gx = index[Role("VAUX", x, None, 1)], index[Role("UAUX", x, None, 1)]
        edges += [(vs, fx), (vs, gx), (us, gx), (us, fx)]

    special = []
    for ci, clause in enumerate(f.clauses):
        vc = add(Role("VC", clause=ci))
        uc = [add(Role("UC", clause=ci, index=a)) for a in (1, 2)]
        special += [vc] + uc
        for x, i in clause:
            edges.append((vc, index[Role("VVAR", x, None, i)]))
            u_var = index[Role("UVAR", x, None, i)]
            for a in (1, 2):
                occ = add(Role("UOCC", var=x, clause=ci, index=a))
                edges += [(occ, u_var), (occ, uc[a - 1])]
    edges += combinations(special, 2)

    return LabeledGraph(Graph(len(roles), edges), tuple(roles), s, index)


@dataclass(frozen=True)
class ReductionStats:
    vertices: int
    edges: int
    breakdown: dict

    def line(self) -> str:
        return f"v={self.vertices} e={self.edges}"


def reduction_stats(f: Formula) -> ReductionStats:
    """Closed-form size of ``reduce_to_graph(f, s)`` (independent of ``s``)."""
    _require_valid(f)
    n, m = f.n, f.m
    parts = {
        "hub_gadget": (2 * (n + 3), 2 * comb(n + 3, 2)),
        "variable_gadgets": (10 * (n - 1), 20 * (n - 1)),
        "hub_wiring": (0, 4 * (n - 1)),
        "clause_gadgets": (9 * m, 15 * m),
        "special_clique": (0, comb(3 * m, 2)),
    }
    return ReductionStats(
        sum(p[0] for p in parts.values()), sum(p[1] for p in parts.values()), parts
    )


# -- both directions of the correspondence -------------------------------------

def assignment_to_coloring(f: Formula, lg: LabeledGraph, assignment: Sequence[bool]) -> tuple[int, ...]:
    """The explicit strong coloring for a 1-in-3 satisfying assignment."""
    if not is_1in3_satisfying(f, assignment):
        raise ValueError("assignment does not satisfy the formula in the 1-in-3 sense")
    color = [None] * lg.graph.vertex_count
    for v, r in enumerate(lg.roles):
        if r.kind in ("VVAR", "VPLAIN", "VAUX"):
            color[v] = RED if assignment[r.var] else BLUE
        elif r.kind in ("UVAR", "UPLAIN", "UAUX"):
            color[v] = BLUE if assignment[r.var] else RED
        elif r.kind in ("VC", "UC"):
            color[v] = BLUE
    for ci, clause in enumerate(f.clauses):
        true_var = next(x for x, _ in clause if assignment[x])
        y, z = (x for x, _ in clause if not assignment[x])
        plan = {
            (true_var, 1): BLUE, (true_var, 2): BLUE,
            (y, 1): BLUE, (y, 2): RED,
            (z, 1): RED, (z, 2): BLUE,
        }
        for (x, a), col in plan.items():
            color[lg.index[Role("UOCC", x, ci, a)]] = col
    return tuple(color)


def assignment_to_cut(f: Formula, lg: LabeledGraph, assignment: Sequence[bool]) -> MatchingCut:
    coloring = assignment_to_coloring(f, lg, assignment)
    if not is_strong(lg.graph, coloring):
        raise AssertionError("constructed coloring is not strong; the gadget wiring is broken")
    return cut_from_coloring(lg.graph, coloring)


def _red_v_counts(f: Formula, lg: LabeledGraph, coloring) -> list[int]:
    return [
        sum(coloring[lg.index[Role("VVAR", x, None, i)]] == RED for x, i in clause)
        for clause in f.clauses
    ]


def cut_to_assignment(f: Formula, lg: LabeledGraph, c: Sequence[int] | MatchingCut) -> tuple[bool, ...]:
    """Read an assignment off a strong coloring (or matching-cut) of the reduction.

    Colors are globally swapped first if needed so that every clause has
    exactly one red ``v`` variable vertex; ``x`` is true iff ``C_x^v`` is red.
    """
    g = lg.graph
    coloring = coloring_from_cut(g, c) if isinstance(c, MatchingCut) else tuple(c)
    if not is_strong(g, coloring):
        raise ValueError("coloring is not strong")
    for x in range(f.n):
        for circle in (lg.v_circle(x), lg.u_circle(x)):
            if len({coloring[v] for v in circle}) != 1:
                raise ValueError(f"variable {x + 1}: a gadget clique is not monochromatic")
    counts = _red_v_counts(f, lg, coloring)
    if counts and all(k == 2 for k in counts):
        coloring = tuple(1 - col for col in coloring)
    elif not all(k == 1 for k in counts):
        raise ValueError(f"clauses disagree on the number of red variable vertices: {counts}")
    return tuple(coloring[lg.index[Role("VPLAIN", x)]] == RED for x in range(f.n))


def claim_violations(f: Formula, lg: LabeledGraph, coloring: Sequence[int]) -> list[str]:
    """Structural facts every strong coloring of a reduction output must have.

    Checks a monochromatic special set, monochromatic gadget cliques, the two
    cliques of each variable getting different colors, and (after a global
    swap if needed) exactly one red ``v`` variable vertex per clause.
    """
    problems = []
    special = {coloring[v] for v in lg.special()}
    if len(special) != 1:
        problems.append("special vertices not monochromatic")
    for x in range(f.n):
        cv = {coloring[v] for v in lg.v_circle(x)}
        cu = {coloring[v] for v in lg.u_circle(x)}
        if len(cv) != 1 or len(cu) != 1:
            problems.append(f"variable {x + 1}: gadget clique not monochromatic")
        elif cv == cu:
            problems.append(f"variable {x + 1}: not split")
    counts = _red_v_counts(f, lg, coloring)
    if counts and all(k == 2 for k in counts):
        counts = [3 - k for k in counts]
    for ci, k in enumerate(counts, 1):
        if k != 1:
            problems.append(f"clause {ci}: {k} red variable vertices after normalisation")
    return problems


# -- role sidecar files ----------------------------------------------------------

def format_roles(lg: LabeledGraph) -> str:
    return "".join(f"{v} {r}\n" for v, r in enumerate(lg.roles))


def parse_roles(text: str) -> list[Role]:
    roles = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <role>'")
        roles[int(tokens[0])] = Role.parse(tokens[1])
    if sorted(roles) != list(range(len(roles))):
        raise ValueError("role file does not cover vertices 0..n-1 exactly")
    return [roles[v] for v in range(len(roles))]
