"""State graphs of the extreme smoothings and (semi)adequacy predicates.

The all-A (or all-B) state's loops are vertices; each crossing becomes
an edge joining the loops its two smoothing arcs land on.  A diagram is
+adequate when the A-kind graph has no self-loop edge, -adequate when
the B-kind graph has none; adequate means both, semiadequate at least
one.  Self-loops are exactly the crossings whose smoothing touches one
loop twice, so the graphs keep parallel edges and self-loops distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .diagram import Diagram
from .bracket import jones as _jones

__all__ = [
    "StateGraph",
    "SemiadequacyData",
    "ExtremeCoefficientReport",
    "state_graph",
    "is_plus_adequate",
    "is_minus_adequate",
    "is_adequate",
    "is_semiadequate",
    "semiadequacy_data",
    "extreme_coefficient_check",
    "crossing_lower_bound",
    "jones_nontriviality_check",
]

Kind = Literal["A", "B"]


@dataclass(frozen=True)
class StateGraph:
    """Loops of an extreme state plus one labeled edge per crossing.

    Vertices are numbered by the smallest edge label they contain, so
    serialized graphs are reproducible byte for byte.
    """

    kind: str
    vertices: tuple[tuple[int, ...], ...]  # sorted edge labels per loop
    edges: tuple[tuple[int, int, int], ...]  # (vertex u, vertex v, crossing index)

    @property
    def loop_count(self) -> int:
        return len(self.vertices)

    def self_loop_edges(self) -> int:
        return sum(1 for u, v, _ in self.edges if u == v)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class SemiadequacyData:
    """Raw statistics of one extreme state graph.

    parallel_edge_classes counts vertex pairs joined by two or more
    parallel (non-loop) edges; simple_edge_count counts non-loop edges
    whose endpoint pair carries no parallel partner.  Degrees count
    self-loops twice.
    """

    kind: str
    loop_count: int
    self_loop_edges: int
    parallel_edge_classes: int
    simple_edge_count: int
    degree_multiset: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "loop_count": self.loop_count,
            "self_loop_edges": self.self_loop_edges,
            "parallel_edge_classes": self.parallel_edge_classes,
            "simple_edge_count": self.simple_edge_count,
            "degree_multiset": list(self.degree_multiset),
        }


def state_graph(diagram: Diagram, kind: Kind) -> StateGraph:
    if kind not in ("A", "B"):
        raise ValueError(f"state kind must be 'A' or 'B', got {kind!r}")
    n = diagram.n
    if n == 0:
        return StateGraph(kind=kind, vertices=((),), edges=())
    m = 2 * n
    parent = list(range(m + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    arcs = []
    for a, b, c, d in diagram.crossings:
        if kind == "A":
            arcs.append(((a, b), (c, d)))
        else:
            arcs.append(((a, d), (b, c)))
    for (p, q), (r, s) in arcs:
        union(p, q)
        union(r, s)
    loops: dict[int, list[int]] = {}
    for x in range(1, m + 1):
        loops.setdefault(find(x), []).append(x)
    ordered = sorted((tuple(sorted(v)) for v in loops.values()), key=lambda v: v[0])
    vid = {v[0]: i for i, v in enumerate(ordered)}
    root_to_vid = {find(v[0]): vid[v[0]] for v in ordered}
    edges = []
    for i, ((p, _q), (r, _s)) in enumerate(arcs):
        u, v = root_to_vid[find(p)], root_to_vid[find(r)]
        edges.append((min(u, v), max(u, v), i))
    return StateGraph(kind=kind, vertices=tuple(ordered), edges=tuple(edges))


def is_plus_adequate(diagram: Diagram) -> bool:
    return state_graph(diagram, "A").self_loop_edges() == 0


def is_minus_adequate(diagram: Diagram) -> bool:
    return state_graph(diagram, "B").self_loop_edges() == 0


def is_adequate(diagram: Diagram) -> bool:
    return is_plus_adequate(diagram) and is_minus_adequate(diagram)


def is_semiadequate(diagram: Diagram) -> bool:
    return is_plus_adequate(diagram) or is_minus_adequate(diagram)


def semiadequacy_data(diagram: Diagram, kind: Kind) -> SemiadequacyData:
    g = state_graph(diagram, kind)
    self_loops = 0
    classes: dict[tuple[int, int], int] = {}
    degree = [0] * g.loop_count
    for u, v, _ in g.edges:
        degree[u] += 1
        degree[v] += 1
        if u == v:
            self_loops += 1
        else:
            classes[(u, v)] = classes.get((u, v), 0) + 1
    parallel = sum(1 for k in classes.values() if k >= 2)
    simple = sum(1 for k in classes.values() if k == 1)
    return SemiadequacyData(
        kind=kind,
        loop_count=g.loop_count,
        self_loop_edges=self_loops,
        parallel_edge_classes=parallel,
        simple_edge_count=simple,
        degree_multiset=tuple(sorted(degree)),
    )


@dataclass(frozen=True)
class ExtremeCoefficientReport:
    """Observed extreme Jones coefficients against the +-1 theorem.

    plus_side is the coefficient at the minimal t exponent (the end the
    all-A state controls), minus_side at the maximal one.  A side is
    only asserted when the diagram is adequate on it; violations are
    reported, never thrown, since they would falsify a theorem.
    """

    plus_adequate: bool
    minus_adequate: bool
    plus_side: int
    minus_side: int

    @property
    def plus_ok(self) -> bool:
        return not self.plus_adequate or self.plus_side in (1, -1)

    @property
    def minus_ok(self) -> bool:
        return not self.minus_adequate or self.minus_side in (1, -1)

    @property
    def ok(self) -> bool:
        return self.plus_ok and self.minus_ok


def extreme_coefficient_check(diagram: Diagram, engine: str = "auto") -> ExtremeCoefficientReport:
    v = _jones(diagram, engine=engine)
    lo, hi = v.extreme_coeffs()
    return ExtremeCoefficientReport(
        plus_adequate=is_plus_adequate(diagram),
        minus_adequate=is_minus_adequate(diagram),
        plus_side=lo,
        minus_side=hi,
    )


def crossing_lower_bound(diagram: Diagram, engine: str = "auto") -> int:
    """span(V), a lower bound for the crossing number of the knot."""
    sp = _jones(diagram, engine=engine).span()
    assert sp is not None  # V(1) = 1 for knots, so V is never zero
    return sp


def jones_nontriviality_check(diagram: Diagram, engine: str = "auto") -> bool:
    """Whether V differs from the unknot value on a semiadequate diagram.

    Raises ValueError when the precondition (semiadequacy) fails.  A
    False return on a diagram that simplifies to the unknot is expected
    and flagged by the checker, not treated as a theorem violation.
    """
    if not is_semiadequate(diagram):
        raise ValueError("jones_nontriviality_check requires a semiadequate diagram")
    from .laurent import ONE

    return _jones(diagram, engine=engine) != ONE
