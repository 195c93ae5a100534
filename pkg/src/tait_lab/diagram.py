"""Oriented knot diagrams as PD codes: parsing, validation, predicates.

A diagram with n >= 1 crossings is a list of records (a, b, c, d), one
per crossing, listing the four incident edge labels counterclockwise
starting from the incoming under-strand edge a.  Edge labels 1..2n
follow the curve, so the under-strand leaves on edge c = a+1 (mod 2n)
and the over-strand leaves on its own successor edge.  The 0-crossing
unknot is the empty record list.

Sign convention: a crossing is positive when the over-strand enters at
slot d (equivalently b = d+1 mod 2n once n >= 2).  This convention is
pinned by the calibration anchor in the acceptance suite: the bundled
trefoil entry has writhe -3 and Jones polynomial -t^-4 + t^-3 + t^-1.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = [
    "Diagram",
    "DiagramError",
    "parse_pd",
    "UNKNOT",
]


class DiagramError(ValueError):
    """Raised when text or records do not describe a valid knot diagram."""


_RECORD = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")

Record = tuple[int, int, int, int]
HalfEdge = tuple[int, int]  # (crossing index, slot 0..3)


class Diagram:
    """A validated knot diagram.

    Immutable; all derived structure (signs, faces, shadow graph) is
    computed eagerly at construction, so instances are safe to share.
    """

    __slots__ = ("crossings", "signs", "over_in_slots", "faces", "_edge_slots")

    crossings: tuple[Record, ...]
    signs: tuple[int, ...]
    over_in_slots: tuple[int, ...]
    faces: tuple[tuple[HalfEdge, ...], ...]

    def __init__(self, crossings: Iterable[Sequence[int]]):
        records = tuple(tuple(int(x) for x in rec) for rec in crossings)
        for rec in records:
            if len(rec) != 4:
                raise DiagramError(f"crossing record must have 4 labels, got {rec}")
        object.__setattr__(self, "crossings", records)
        self._validate()

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Diagram instances are immutable")

    # -- construction-time validation ---------------------------------

    def _validate(self) -> None:
        records = self.crossings
        n = len(records)
        m = 2 * n
        if n == 0:
            object.__setattr__(self, "signs", ())
            object.__setattr__(self, "over_in_slots", ())
            object.__setattr__(self, "faces", ((), ()))
            object.__setattr__(self, "_edge_slots", {})
            return

        counts: dict[int, int] = {}
        for rec in records:
            for x in rec:
                counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x in counts if not 1 <= x <= m)
        if bad:
            raise DiagramError(f"edge labels out of range 1..{m}: {bad}")
        dup = sorted(x for x, k in counts.items() if k != 2)
        if dup or len(counts) != m:
            raise DiagramError(f"each label in 1..{m} must appear exactly twice; offending: {dup}")

        def succ(x: int) -> int:
            return x % m + 1

        over_in_slots = []
        for i, (a, b, c, d) in enumerate(records):
            if succ(a) != c:
                raise DiagramError(f"crossing {i}: under-strand must leave on {succ(a)}, record says {c}")
            if n == 1:
                # Labels are ambiguous mod 2; the over-strand always enters
                # on edge c (the kink loop), at slot d for the positive kink.
                over_in = 3 if d == c else 1
            elif succ(d) == b:
                over_in = 3
            elif succ(b) == d:
                over_in = 1
            else:
                raise DiagramError(f"crossing {i}: over-strand labels {b},{d} are not consecutive")
            over_in_slots.append(over_in)
        signs = tuple(1 if s == 3 else -1 for s in over_in_slots)
        object.__setattr__(self, "over_in_slots", tuple(over_in_slots))
        object.__setattr__(self, "signs", signs)

        # Each label must occur once as an in-slot and once as an out-slot,
        # otherwise the records do not trace one oriented closed curve.
        edge_slots: dict[int, list[HalfEdge]] = {x: [] for x in range(1, m + 1)}
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for i, rec in enumerate(records):
            oi = over_in_slots[i]
            for s, x in enumerate(rec):
                edge_slots[x].append((i, s))
                if s == 0 or s == oi:
                    heads[x] = heads.get(x, 0) + 1
                else:
                    tails[x] = tails.get(x, 0) + 1
        broken = [x for x in range(1, m + 1) if heads.get(x, 0) != 1 or tails.get(x, 0) != 1]
        if broken:
            raise DiagramError(f"labels with inconsistent orientation (multi-component input?): {broken}")
        object.__setattr__(self, "_edge_slots", edge_slots)

        # Faces of the implied embedding; V - E + F = 2 iff it is planar.
        object.__setattr__(self, "faces", self._trace_faces())
        if n - m + len(self.faces) != 2:
            raise DiagramError(
                f"records describe a nonplanar embedding (V-E+F = {n - m + len(self.faces)})"
            )

    def _trace_faces(self) -> tuple[tuple[HalfEdge, ...], ...]:
        partner: dict[HalfEdge, HalfEdge] = {}
        for slots in self._edge_slots.values():
            h1, h2 = slots
            partner[h1] = h2
            partner[h2] = h1
        faces = []
        seen: set[HalfEdge] = set()
        for i in range(len(self.crossings)):
            for s in range(4):
                h = (i, s)
                if h in seen:
                    continue
                orbit = []
                cur = h
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    ci, sl = partner[cur]
                    cur = (ci, (sl + 1) % 4)
                faces.append(tuple(orbit))
        return tuple(faces)

    # -- elementary data ----------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def edge_slots(self, label: int) -> tuple[HalfEdge, HalfEdge]:
        h1, h2 = self._edge_slots[label]
        return h1, h2

    def writhe(self) -> int:
        """Positive minus negative crossings; orientation independent."""
        return sum(self.signs)

    def shadow_edges(self) -> list[tuple[int, int]]:
        """Edges of the 4-valent shadow multigraph as crossing index pairs."""
        return [(slots[0][0], slots[1][0]) for slots in self._edge_slots.values()]

    # -- predicates -----------------------------------------------------

    def passage_is_over(self, time: int) -> bool:
        """Whether the passage at the head of edge `time` goes over."""
        for i, s in self._edge_slots[time]:
            if s == self.over_in_slots[i]:
                return True
            if s == 0:
                return False
        raise AssertionError("edge without in-slot")

    def is_alternating(self) -> bool:
        """Strict under/over alternation along the whole edge walk."""
        if self.n == 0:
            return True
        kinds = [self.passage_is_over(t) for t in range(1, self.edge_count + 1)]
        return all(kinds[i] != kinds[i - 1] for i in range(len(kinds)))

    def is_reduced(self) -> bool:
        """True when no crossing is nugatory.

        A crossing is nugatory when it carries a shadow self-loop (an R1
        kink) or is a cut vertex of the shadow multigraph; either way a
        half-turn of one side of the diagram removes it.
        """
        n = self.n
        if n == 0:
            return True
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, slots in enumerate(self._edge_slots.values()):
            u, v = slots[0][0], slots[1][0]
            if u == v:
                return False  # kink
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return not _has_cut_vertex(adj)

    # -- transforms -----------------------------------------------------

    def mirror(self) -> "Diagram":
        """Switch every crossing's over/under strand, keeping the shadow.

        An exact involution at the record level: positive crossings are
        rewritten (a,b,c,d) -> (d,a,b,c) and negative ones -> (b,c,d,a),
        since the old over-in edge becomes the new under-in edge.
        """
        recs = []
        for rec, oi in zip(self.crossings, self.over_in_slots):
            a, b, c, d = rec
            recs.append((d, a, b, c) if oi == 3 else (b, c, d, a))
        return Diagram(recs)

    def reverse(self) -> "Diagram":
        """Rebuild the PD with the edge-walk orientation reversed."""
        m = self.edge_count
        if m == 0:
            return self

        def r(x: int) -> int:
            return m + 1 - x

        recs = []
        for a, b, c, d in self.crossings:
            recs.append((r(c), r(d), r(a), r(b)))
        return Diagram(recs)

    def relabel(self, shift: int) -> "Diagram":
        """Rotate edge labels so that old edge shift+1 becomes edge 1."""
        m = self.edge_count
        if m == 0:
            return self

        def f(x: int) -> int:
            return (x - 1 - shift) % m + 1

        return Diagram(tuple(tuple(f(x) for x in rec) for rec in self.crossings))

    def canonical(self) -> "Diagram":
        """Canonical form: minimal records over all starts and both orientations."""
        if self.n == 0:
            return self
        best: tuple[Record, ...] | None = None
        for base in (self, self.reverse()):
            for shift in range(self.edge_count):
                cand = tuple(sorted(base.relabel(shift).crossings))
                if best is None or cand < best:
                    best = cand
        return Diagram(best)

    # -- export ----------------------------------------------------------

    def render(self) -> str:
        """PD text: whitespace-separated X[a,b,c,d] records."""
        return " ".join("X[%d,%d,%d,%d]" % rec for rec in self.crossings)

    def emit_dt(self) -> tuple[int, ...]:
        """Dowker-Thistlethwaite code.

        For odd passage times 1,3,..,2n-1 in order, emit the even time
        paired at the same crossing, negated when the odd passage goes
        over.  Undefined for the 0-crossing diagram.
        """
        if self.n == 0:
            raise DiagramError("DT code is undefined for the 0-crossing diagram")
        pair: dict[int, int] = {}
        for i, rec in enumerate(self.crossings):
            oi = self.over_in_slots[i]
            u, o = rec[0], rec[oi]
            if u % 2 == o % 2:
                raise AssertionError("passage times at a crossing must have opposite parity")
            pair[u] = o
            pair[o] = u
        out = []
        for odd in range(1, self.edge_count, 2):
            even = pair[odd]
            out.append(-even if self.passage_is_over(odd) else even)
        return tuple(out)

    # -- protocol plumbing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.crossings == other.crossings

    def __hash__(self) -> int:
        return hash(self.crossings)

    def __repr__(self) -> str:
        return f"Diagram({self.render()!r})" if self.n else "Diagram('')"


def _has_cut_vertex(adj: list[list[tuple[int, int]]]) -> bool:
    """Iterative DFS lowpoint articulation test on a loopless multigraph."""
    n = len(adj)
    if n <= 1:
        return False
    disc = [0] * n
    low = [0] * n
    timer = 1
    # stack frames: (vertex, parent edge id, iterator index)
    stack: list[list[int]] = [[0, -1, 0]]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, pedge, idx = stack[-1]
        if idx < len(adj[v]):
            stack[-1][2] += 1
            w, eid = adj[v][idx]
            if eid == pedge:
                continue
            if disc[w]:
                low[v] = min(low[v], disc[w])
            else:
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append([w, eid, 0])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return True
    return root_children > 1


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a validated Diagram.

    The empty string (or whitespace) is the 0-crossing unknot.  Raises
    DiagramError on malformed syntax or any validation failure.
    """
    s = text.strip()
    if not s:
        return UNKNOT
    records = []
    pos = 0
    while pos < len(s):
        m = _RECORD.match(s, pos)
        if not m:
            raise DiagramError(f"bad PD syntax at {s[pos:pos + 30]!r}")
        records.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return Diagram(records)


UNKNOT = Diagram(())
