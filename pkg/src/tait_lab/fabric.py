"""Mutable combinatorial-map scaffolding behind diagram surgery.

A fabric is a set of crossings, each with four ports in counterclockwise
order, plus a perfect matching on ports (the strand segments).  Ports 0
and 2 carry the under-strand, 1 and 3 the over-strand; orientation is
not stored and is rechosen when serializing back to a PD code.  All
move and generator surgeries are port rewirings here, followed by
to_diagram(), whose walk and validation reject anything that stopped
being a single planar closed curve.
"""

from __future__ import annotations

from .diagram import Diagram, DiagramError, UNKNOT

__all__ = ["Fabric", "Port"]

Port = tuple[int, int]


class Fabric:
    def __init__(self) -> None:
        self.matching: dict[Port, Port] = {}
        self.alive: set[int] = set()
        self._next = 0

    # -- construction --------------------------------------------------

    @classmethod
    def from_diagram(cls, diagram: Diagram) -> "Fabric":
        fab = cls()
        fab.alive = set(range(diagram.n))
        fab._next = diagram.n
        where: dict[int, list[Port]] = {}
        for i, rec in enumerate(diagram.crossings):
            for s, lab in enumerate(rec):
                where.setdefault(lab, []).append((i, s))
        for lab, ports in where.items():
            if len(ports) != 2:  # pragma: no cover - Diagram validated already
                raise DiagramError(f"label {lab} does not appear exactly twice")
            fab.connect(ports[0], ports[1])
        return fab

    def new_crossing(self) -> int:
        cid = self._next
        self._next += 1
        self.alive.add(cid)
        return cid

    def connect(self, u: Port, v: Port) -> None:
        self.matching[u] = v
        self.matching[v] = u

    def disconnect(self, u: Port) -> Port:
        v = self.matching.pop(u)
        del self.matching[v]
        return v

    # -- surgery helpers -------------------------------------------------

    def splice(self, dead: set[int]) -> None:
        """Remove crossings, joining each one's diagonal strands through.

        The curve passes straight through every removed crossing, so a
        single closed curve stays single.  Removing every crossing
        leaves the empty fabric (the unknot).
        """
        if not dead:
            return
        survivors = self.alive - dead
        if not survivors:
            self.matching.clear()
            self.alive -= dead
            return

        def through(p: Port) -> Port:
            return (p[0], (p[1] + 2) % 4)

        new_pairs = []
        seen: set[Port] = set()
        for u in list(self.matching):
            if u[0] in dead or u in seen:
                continue
            v = self.matching[u]
            while v[0] in dead:
                v = self.matching[through(v)]
            seen.add(u)
            seen.add(v)
            new_pairs.append((u, v))
        self.matching = {}
        for u, v in new_pairs:
            self.connect(u, v)
        self.alive = survivors

    def flip(self, subset: set[int]) -> None:
        """Half-turn a tangle: reverse each crossing's cyclic order and
        swap its over/under diagonal (port map 0<->1, 2<->3)."""

        def f(p: Port) -> Port:
            if p[0] in subset:
                return (p[0], p[1] ^ 1)
            return p

        self.matching = {f(u): f(v) for u, v in self.matching.items()}

    # -- read-out ----------------------------------------------------------

    def faces(self) -> list[list[Port]]:
        """Face orbits; each element h is a departure half-edge and the
        walk continues at rotate(matching[h])."""
        faces = []
        seen: set[Port] = set()
        for cid in sorted(self.alive):
            for s in range(4):
                h = (cid, s)
                if h in seen:
                    continue
                orbit = []
                cur = h
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    ci, sl = self.matching[cur]
                    cur = (ci, (sl + 1) % 4)
                faces.append(orbit)
        return faces

    def to_diagram(self) -> Diagram:
        """Serialize back to a validated PD code.

        Walks the curve from the smallest crossing, entering at port 0;
        raises DiagramError if the port matching does not trace a single
        closed curve through every crossing.
        """
        if not self.alive:
            return UNKNOT
        n = len(self.alive)
        start = (min(self.alive), 0)
        port_label: dict[Port, int] = {}
        in_ports: set[Port] = set()
        cur_in = start
        for lab in range(1, 2 * n + 1):
            if cur_in in port_label:
                raise DiagramError("curve closed early; fabric is not a single knot")
            port_label[cur_in] = lab
            in_ports.add(cur_in)
            out = (cur_in[0], (cur_in[1] + 2) % 4)
            if out in port_label:
                raise DiagramError("port visited twice; fabric is not a single knot")
            port_label[out] = lab % (2 * n) + 1
            cur_in = self.matching[out]
        if cur_in != start:
            raise DiagramError("walk did not close up; fabric is not a single knot")
        if len(port_label) != 4 * n:
            raise DiagramError("walk missed some crossings; fabric is disconnected")
        records = []
        for cid in sorted(self.alive):
            if (cid, 0) in in_ports:
                p = 0
            elif (cid, 2) in in_ports:
                p = 2
            else:  # pragma: no cover - walk guarantees one under in-port
                raise DiagramError(f"crossing {cid} has no under in-port")
            records.append(tuple(port_label[(cid, (p + k) % 4)] for k in range(4)))
        return Diagram(records)
