"""Reidemeister moves R1, R2, R3 and flypes on PD diagrams.

Sites locate where a move's local picture matches, anchored to record
indices and slots of the diagram they were enumerated from.  Applying
a move rebuilds the diagram through a port-level surgery and returns
the canonical renumbering, so inverse pairs compare structurally.

The face walk used throughout visits departure half-edges h and steps
to rotate(partner(h)); a face corner at a crossing spans an arrival
port s and the departure port s+1.  Strands through odd ports run over,
through even ports under.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram, DiagramError
from .fabric import Fabric, Port

__all__ = [
    "MoveSite",
    "MoveError",
    "enumerate_sites",
    "apply_move",
    "random_move_walk",
    "greedy_simplify",
    "sites_to_json",
    "sites_from_json",
    "DEFAULT_WALK_KINDS",
]

ALL_KINDS = ("R1-", "R1+", "R2-", "R2+", "R3", "FLYPE")
DEFAULT_WALK_KINDS = ("R1-", "R1+", "R2-", "R2+", "R3")

#: Cap on tangle size during flype-site enumeration (the 4-edge-cut scan
#: is the expensive part; applying a given flype site is always cheap).
FLYPE_ENUM_CAP = 16


class MoveError(ValueError):
    """A move site is stale or does not match the diagram."""


@dataclass(frozen=True)
class MoveSite:
    """One applicable move: a kind tag plus its location parameters.

    params by kind:
      R1-:   (crossing, port) with the kink loop joining port, port+1
      R1+:   (edge label, diag, side) selecting one of 4 kink insertions
      R2-:   (c1, s1, c2, s2) the bigon face's two visits
      R2+:   (cA, sA, cB, sB, over) two face visits; over=1 puts the
             first strand on top
      R3:    (c1, s1, c2, s2, c3, s3) the triangle face's visits
      FLYPE: (pivot, w1, tangle tuple, (nw, sw, ne, se) edge labels)
    """

    kind: str
    params: tuple

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, tuple):
                return [enc(y) for y in x]
            return x

        return {"kind": self.kind, "params": enc(self.params)}

    @classmethod
    def from_json(cls, obj: dict) -> "MoveSite":
        def dec(x):
            if isinstance(x, list):
                return tuple(dec(y) for y in x)
            return x

        return cls(kind=obj["kind"], params=dec(obj["params"]))


def sites_to_json(sites: Sequence[MoveSite]) -> str:
    return json.dumps([s.to_json() for s in sites])


def sites_from_json(text: str) -> list[MoveSite]:
    return [MoveSite.from_json(o) for o in json.loads(text)]


# ---------------------------------------------------------------------------
# site enumeration


def _face_visits(diagram: Diagram) -> list[list[tuple[int, int]]]:
    return [list(orbit) for orbit in diagram.faces]


def enumerate_sites(diagram: Diagram, kinds: Iterable[str] = ALL_KINDS) -> list[MoveSite]:
    """All sites of the requested kinds, in a deterministic order."""
    kindset = set(kinds)
    unknown = kindset - set(ALL_KINDS)
    if unknown:
        raise ValueError(f"unknown move kinds: {sorted(unknown)}")
    sites: list[MoveSite] = []
    faces = _face_visits(diagram)

    if "R1-" in kindset:
        for i, rec in enumerate(diagram.crossings):
            for p in range(4):
                if rec[p] == rec[(p + 1) % 4]:
                    sites.append(MoveSite("R1-", (i, p)))
    if "R1+" in kindset:
        for lab in range(1, diagram.edge_count + 1):
            for diag in (0, 1):
                for side in (0, 1):
                    sites.append(MoveSite("R1+", (lab, diag, side)))
        if diagram.n == 0:
            # the unknot still admits kink insertion on its single strand
            for diag in (0, 1):
                for side in (0, 1):
                    sites.append(MoveSite("R1+", (0, diag, side)))
    if "R2-" in kindset:
        for orbit in faces:
            if len(orbit) != 2:
                continue
            (c1, s1), (c2, s2) = orbit
            if c1 != c2 and (s1 + s2) % 2 == 1:
                sites.append(MoveSite("R2-", (c1, s1, c2, s2)))
    if "R2+" in kindset:
        if diagram.n == 0:
            sites.append(MoveSite("R2+", (-1, -1, -1, -1, 1)))
            sites.append(MoveSite("R2+", (-1, -1, -1, -1, 0)))
        for orbit in faces:
            for i, hA in enumerate(orbit):
                for j, hB in enumerate(orbit):
                    if i == j:
                        continue
                    segA = _segment_of(diagram, hA)
                    segB = _segment_of(diagram, hB)
                    if segA == segB:
                        continue
                    for over in (1, 0):
                        sites.append(MoveSite("R2+", (*hA, *hB, over)))
    if "R3" in kindset:
        for orbit in faces:
            if len(orbit) != 3:
                continue
            if len({c for c, _ in orbit}) != 3:
                continue
            par = [s % 2 for _, s in orbit]
            if par in ([0, 0, 0], [1, 1, 1]):
                continue
            (c1, s1), (c2, s2), (c3, s3) = orbit
            sites.append(MoveSite("R3", (c1, s1, c2, s2, c3, s3)))
    if "FLYPE" in kindset:
        sites.extend(_enumerate_flypes(diagram))
    return sites


def _segment_of(diagram: Diagram, h: tuple[int, int]) -> frozenset:
    ci, s = h
    lab = diagram.crossings[ci][s]
    h1, h2 = diagram.edge_slots(lab)
    return frozenset((h1, h2))


# ---------------------------------------------------------------------------
# individual surgeries


def _apply_r1_minus(diagram: Diagram, params: tuple) -> Diagram:
    c, p = params
    if not (0 <= c < diagram.n):
        raise MoveError(f"stale R1- site: no crossing {c}")
    rec = diagram.crossings[c]
    if rec[p] != rec[(p + 1) % 4]:
        raise MoveError("stale R1- site: ports no longer form a kink loop")
    fab = Fabric.from_diagram(diagram)
    fab.splice({c})
    return fab.to_diagram().canonical()


def _apply_r1_plus(diagram: Diagram, params: tuple) -> Diagram:
    lab, diag, side = params
    if diag not in (0, 1) or side not in (0, 1):
        raise MoveError("bad R1+ parameters")
    fab = Fabric.from_diagram(diagram)
    if diagram.n == 0:
        if lab != 0:
            raise MoveError("stale R1+ site: unknot has no labeled edges")
        c = fab.new_crossing()
        pin = diag
        exit1 = (pin + 2) % 4
        q1 = (exit1 + (1 if side == 0 else 3)) % 4
        exit2 = (q1 + 2) % 4
        fab.connect((c, pin), (c, exit2))
        fab.connect((c, exit1), (c, q1))
        return fab.to_diagram().canonical()
    if not 1 <= lab <= diagram.edge_count:
        raise MoveError(f"stale R1+ site: no edge {lab}")
    u, v = diagram.edge_slots(lab)
    fab.disconnect(u)
    c = fab.new_crossing()
    pin = diag
    exit1 = (pin + 2) % 4
    q1 = (exit1 + (1 if side == 0 else 3)) % 4
    exit2 = (q1 + 2) % 4
    fab.connect(u, (c, pin))
    fab.connect((c, exit1), (c, q1))
    fab.connect((c, exit2), v)
    return fab.to_diagram().canonical()


def _apply_r2_minus(diagram: Diagram, params: tuple) -> Diagram:
    c1, s1, c2, s2 = params
    for orbit in diagram.faces:
        if len(orbit) == 2 and list(orbit) in ([(c1, s1), (c2, s2)], [(c2, s2), (c1, s1)]):
            break
    else:
        raise MoveError("stale R2- site: bigon face not found")
    if c1 == c2 or (s1 + s2) % 2 == 0:
        raise MoveError("R2- site does not match the removable over/over pattern")
    fab = Fabric.from_diagram(diagram)
    fab.splice({c1, c2})
    return fab.to_diagram().canonical()


def _apply_r2_plus(diagram: Diagram, params: tuple) -> Diagram:
    cA, sA, cB, sB, over = params
    fab = Fabric.from_diagram(diagram)
    if diagram.n == 0:
        # poke the unknot's strand across itself: the generic wiring with
        # the outer stubs closed up pairwise (a2 to b1 and b2 to a1)
        c1 = fab.new_crossing()
        c2 = fab.new_crossing()
        if over:
            fab.connect((c1, 3), (c2, 1))
            fab.connect((c2, 0), (c1, 0))
            fab.connect((c2, 3), (c2, 2))
            fab.connect((c1, 2), (c1, 1))
        else:
            fab.connect((c1, 2), (c2, 0))
            fab.connect((c2, 3), (c1, 3))
            fab.connect((c2, 2), (c2, 1))
            fab.connect((c1, 1), (c1, 0))
        return fab.to_diagram().canonical()
    hA, hB = (cA, sA), (cB, sB)
    for orbit in diagram.faces:
        if hA in orbit:
            if hB not in orbit:
                raise MoveError("stale R2+ site: half-edges not on one face")
            break
    else:
        raise MoveError("stale R2+ site: face not found")
    if _segment_of(diagram, hA) == _segment_of(diagram, hB):
        raise MoveError("R2+ site must use two distinct strands")
    a1, b1 = hA, hB
    a2 = fab.matching[a1]
    b2 = fab.matching[b1]
    fab.disconnect(a1)
    fab.disconnect(b1)
    c1 = fab.new_crossing()
    c2 = fab.new_crossing()
    if over:
        fab.connect(a1, (c1, 1))
        fab.connect((c1, 3), (c2, 1))
        fab.connect((c2, 3), a2)
        fab.connect(b1, (c2, 2))
        fab.connect((c2, 0), (c1, 0))
        fab.connect((c1, 2), b2)
    else:
        fab.connect(a1, (c1, 0))
        fab.connect((c1, 2), (c2, 0))
        fab.connect((c2, 2), a2)
        fab.connect(b1, (c2, 1))
        fab.connect((c2, 3), (c1, 3))
        fab.connect((c1, 1), b2)
    return fab.to_diagram().canonical()


def _apply_r3(diagram: Diagram, params: tuple) -> Diagram:
    c1, s1, c2, s2, c3, s3 = params
    visits = [(c1, s1), (c2, s2), (c3, s3)]
    if len({c1, c2, c3}) != 3:
        raise MoveError("R3 needs three distinct crossings")
    for orbit in diagram.faces:
        if len(orbit) == 3 and set(orbit) == set(visits):
            orbit_list = list(orbit)
            break
    else:
        raise MoveError("stale R3 site: triangle face not found")
    par = [s % 2 for _, s in orbit_list]
    t = next((k for k in range(3) if par[k] == 1 and par[(k + 1) % 3] == 0), None)
    if t is None:
        raise MoveError("R3 site has the cyclic over/under pattern; move not applicable")
    (V, sT) = orbit_list[t]
    (W, sW) = orbit_list[(t + 1) % 3]
    (P, sP) = orbit_list[(t + 2) % 3]

    fab = Fabric.from_diagram(diagram)
    M = fab.matching

    def pt(c: int, s: int) -> Port:
        return (c, s % 4)

    # old seats of the six external segments and the three triangle arcs
    vx1, vy1, vtA, vtQ = pt(V, sT + 2), pt(V, sT + 1), pt(V, sT), pt(V, sT + 3)
    wx2, wz1, wtA, wtR = pt(W, sW + 1), pt(W, sW + 2), pt(W, sW + 3), pt(W, sW)
    prf, pqf, ptR, ptQ = pt(P, sP + 1), pt(P, sP + 2), pt(P, sP + 3), pt(P, sP)
    if M[vtA] != wtA or M[wtR] != ptR or M[ptQ] != vtQ:
        raise MoveError("stale R3 site: triangle arcs not in place")

    reseat = {vx1: wtA, wx2: vtA, vy1: ptQ, wz1: ptR, prf: wtR, pqf: vtQ}
    old_far = {p: M[p] for p in reseat}
    gadget = {V, W, P}
    for port in list(M):
        if port[0] in gadget:
            del M[port]
    for port in list(M):
        if M[port][0] in gadget:
            del M[port]
    fab.connect(vx1, wx2)
    fab.connect(vy1, pqf)
    fab.connect(wz1, prf)
    done = set()
    for p, far in old_far.items():
        if p in done:
            continue
        if far in reseat:
            fab.connect(reseat[p], reseat[far])
            done.add(far)
        else:
            fab.connect(reseat[p], far)
        done.add(p)
    return fab.to_diagram().canonical()


# ---------------------------------------------------------------------------
# flype


def _flype_structure(diagram: Diagram, pivot: int, w1: int, far_pair: tuple[int, int]):
    """Validate a flype configuration; return (tangle, ordered bounds).

    The region S + {pivot} must be separated from the rest by exactly
    the four edges {pivot's two Q-facing edges} + far_pair, with the
    pivot's other two edges attached inside S.  The far pair is ordered
    into (NE, SE) via the faces at the pivot's north and south corners.
    """
    if not (0 <= pivot < diagram.n) or w1 not in range(4):
        raise MoveError("bad flype parameters")
    rec = diagram.crossings[pivot]
    nw_lab, sw_lab = rec[w1], rec[(w1 + 1) % 4]
    tangle_labels = {rec[(w1 + 2) % 4], rec[(w1 + 3) % 4]}
    cut = {nw_lab, sw_lab, *far_pair}
    if len(cut) != 4 or cut & tangle_labels:
        raise MoveError("flype cut must be four edges away from the tangle strands")
    # region: crossings reachable from the pivot without crossing the cut
    region = {pivot}
    stack = [pivot]
    while stack:
        ci = stack.pop()
        for lab in diagram.crossings[ci]:
            if lab in cut:
                continue
            for (cj, _s) in diagram.edge_slots(lab):
                if cj not in region:
                    region.add(cj)
                    stack.append(cj)
    S = region - {pivot}
    if not S or len(region) == diagram.n:
        raise MoveError("flype tangle is empty or swallows the whole diagram")
    for lab in cut:
        (c1, _), (c2, _) = diagram.edge_slots(lab)
        if (c1 in region) == (c2 in region):
            raise MoveError("flype cut edge does not cross the region boundary")

    # order the far pair into NE/SE via the pivot's north/south corner faces
    def corner_face_far_cut(departure_port: int) -> int:
        target = (pivot, departure_port)
        for orbit in diagram.faces:
            if target in orbit:
                here = sorted(
                    {
                        diagram.crossings[ci][s]
                        for ci, s in orbit
                        if diagram.crossings[ci][s] in far_pair
                    }
                )
                if len(here) != 1:
                    raise MoveError("flype boundary face does not carry exactly one far cut edge")
                return here[0]
        raise MoveError("flype corner face not found")  # pragma: no cover

    ne_lab = corner_face_far_cut(w1)
    se_lab = corner_face_far_cut((w1 + 2) % 4)
    if ne_lab == se_lab:
        raise MoveError("flype NE and SE boundary edges coincide")
    return S, (nw_lab, sw_lab, ne_lab, se_lab)


def _enumerate_flypes(diagram: Diagram) -> list[MoveSite]:
    """All flype sites, by scanning candidate 4-edge cuts around each pivot."""
    sites = []
    seen = set()
    m = diagram.edge_count
    for pivot in range(diagram.n):
        for w1 in range(4):
            rec = diagram.crossings[pivot]
            fixed = {rec[w1], rec[(w1 + 1) % 4], rec[(w1 + 2) % 4], rec[(w1 + 3) % 4]}
            for e1 in range(1, m + 1):
                if e1 in fixed:
                    continue
                for e2 in range(e1 + 1, m + 1):
                    if e2 in fixed:
                        continue
                    try:
                        S, bounds = _flype_structure(diagram, pivot, w1, (e1, e2))
                    except MoveError:
                        continue
                    if len(S) > FLYPE_ENUM_CAP:
                        continue
                    key = (pivot, w1, tuple(sorted(S)))
                    if key in seen:
                        continue
                    seen.add(key)
                    sites.append(MoveSite("FLYPE", (pivot, w1, tuple(sorted(S)), bounds)))
    return sites


def _apply_flype(diagram: Diagram, params: tuple) -> Diagram:
    pivot, w1, tangle, bounds = params
    far_pair = (bounds[2], bounds[3])
    S, found = _flype_structure(diagram, pivot, w1, far_pair)
    if tuple(sorted(S)) != tuple(tangle) or tuple(found) != tuple(bounds):
        raise MoveError("stale flype site: tangle or boundary changed")
    nw_lab, sw_lab, ne_lab, se_lab = found

    def region_side_port(lab: int) -> Port:
        h1, h2 = diagram.edge_slots(lab)
        in1 = h1[0] in S
        in2 = h2[0] in S
        if in1 == in2:
            raise MoveError("flype boundary edge does not cross the cut")
        return h1 if in1 else h2

    t_ne = region_side_port(ne_lab)
    t_se = region_side_port(se_lab)

    fab = Fabric.from_diagram(diagram)
    e_ne = fab.matching[t_ne]
    e_se = fab.matching[t_se]
    fab.splice({pivot})
    fab.flip(set(S))

    def flipped(p: Port) -> Port:
        return (p[0], p[1] ^ 1) if p[0] in S else p

    ft_ne, ft_se = flipped(t_ne), flipped(t_se)
    fe_ne, fe_se = flipped(e_ne), flipped(e_se)
    fab.disconnect(ft_ne)
    fab.disconnect(ft_se)
    c2 = fab.new_crossing()
    fab.connect((c2, w1), ft_se)
    fab.connect((c2, (w1 + 1) % 4), ft_ne)
    fab.connect((c2, (w1 + 2) % 4), fe_se)
    fab.connect((c2, (w1 + 3) % 4), fe_ne)
    return fab.to_diagram().canonical()


# ---------------------------------------------------------------------------
# public drivers

_APPLY = {
    "R1-": _apply_r1_minus,
    "R1+": _apply_r1_plus,
    "R2-": _apply_r2_minus,
    "R2+": _apply_r2_plus,
    "R3": _apply_r3,
    "FLYPE": _apply_flype,
}


def apply_move(diagram: Diagram, site: MoveSite) -> Diagram:
    """Apply one move at the given site; returns a canonical new Diagram."""
    try:
        fn = _APPLY[site.kind]
    except KeyError:
        raise MoveError(f"unknown move kind {site.kind!r}") from None
    return fn(diagram, site.params)


def apply_script(diagram: Diagram, sites: Sequence[MoveSite]) -> Diagram:
    """Replay a recorded list of sites in order."""
    for site in sites:
        diagram = apply_move(diagram, site)
    return diagram


def random_move_walk(
    diagram: Diagram,
    steps: int,
    max_crossings: int,
    seed: int,
    kinds: Iterable[str] = DEFAULT_WALK_KINDS,
) -> Diagram:
    """Apply `steps` uniformly chosen legal moves under a crossing cap.

    Deterministic for a given seed.  Moves that would push the diagram
    over `max_crossings` are never candidates; if no move is legal the
    walk stops early.
    """
    rng = random.Random(seed)
    growth = {"R1+": 1, "R2+": 2}
    cur = diagram
    for _ in range(steps):
        sites = [
            s
            for s in enumerate_sites(cur, kinds)
            if cur.n + growth.get(s.kind, 0) <= max_crossings
        ]
        if not sites:
            break
        cur = apply_move(cur, rng.choice(sites))
    return cur


def greedy_simplify(diagram: Diagram) -> Diagram:
    """Apply R1-/R2- moves until none remain; never grows the diagram."""
    cur = diagram
    while True:
        sites = enumerate_sites(cur, ("R1-",)) or enumerate_sites(cur, ("R2-",))
        if not sites:
            return cur
        cur = apply_move(cur, sites[0])
