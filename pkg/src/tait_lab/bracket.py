"""Kauffman-bracket state model and the Jones polynomial.

States assign an A- or B-smoothing to every crossing.  At a crossing
record (a, b, c, d) the A-smoothing joins the strands at slots (a,b)
and (c,d); the B-smoothing joins (a,d) and (b,c).  The bracket is

    <D> = sum over states of A^(a_count - b_count) * delta^(loops - 1)

with loop factor delta = -A^2 - A^-2, and the Jones polynomial is the
writhe normalization V = (-A)^(-3w) <D> under t = A^-4.

Two engines compute the bracket: a brute-force enumeration over all
2^n states (the permanent testing oracle) and a contraction engine
that sweeps crossings while tabulating boundary pairings, whose cost
is governed by the cutwidth of the sweep order rather than 2^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram
from .laurent import LaurentPoly, ONE

__all__ = [
    "LOOP_FACTOR",
    "SmoothingState",
    "EngineLimitError",
    "ConventionError",
    "smooth_loops",
    "smoothing_state",
    "bracket_brute",
    "bracket_contract",
    "bracket",
    "jones",
]

#: The factor contributed by each closed loop beyond the first.
LOOP_FACTOR = LaurentPoly({2: -1, -2: -1})

_BRUTE_CAP_DEFAULT = 20


class EngineLimitError(RuntimeError):
    """A configured resource cap (state count, boundary width) was exceeded."""


class ConventionError(RuntimeError):
    """Internal sign/variable bookkeeping produced an impossible value."""


@dataclass(frozen=True)
class SmoothingState:
    """One state of the model: per-crossing choices and the loop count."""

    choices: tuple[str, ...]
    loop_count: int

    @property
    def a_count(self) -> int:
        return sum(1 for c in self.choices if c == "A")

    @property
    def b_count(self) -> int:
        return sum(1 for c in self.choices if c == "B")


def _normalize_choices(diagram: Diagram, choices: Sequence[str] | Sequence[int]) -> tuple[bool, ...]:
    if len(choices) != diagram.n:
        raise ValueError(f"expected {diagram.n} smoothing choices, got {len(choices)}")
    out = []
    for ch in choices:
        if ch in ("A", "a", 0):
            out.append(False)
        elif ch in ("B", "b", 1):
            out.append(True)
        else:
            raise ValueError(f"smoothing choice must be 'A' or 'B', got {ch!r}")
    return tuple(out)


def smooth_loops(diagram: Diagram, choices: Sequence[str] | Sequence[int]) -> int:
    """Number of circles left after smoothing every crossing.

    `choices` holds one 'A'/'B' (or 0/1) per crossing, in record order.
    """
    bits = _normalize_choices(diagram, choices)
    if diagram.n == 0:
        return 1
    parent = list(range(2 * diagram.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for rec, b in zip(diagram.crossings, bits):
        a, bb, c, d = rec
        if b:
            union(a, d)
            union(bb, c)
        else:
            union(a, bb)
            union(c, d)
    return len({find(x) for x in range(1, 2 * diagram.n + 1)})


def smoothing_state(diagram: Diagram, choices: Sequence[str] | Sequence[int]) -> SmoothingState:
    bits = _normalize_choices(diagram, choices)
    return SmoothingState(
        choices=tuple("B" if b else "A" for b in bits),
        loop_count=smooth_loops(diagram, choices),
    )


def _delta_powers(up_to: int) -> list[LaurentPoly]:
    powers = [ONE]
    for _ in range(up_to):
        powers.append(powers[-1] * LOOP_FACTOR)
    return powers


def bracket_brute(diagram: Diagram, cap: int = _BRUTE_CAP_DEFAULT) -> LaurentPoly:
    """Bracket polynomial by summing all 2^n states.

    Kept permanently as the oracle for the contraction engine; refuses
    diagrams above `cap` crossings rather than attempting them.
    """
    n = diagram.n
    if n > cap:
        raise EngineLimitError(f"brute-force bracket infeasible: {n} crossings exceeds cap {cap}")
    if n == 0:
        return ONE
    m = 2 * n
    pairs_a = []
    pairs_b = []
    for a, b, c, d in diagram.crossings:
        pairs_a.append((a, b, c, d))  # A joins (a,b),(c,d)
        pairs_b.append((a, d, b, c))  # B joins (a,d),(b,c)
    deltas = [dict(p.terms()) for p in _delta_powers(n)]
    acc: dict[int, int] = {}
    parent = list(range(m + 1))
    for mask in range(1 << n):
        for i in range(1, m + 1):
            parent[i] = i

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        bcount = 0
        for i in range(n):
            if mask >> i & 1:
                bcount += 1
                p, q, r, s = pairs_b[i]
            else:
                p, q, r, s = pairs_a[i]
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[rp] = rq
            rr, rs = find(r), find(s)
            if rr != rs:
                parent[rr] = rs
        loops = len({find(x) for x in range(1, m + 1)})
        shift = n - 2 * bcount
        for e, cf in deltas[loops - 1].items():
            ee = e + shift
            v = acc.get(ee, 0) + cf
            if v:
                acc[ee] = v
            else:
                del acc[ee]
    return LaurentPoly(acc)


def _contraction_order(diagram: Diagram) -> list[int]:
    """Greedy sweep order: next crossing adds the fewest new boundary strands."""
    n = diagram.n
    incident: list[list[int]] = [[] for _ in range(n)]
    ends: dict[int, list[int]] = {}
    for i, rec in enumerate(diagram.crossings):
        for lab in rec:
            incident[i].append(lab)
            ends.setdefault(lab, []).append(i)
    order = []
    done = [False] * n
    dangling: set[int] = set()
    for _ in range(n):
        best = None
        best_key = None
        for i in range(n):
            if done[i]:
                continue
            seen: set[int] = set()
            delta = 0
            touches = 0
            for lab in incident[i]:
                if lab in seen:
                    continue
                seen.add(lab)
                u, v = ends[lab]
                if u == v:
                    continue  # kink loop, consumed internally
                if lab in dangling:
                    delta -= 1
                    touches += 1
                else:
                    delta += 1
            key = (0 if (touches or not order) else 1, delta, i)
            if best_key is None or key < best_key:
                best_key = key
                best = i
        assert best is not None
        order.append(best)
        done[best] = True
        seen = set()
        for lab in incident[best]:
            if lab in seen:
                continue
            seen.add(lab)
            u, v = ends[lab]
            if u == v:
                continue
            if lab in dangling:
                dangling.discard(lab)
            else:
                dangling.add(lab)
    return order


def bracket_contract(
    diagram: Diagram,
    boundary_limit: int = 32,
    table_limit: int = 2_000_000,
) -> LaurentPoly:
    """Bracket polynomial via boundary-pairing contraction.

    Processes crossings in a greedy low-cutwidth order, maintaining a
    table from boundary pairings (perfect matchings of dangling edges)
    to polynomial weights; the A/B branches of each crossing merge into
    the same table, which is what collapses the 2^n state sum.  Always
    equals bracket_brute exactly.
    """
    n = diagram.n
    if n == 0:
        return ONE
    order = _contraction_order(diagram)

    # state key: tuple of sorted (u, v) pairs with u < v; value: coeff dict
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    delta_terms = ((2, -1), (-2, -1))

    for ci in order:
        rec = diagram.crossings[ci]
        new_states: dict[tuple, dict[int, int]] = {}
        # slots carrying a repeated label are the two ends of a kink loop
        slot_lab = list(rec)
        for key, poly in states.items():
            pairing = dict(key)
            pairing.update({v: u for u, v in key})
            for choice, arcs in ((0, ((0, 1), (2, 3))), (1, ((0, 3), (1, 2)))):
                partner = dict(pairing)
                closed = 0
                # local chain tracing over the 4 slots
                arc_of: dict[int, int] = {}
                for x, y in arcs:
                    arc_of[x] = y
                    arc_of[y] = x
                link: dict[int, int] = {}
                for s in range(4):
                    for t in range(s + 1, 4):
                        if slot_lab[s] == slot_lab[t]:
                            link[s] = t
                            link[t] = s
                visited = [False] * 4
                for start in range(4):
                    if visited[start] or start in link:
                        continue
                    # open chain: walk arc, link, arc, ... to another linkless slot
                    visited[start] = True
                    cur = arc_of[start]
                    while cur in link:
                        visited[cur] = True
                        cur = link[cur]
                        visited[cur] = True
                        cur = arc_of[cur]
                    visited[cur] = True
                    e_s, e_t = slot_lab[start], slot_lab[cur]
                    sd = e_s in partner
                    td = e_t in partner
                    if sd and td:
                        a = partner.pop(e_s)
                        if a == e_t:
                            partner.pop(e_t, None)
                            closed += 1
                        else:
                            b = partner.pop(e_t)
                            partner.pop(a, None)
                            partner.pop(b, None)
                            partner[a] = b
                            partner[b] = a
                    elif sd:
                        a = partner.pop(e_s)
                        partner.pop(a, None)
                        partner[a] = e_t
                        partner[e_t] = a
                    elif td:
                        b = partner.pop(e_t)
                        partner.pop(b, None)
                        partner[b] = e_s
                        partner[e_s] = b
                    else:
                        partner[e_s] = e_t
                        partner[e_t] = e_s
                for s in range(4):
                    if not visited[s]:
                        # pure local cycle (kink loop smoothed into a circle)
                        cur = s
                        while True:
                            visited[cur] = True
                            a1 = arc_of[cur]
                            visited[a1] = True
                            cur = link[a1]
                            if cur == s:
                                break
                        closed += 1
                if len(partner) > 2 * boundary_limit:
                    raise EngineLimitError(
                        f"contraction boundary exceeded {boundary_limit} strand pairs"
                    )
                new_key = tuple(sorted((u, v) for u, v in partner.items() if u < v))
                shift = 1 - 2 * choice
                add = new_states.setdefault(new_key, {})
                for e, cf in poly.items():
                    base_e = e + shift
                    if closed == 0:
                        v = add.get(base_e, 0) + cf
                        if v:
                            add[base_e] = v
                        elif base_e in add:
                            del add[base_e]
                    else:
                        stack = [(base_e, cf)]
                        for _ in range(closed):
                            nxt = []
                            for ee, cc in stack:
                                for de, dc in delta_terms:
                                    nxt.append((ee + de, cc * dc))
                            stack = nxt
                        for ee, cc in stack:
                            v = add.get(ee, 0) + cc
                            if v:
                                add[ee] = v
                            elif ee in add:
                                del add[ee]
        states = {k: v for k, v in new_states.items() if v}
        if len(states) > table_limit:
            raise EngineLimitError(f"contraction table exceeded {table_limit} entries")

    if list(states.keys()) not in ([()], []):
        raise AssertionError("contraction finished with a nonempty boundary")
    total = LaurentPoly(states.get((), {}))
    # every loop contributed a delta; the bracket counts loops minus one
    return total.div_exact(LOOP_FACTOR)


def bracket(diagram: Diagram, engine: str = "auto", brute_cap: int = _BRUTE_CAP_DEFAULT) -> LaurentPoly:
    """Bracket polynomial via the selected engine (auto: brute for n <= 14)."""
    if engine == "auto":
        engine = "brute" if diagram.n <= 14 else "contract"
    if engine == "brute":
        return bracket_brute(diagram, cap=brute_cap)
    if engine == "contract":
        return bracket_contract(diagram)
    raise ValueError(f"unknown engine {engine!r}")


def jones(diagram: Diagram, engine: str = "auto", brute_cap: int = _BRUTE_CAP_DEFAULT) -> LaurentPoly:
    """Jones polynomial in t: writhe-normalized bracket under t = A^-4."""
    br = bracket(diagram, engine=engine, brute_cap=brute_cap)
    w = diagram.writhe()
    normalized = br.mono_mul(-1 if w % 2 else 1, -3 * w)
    terms = {}
    for e, c in normalized.terms():
        if e % 4:
            raise ConventionError(f"normalized bracket exponent {e} not divisible by 4")
        terms[e // -4] = c
    return LaurentPoly(terms)
