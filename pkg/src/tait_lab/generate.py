"""Programmatic diagram families: rational tangles, braids, twist chains.

These feed the bundled corpora and the performance benchmarks.  The
rational-knot builder is validated against its continued fraction: the
knot determinant must equal the fraction's numerator, which pins the
twisting conventions independently of any table.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .diagram import Diagram, DiagramError
from .fabric import Fabric, Port

__all__ = [
    "rational_knot",
    "rational_fraction",
    "montesinos_knot",
    "braid_closure",
    "twist_chain",
]


class _Tangle:
    """A fabric fragment with four loose compass ports."""

    def __init__(self) -> None:
        self.fab = Fabric()
        self.nw: Port | None = None
        self.ne: Port | None = None
        self.sw: Port | None = None
        self.se: Port | None = None

    def first_crossing(self, kind: int) -> None:
        c = self.fab.new_crossing()
        if kind == 0:
            # under strand runs NW-SE: ports 0=NW 1=SW 2=SE 3=NE
            self.nw, self.sw, self.se, self.ne = (c, 0), (c, 1), (c, 2), (c, 3)
        else:
            # under strand runs SW-NE: ports 0=SW 1=SE 2=NE 3=NW
            self.sw, self.se, self.ne, self.nw = (c, 0), (c, 1), (c, 2), (c, 3)

    def twist_east(self, kind: int) -> None:
        c = self.fab.new_crossing()
        if kind == 0:
            nw, sw, se, ne = (c, 0), (c, 1), (c, 2), (c, 3)
        else:
            sw, se, ne, nw = (c, 0), (c, 1), (c, 2), (c, 3)
        self.fab.connect(self.ne, nw)
        self.fab.connect(self.se, sw)
        self.ne, self.se = ne, se

    def twist_south(self, kind: int) -> None:
        c = self.fab.new_crossing()
        if kind == 0:
            nw, sw, se, ne = (c, 0), (c, 1), (c, 2), (c, 3)
        else:
            sw, se, ne, nw = (c, 0), (c, 1), (c, 2), (c, 3)
        self.fab.connect(self.sw, nw)
        self.fab.connect(self.se, ne)
        self.sw, self.se = sw, se

    def rotate_ccw(self) -> None:
        """Quarter-turn counterclockwise (east side becomes north)."""
        self.nw, self.sw, self.se, self.ne = self.ne, self.nw, self.sw, self.se

    def rotate_cw(self) -> None:
        self.nw, self.sw, self.se, self.ne = self.sw, self.se, self.ne, self.nw

    def attach_east(self, other: "_Tangle") -> None:
        """Horizontal tangle sum: other glued onto the east side."""
        offset = self.fab._next

        def mv(p: Port) -> Port:
            return (p[0] + offset, p[1])

        seen = set()
        for u, v in other.fab.matching.items():
            if u in seen:
                continue
            seen.add(u)
            seen.add(v)
            self.fab.matching[mv(u)] = mv(v)
            self.fab.matching[mv(v)] = mv(u)
        self.fab.alive |= {cid + offset for cid in other.fab.alive}
        self.fab._next += other.fab._next
        self.fab.connect(self.ne, mv(other.nw))
        self.fab.connect(self.se, mv(other.sw))
        self.ne, self.se = mv(other.ne), mv(other.se)

    def numerator_closure(self) -> Diagram:
        self.fab.connect(self.nw, self.ne)
        self.fab.connect(self.sw, self.se)
        return self.fab.to_diagram().canonical()


def rational_fraction(cf: Sequence[int]) -> Fraction:
    """Continued fraction value [a_k; a_{k-1}, ..., a_1] of a twist vector."""
    val = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        val = a + 1 / val if val else Fraction(a)
    return val


def _build_rational(cf: Sequence[int]) -> _Tangle:
    """Twist groups alternate vertical/horizontal, ending horizontal, so
    the tangle's fraction is the continued fraction [a_k; ...; a_1]."""
    if not cf or any(a < 1 for a in cf):
        raise ValueError("twist vector must be positive integers")
    k = len(cf)
    t = _Tangle()
    started = False
    for i, a in enumerate(cf):
        horizontal = (k - 1 - i) % 2 == 0
        count = a
        if not started:
            t.first_crossing(0)
            started = True
            count -= 1
        for _ in range(count):
            if horizontal:
                t.twist_east(0)
            else:
                t.twist_south(0)
    return t


def rational_knot(cf: Sequence[int]) -> Diagram:
    """Alternating diagram of the rational knot with twist vector cf.

    Raises DiagramError when the fraction is even-numerator (a two
    component link rather than a knot).
    """
    return _build_rational(cf).numerator_closure()


def montesinos_knot(tangles: Sequence[Sequence[int]], twists: int = 0) -> Diagram:
    """Closure of a horizontal sum of quarter-turned rational tangles.

    Each twist vector is built as a rational tangle and rotated so its
    twist axis runs vertically (pretzel style); `twists` appends extra
    horizontal crossings after the sum, the trailing "+e" of such
    presentations.
    """
    if not tangles:
        raise ValueError("need at least one tangle")
    parts = []
    for cf in tangles:
        t = _build_rational(cf)
        t.rotate_ccw()
        parts.append(t)
    total = parts[0]
    for t in parts[1:]:
        total.attach_east(t)
    for _ in range(twists):
        # opposite handedness from the in-tangle twists: the quarter
        # turns flip the alternation parity at the seam
        total.twist_east(1)
    return total.numerator_closure()


def braid_closure(word: Sequence[int], strands: int) -> Diagram:
    """Close a braid word; letters are +-i for sigma_i^+1 at position i.

    Raises DiagramError when the closure has more than one component.
    """
    if strands < 2:
        raise ValueError("need at least 2 strands")
    if not word:
        raise ValueError("empty braid word")
    fab = Fabric()
    top: list[Port | None] = [None] * (strands + 1)
    bottom: list[Port | None] = [None] * (strands + 1)
    for letter in word:
        i = abs(letter)
        if not 1 <= i < strands:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        c = fab.new_crossing()
        if letter > 0:
            tne, tnw, bsw, bse = (c, 0), (c, 1), (c, 2), (c, 3)
        else:
            tnw, bsw, bse, tne = (c, 0), (c, 1), (c, 2), (c, 3)
        for pos, tport in ((i, tnw), (i + 1, tne)):
            if bottom[pos] is None:
                top[pos] = tport
            else:
                fab.connect(bottom[pos], tport)
        bottom[i], bottom[i + 1] = bsw, bse
    for pos in range(1, strands + 1):
        if bottom[pos] is None:
            raise DiagramError(f"strand {pos} is never crossed; closure is a split link")
        fab.connect(bottom[pos], top[pos])
    return fab.to_diagram().canonical()


def twist_chain(n: int) -> Diagram:
    """A chain of n single twists (twist vector of n ones).

    Used as the contraction engine's performance benchmark family; the
    closure is a knot whenever the Fibonacci numerator is odd, i.e.
    n is not congruent to 2 mod 3.
    """
    return rational_knot([1] * n)
