"""Exact integer Laurent polynomials in one formal variable.

Values of the Jones and Alexander invariants live here, as do raw
bracket polynomials in the variable A.  Coefficients are Python ints
(arbitrary precision), so invariance checks can demand exact equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = ["LaurentPoly", "ZERO", "ONE"]

# Diagrams in scope never produce exponents anywhere near this; a larger
# exponent means a bookkeeping bug, not a big polynomial.
_MAX_EXP = 10**6

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<int>\d+)|(?P<star>\*)|(?P<caret>\^)|(?P<var>[A-Za-z]))")


class LaurentPoly:
    """An integer Laurent polynomial in canonical form.

    The term map never stores a zero coefficient; the zero polynomial is
    the empty map.  Instances are immutable and hashable, so they can be
    shared freely across threads and used as dict keys.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                v = acc.get(e, 0) + c
                if v:
                    acc[e] = v
                else:
                    del acc[e]
        if acc:
            lo, hi = min(acc), max(acc)
            if hi > _MAX_EXP or lo < -_MAX_EXP:
                raise OverflowError(f"exponent out of supported range: {lo}..{hi}")
        self._terms = acc
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff} if coeff else {})

    @classmethod
    def const(cls, coeff: int) -> "LaurentPoly":
        return cls.monomial(coeff, 0)

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in decreasing exponent order."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def span(self) -> int | None:
        """Max exponent minus min exponent, or None for the zero polynomial.

        None (not 0) keeps the zero polynomial's span distinct from the
        span of a nonzero constant.
        """
        if not self._terms:
            return None
        return max(self._terms) - min(self._terms)

    def extreme_coeffs(self) -> tuple[int, int]:
        """Coefficients at the minimal and maximal exponent.

        Raises ValueError on the zero polynomial.
        """
        if not self._terms:
            raise ValueError("zero polynomial has no extreme coefficients")
        return self._terms[min(self._terms)], self._terms[max(self._terms)]

    def is_symmetric(self) -> bool:
        """True if the polynomial is fixed by the substitution x -> 1/x."""
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                del acc[e]
        return _wrap(acc)

    def __neg__(self) -> "LaurentPoly":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                v = acc.get(e, 0) + c1 * c2
                if v:
                    acc[e] = v
                elif e in acc:
                    del acc[e]
        return _wrap(acc, check=True)

    def mono_mul(self, coeff: int, exp: int) -> "LaurentPoly":
        """Multiply by coeff * x**exp (shift every exponent, scale every coefficient)."""
        if coeff == 0:
            return ZERO
        return _wrap({e + exp: c * coeff for e, c in self._terms.items()}, check=True)

    def substitute_inverse(self) -> "LaurentPoly":
        """Apply x -> 1/x (negate every exponent); an involution and ring map."""
        return _wrap({-e: c for e, c in self._terms.items()})

    def eval_int(self, x: int) -> Fraction:
        """Exact value at a nonzero integer point."""
        if x == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        fx = Fraction(x)
        return sum((c * fx**e for e, c in self._terms.items()), Fraction(0))

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        # Strip monomial content so both operands become ordinary polynomials.
        sv, ov = self.min_exp(), other.min_exp()
        num = {e - sv: c for e, c in self._terms.items()}
        den = {e - ov: c for e, c in other._terms.items()}
        dden = max(den)
        lead = den[dden]
        quot: dict[int, int] = {}
        while num:
            dnum = max(num)
            if dnum < dden:
                raise ValueError("not an exact division")
            c, r = divmod(num[dnum], lead)
            if r:
                raise ValueError("not an exact division")
            q = dnum - dden
            quot[q] = c
            for e, cd in den.items():
                ee = e + q
                v = num.get(ee, 0) - c * cd
                if v:
                    num[ee] = v
                elif ee in num:
                    del num[ee]
        return _wrap({e + sv - ov: c for e, c in quot.items()})

    # -- rendering and parsing ----------------------------------------

    def render(self, var: str = "t") -> str:
        """Human-readable form, terms in decreasing exponent order.

        Grammar: terms are ``c``, ``c*v^e``, ``v^e``, ``v`` joined with
        `` + `` / `` - ``; exponent 0 is omitted, coefficient +-1 drops
        the digit except on the constant term.  parse() accepts exactly
        this grammar (modulo whitespace).
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Parse the render() grammar back into a polynomial."""
        s = text.strip()
        if s == "0":
            return ZERO
        terms: list[tuple[int, int]] = []
        pos = 0
        sign = 1
        expect_term = True
        coeff: int | None = None
        exp: int | None = None
        have_var = False

        def flush():
            nonlocal coeff, exp, have_var, sign
            if coeff is None and not have_var:
                raise ValueError(f"dangling operator in {text!r}")
            c = coeff if coeff is not None else 1
            e = (exp if exp is not None else 1) if have_var else 0
            terms.append((e, sign * c))
            coeff, exp, have_var, sign = None, None, False, 1

        while pos < len(s):
            m = _TOKEN.match(s, pos)
            if not m:
                raise ValueError(f"bad polynomial syntax at {s[pos:]!r}")
            pos = m.end()
            if m.lastgroup == "sign":
                if expect_term:
                    sign = -sign if m.group("sign") == "-" else sign
                else:
                    flush()
                    sign = -1 if m.group("sign") == "-" else 1
                    expect_term = True
            elif m.lastgroup == "int":
                val = int(m.group("int"))
                if have_var or coeff is not None:
                    raise ValueError(f"unexpected integer in {text!r}")
                coeff = val
                expect_term = False
            elif m.lastgroup == "star":
                if coeff is None or have_var:
                    raise ValueError(f"misplaced '*' in {text!r}")
            elif m.lastgroup == "caret":
                raise ValueError(f"misplaced '^' in {text!r}")
            elif m.lastgroup == "var":
                if m.group("var") != var:
                    raise ValueError(f"unexpected variable {m.group('var')!r}, expected {var!r}")
                if have_var:
                    raise ValueError(f"doubled variable in {text!r}")
                have_var = True
                expect_term = False
                nm = re.match(r"\^(-?\d+)", s[pos:])
                if nm:
                    exp = int(nm.group(1))
                    pos += nm.end()
        flush()
        return cls(terms)

    # -- protocol plumbing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self._terms.items()))
        return h

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"


def _wrap(terms: dict[int, int], check: bool = False) -> LaurentPoly:
    """Build a LaurentPoly from a dict known to hold no zero coefficients."""
    if check and terms:
        lo, hi = min(terms), max(terms)
        if hi > _MAX_EXP or lo < -_MAX_EXP:
            raise OverflowError(f"exponent out of supported range: {lo}..{hi}")
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = terms
    p._hash = None
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
