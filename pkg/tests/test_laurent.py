from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tait_lab.laurent import LaurentPoly, ONE, ZERO


def poly(*pairs):
    return LaurentPoly(pairs)


polys = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(-30, 30), st.integers(-50, 50), max_size=8),
)


class TestBasics:
    def test_canonical_form_drops_zeros(self):
        p = LaurentPoly({3: 0, 1: 2, 0: 0})
        assert list(p.terms()) == [(1, 2)]

    def test_zero_is_empty(self):
        assert ZERO.is_zero()
        assert LaurentPoly({5: 1, 4: 0}) != ZERO

    def test_add_cancels(self):
        # (t + 1) + (-1) = t
        assert poly((1, 1), (0, 1)) + poly((0, -1)) == poly((1, 1))

    def test_add_identity(self):
        p = poly((2, 3), (-1, 4))
        assert ZERO + p == p

    def test_add_symmetric_cancellation(self):
        # (t^-1 + t) + (t^-1 - t) = 2 t^-1
        left = poly((-1, 1), (1, 1))
        right = poly((-1, 1), (1, -1))
        assert left + right == poly((-1, 2))

    def test_mul(self):
        # (t - 1)(t + 1) = t^2 - 1
        assert poly((1, 1), (0, -1)) * poly((1, 1), (0, 1)) == poly((2, 1), (0, -1))

    def test_mul_identity(self):
        p = poly((4, 7), (-2, -3))
        assert p * ONE == p

    def test_monomial_inverse_pair(self):
        assert poly((3, -1)) * poly((-3, -1)) == ONE

    def test_mono_mul(self):
        # (t + 1) * t^-4 = t^-3 + t^-4
        assert poly((1, 1), (0, 1)).mono_mul(1, -4) == poly((-3, 1), (-4, 1))
        p = poly((2, 5))
        assert p.mono_mul(1, 0) == p
        assert ONE.mono_mul(-1, 3) == poly((3, -1))

    def test_substitute_inverse(self):
        p = poly((2, 1), (1, -1), (0, 1))
        assert p.substitute_inverse() == poly((-2, 1), (-1, -1), (0, 1))
        q = poly((-4, -1), (-3, 1), (-1, 1))
        assert q.substitute_inverse() == poly((4, -1), (3, 1), (1, 1))

    def test_span(self):
        assert poly((-4, -1), (-3, 1), (-1, 1)).span() == 3
        assert ONE.span() == 0
        assert ZERO.span() is None

    def test_extreme_coeffs(self):
        assert poly((-4, -1), (-3, 1), (-1, 1)).extreme_coeffs() == (-1, 1)
        assert ONE.extreme_coeffs() == (1, 1)
        assert poly((2, 3)).extreme_coeffs() == (3, 3)
        with pytest.raises(ValueError):
            ZERO.extreme_coeffs()

    def test_eval_int(self):
        assert poly((-1, 1), (1, 1)).eval_int(1) == 2
        assert poly((1, 1), (0, -3), (-1, 1)).eval_int(-1) == -5
        assert ZERO.eval_int(7) == 0
        with pytest.raises(ValueError):
            ONE.eval_int(0)

    def test_exponent_guard(self):
        with pytest.raises(OverflowError):
            LaurentPoly({10**7: 1})

    def test_div_exact(self):
        p = poly((2, 1), (0, -1))  # t^2 - 1
        q = poly((1, 1), (0, 1))  # t + 1
        assert p.div_exact(q) == poly((1, 1), (0, -1))
        with pytest.raises(ValueError):
            poly((1, 1)).div_exact(q)
        delta = LaurentPoly({2: -1, -2: -1})
        assert (delta * delta * poly((5, 3))).div_exact(delta) == delta * poly((5, 3))


class TestRingProperties:
    @given(polys, polys, polys)
    def test_add_mul_axioms(self, p, q, r):
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys, polys)
    def test_span_multiplicative(self, p, q):
        if p.is_zero() or q.is_zero():
            assert (p * q).span() is None
        else:
            assert (p * q).span() == p.span() + q.span()

    @given(polys, polys)
    def test_substitute_inverse_is_ring_map(self, p, q):
        assert (p + q).substitute_inverse() == p.substitute_inverse() + q.substitute_inverse()
        assert (p * q).substitute_inverse() == p.substitute_inverse() * q.substitute_inverse()
        assert p.substitute_inverse().substitute_inverse() == p

    @given(polys, polys, st.sampled_from([1, -1, 2, -2, 3, 5]))
    def test_eval_multiplicative(self, p, q, x):
        assert (p * q).eval_int(x) == p.eval_int(x) * q.eval_int(x)


class TestTextFormat:
    def test_render_examples(self):
        assert ZERO.render() == "0"
        assert ONE.render() == "1"
        assert poly((0, -1)).render() == "-1"
        assert poly((1, 1)).render() == "t"
        assert poly((2, 3)).render() == "3*t^2"
        assert poly((-4, -1), (-3, 1), (-1, 1)).render() == "t^-1 + t^-3 - t^-4"
        assert poly((2, 1), (1, -2), (0, 1)).render("A") == "A^2 - 2*A + 1"

    def test_parse_examples(self):
        assert LaurentPoly.parse("0") == ZERO
        assert LaurentPoly.parse("-t^2 + 3") == poly((2, -1), (0, 3))
        assert LaurentPoly.parse("t^-1 + t^-3 - t^-4") == poly((-1, 1), (-3, 1), (-4, -1))
        assert LaurentPoly.parse("2*A^2 - A^-2", var="A") == poly((2, 2), (-2, -1))

    def test_parse_rejects_garbage(self):
        for bad in ("t +", "* t", "q^2", "t^", "3 3"):
            with pytest.raises(ValueError):
                LaurentPoly.parse(bad)

    @given(polys)
    def test_roundtrip(self, p):
        assert LaurentPoly.parse(p.render()) == p

    @given(polys)
    def test_roundtrip_other_variable(self, p):
        assert LaurentPoly.parse(p.render("A"), var="A") == p
