import pytest

from tait_lab.alexander import determinant
from tait_lab.bracket import jones
from tait_lab.diagram import DiagramError
from tait_lab.generate import (
    braid_closure,
    montesinos_knot,
    rational_fraction,
    rational_knot,
    twist_chain,
)
from tait_lab.laurent import LaurentPoly


class TestRational:
    def test_matches_table_anchors(self, trefoil, figure8, k52):
        assert jones(rational_knot([3])) == jones(trefoil)
        assert jones(rational_knot([2, 2])) == jones(figure8)
        assert jones(rational_knot([3, 2])) == jones(k52)

    def test_determinant_is_fraction_numerator(self):
        for cf in ([5], [4, 3], [2, 1, 1, 2], [3, 1, 2], [2, 2, 1, 2], [3, 1, 1, 3]):
            fr = rational_fraction(cf)
            assert determinant(rational_knot(cf)) == fr.numerator

    def test_alternating_and_reduced(self):
        for cf in ([7], [5, 2], [2, 3, 2, 2], [4, 1, 1, 2]):
            d = rational_knot(cf)
            assert d.is_alternating() and d.is_reduced()
            assert d.n == sum(cf)

    def test_even_numerator_is_link(self):
        with pytest.raises(DiagramError):
            rational_knot([4])  # fraction 4: a (2,4) torus link

    def test_bad_vector(self):
        with pytest.raises(ValueError):
            rational_knot([])
        with pytest.raises(ValueError):
            rational_knot([3, 0, 2])


class TestMontesinos:
    def test_pretzel_family(self):
        p332 = montesinos_knot([[3], [3], [2]])
        assert p332.n == 8 and p332.is_alternating() and determinant(p332) == 21
        p333 = montesinos_knot([[3], [3], [3]])
        assert p333.n == 9 and determinant(p333) == 27

    def test_extra_twist(self):
        d = montesinos_knot([[3], [3], [2]], twists=1)
        assert d.n == 9 and d.is_alternating() and d.is_reduced()
        assert determinant(d) == 39


class TestBraids:
    def test_torus_3_4(self):
        d = braid_closure([1, 2] * 4, 3)
        assert d.n == 8
        assert not d.is_alternating()
        assert determinant(d) == 3
        v = jones(d)
        assert v.span() == 5  # torus knots have narrow Jones span

    def test_link_rejected(self):
        with pytest.raises(DiagramError):
            braid_closure([1, 2] * 3, 3)  # closure has 3 components

    def test_trivial_strand_rejected(self):
        with pytest.raises(DiagramError):
            braid_closure([1, 1, 1], 3)  # strand 3 never crossed

    def test_word_validation(self):
        with pytest.raises(ValueError):
            braid_closure([], 2)
        with pytest.raises(ValueError):
            braid_closure([3], 3)


class TestTwistChain:
    def test_structure(self):
        d = twist_chain(12)
        assert d.n == 12
        assert d.is_alternating()
        assert jones(d).eval_int(1) == 1

    def test_fibonacci_parity_link(self):
        with pytest.raises(DiagramError):
            twist_chain(5)  # Fibonacci numerator even: a 2-component link
