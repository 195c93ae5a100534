import pytest

from tait_lab.alexander import alexander, determinant, jones_chirality_obstruction
from tait_lab.diagram import parse_pd, UNKNOT
from tait_lab.laurent import LaurentPoly, ONE
from tait_lab.moves import random_move_walk


class TestValues:
    def test_trefoil(self, trefoil):
        # 2x2 minor determinant by hand: t - 1 + t^-1
        assert alexander(trefoil) == LaurentPoly.parse("t - 1 + t^-1")
        assert determinant(trefoil) == 3

    def test_figure8(self, figure8):
        # 3x3 minor via fraction-free elimination: -t + 3 - t^-1
        assert alexander(figure8) == LaurentPoly.parse("-t + 3 - t^-1")
        assert determinant(figure8) == 5

    def test_k52(self, k52):
        assert alexander(k52) == LaurentPoly.parse("2*t - 3 + 2*t^-1")
        assert determinant(k52) == 7

    def test_unknot(self):
        assert alexander(UNKNOT) == ONE
        assert determinant(UNKNOT) == 1

    def test_kink(self):
        assert alexander(parse_pd("X[1,2,2,1]")) == ONE


class TestNormalization:
    def test_at_one(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert alexander(d).eval_int(1) == 1

    def test_symmetric(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            a = alexander(d)
            assert a == a.substitute_inverse()

    def test_determinant_odd(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert determinant(d) % 2 == 1


class TestInvariance:
    def test_mirror(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert alexander(d.mirror()) == alexander(d)

    def test_moves(self, trefoil, figure8):
        for seed in range(8):
            base = trefoil if seed % 2 else figure8
            d = random_move_walk(base, steps=7, max_crossings=12, seed=100 + seed)
            assert alexander(d) == alexander(base), f"seed {100 + seed}"

    def test_reversal(self, k62):
        assert alexander(k62.reverse()) == alexander(k62)


class TestChirality:
    def test_trefoil_chiral(self, trefoil):
        assert jones_chirality_obstruction(trefoil) == "chiral_certified"

    def test_figure8_symmetric(self, figure8):
        assert jones_chirality_obstruction(figure8) == "symmetric"

    def test_unknot_symmetric(self):
        assert jones_chirality_obstruction(UNKNOT) == "symmetric"

    def test_agrees_across_moves(self, trefoil):
        for seed in (5, 6):
            d = random_move_walk(trefoil, steps=6, max_crossings=11, seed=seed)
            assert jones_chirality_obstruction(d) == jones_chirality_obstruction(trefoil)
