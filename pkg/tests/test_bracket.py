import random

import pytest

from tait_lab.bracket import (
    ConventionError,
    EngineLimitError,
    LOOP_FACTOR,
    bracket,
    bracket_brute,
    bracket_contract,
    jones,
    smooth_loops,
    smoothing_state,
)
from tait_lab.diagram import parse_pd, UNKNOT
from tait_lab.laurent import LaurentPoly, ONE
from tait_lab.moves import random_move_walk

V_TREFOIL = LaurentPoly.parse("-t^-4 + t^-3 + t^-1")
V_FIGURE8 = LaurentPoly.parse("t^-2 - t^-1 + 1 - t + t^2")


class TestSmoothing:
    def test_trefoil_extreme_states(self, trefoil):
        # hand-smoothed: the all-A state of this (negative) trefoil has 3
        # loops, the all-B state 2; together 5 = n + 2
        assert smooth_loops(trefoil, "AAA") == 3
        assert smooth_loops(trefoil, "BBB") == 2

    def test_unknot(self):
        assert smooth_loops(UNKNOT, []) == 1

    def test_choice_validation(self, trefoil):
        with pytest.raises(ValueError):
            smooth_loops(trefoil, "AA")
        with pytest.raises(ValueError):
            smooth_loops(trefoil, "AXB")

    def test_state_counts(self, trefoil):
        st = smoothing_state(trefoil, "ABA")
        assert st.a_count == 2 and st.b_count == 1
        assert st.a_count + st.b_count == trefoil.n
        assert st.loop_count >= 1

    def test_loop_counts_match_state_graphs(self, figure8):
        from tait_lab.adequacy import state_graph

        n = figure8.n
        assert smooth_loops(figure8, "A" * n) == state_graph(figure8, "A").loop_count
        assert smooth_loops(figure8, "B" * n) == state_graph(figure8, "B").loop_count


class TestBruteForce:
    def test_unknot(self):
        assert bracket_brute(UNKNOT) == ONE

    def test_kinks(self):
        # two-state enumeration by hand: A*1 + A^-1*delta = -A^-3 etc.
        assert bracket_brute(parse_pd("X[1,2,2,1]")) == LaurentPoly.parse("-A^-3", var="A")
        assert bracket_brute(parse_pd("X[1,1,2,2]")) == LaurentPoly.parse("-A^3", var="A")

    def test_trefoil_bracket(self, trefoil):
        # 8-state sum done by hand: A^7 - A^3 - A^-5
        assert bracket_brute(trefoil) == LaurentPoly.parse("A^7 - A^3 - A^-5", var="A")

    def test_cap(self, trefoil):
        with pytest.raises(EngineLimitError):
            bracket_brute(trefoil, cap=2)


class TestJones:
    def test_unknot(self):
        assert jones(UNKNOT) == ONE

    def test_trefoil_anchor(self, trefoil):
        assert jones(trefoil) == V_TREFOIL

    def test_figure8_anchor(self, figure8):
        assert jones(figure8) == V_FIGURE8

    def test_jones_at_one(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert jones(d).eval_int(1) == 1

    def test_mirror_substitutes_inverse(self, trefoil, figure8, k52):
        for d in (trefoil, figure8, k52):
            assert jones(d.mirror()) == jones(d).substitute_inverse()

    def test_kinked_unknots_trivial(self):
        assert jones(parse_pd("X[1,2,2,1]")) == ONE
        assert jones(parse_pd("X[1,1,2,2]")) == ONE


class TestContraction:
    def test_matches_brute_on_small_knots(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert bracket_contract(d) == bracket_brute(d)

    def test_matches_brute_on_random_walks(self, trefoil, figure8):
        for seed in range(20):
            base = trefoil if seed % 2 else figure8
            d = random_move_walk(base, steps=6, max_crossings=12, seed=seed)
            assert bracket_contract(d) == bracket_brute(d), f"seed {seed}"

    def test_engine_selector(self, trefoil):
        assert bracket(trefoil, engine="auto") == bracket(trefoil, engine="brute")
        assert bracket(trefoil, engine="contract") == bracket(trefoil, engine="brute")
        with pytest.raises(ValueError):
            bracket(trefoil, engine="quantum")

    def test_thirty_crossing_chain(self):
        from tait_lab.generate import twist_chain

        d = twist_chain(30)
        v = jones(d, engine="contract")
        assert v.eval_int(1) == 1
        assert v.span() == 30


class TestInvarianceUnderMoves:
    def test_r1_multiplies_bracket(self, trefoil):
        from tait_lab.moves import MoveSite, apply_move, enumerate_sites

        br = bracket_brute(trefoil)
        for site in enumerate_sites(trefoil, ("R1+",)):
            d2 = apply_move(trefoil, site)
            dw = d2.writhe() - trefoil.writhe()
            assert dw in (1, -1)
            factor = LaurentPoly({3 * dw: -1})  # a +-kink contributes -A^(+-3)
            assert bracket_brute(d2) == br * factor

    def test_r2_r3_preserve_bracket(self, figure8):
        from tait_lab.moves import apply_move, enumerate_sites

        br = bracket_brute(figure8)
        for site in enumerate_sites(figure8, ("R2+",))[:12]:
            d2 = apply_move(figure8, site)
            assert bracket_brute(d2) == br
            for site3 in enumerate_sites(d2, ("R3",))[:3]:
                d3 = apply_move(d2, site3)
                assert bracket_brute(d3) == br
