import pytest

from tait_lab.alexander import alexander
from tait_lab.bracket import bracket_brute, jones
from tait_lab.diagram import parse_pd, UNKNOT
from tait_lab.laurent import LaurentPoly, ONE
from tait_lab.moves import (
    MoveError,
    MoveSite,
    apply_move,
    apply_script,
    enumerate_sites,
    greedy_simplify,
    random_move_walk,
    sites_from_json,
    sites_to_json,
)


class TestEnumeration:
    def test_kinked_unknot_r1_sites(self):
        # the 1-crossing diagram is a lemniscate: both lobes are kinks
        kink = parse_pd("X[1,2,2,1]")
        sites = enumerate_sites(kink, ("R1-",))
        assert len(sites) == 2

    def test_kinked_trefoil_single_r1_site(self, trefoil):
        kinked = apply_move(trefoil, MoveSite("R1+", (1, 0, 0)))
        assert len(enumerate_sites(kinked, ("R1-",))) == 1

    def test_trefoil_no_r2_minus(self, trefoil):
        # the trefoil's bigons are clasps, not removable poke pairs
        assert enumerate_sites(trefoil, ("R2-",)) == []

    def test_unknot_insertions_only(self):
        kinds_with_sites = {
            kind
            for kind in ("R1-", "R2-", "R3", "FLYPE", "R1+", "R2+")
            if enumerate_sites(UNKNOT, (kind,))
        }
        assert kinds_with_sites == {"R1+", "R2+"}

    def test_unknown_kind(self, trefoil):
        with pytest.raises(ValueError):
            enumerate_sites(trefoil, ("R5",))

    def test_alternating_has_no_r3(self, trefoil, figure8, k62):
        for d in (trefoil, figure8, k62):
            assert enumerate_sites(d, ("R3",)) == []


class TestApply:
    def test_r1_inverse_pair(self, trefoil):
        for site in enumerate_sites(trefoil, ("R1+",))[:8]:
            bigger = apply_move(trefoil, site)
            assert bigger.n == trefoil.n + 1
            undo = [
                s for s in enumerate_sites(bigger, ("R1-",))
                if apply_move(bigger, s) == trefoil.canonical()
            ]
            assert undo, "R1- does not undo R1+"

    def test_r1_minus_to_unknot(self):
        kink = parse_pd("X[1,2,2,1]")
        for site in enumerate_sites(kink, ("R1-",)):
            assert apply_move(kink, site) == UNKNOT

    def test_r2_inverse_pair(self, figure8):
        for site in enumerate_sites(figure8, ("R2+",))[:10]:
            bigger = apply_move(figure8, site)
            assert bigger.n == figure8.n + 2
            undo = [
                s for s in enumerate_sites(bigger, ("R2-",))
                if apply_move(bigger, s) == figure8.canonical()
            ]
            assert undo, "R2- does not undo R2+"

    def test_stale_sites_rejected(self, trefoil, figure8):
        site = enumerate_sites(trefoil, ("R1+",))[0]
        apply_move(figure8, site)  # same-size params may apply elsewhere
        with pytest.raises(MoveError):
            apply_move(figure8, MoveSite("R1-", (0, 0)))
        with pytest.raises(MoveError):
            apply_move(trefoil, MoveSite("R2-", (0, 1, 1, 0)))
        with pytest.raises(MoveError):
            apply_move(trefoil, MoveSite("bogus", ()))

    def test_validation_after_move(self, trefoil):
        for site in enumerate_sites(trefoil, ("R1+", "R2+"))[:20]:
            d2 = apply_move(trefoil, site)
            assert d2.n - d2.edge_count + len(d2.faces) == 2


class TestInvariants:
    def test_jones_and_alexander_stable(self, k52):
        v0, a0 = jones(k52), alexander(k52)
        for site in enumerate_sites(k52, ("R1+",))[:6]:
            d = apply_move(k52, site)
            assert jones(d) == v0 and alexander(d) == a0
        for site in enumerate_sites(k52, ("R2+",))[:6]:
            d = apply_move(k52, site)
            assert jones(d) == v0 and alexander(d) == a0

    def test_r3_preserves_everything(self, figure8):
        v0 = jones(figure8)
        tested = 0
        for r2site in enumerate_sites(figure8, ("R2+",)):
            staged = apply_move(figure8, r2site)
            for site in enumerate_sites(staged, ("R3",)):
                d = apply_move(staged, site)
                assert d.n == staged.n
                assert jones(d) == v0
                assert bracket_brute(d) == bracket_brute(staged)
                tested += 1
            if tested >= 6:
                break
        assert tested >= 1


class TestFlype:
    def test_sites_exist(self, trefoil, k52):
        assert enumerate_sites(trefoil, ("FLYPE",))
        assert enumerate_sites(k52, ("FLYPE",))

    def test_preserves_writhe_and_jones(self, k52, k62):
        for d in (k52, k62):
            v0, w0 = jones(d), d.writhe()
            for site in enumerate_sites(d, ("FLYPE",)):
                d2 = apply_move(d, site)
                assert d2.n == d.n
                assert d2.writhe() == w0
                assert jones(d2) == v0

    def test_two_crossing_tangle_fixture(self):
        # pivot crossing next to a 2-crossing clasp tangle inside a
        # larger alternating knot: both invariants must survive the turn
        d = parse_pd("X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]")
        sites = [s for s in enumerate_sites(d, ("FLYPE",)) if len(s.params[2]) == 2]
        assert sites
        for site in sites:
            d2 = apply_move(d, site)
            assert d2.writhe() == d.writhe()
            assert jones(d2) == jones(d)
            assert alexander(d2) == alexander(d)


class TestWalksAndSimplify:
    def test_walk_deterministic(self, trefoil):
        a = random_move_walk(trefoil, steps=9, max_crossings=12, seed=42)
        b = random_move_walk(trefoil, steps=9, max_crossings=12, seed=42)
        assert a == b
        c = random_move_walk(trefoil, steps=9, max_crossings=12, seed=43)
        assert jones(c) == jones(a)

    def test_walk_respects_cap(self, trefoil):
        for seed in range(5):
            d = random_move_walk(trefoil, steps=12, max_crossings=9, seed=seed)
            assert d.n <= 9

    def test_zero_steps(self, figure8):
        assert random_move_walk(figure8, steps=0, max_crossings=10, seed=1) == figure8

    def test_walked_unknot_keeps_trivial_jones(self):
        for seed in range(4):
            d = random_move_walk(UNKNOT, steps=10, max_crossings=10, seed=seed)
            assert jones(d) == ONE

    def test_walked_trefoil_keeps_jones(self, trefoil):
        v = LaurentPoly.parse("-t^-4 + t^-3 + t^-1")
        for seed in range(4):
            d = random_move_walk(trefoil, steps=10, max_crossings=14, seed=seed)
            assert jones(d) == v

    def test_greedy_simplify(self, trefoil):
        assert greedy_simplify(trefoil) == trefoil  # already irreducible
        kinked = apply_move(trefoil, MoveSite("R1+", (1, 0, 0)))
        assert greedy_simplify(kinked) == trefoil.canonical()

    def test_double_kink_unknot_simplifies(self):
        k1 = apply_move(UNKNOT, MoveSite("R1+", (0, 0, 0)))
        k2 = apply_move(k1, enumerate_sites(k1, ("R1+",))[0])
        assert greedy_simplify(k2) == UNKNOT

    def test_r2_pair_removed(self, figure8):
        bigger = apply_move(figure8, enumerate_sites(figure8, ("R2+",))[0])
        assert greedy_simplify(bigger) == figure8.canonical()


class TestSiteSerialization:
    def test_json_roundtrip(self, k52):
        sites = enumerate_sites(k52, ("R1-", "R1+", "R2-", "R2+", "R3", "FLYPE"))
        text = sites_to_json(sites)
        back = sites_from_json(text)
        assert back == sites

    def test_script_replay(self, trefoil):
        s1 = enumerate_sites(trefoil, ("R1+",))[0]
        d1 = apply_move(trefoil, s1)
        s2 = enumerate_sites(d1, ("R2+",))[0]
        d2 = apply_move(d1, s2)
        replayed = apply_script(trefoil, [s1, s2])
        assert replayed == d2
