import pytest

from tait_lab.diagram import Diagram, DiagramError, parse_pd, UNKNOT

from conftest import TREFOIL, FIGURE8


class TestParsing:
    def test_trefoil(self, trefoil):
        assert trefoil.n == 3
        assert trefoil.edge_count == 6
        assert trefoil.crossings[0] == (1, 4, 2, 5)

    def test_empty_is_unknot(self):
        assert parse_pd("") is UNKNOT
        assert parse_pd("   \n ") is UNKNOT
        assert UNKNOT.n == 0

    def test_roundtrip(self, trefoil, figure8, k52):
        for d in (trefoil, figure8, k52):
            assert parse_pd(d.render()) == d

    def test_bad_syntax(self):
        with pytest.raises(DiagramError):
            parse_pd("X[1,2,3]")
        with pytest.raises(DiagramError):
            parse_pd("Y[1,2,3,4]")
        with pytest.raises(DiagramError):
            parse_pd("X[1,2,3,4] garbage")

    def test_label_multiset_violation(self):
        # label 3 twice, labels 1 and 2 once: rejected
        with pytest.raises(DiagramError):
            parse_pd("X[1,3,2,3]")

    def test_under_strand_rule(self):
        with pytest.raises(DiagramError, match="under-strand"):
            Diagram([(1, 4, 3, 5), (3, 6, 4, 1), (5, 2, 6, 2)])

    def test_over_strand_rule(self):
        # under walk fine but over-strand labels not consecutive
        with pytest.raises(DiagramError):
            Diagram([(1, 4, 2, 6), (3, 5, 4, 1), (5, 2, 6, 3)])

    def test_multi_component_rejected(self):
        # Hopf-link style records break the single-walk labeling
        with pytest.raises(DiagramError):
            Diagram([(2, 4, 1, 3), (4, 2, 3, 1)])

    def test_nonplanar_rejected(self):
        # a consistent walk whose rotation system is not genus 0
        with pytest.raises(DiagramError, match="nonplanar"):
            Diagram([(1, 3, 2, 4), (2, 1, 3, 4)])


class TestWritheAndSigns:
    def test_trefoil_writhe(self, trefoil):
        assert trefoil.signs == (-1, -1, -1)
        assert trefoil.writhe() == -3

    def test_unknot_writhe(self):
        assert UNKNOT.writhe() == 0

    def test_mirror_negates(self, trefoil):
        assert trefoil.mirror().writhe() == 3

    def test_kinks(self):
        assert parse_pd("X[1,1,2,2]").writhe() == 1
        assert parse_pd("X[1,2,2,1]").writhe() == -1

    def test_reversal_preserves_writhe(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert d.reverse().writhe() == d.writhe()
            assert d.reverse().n == d.n


class TestMirror:
    def test_involution(self, trefoil, figure8, k52):
        for d in (trefoil, figure8, k52):
            assert d.mirror().mirror() == d

    def test_mirror_unknot(self):
        assert UNKNOT.mirror() == UNKNOT

    def test_sign_multiset_negates(self, k62):
        assert sorted(k62.mirror().signs) == sorted(-s for s in k62.signs)


class TestPredicates:
    def test_alternating(self, trefoil, figure8):
        assert trefoil.is_alternating()
        assert figure8.is_alternating()
        assert UNKNOT.is_alternating()

    def test_non_alternating(self):
        # trefoil with one crossing switched is not alternating
        d = parse_pd(TREFOIL).mirror()
        recs = list(parse_pd(TREFOIL).crossings)
        recs[0] = d.crossings[0]
        assert not Diagram(recs).is_alternating()

    def test_reduced(self, trefoil, figure8):
        assert trefoil.is_reduced()
        assert figure8.is_reduced()
        assert UNKNOT.is_reduced()

    def test_kink_not_reduced(self):
        assert not parse_pd("X[1,2,2,1]").is_reduced()

    def test_kinked_trefoil_not_reduced(self, trefoil):
        from tait_lab.moves import MoveSite, apply_move

        kinked = apply_move(trefoil, MoveSite("R1+", (1, 0, 0)))
        assert kinked.n == 4
        assert not kinked.is_reduced()


class TestFaces:
    def test_counts(self, trefoil, figure8):
        assert len(trefoil.faces) == 5
        assert len(figure8.faces) == 6
        assert len(UNKNOT.faces) == 2

    def test_euler_formula(self, trefoil, figure8, k52, k62):
        for d in (trefoil, figure8, k52, k62):
            assert d.n - d.edge_count + len(d.faces) == 2


class TestDT:
    def test_trefoil(self, trefoil):
        assert trefoil.emit_dt() == (4, 6, 2)

    def test_figure8(self, figure8):
        assert figure8.emit_dt() == (-4, -6, -8, -2)

    def test_mirror_negates_entries(self, trefoil):
        assert trefoil.mirror().emit_dt() == (-4, -6, -2)

    def test_unknot_error(self):
        with pytest.raises(DiagramError):
            UNKNOT.emit_dt()


class TestCanonical:
    def test_relabel_equivalence(self, figure8):
        shifted = figure8.relabel(3)
        assert shifted != figure8
        assert shifted.canonical() == figure8.canonical()

    def test_reverse_equivalence(self, k52):
        assert k52.reverse().canonical() == k52.canonical()

    def test_canonical_idempotent(self, trefoil):
        c = trefoil.canonical()
        assert c.canonical() == c
