"""Enriched presentations: realization, standard categories, functors,
homotopy categories, diagnostics, lifts."""

import pytest

from crx import complex as cx
from crx import enriched as en
from crx import lifting as lf
from crx.complex import Verdict, validate
from crx.enriched import CellImage
from crx.words import DomainError


@pytest.fixture(scope="module")
def cache():
    return lf.HomCache(max_len=5, max_deg=4)


class TestRealization:
    def test_suspension_hom_is_input(self):
        for c in (cx.point(), cx.disk(1), cx.sphere(2), cx.globe(2)):
            for flavor in (en.TENSOR, en.CARTESIAN):
                s = en.suspension(c, flavor)
                rh = en.realize_hom(s, "0", "1", 4, 4)
                assert cx.find_isomorphism(rh.presentation, c) is not None, (
                    c.name, flavor)

    def test_p11_hom_is_tensor_square(self):
        from crx import monoidal as mo

        rh = en.realize_hom(en.p11(), "0", "2", 4, 4)
        tp = mo.tensor(cx.disk(1), cx.disk(1))
        assert cx.find_isomorphism(rh.presentation, tp.presentation) is not None

    def test_istar_monoid_cells(self):
        rh = en.realize_hom(en.istar(), "0", "0", 3, 2)
        # 0-cells: words in k of length <= 3 (including the unit)
        assert sorted(rh.presentation.objects) == ["id_0", "k", "k_o_k", "k_o_k_o_k"]

    def test_itilde_realizes_and_validates(self):
        rh = en.realize_hom(en.itilde(), "0", "0", 4, 3)
        rep = validate(rh.presentation)
        assert rep.ok, rep.failures()[:3]

    def test_itilde_cell_counts(self):
        it = en.itilde()
        degs = {}
        for c in it.cells.values():
            degs[c.degree] = degs.get(c.degree, 0) + 1
        assert degs == {0: 3, 1: 6, 2: 2}
        assert len(it.cells) == 11

    def test_alpha_boundary(self):
        it = en.itilde()
        assert it.cell("alpha").boundary_path == (
            (("l1",), 1), (("a",), 1), (("h1",), -1))

    def test_structured_hom_rejected(self):
        up, _down, _f = lf.covering_pair()
        with pytest.raises(DomainError):
            en.realize_hom(up, "0", "0", 3, 3)


class TestFunctors:
    def test_retraction_identity_both_flavors(self):
        for flavor in (en.TENSOR, en.CARTESIAN):
            comp = lf.interval_inclusion(flavor).compose(lf.interval_collapse(flavor))
            ident = en.EnrichedFunctor.identity(en.interval(flavor))
            for nm in ("f", "g", "l1", "l2"):
                a, b = comp.cell_map[nm], ident.cell_map[nm]
                assert (a.chain, a.path, a.terms) == (b.chain, b.path, b.terms), nm

    def test_collapse_is_functor(self, cache):
        for flavor in (en.TENSOR, en.CARTESIAN):
            ok, fails, obl = lf.functor_check(lf.interval_collapse(flavor), cache)
            assert ok, fails

    def test_theta_is_functor(self, cache):
        ok, fails, _ = lf.functor_check(lf.theta(), cache)
        assert ok, fails

    def test_broken_functor_detected(self, cache):
        src = en.istar()
        tgt = en.itilde()
        bad = en.EnrichedFunctor(
            src, tgt, {"0": "0"},
            {"k": CellImage.of_chain(("k",)),
             "h1": CellImage.of_path(((("h2",), 1),)),   # wrong endpoints
             "h2": CellImage.of_path(((("h2",), 1),))},
        )
        ok, fails, _ = lf.functor_check(bad, cache)
        assert not ok and any("h1" in m for m in fails)


class TestHoCategories:
    def test_interval_ho_has_iso(self, cache):
        ho = lf.ho_category(en.interval(), cache)
        assert ("0", "1") in ho.iso_pairs()

    def test_suspension_ho_hom_is_pi0(self, cache):
        two = cx.CrxPresentation("twopoints", objects=("a", "b"))
        s = en.suspension(two, en.TENSOR)
        ho = lf.ho_category(s, cache)
        assert len(ho.hom_classes[("0", "1")]) == 2

    def test_unit_cat(self, cache):
        ho = lf.ho_category(en.one_object_unit(), cache)
        assert ho.hom_classes[("0", "0")]

    def test_ho21_of_covering_upstairs(self, cache):
        up, _down, _f = lf.covering_pair()
        res = lf.ho21(up, cache)
        assert res.homs[("0", "0")].kind == "contractible"

    def test_ho21_matches_ho_on_p11(self, cache):
        cat = en.p11()
        res = lf.ho21(cat, cache)
        assert res.homs[("0", "2")].kind == "contractible"


class TestDiagnostics:
    def test_covering_example(self, cache):
        up, down, f = lf.covering_pair()
        diag = lf.fibration_diagnostics(f, cache)
        assert diag.local_fibration is Verdict.EQUAL
        assert diag.isofibration is Verdict.EQUAL
        assert diag.dk_weak_equivalence is Verdict.NOT_EQUAL

    def test_identity_all_true(self, cache):
        f = en.EnrichedFunctor.identity(en.interval())
        diag = lf.fibration_diagnostics(f, cache)
        assert diag.local_fibration is Verdict.EQUAL
        assert diag.isofibration is Verdict.EQUAL
        assert diag.acyclic_fibration is Verdict.EQUAL
        assert diag.dk_weak_equivalence is Verdict.EQUAL


class TestLifts:
    def _bottom_with_loop(self, down):
        interval = en.interval()
        return en.EnrichedFunctor(
            interval, down, {"0": "0", "1": "1"},
            {"f": CellImage.of_symbol(0, ("pt", "0", "1")),
             "g": CellImage.of_symbol(0, ("pt", "1", "0")),
             "l1": CellImage.of_symbol(1, ("grp", 1)),
             "l2": CellImage.of_symbol(1, ("grp", 1))},
            name="bottom")

    def test_refuted_against_unit_interval(self):
        up, down, f = lf.covering_pair()
        unitf = lf.unit_into_interval()
        top = en.EnrichedFunctor(unitf.source, up, {"0": "0"}, {}, name="top")
        sq = lf.LiftingSquare(i=unitf, f=f, top=top,
                              bottom=self._bottom_with_loop(down))
        out = lf.search_lift(sq)
        assert out.status == "refuted"
        assert "automorphism preimage" in out.obstruction

    def test_identity_i_found(self):
        col = lf.interval_collapse()
        ident = en.EnrichedFunctor.identity(en.interval())
        out = lf.search_lift(lf.LiftingSquare(i=ident, f=col, top=ident, bottom=ident))
        assert out.status == "found"

    def test_theta_against_collapse_found(self, cache):
        col = lf.interval_collapse()
        th = lf.theta()
        sq = lf.LiftingSquare(i=th, f=col, top=th, bottom=col)
        out = lf.search_lift(sq, cache=cache)
        assert out.status == "found"
        ok, fails = lf.verify_lift(sq, out.lift, cache)
        assert ok, fails


class TestTruncConn:
    def test_covering_upstairs_1_truncated(self, cache):
        up, _d, _f = lf.covering_pair()
        rep = lf.truncation_connectivity_cat(up, 1, bound=3, cache=cache)
        assert rep.truncated is Verdict.EQUAL

    def test_suspension_of_s3_2_connected(self, cache):
        cat = en.suspension(cx.sphere(3), en.TENSOR)
        rep = lf.truncation_connectivity_cat(cat, 2, bound=4, cache=cache)
        assert rep.connected is Verdict.EQUAL

    def test_unit_cat_everything(self, cache):
        cat = en.one_object_unit()
        for n in (0, 1, 2):
            rep = lf.truncation_connectivity_cat(cat, n, bound=3, cache=cache)
            assert rep.truncated is Verdict.EQUAL
            assert rep.connected is Verdict.EQUAL
