"""Tensor algebras, cofibrant replacement, indecomposables, towers, and the
loop-space homology comparison."""

import pytest

from crx import dga
from crx import simplicial as sx
from crx.intmat import AbelianGroup
from crx.words import DomainError


class TestTensorAlgebra:
    def test_single_even_generator(self):
        t = dga.tensor_algebra([("x", 2)])
        for k in range(5):
            assert len(t.basis(2 * k)) == 1
            if k:
                assert t.basis(2 * k - 1) == []

    def test_no_generators(self):
        t = dga.tensor_algebra([])
        assert t.basis(0) == [()]
        assert t.basis(3) == []

    def test_mixed_degree_word_count(self):
        # ordered words over degrees {2, 3} summing to 5
        t = dga.tensor_algebra([("x", 2), ("y", 3)])
        assert t.basis(5) == [("x", "y"), ("y", "x")]

    def test_leibniz_sign(self):
        t = dga.tensor_algebra([("x", 2), ("y", 5)], {"y": {("x", "x"): 1}})
        # d(x.y) = (+1)^|x| x.d(y) = x.x.x ; d(y.x) = d(y).x = x.x.x
        assert t.diff_of_word(("x", "y")) == {("x", "x", "x"): 1}
        assert t.diff_of_word(("y", "x")) == {("x", "x", "x"): 1}
        # odd-degree generator to the left flips the sign
        t2 = dga.tensor_algebra([("a", 3), ("b", 7)], {"b": {("a", "a"): 1}})
        assert t2.diff_of_word(("a", "b")) == {("a", "a", "a"): -1}

    def test_dd_zero_enforced(self):
        with pytest.raises(DomainError):
            dga.tensor_algebra([("x", 2), ("y", 3)], {"y": {("x",): 1},
                                                      "x": {(): 1}})

    def test_degree_one_rejected(self):
        with pytest.raises(DomainError):
            dga.tensor_algebra([("x", 1)])

    def test_dd_zero_on_truncated_basis(self):
        t = dga.tensor_algebra([("x", 2), ("y", 5)], {"y": {("x", "x"): 1}})
        ch = t.chain(12)
        assert ch.check_dd(12)


class TestCofibrantReplacement:
    def test_already_free_unchanged_in_homology(self):
        free = dga.tensor_algebra([("x", 2)])
        target = dga.dga_of_free(free, 10)
        rep, report = dga.cofibrant_replacement(target, 8)
        assert report.ok
        assert [d for _n, d in report.generators][:1] == [2]

    @pytest.mark.parametrize("n", [2, 3])
    def test_truncated_polynomial(self, n):
        a = dga.truncated_polynomial_dga(n)
        rep, report = dga.cofibrant_replacement(a, 2 * n + 4)
        assert report.ok, report.quasi_iso
        degs = sorted(d for _n2, d in report.generators)
        assert degs[0] == n and degs[1] == 2 * n + 1
        ind = dga.indecomposables(rep.dga)
        h = ind.homology(2 * n + 1)
        assert not h.is_trivial()

    def test_first_attachment_has_square_boundary(self):
        a = dga.truncated_polynomial_dga(2)
        rep, report = dga.cofibrant_replacement(a, 8)
        name5 = next(nm for nm, d in report.generators if d == 5)
        assert rep.dga.diff[name5] == {(report.generators[0][0],) * 2: 1}


class TestIndecomposables:
    def test_single_generator(self):
        t = dga.tensor_algebra([("x", 4)])
        ind = dga.indecomposables(t)
        assert ind.rank(4) == 1 and str(ind.homology(4)) == "Z"

    def test_quadratic_terms_dropped(self):
        t = dga.tensor_algebra([("x", 2), ("y", 5)], {"y": {("x", "x"): 1}})
        ind = dga.indecomposables(t)
        assert str(ind.homology(2)) == "Z"
        assert str(ind.homology(5)) == "Z"


class TestTower:
    def test_single_generator_ranks(self):
        t = dga.tensor_algebra([("x", 2)])
        stages = dga.tower(t, 2, 8)
        assert stages[0].ranks[2] == 1 and stages[0].ranks[4] == 0
        assert stages[1].ranks[4] == 1

    def test_fibers_and_stabilization(self):
        for t in (dga.tensor_algebra([("x", 2)]),
                  dga.tensor_algebra([("x", 2), ("y", 5)], {"y": {("x", "x"): 1}})):
            assert dga.tower_checks(t, 4, 12) == []

    def test_t0_is_reduced_zero(self):
        t = dga.tensor_algebra([("x", 2)])
        stage1 = dga.tower(t, 1, 6)[0]
        assert all(len(w) == 1 for d in stage1.fiber_basis
                   for w in stage1.fiber_basis[d])


class TestSimplicial:
    def test_sphere_chain(self):
        s2 = sx.sphere_ssx(2)
        ok, fails = s2.validate()
        assert ok, fails
        ch = s2.chains()
        assert [ch.rank(d) for d in (0, 1, 2)] == [1, 0, 1]
        red = s2.reduced_chains()
        assert red.rank(0) == 0

    def test_delta2(self):
        d = sx.standard_simplex2()
        ok, fails = d.validate()
        assert ok, fails
        ch = d.chains()
        assert [ch.rank(k) for k in (0, 1, 2)] == [3, 3, 1]
        assert str(ch.homology(0)) == "Z"
        assert str(ch.homology(1)) == "0"

    def test_point(self):
        p = sx.sphere_ssx(0)
        ch = p.chains()
        assert ch.rank(0) == 1
        assert p.reduced_chains().rank(0) == 0

    def test_identity_violation_detected(self):
        # wrong face dimension
        x = sx.SimplicialSetFinite("bad")
        x.add("v", 0)
        x.add("e", 1, ("v", "v"))
        x.add("t", 2, ("v", "e", "e"))
        ok, fails = x.validate()
        assert not ok and any("dimension" in m for m in fails)
        # d.d != 0 through an unbalanced face assignment
        y = sx.SimplicialSetFinite("bad2")
        y.add("v", 0)
        y.add("w", 0)
        y.add("e", 1, ("w", "v"))
        y.add("t", 2, ("e", sx.Degenerate("v"), sx.Degenerate("v")))
        ok2, fails2 = y.validate()
        assert not ok2 and any("d.d" in m for m in fails2)


class TestJames:
    def test_s2(self):
        ch = sx.sphere_ssx(2).reduced_chains()
        rep = dga.james_compare(ch.bases, ch.diff, 8)
        assert rep.ok
        for d in (0, 2, 4, 6, 8):
            assert str(rep.degrees[d][0]) == "Z"
        for d in (1, 3, 5, 7):
            assert rep.degrees[d][0].is_trivial()

    def test_wedge(self):
        ch = sx.wedge_spheres([2, 3]).reduced_chains()
        rep = dga.james_compare(ch.bases, ch.diff, 6)
        assert rep.ok
        assert rep.degrees[5][0].free_rank == 2

    def test_point(self):
        ch = sx.sphere_ssx(0).reduced_chains()
        rep = dga.james_compare(ch.bases, ch.diff, 4)
        assert rep.ok and str(rep.degrees[0][0]) == "Z"

    def test_nonreduced_rejected(self):
        x = sx.standard_simplex2()
        with pytest.raises(DomainError):
            dga.james_compare(x.chains().bases, x.chains().diff, 4)

    def test_nonzero_differential_euler(self):
        # a 1-reduced complex with d != 0: generators in degrees 2 and 3
        bases = {2: ["a"], 3: ["b"]}
        diff = {3: [[2]]}   # d(b) = 2a
        rep = dga.james_compare(bases, diff, 6)
        assert rep.euler_agree
        assert rep.ok  # the word-length splitting is exact over Z


class TestFromCategory:
    def test_single_cell(self):
        from crx import enriched as en

        cat = en.EnrichedPresentation("T", en.TENSOR, ["0"])
        cat.add_cell2("x", "0", "0", (), base=())
        t = dga.from_one_reduced_category(cat)
        assert t.gen_degree["x"] == 2 and t.diff["x"] == {}

    def test_boundary_translated(self):
        from crx import enriched as en

        cat = en.EnrichedPresentation("T", en.TENSOR, ["0"])
        cat.add_cell2("x", "0", "0", (), base=())
        cat.add_cell("y", "0", "0", 5, ((("x", "x"), 1, ()),), ())
        t = dga.from_one_reduced_category(cat)
        assert t.diff["y"] == {("x", "x"): 1}

    def test_hypothesis_violations_named(self):
        from crx import enriched as en

        cat = en.EnrichedPresentation("bad", en.TENSOR, ["0", "1"])
        with pytest.raises(DomainError):
            dga.from_one_reduced_category(cat)
        cat2 = en.EnrichedPresentation("bad2", en.TENSOR, ["0"])
        cat2.add_cell0("c", "0", "0")
        with pytest.raises(DomainError) as exc:
            dga.from_one_reduced_category(cat2)
        assert "c" in str(exc.value)

    def test_monomial_quotient(self):
        q = dga.monomial_quotient_dga([("x", 2)], {}, [("x", "x")], 8)
        assert q.rank(2) == 1 and q.rank(4) == 0
        assert str(q.homology(2).group) == "Z"
