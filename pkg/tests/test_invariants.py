"""pi0 / pi1 / pi_n, weak equivalences, truncation and connectivity."""

from crx import complex as cx
from crx import invariants as inv
from crx.complex import CrxMorphism, Verdict
from crx.words import CrxWord, PathWord


def one_loop_complex():
    c = cx.CrxPresentation("loop", objects=("p",))
    c.add_gen1("g", "p", "p")
    return c


class TestPi0:
    def test_two_points(self):
        s0 = cx.CrxPresentation("twopts", objects=("a", "b"))
        assert len(inv.pi0(s0)) == 2

    def test_disk1(self):
        assert len(inv.pi0(cx.disk(1))) == 1


class TestPi1:
    def test_free_loop_is_Z(self):
        c = one_loop_complex()
        r = inv.pi1(c, "p")
        assert r.tag == "free" and len(r.presentation.generators) == 1
        assert str(r.abelianization) == "Z"

    def test_disks_trivial(self):
        for n in (1, 2, 3, 4):
            d = cx.disk(n)
            r = inv.pi1(d, d.objects[0])
            assert r.is_trivial, f"D{n} pi1 should be trivial"

    def test_disk2_kills_loop(self):
        d2 = cx.disk(2)
        assert inv.pi1(d2, "p").is_trivial


class TestPiN:
    def test_sphere_type(self):
        for k in (2, 3, 4):
            s = cx.sphere(k)
            for n in range(2, 6):
                r = inv.pi_n(s, "p", n)
                assert r.decided
                want = "Z" if n == k else "0"
                assert str(r.group) == want

    def test_disks_trivial(self):
        for n in (2, 3, 4):
            d = cx.disk(n)
            for k in range(2, 6):
                r = inv.pi_n(d, "p", k)
                assert r.decided and r.group.is_trivial()

    def test_coproduct_localizes(self):
        res = cx.coproduct(cx.sphere(2), cx.sphere(3))
        p = res.presentation
        x2 = res.left.obj_map["p"]
        r = inv.pi_n(p, x2, 2)
        assert str(r.group) == "Z"
        r3 = inv.pi_n(p, x2, 3)
        assert r3.group.is_trivial()

    def test_undecided_outside_strata(self):
        c = one_loop_complex()
        c.add_gen("a", 3, "p", CrxWord.identity(2, "p"))
        r = inv.pi_n(c, "p", 3)
        assert not r.decided

    def test_no_higher_data_gives_trivial(self):
        c = one_loop_complex()
        r = inv.pi_n(c, "p", 2)
        assert r.decided and r.group.is_trivial()


class TestWeakEquivalence:
    def test_identity_yes(self):
        for c in (cx.disk(2), cx.sphere(2), cx.globe(2), one_loop_complex()):
            rep = inv.is_weak_equivalence(CrxMorphism.identity(c))
            assert rep.yes, (c.name, rep.witness)

    def test_collapse_of_loop_fails(self):
        # one-loop complex -> point: pi1 Z vs trivial
        c = one_loop_complex()
        pt = cx.point()
        f = CrxMorphism(c, pt, {"p": "p"}, {(1, "g"): CrxWord.of_path(PathWord.identity("p"))})
        rep = inv.is_weak_equivalence(f)
        assert rep.verdict is Verdict.NOT_EQUAL
        assert "degree 1" in rep.witness

    def test_pi0_mismatch(self):
        two = cx.CrxPresentation("two", objects=("a", "b"))
        pt = cx.point()
        f = CrxMorphism(two, pt, {"a": "p", "b": "p"}, {})
        rep = inv.is_weak_equivalence(f)
        assert rep.verdict is Verdict.NOT_EQUAL and "pi0" in rep.witness

    def test_sphere_degree_shift_fails(self):
        s2, s3 = cx.sphere(2), cx.sphere(3)
        f = CrxMorphism(s2, s3, {"p": "p"}, {(2, "s"): CrxWord.identity(2, "p")})
        rep = inv.is_weak_equivalence(f)
        assert rep.verdict is Verdict.NOT_EQUAL

    def test_composition_of_yes_is_yes(self):
        d2 = cx.disk(2)
        f = CrxMorphism.identity(d2)
        g = f.compose(f)
        assert inv.is_weak_equivalence(g).yes


class TestTruncationConnectivity:
    def test_contractible_groupoid(self):
        d1 = cx.disk(1)
        rep = inv.truncation_connectivity(d1, 0, bound=5)
        assert rep.truncated is Verdict.EQUAL
        rep2 = inv.truncation_connectivity(d1, 5, bound=5)
        assert rep2.connected is Verdict.EQUAL

    def test_sphere3(self):
        s3 = cx.sphere(3)
        rep = inv.truncation_connectivity(s3, 3, bound=6)
        assert rep.truncated is Verdict.EQUAL
        rep2 = inv.truncation_connectivity(s3, 2, bound=6)
        assert rep2.connected is Verdict.EQUAL
        rep3 = inv.truncation_connectivity(s3, 3, bound=6)
        assert rep3.connected is Verdict.NOT_EQUAL
        rep4 = inv.truncation_connectivity(s3, 2, bound=6)
        assert rep4.truncated is Verdict.NOT_EQUAL

    def test_one_loop(self):
        c = one_loop_complex()
        rep = inv.truncation_connectivity(c, 1, bound=4)
        assert rep.truncated is Verdict.EQUAL
        rep0 = inv.truncation_connectivity(c, 0, bound=4)
        assert rep0.connected is Verdict.EQUAL
        rep1 = inv.truncation_connectivity(c, 1, bound=4)
        assert rep1.connected is Verdict.NOT_EQUAL
