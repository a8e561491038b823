"""Acceptance suite: one test per criterion, a printed pass/fail line each.

Every tolerance is exact (integer equality, presentation isomorphism, or a
stated verdict); nothing is deferred to calibration.  Criterion 10's first
clause (strong-retract data on j_n for n >= 2) is implemented faithfully and
fails honestly: the cartesian cylinder's interchange square makes such data
impossible for disks with cells above degree 1 (the failure message carries
the argument); j_1 passes, and the transport and homotopy-invariance clauses
pass.
"""

import random
from pathlib import Path

import pytest

from crx import complex as cx
from crx import dga
from crx import enriched as en
from crx import formats
from crx import invariants as inv
from crx import lifting as lf
from crx import monoidal as mo
from crx import simplicial as sx
from crx import strictify as st
from crx.complex import CrxMorphism, Verdict, validate
from crx.enriched import CellImage
from crx.intmat import AbelianGroup
from crx.words import ActionedTerm, CrxWord, PathWord

CORPUS = Path(__file__).resolve().parent.parent / "src" / "crx" / "corpus"


def _line(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {num:>2} {name:<42} {status}{suffix}")
    return ok


def sphere_disk_inclusion(m):
    s, d = cx.sphere(m - 1), cx.disk(m)
    gm = {}
    if s.gens_of(m - 1):
        gm[(m - 1, "s")] = cx.gen_word(d, m - 1, "u")
    return CrxMorphism(s, d, {"p": "p" if m != 1 else "0"}, gm, name=f"i{m}")


def disk_trivial_cof(k):
    d = cx.disk(k)
    return CrxMorphism(cx.point(), d, {"p": d.objects[0]}, {}, name=f"j{k}")


def test_criterion_1_tensor_square():
    res = mo.collapse(cx.disk(1), cx.disk(1))
    p = res.tensor.presentation
    ok = len(p.gens_of(1)) == 4 and len(p.gens_of(2)) == 1
    (sq,) = p.gens_of(2)
    ok = ok and sq.boundary.path.letters == (
        ("l_x_0", 1), ("1_x_l", 1), ("l_x_1", -1), ("0_x_l", -1))
    ok = ok and res.killed == ["l_x_l"]
    assert _line(1, "tensor interval square", ok)


def test_criterion_2_globe_pushouts():
    ok = True
    for n in range(1, 7):
        gprev, dn = cx.globe(n - 1), cx.disk(n)
        res = cx.pushout(cx.point_inclusion(gprev, gprev.objects[0]),
                         cx.point_inclusion(dn, dn.objects[0]))
        iso = cx.find_isomorphism(res.presentation, cx.globe(n))
        ok = ok and iso is not None
    assert _line(2, "globe pushout tower (n = 1..6)", ok)


def test_criterion_3_pushout_products():
    ok = True
    details = []
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            pp = mo.pushout_product(sphere_disk_inclusion(m),
                                    sphere_disk_inclusion(n), "cartesian")
            if pp.verdict is not Verdict.EQUAL:
                ok = False
                details.append(f"(i{m},i{n}): {pp.verdict.value}")
    for m in (2, 3, 4):
        for k in (2, 3, 4):
            pp = mo.pushout_product(sphere_disk_inclusion(m),
                                    disk_trivial_cof(k), "cartesian")
            if pp.verdict is not Verdict.EQUAL:
                ok = False
                details.append(f"(i{m},j{k}): {pp.verdict.value}")
    pp11 = mo.pushout_product(sphere_disk_inclusion(1), sphere_disk_inclusion(1),
                              "cartesian")
    if pp11.verdict is not Verdict.NOT_EQUAL:
        ok = False
        details.append("(i1,i1) should not be an isomorphism")
    assert _line(3, "cartesian pushout-product corners", ok, "; ".join(details))


def test_criterion_4_interval_retraction():
    ok = True
    for flavor in (en.TENSOR, en.CARTESIAN):
        comp = lf.interval_inclusion(flavor).compose(lf.interval_collapse(flavor))
        ident = en.EnrichedFunctor.identity(en.interval(flavor))
        for nm in ("f", "g", "l1", "l2"):
            a, b = comp.cell_map[nm], ident.cell_map[nm]
            ok = ok and (a.chain, a.path, a.terms) == (b.chain, b.path, b.terms)
    assert _line(4, "interval retraction, both flavors", ok)


def test_criterion_5_covering_example():
    up, down, F = lf.covering_pair()
    diag = lf.fibration_diagnostics(F)
    ok = diag.local_fibration is Verdict.EQUAL
    ok = ok and diag.isofibration is Verdict.EQUAL
    interval = en.interval()
    bottom = en.EnrichedFunctor(
        interval, down, {"0": "0", "1": "1"},
        {"f": CellImage.of_symbol(0, ("pt", "0", "1")),
         "g": CellImage.of_symbol(0, ("pt", "1", "0")),
         "l1": CellImage.of_symbol(1, ("grp", 1)),
         "l2": CellImage.of_symbol(1, ("grp", 1))},
        name="bottom")
    unitf = lf.unit_into_interval()
    top = en.EnrichedFunctor(unitf.source, up, {"0": "0"}, {}, name="top")
    out1 = lf.search_lift(lf.LiftingSquare(i=unitf, f=F, top=top, bottom=bottom))
    ok = ok and out1.status == "refuted" and "automorphism preimage" in out1.obstruction
    th = lf.theta()
    topt = en.EnrichedFunctor(
        en.istar(), up, {"0": "0"},
        {"k": CellImage.of_symbol(0, ("idx", "0", 0)),
         "h1": CellImage.of_symbol(1, ("arr", "0", 0, 0)),
         "h2": CellImage.of_symbol(1, ("arr", "0", 0, 0))}, name="top")
    it = en.itilde()
    bottom_cells = {}
    for nm, cell in it.cells.items():
        if cell.dom != cell.cod:
            bottom_cells[nm] = CellImage.of_symbol(cell.degree,
                                                   ("pt", cell.dom, cell.cod))
        elif cell.degree == 0:
            bottom_cells[nm] = CellImage.of_symbol(0, ("unit", cell.dom))
        elif cell.degree == 1:
            val = {"l1": 1, "l2": 1, "a": -1, "b": -2}.get(nm, 0)
            bottom_cells[nm] = CellImage.of_symbol(1, ("grp", val))
        else:
            bottom_cells[nm] = CellImage.of_symbol(2, ("triv", cell.dom, cell.cod))
    bottomt = en.EnrichedFunctor(it, down, {"0": "0", "1": "1"}, bottom_cells,
                                 name="bottom-theta")
    out2 = lf.search_lift(lf.LiftingSquare(i=th, f=F, top=topt, bottom=bottomt))
    ok = ok and out2.status == "refuted" and "automorphism preimage" in out2.obstruction
    assert _line(5, "covering example end-to-end", ok)


def test_criterion_6_strictification():
    ok = True
    details = []
    for c in (cx.point(), cx.disk(1), cx.sphere(2), cx.globe(2)):
        res = st.stglo(en.suspension(c, en.TENSOR))
        sx_cat = en.suspension(c, en.CARTESIAN)
        if list(res.output.cells) != list(sx_cat.cells) or \
                res.output.flavor != en.CARTESIAN:
            ok = False
            details.append(f"suspension law fails for {c.name}")
        rh = en.realize_hom(res.output, "0", "1", 4, 4)
        if cx.find_isomorphism(rh.presentation, c) is None:
            ok = False
            details.append(f"suspension hom of {c.name} not the input")
    res = st.stglo(en.p11())
    rh = en.realize_hom(res.output, "0", "2", 4, 4)
    cp = mo.cartesian(cx.disk(1), cx.disk(1))
    if cx.find_isomorphism(rh.presentation, cp.presentation) is None:
        ok = False
        details.append("stglo(P11)[0,2] is not D1 x D1")
    corpus_cats = [en.p11(), en.interval(), en.istar(),
                   en.suspension(cx.sphere(2), en.TENSOR),
                   en.suspension(cx.globe(2), en.TENSOR), en.one_object_unit()]
    for cat in corpus_cats:
        rep = st.stglo_agreement(cat, max_len=4, max_deg=3)
        for a in rep:
            if a.verdict is Verdict.NOT_EQUAL:
                ok = False
                details.append(f"dual-path disagreement in {cat.name} at {a.hom}")
    full = st.stglo_agreement(en.suspension(cx.sphere(2), en.TENSOR),
                              max_len=4, max_deg=3)
    if not all(a.verdict is Verdict.EQUAL for a in full):
        ok = False
        details.append("suspension agreement not fully decided")
    assert _line(6, "strictification and dual-path oracle", ok, "; ".join(details))


def test_criterion_7_towers():
    ok = True
    t1 = dga.tensor_algebra([("x", 2)])
    two_gen_cat = en.EnrichedPresentation("E", en.TENSOR, ["0"])
    two_gen_cat.add_cell2("x", "0", "0", (), base=())
    two_gen_cat.add_cell("y", "0", "0", 5, ((("x", "x"), 1, ()),), ())
    t2 = dga.from_one_reduced_category(two_gen_cat)
    for t in (t1, t2):
        fails = dga.tower_checks(t, 4, 12)
        if fails:
            ok = False
    assert _line(7, "tower fibers and stabilization (k <= 4, N = 12)", ok)


def test_criterion_8_cofibrant_replacement():
    ok = True
    details = []
    for n in (2, 3):
        a = dga.truncated_polynomial_dga(n)
        rep, report = dga.cofibrant_replacement(a, 2 * n + 4)
        if not report.ok:
            ok = False
            details.append(f"n={n}: quasi-iso fails {report.quasi_iso}")
        ind = dga.indecomposables(rep.dga)
        cls = ind.homology(2 * n + 1)
        if cls.is_trivial():
            ok = False
            details.append(f"n={n}: no class in degree {2 * n + 1}")
        for d in range(2, 2 * n + 1):
            if d != n and not ind.homology(d).is_trivial():
                ok = False
                details.append(f"n={n}: stray class in degree {d}")
    assert _line(8, "truncated-polynomial replacement (n = 2, 3)", ok,
                 "; ".join(details))


def test_criterion_9_james():
    ch = sx.sphere_ssx(2).reduced_chains()
    rep = dga.james_compare(ch.bases, ch.diff, 8)
    ok = rep.ok
    for d in range(9):
        want = AbelianGroup(1) if d % 2 == 0 else AbelianGroup(0)
        ok = ok and rep.degrees[d][0] == want and rep.degrees[d][1] == want
    chw = sx.wedge_spheres([2, 3]).reduced_chains()
    repw = dga.james_compare(chw.bases, chw.diff, 6)
    ok = ok and repw.ok
    t = dga.tensor_algebra([("a", 2), ("b", 3)])
    for d in range(7):
        want_rank = len(t.basis(d))
        ok = ok and repw.degrees[d][0] == AbelianGroup(want_rank)
    assert _line(9, "loop-space homology comparison", ok)


def test_criterion_10a_straightline_retracts():
    results = {}
    for n in range(1, 6):
        i, r, h = mo.straightline_retract(n)
        v = mo.verify_strong_retract(i, r, h)
        results[n] = v.ok
    ok = all(results.values())
    _line(10, "strong retracts on j_n, n <= 5", ok,
          "; ".join(f"j{n}: {'pass' if good else 'FAIL'}"
                    for n, good in results.items()))
    assert ok, (
        "strong J1-retract data cannot exist on the n-disk for n >= 2: any "
        "candidate homotopy h must preserve the cartesian cylinder's "
        "interchange square (l, id);(id_1, u) = (id_0, u);(l, id), which "
        "forces w;u = w with w = h(l, id) in the free groupoid C1(D^n), "
        "impossible since u is a free generator (u dies in pi1 but not in "
        f"C1).  Exhaustive search confirms zero solutions.  Per-disk: {results}"
    )


def test_criterion_10b_transport_reverifies():
    rng = random.Random(20260808)
    families = [
        lambda: (cx.point(), "p"), lambda: (cx.disk(1), None),
        lambda: (cx.globe(2), None), lambda: (cx.sphere(2), "p"),
        lambda: (cx.disk(2), "p"), lambda: (cx.globe(1), None),
    ]
    ok = True
    count = 0
    while count < 10:
        target, obj = families[rng.randrange(len(families))]()
        if obj is None:
            obj = target.objects[rng.randrange(len(target.objects))]
        i, r, h = mo.straightline_retract(1)
        f = CrxMorphism(cx.point(), target, {"p": obj}, {}, name="f")
        i2, r2, h2, _po = mo.transport_retract_along_pushout(i, r, h, f)
        v = mo.verify_strong_retract(i2, r2, h2)
        ok = ok and v.ok
        count += 1
    _line(10, "transport along 10 randomized pushouts", ok)
    assert ok


def test_criterion_10c_psi_agreement():
    ok = True
    for c in (cx.sphere(2), cx.sphere(3), cx.disk(2), cx.globe(2)):
        cyl = mo.cylinder(c)
        ident = CrxMorphism.identity(c)
        h = mo.J1Homotopy(domain=c, codomain=c, cyl=cyl, carrier=cyl.proj)
        good, fails = mo.j1_pi_agreement(ident, ident, h)
        ok = ok and good
    i, r, h = mo.straightline_retract(1)
    good, fails = mo.j1_pi_agreement(r.compose(i), CrxMorphism.identity(i.target),
                                     h)
    ok = ok and good
    _line(10, "pi_n agreement under verified homotopies", ok)
    assert ok


def test_criterion_11a_validator_mutations():
    ok = True
    details = []

    def fails_on(axiom, build):
        pres = build()
        rep = validate(pres)
        by = {c.axiom: c for c in rep.checks}
        return not by[axiom].ok

    def bad_typing():
        c = cx.CrxPresentation("m1", objects=("p",))
        c.add_gen1("u", "p", "q")        # unknown object
        return c

    def bad_loop():
        c = cx.CrxPresentation("m2", objects=("0", "1"))
        c.add_gen1("l", "0", "1")
        c.add_gen("v", 2, "0", CrxWord.of_path(PathWord((("l", 1),), "0", "1")))
        return c

    def bad_ddzero():
        c = cx.disk(2)
        c.add_gen("w", 3, "p",
                  CrxWord.of_terms(2, [ActionedTerm("v", 2, PathWord.identity("p"))],
                                   "p"))
        return c

    def bad_action():
        c = cx.disk(2)
        c.add_relation(2, cx.gen_word(c, 2, "v"), CrxWord.identity(2, "p"))
        return c

    def bad_abelian():
        c = cx.CrxPresentation("m5", objects=("p",))
        for nm in ("a", "b", "c1", "c2"):
            c.add_gen(nm, 3, "p", CrxWord.identity(2, "p"))
        t = lambda nm: ActionedTerm(nm, 1, PathWord.identity("p"))
        c.add_relation(3, CrxWord.of_terms(3, [t("a"), t("b")], "p"),
                       CrxWord.of_terms(3, [t("c1")], "p"))
        c.add_relation(3, CrxWord.of_terms(3, [t("b"), t("a")], "p"),
                       CrxWord.of_terms(3, [t("c2")], "p"))
        return c

    mutations = [
        ("typing", bad_typing), ("loop-delta2", bad_loop),
        ("dd-zero", bad_ddzero), ("action-compat", bad_action),
        ("abelian-above-2", bad_abelian),
    ]
    for axiom, build in mutations:
        if not fails_on(axiom, build):
            ok = False
            details.append(f"{axiom} violation not detected")
    # and the clean controls still pass
    for mk in (lambda: cx.disk(2), lambda: cx.globe(3)):
        if not validate(mk()).ok:
            ok = False
            details.append("clean control failed validation")
    _line(11, "validator mutation testing", ok, "; ".join(details))
    assert ok


def test_criterion_11b_snf_postconditions():
    from crx import intmat

    rng = random.Random(11)
    ok = True
    for _ in range(1000):
        rows = rng.randint(0, 8)
        cols = rng.randint(0, 8)
        m = [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        snf = intmat.smith_normal_form(m)
        if intmat.mul(intmat.mul(snf.u, m), snf.v) != snf.d:
            ok = False
            break
        if rows and cols:
            if abs(intmat.det_sign_unimodular(snf.u)) != 1 or \
                    abs(intmat.det_sign_unimodular(snf.v)) != 1:
                ok = False
                break
        diag = snf.diagonal()
        for i in range(len(diag) - 1):
            if diag[i] < 0 or (diag[i] == 0 and diag[i + 1] != 0):
                ok = False
            if diag[i] and diag[i + 1] and diag[i + 1] % diag[i]:
                ok = False
        for i in range(rows):
            for j in range(cols):
                if i != j and snf.d[i][j]:
                    ok = False
    _line(11, "SNF postconditions on 1000 random matrices", ok)
    assert ok


def test_criterion_11c_roundtrip_corpus():
    ok = True
    for path in sorted(CORPUS.iterdir()):
        text = path.read_text()
        if path.suffix == ".crx":
            cf = formats.parse_crx(text)
            for pres in cf.presentations.values():
                again = formats.emit_crx(pres)
                ok = ok and formats.emit_crx(formats.parse_crx(again).only()) == again
        elif path.suffix == ".encat":
            cats, funs = formats.parse_encat(text)
            again = "".join(formats.emit_encat(c) for c in cats.values())
            again += "".join(formats.emit_enfun(f) for f in funs.values())
            cats2, funs2 = formats.parse_encat(again)
            again2 = "".join(formats.emit_encat(c) for c in cats2.values())
            again2 += "".join(formats.emit_enfun(f) for f in funs2.values())
            ok = ok and again == again2
        elif path.suffix == ".dga":
            d = formats.parse_dga_file(text)
            again = formats.emit_dga_file(d)
            ok = ok and formats.emit_dga_file(formats.parse_dga_file(again)) == again
        elif path.suffix == ".ssx":
            x = formats.parse_ssx(text)
            again = formats.emit_ssx(x)
            ok = ok and formats.emit_ssx(formats.parse_ssx(again)) == again
    _line(11, "parse/emit round-trip on the corpus", ok)
    assert ok
