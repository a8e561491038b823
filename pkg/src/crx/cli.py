"""Command-line surface.

Verbs: validate, tensor, product, collapse, kernel, pi, homology, weq,
truncation, encat, strictify, lift, diagnose, dga, james.  Exit codes:
0 all-pass, 1 any definite failure, 2 usage or parse error, 3 undecided-only.
CRX_BOUND overrides the default degree bound; --format json emits the
versioned report schema.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import complex as cx
from . import dga as dgamod
from . import enriched as en
from . import formats, invariants, lifting, monoidal, strictify
from .complex import Verdict
from .report import EXIT_USAGE, Report
from .words import DomainError


def _bound_default() -> int:
    env = os.environ.get("CRX_BOUND")
    return int(env) if env else 10


def _emit(report: Report, fmt: str) -> int:
    print(report.to_json() if fmt == "json" else report.to_text())
    return report.exit_code


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_crx(path: str) -> formats.CrxFile:
    return formats.parse_crx(_read(path))


def _verdict_check(report: Report, name: str, v: Verdict, location: str = "",
                   detail: str = "") -> None:
    if v is Verdict.EQUAL:
        report.ok(name, location, detail)
    elif v is Verdict.NOT_EQUAL:
        report.fail(name, location, detail)
    else:
        report.undecided(name, location, detail)


# -- verb implementations ------------------------------------------------------------


def cmd_validate(args) -> int:
    report = Report("validate")
    cf = _load_crx(args.file)
    for name, pres in cf.presentations.items():
        rep = cx.validate(pres)
        for check in rep.checks:
            if not check.ok:
                report.fail(check.axiom, name, "; ".join(check.diagnostics[:3]))
            elif check.obligations:
                report.undecided(check.axiom, name,
                                 "; ".join(check.obligations[:3]))
            else:
                report.ok(check.axiom, name)
    for name, mor in cf.morphisms.items():
        ok, fails, obl = mor.check()
        if not ok:
            report.fail("morphism", name, "; ".join(fails[:3]))
        elif obl:
            report.undecided("morphism", name, "; ".join(obl[:3]))
        else:
            report.ok("morphism", name)
    return _emit(report, args.format)


def _binary_product(args, flavor: str, verb: str) -> int:
    report = Report(verb)
    report.bounds["degree"] = args.bound
    a = _load_crx(args.left).only()
    b = _load_crx(args.right).only()
    build = monoidal.tensor if flavor == "tensor" else monoidal.cartesian
    prod = build(a, b, bound=args.bound)
    rep = cx.validate(prod.presentation)
    report.add("output-validates", "pass" if rep.ok else "fail",
               prod.presentation.name, "; ".join(rep.failures()[:3]))
    report.data["generator-counts"] = prod.presentation.gen_counts()
    text = formats.emit_crx(prod.presentation)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        report.data["output"] = args.output
    else:
        report.data["crx"] = text
    return _emit(report, args.format)


def cmd_tensor(args) -> int:
    return _binary_product(args, "tensor", "tensor")


def cmd_product(args) -> int:
    return _binary_product(args, "cartesian", "product")


def cmd_collapse(args) -> int:
    report = Report("collapse")
    report.bounds["degree"] = args.bound
    a = _load_crx(args.left).only()
    b = _load_crx(args.right).only()
    res = monoidal.collapse(a, b, bound=args.bound)
    ok, fails, obl = res.morphism.check()
    if ok and not obl:
        report.ok("collapse-is-morphism")
    elif ok:
        report.undecided("collapse-is-morphism", detail="; ".join(obl[:3]))
    else:
        report.fail("collapse-is-morphism", detail="; ".join(fails[:3]))
    report.data["killed"] = res.killed
    if args.output:
        Path(args.output).write_text(
            formats.emit_crx(res.cartesian.presentation), encoding="utf-8")
        report.data["output"] = args.output
    return _emit(report, args.format)


def cmd_kernel(args) -> int:
    report = Report("kernel")
    report.bounds["degree"] = args.degree
    a = _load_crx(args.left).only()
    b = _load_crx(args.right).only()
    try:
        words = monoidal.kernel_generators(a, b, args.degree, bound=args.bound)
    except monoidal.TruncationError as exc:
        report.fail("kernel", detail=str(exc))
        return _emit(report, args.format)
    report.data["generators"] = [str(w) for w in words]
    report.ok("kernel", detail=f"{len(words)} generators in degree {args.degree}")
    return _emit(report, args.format)


def cmd_pi(args) -> int:
    report = Report("pi")
    report.bounds["bound"] = args.bound
    pres = _load_crx(args.file).only()
    base = args.basepoint or (pres.objects[0] if pres.objects else None)
    if base is None:
        report.fail("pi", detail="empty complex has no basepoint")
        return _emit(report, args.format)
    if args.degree == 0:
        comps = invariants.pi0(pres)
        report.data["pi0"] = [sorted(c) for c in comps]
        report.ok("pi0", detail=f"{len(comps)} components")
    elif args.degree == 1:
        r = invariants.pi1(pres, base, budget=args.budget)
        report.data["tag"] = r.tag
        report.data["abelianization"] = str(r.abelianization)
        if r.tag == "undecided":
            report.undecided("pi1", base, "Tietze budget exhausted")
        else:
            report.ok("pi1", base,
                      f"{r.tag}" + (f" rank {len(r.presentation.generators)}"
                                    if r.tag == "free" else ""))
    else:
        r = invariants.pi_n(pres, base, args.degree, budget=args.budget)
        if r.decided:
            report.data[f"pi{args.degree}"] = str(r.group)
            report.ok(f"pi{args.degree}", base, str(r.group))
        else:
            report.undecided(f"pi{args.degree}", base, r.reason)
    return _emit(report, args.format)


def cmd_homology(args) -> int:
    report = Report("homology")
    report.bounds["bound"] = args.bound
    path = args.file
    degrees = range(0, args.bound + 1) if args.degree is None else [args.degree]
    if path.endswith(".ssx"):
        x = formats.parse_ssx(_read(path))
        ok, fails = x.validate()
        if not ok:
            report.fail("simplicial-identities", path, "; ".join(fails[:3]))
            return _emit(report, args.format)
        ch = x.chains()
        for d in degrees:
            report.data[f"H{d}"] = str(ch.homology(d))
        report.ok("homology", path)
    elif path.endswith(".dga"):
        df = formats.parse_dga_file(_read(path))
        if df.is_free:
            a = df.free()
            for d in degrees:
                report.data[f"H{d}"] = str(a.homology(d))
        else:
            q = df.quotient(args.bound + 1)
            for d in degrees:
                report.data[f"H{d}"] = str(q.homology(d).group)
        report.ok("homology", path)
    else:
        pres = _load_crx(path).only()
        base = args.basepoint or (pres.objects[0] if pres.objects else None)
        for d in degrees:
            if d == 0:
                report.data["H0"] = f"Z^{len(invariants.pi0(pres))}"
                continue
            if d == 1:
                r = invariants.pi1(pres, base, budget=args.budget)
                report.data["H1"] = str(r.abelianization)
                continue
            r = invariants.pi_n(pres, base, d, budget=args.budget)
            report.data[f"H{d}"] = str(r.group) if r.decided else "undecided"
        report.ok("homology", path)
    return _emit(report, args.format)


def cmd_weq(args) -> int:
    report = Report("weq")
    report.bounds["bound"] = args.bound
    if args.collapse:
        a = _load_crx(args.collapse[0]).only()
        b = _load_crx(args.collapse[1]).only()
        mor = monoidal.collapse(a, b, bound=args.bound).morphism
    else:
        cf = _load_crx(args.file)
        if args.name:
            mor = cf.morphisms[args.name]
        elif len(cf.morphisms) == 1:
            mor = next(iter(cf.morphisms.values()))
        else:
            report.fail("weq", detail="no morphism selected (use --name)")
            return _emit(report, args.format)
    rep = invariants.is_weak_equivalence(mor, bound=args.bound)
    _verdict_check(report, "weak-equivalence", rep.verdict, mor.name, rep.witness)
    report.data["details"] = rep.details
    return _emit(report, args.format)


def cmd_truncation(args) -> int:
    report = Report("truncation")
    report.bounds["bound"] = args.bound
    pres = _load_crx(args.file).only()
    rep = invariants.truncation_connectivity(pres, args.degree, bound=args.bound)
    names = {Verdict.EQUAL: "yes", Verdict.NOT_EQUAL: "no",
             Verdict.UNDECIDED: "undecided"}
    report.data[f"{args.degree}-truncated"] = names[rep.truncated]
    report.data[f"{args.degree}-connected"] = names[rep.connected]
    if rep.notes:
        report.data["notes"] = rep.notes
    for flag, v in (("truncated", rep.truncated), ("connected", rep.connected)):
        if v is Verdict.UNDECIDED:
            report.undecided(flag, detail="; ".join(rep.notes))
        else:
            report.ok(flag, detail=names[v])
    return _emit(report, args.format)


def _load_encat(path: str):
    return formats.parse_encat(_read(path))


def cmd_encat(args) -> int:
    report = Report(f"encat {args.action}")
    cats, funs = _load_encat(args.file)
    cache = lifting.HomCache(max_len=args.word_bound, max_deg=args.bound)
    if args.action == "validate":
        for name, cat in cats.items():
            try:
                for c in cat.cells.values():
                    if not cat.chain_composable((c.name,)):
                        raise DomainError(f"cell {c.name} malformed")
                report.ok("cells", name, f"{len(cat.cells)} cells")
            except DomainError as exc:
                report.fail("cells", name, str(exc))
        for name, fun in funs.items():
            ok, fails, obl = lifting.functor_check(fun, cache)
            if not ok:
                report.fail("functor", name, "; ".join(fails[:3]))
            elif obl:
                report.undecided("functor", name, "; ".join(obl[:3]))
            else:
                report.ok("functor", name)
    elif args.action == "ho":
        for name, cat in cats.items():
            ho = lifting.ho_category(cat, cache)
            report.data[name] = {
                f"{x}->{y}": cls for (x, y), cls in ho.hom_classes.items() if cls
            }
            report.data[f"{name}-isos"] = sorted(ho.iso_pairs())
            report.ok("ho", name)
    elif args.action == "ho21":
        for name, cat in cats.items():
            res = lifting.ho21(cat, cache)
            report.data[name] = {
                f"{x}->{y}": f"{h.kind}" + (f":{h.detail}" if h.detail else "")
                for (x, y), h in res.homs.items()
            }
            report.ok("ho21", name)
    elif args.action == "diagnose":
        return _diagnose(args, report, cats, funs, cache)
    elif args.action == "lift":
        return _lift(args, report, cats, funs, cache)
    else:
        report.fail("encat", detail=f"unknown action {args.action}")
    return _emit(report, args.format)


def _pick_functor(args, funs, report) -> Optional[object]:
    if getattr(args, "name", None):
        if args.name not in funs:
            report.fail("functor", detail=f"no functor named {args.name}")
            return None
        return funs[args.name]
    if len(funs) == 1:
        return next(iter(funs.values()))
    report.fail("functor", detail="no functor selected (use --name)")
    return None


def _diagnose(args, report, cats, funs, cache) -> int:
    fun = _pick_functor(args, funs, report)
    if fun is None:
        return _emit(report, args.format)
    diag = lifting.fibration_diagnostics(fun, cache)
    _verdict_check(report, "local_fibration", diag.local_fibration)
    _verdict_check(report, "isofibration", diag.isofibration)
    _verdict_check(report, "acyclic_fibration", diag.acyclic_fibration)
    _verdict_check(report, "dk_weak_equivalence", diag.dk_weak_equivalence)
    report.data["notes"] = diag.notes
    return _emit(report, args.format)


def _lift(args, report, cats, funs, cache) -> int:
    fun = _pick_functor(args, funs, report)
    if fun is None:
        return _emit(report, args.format)
    against = getattr(args, "against", "unit-interval")
    square = _square_against(fun, against, funs)
    out = lifting.search_lift(square, cache=cache)
    report.data["status"] = out.status
    if out.status == "found":
        report.ok("lift", detail="lift found")
        ok, fails = lifting.verify_lift(square, out.lift, cache)
        report.add("lift-verifies", "pass" if ok else "fail",
                   detail="; ".join(fails[:3]))
    elif out.status == "refuted":
        report.fail("lift", detail=f"Refuted: {out.obstruction}")
    else:
        report.undecided("lift", detail=out.obstruction)
    return _emit(report, args.format)


def _square_against(fun, against: str, funs) -> "lifting.LiftingSquare":
    """Build the canonical test square for a functor whose source has the
    covering shape, against theta or the unit-to-interval inclusion."""
    from .enriched import CellImage

    flavor = "cartesian" if against.endswith("cartesian") else "tensor"
    if against.startswith("theta"):
        i = lifting.theta(en.TENSOR if flavor == "tensor" else en.CARTESIAN)
    else:
        i = lifting.unit_into_interval()
    if "bottom" in funs and "top" in funs:
        return lifting.LiftingSquare(i=i, f=fun, top=funs["top"],
                                     bottom=funs["bottom"])
    # canonical covering square: bottom sends l1 to the generating automorphism
    up, down = fun.source, fun.target
    b = i.target
    top_cells = {}
    for nm, cell in i.source.cells.items():
        if cell.degree == 0:
            top_cells[nm] = CellImage.of_symbol(0, ("idx", "0", 0))
        else:
            top_cells[nm] = CellImage.of_symbol(1, ("arr", "0", 0, 0))
    top = en.EnrichedFunctor(i.source, up,
                             {o: "0" for o in i.source.objects}, top_cells,
                             name="top")
    bottom_cells = {}
    for nm, cell in b.cells.items():
        x, y = cell.dom, cell.cod
        if x != y:
            bottom_cells[nm] = CellImage.of_symbol(cell.degree, ("pt", x, y))
        elif cell.degree == 0:
            bottom_cells[nm] = CellImage.of_symbol(0, ("unit", x))
        elif cell.degree == 1:
            val = {"l1": 1, "l2": 1, "a": -1, "b": -2}.get(nm, 0)
            bottom_cells[nm] = CellImage.of_symbol(1, ("grp", val))
        else:
            bottom_cells[nm] = CellImage.of_symbol(cell.degree, ("triv", x, y))
    bottom = en.EnrichedFunctor(b, down, {o: o for o in b.objects},
                                bottom_cells, name="bottom")
    return lifting.LiftingSquare(i=i, f=fun, top=top, bottom=bottom)


def cmd_strictify(args) -> int:
    report = Report("strictify")
    cats, _funs = _load_encat(args.file)
    name = args.name or next(iter(cats))
    cat = cats[name]
    if cat.flavor != en.TENSOR:
        report.fail("strictify", name, "input must be tensor-flavored")
        return _emit(report, args.format)
    res = strictify.stglo(cat, bound=args.bound, max_len=args.word_bound)
    report.ok("strictify", name, f"{len(res.output.cells)} cells")
    report.data["kernel-log"] = {
        f"{x}->{y}": words for (x, y), words in res.kernel_log.items()
    }
    if args.output:
        Path(args.output).write_text(formats.emit_encat(res.output),
                                     encoding="utf-8")
        report.data["output"] = args.output
    if args.kernel_log:
        import json

        Path(args.kernel_log).write_text(json.dumps(
            {f"{x}->{y}": words for (x, y), words in res.kernel_log.items()},
            indent=2, sort_keys=True), encoding="utf-8")
        report.data["kernel-log-file"] = args.kernel_log
    agreement = strictify.stglo_agreement(cat, max_len=min(args.word_bound, 4),
                                          max_deg=min(args.bound, 3))
    for a in agreement:
        _verdict_check(report, "dual-path-agreement", a.verdict,
                       f"{a.hom[0]}->{a.hom[1]}", "; ".join(a.notes[:2]))
    return _emit(report, args.format)


def cmd_lift(args) -> int:
    report = Report("lift")
    cats, funs = _load_encat(args.square)
    cache = lifting.HomCache(max_len=args.word_bound, max_deg=args.bound)
    args_action = argparse.Namespace(**vars(args))
    args_action.name = args.functor
    fun = _pick_functor(args_action, funs, report)
    if fun is None:
        return _emit(report, args.format)
    square = _square_against(fun, args.against, funs)
    out = lifting.search_lift(square, cache=cache)
    report.data["status"] = out.status
    if out.status == "found":
        report.ok("lift", detail="lift found")
    elif out.status == "refuted":
        report.fail("lift", detail=f"Refuted: {out.obstruction}")
    else:
        report.undecided("lift", detail=out.obstruction)
    return _emit(report, args.format)


def cmd_diagnose(args) -> int:
    report = Report("diagnose")
    cats, funs = _load_encat(args.file)
    cache = lifting.HomCache(max_len=args.word_bound, max_deg=args.bound)
    return _diagnose(args, report, cats, funs, cache)


def cmd_dga(args) -> int:
    report = Report(f"dga {args.action}")
    report.bounds["bound"] = args.bound
    if args.action == "james":
        return _james(args, report)
    df = formats.parse_dga_file(_read(args.file))
    if args.action == "replace":
        target = df.quotient(args.bound + 2) if not df.is_free else \
            dgamod.dga_of_free(df.free(), args.bound + 2)
        rep, rr = dgamod.cofibrant_replacement(target, args.bound)
        report.data["generators"] = rr.generators
        for d, ok in rr.quasi_iso.items():
            report.add(f"quasi-iso-degree-{d}", "pass" if ok else "fail")
        ind = dgamod.indecomposables(rep.dga)
        report.data["indecomposable-homology"] = {
            d: str(ind.homology(d)) for d in range(2, args.bound + 1)
            if not ind.homology(d).is_trivial()
        }
    elif args.action == "indec":
        if not df.is_free:
            report.fail("indec", detail="indecomposables need a free dga")
            return _emit(report, args.format)
        a = df.free()
        ind = dgamod.indecomposables(a)
        report.data["ranks"] = {d: ind.rank(d) for d in sorted(ind.bases) if ind.rank(d)}
        report.data["homology"] = {
            d: str(ind.homology(d)) for d in sorted(ind.bases) if ind.rank(d)
        }
        report.ok("indec")
    elif args.action == "tower":
        if not df.is_free:
            report.fail("tower", detail="towers need a free dga")
            return _emit(report, args.format)
        a = df.free()
        fails = dgamod.tower_checks(a, args.stages, args.bound)
        if fails:
            for m in fails[:5]:
                report.fail("tower", detail=m)
        else:
            report.ok("tower", detail=f"{args.stages} stages verified to degree {args.bound}")
        stages = dgamod.tower(a, args.stages, args.bound)
        report.data["ranks"] = {s.k: s.ranks for s in stages}
    else:
        report.fail("dga", detail=f"unknown action {args.action}")
    return _emit(report, args.format)


def _james(args, report: Report) -> int:
    x = formats.parse_ssx(_read(args.file if hasattr(args, "file") and args.file
                                else args.input))
    ok, fails = x.validate()
    if not ok:
        report.fail("simplicial-identities", detail="; ".join(fails[:3]))
        return _emit(report, args.format)
    if not x.is_reduced():
        report.fail("reduced", detail="one vertex required")
        return _emit(report, args.format)
    ch = x.reduced_chains()
    try:
        rep = dgamod.james_compare(ch.bases, ch.diff, args.bound)
    except DomainError as exc:
        report.fail("james", detail=str(exc))
        return _emit(report, args.format)
    for d in sorted(rep.degrees):
        left, right = rep.degrees[d]
        report.add(f"degree-{d}", "pass" if rep.equal[d] else "fail",
                   detail=f"T-side {left} vs sum-side {right}")
    report.add("euler", "pass" if rep.euler_agree else "fail")
    return _emit(report, args.format)


def cmd_james(args) -> int:
    report = Report("james")
    report.bounds["bound"] = args.bound
    return _james(args, report)


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="crx",
        description="Exact computational algebra for finitely presented "
                    "crossed complexes and categories enriched in them.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, bound=True):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if bound:
            sp.add_argument("--bound", type=int, default=_bound_default(),
                            help="degree bound")
        sp.add_argument("--word-bound", type=int, default=6,
                        help="composite word-length bound")
        sp.add_argument("--budget", type=int, default=10_000,
                        help="Tietze move budget")

    sp = sub.add_parser("validate", help="validate a .crx file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    for verb, fn in (("tensor", cmd_tensor), ("product", cmd_product)):
        sp = sub.add_parser(verb, help=f"{verb} of two .crx complexes")
        sp.add_argument("left")
        sp.add_argument("right")
        sp.add_argument("-o", "--output")
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("collapse", help="the natural map tensor -> cartesian")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_collapse)

    sp = sub.add_parser("kernel", help="collapse-kernel generators in a degree")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--degree", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_kernel)

    sp = sub.add_parser("pi", help="homotopy groups of a .crx complex")
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--basepoint")
    common(sp)
    sp.set_defaults(func=cmd_pi)

    sp = sub.add_parser("homology", help="homology of .crx/.dga/.ssx input")
    sp.add_argument("file")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--basepoint")
    common(sp)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("weq", help="weak-equivalence check of a morphism")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--name")
    sp.add_argument("--collapse", nargs=2, metavar=("C", "D"))
    common(sp)
    sp.set_defaults(func=cmd_weq)

    sp = sub.add_parser("truncation", help="truncation/connectivity flags")
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_truncation)

    sp = sub.add_parser("encat", help="enriched-category operations")
    sp.add_argument("action", choices=("validate", "ho", "ho21", "diagnose", "lift"))
    sp.add_argument("file")
    sp.add_argument("--name")
    sp.add_argument("--against", default="unit-interval",
                    choices=("theta-tensor", "theta-cartesian", "unit-interval"))
    common(sp, bound=True)
    sp.set_defaults(func=cmd_encat)

    sp = sub.add_parser("strictify", help="global strictification of a tensor .encat")
    sp.add_argument("file")
    sp.add_argument("--name")
    sp.add_argument("-o", "--output")
    sp.add_argument("--kernel-log")
    common(sp)
    sp.set_defaults(func=cmd_strictify)

    sp = sub.add_parser("lift", help="lifting-problem search")
    sp.add_argument("--square", required=True, help=".encat file with the functor")
    sp.add_argument("--against", default="unit-interval",
                    choices=("theta-tensor", "theta-cartesian", "unit-interval"))
    sp.add_argument("--functor")
    common(sp)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("diagnose", help="fibration diagnostics of a functor")
    sp.add_argument("file")
    sp.add_argument("--name")
    common(sp)
    sp.set_defaults(func=cmd_diagnose)

    sp = sub.add_parser("dga", help="dga pipeline")
    sp.add_argument("action", choices=("replace", "indec", "tower", "james"))
    sp.add_argument("file")
    sp.add_argument("--stages", type=int, default=4)
    common(sp)
    sp.set_defaults(func=cmd_dga)

    sp = sub.add_parser("james", help="loop-space homology comparison")
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=cmd_james)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"crx: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except formats.ParseError as exc:
        print(f"crx: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"crx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
