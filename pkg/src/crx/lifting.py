"""Homotopy categories, fibration diagnostics, and lifting-problem search for
enriched presentations.

Structured homs (the covering-space example's infinite groupoids) are handled
symbolically; cellular homs through their bounded realizations.  Verdicts are
Found / Refuted / NotFoundWithinBounds or decided flags, with Undecided
wherever a bound or an opaque hom blocks a certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import invariants, tietze
from .complex import CrxMorphism, CrxPresentation, Verdict, gen_word
from .enriched import (
    CARTESIAN,
    TENSOR,
    Cell,
    CellImage,
    Chain,
    EnrichedFunctor,
    EnrichedPresentation,
    HomPath,
    RealizedHom,
    StructuredHom,
    StructuredMap,
    interval,
    istar,
    itilde,
    realize_hom,
)
from .words import ActionedTerm, CrxWord, DomainError, PathWord


DEFAULT_LEN = 6
DEFAULT_DEG = 4


# -- realization cache ------------------------------------------------------------


class HomCache:
    """Realization memo; synchronized so concurrent per-hom diagnostics can
    share it (presence of the cache never changes results)."""

    def __init__(self, max_len: int = DEFAULT_LEN, max_deg: int = DEFAULT_DEG):
        import threading

        self.max_len = max_len
        self.max_deg = max_deg
        # the cached presentation is retained so ids cannot be recycled
        self._cache: Dict[Tuple[int, str, str], Tuple[EnrichedPresentation, RealizedHom]] = {}
        self._lock = threading.Lock()

    def get(self, cat: EnrichedPresentation, x: str, y: str) -> RealizedHom:
        key = (id(cat), x, y)
        with self._lock:
            hit = self._cache.get(key)
        if hit is None or hit[0] is not cat:
            hit = (cat, realize_hom(cat, x, y, self.max_len, self.max_deg))
            with self._lock:
                self._cache[key] = hit
        return hit[1]


def hom_word(rh: RealizedHom, img: CellImage) -> Optional[CrxWord]:
    """Convert a chain-level image to a CrxWord of the realized hom."""
    p = rh.presentation
    tok = rh.chain_token
    if img.degree == 0:
        t = tok.get(img.chain)  # type: ignore[arg-type]
        return CrxWord.of_object(t) if t else None
    if img.degree == 1:
        letters = []
        for ch, s in img.path:  # type: ignore[union-attr]
            t = tok.get(ch)
            if t is None or not p.has_gen(1, t):
                return None
            letters.append((t, s))
        if not letters:
            # an identity path: base unknown without context; callers supply it
            return None
        try:
            return CrxWord.of_path(p.path(letters))
        except Exception:
            return None
    base_tok = tok.get(img.base or ())
    if base_tok is None:
        return None
    terms = []
    for ch, e, act in img.terms or ():
        t = tok.get(ch)
        if t is None or not p.has_gen(img.degree, t):
            return None
        letters = []
        ok = True
        for ac, s in act:
            at = tok.get(ac)
            if at is None or not p.has_gen(1, at):
                ok = False
                break
            letters.append((at, s))
        if not ok:
            return None
        try:
            actor = p.path(letters) if letters else PathWord.identity(base_tok)
        except Exception:
            return None
        terms.append(ActionedTerm(t, e, actor))
    try:
        return CrxWord.of_terms(img.degree, terms, base_tok)
    except Exception:
        return None


def functor_check(f: EnrichedFunctor, cache: Optional[HomCache] = None
                  ) -> Tuple[bool, List[str], List[str]]:
    """Endpoint and boundary compatibility of a functor on its cells."""
    cache = cache or HomCache()
    fails: List[str] = []
    obligations: List[str] = []
    for c in f.source.cells.values():
        xy = (f.obj_map[c.dom], f.obj_map[c.cod])
        if xy in f.target.structured:
            continue  # symbolic targets are checked by construction rules
        rh = cache.get(f.target, *xy)
        img = f.cell_map[c.name]
        if c.degree == 0:
            if img.chain is None or rh.chain_token.get(img.chain) is None:
                fails.append(f"cell {c.name}: image not a 0-chain within bounds")
            continue
        if c.degree == 1:
            src = f.map_chain(c.src).chain  # type: ignore[arg-type]
            tgt = f.map_chain(c.tgt).chain  # type: ignore[arg-type]
            w = hom_word(rh, img)
            if w is None:
                if not img.path:
                    # identity path: endpoints must agree
                    if src != tgt:
                        fails.append(f"cell {c.name}: identity image, unequal endpoints")
                    continue
                obligations.append(f"cell {c.name}: image beyond bounds")
                continue
            st = rh.chain_token.get(src)
            tt = rh.chain_token.get(tgt)
            if (w.path.start, w.path.end) != (st, tt):
                fails.append(f"cell {c.name}: endpoints not preserved")
            continue
        # degree >= 2: boundary compatibility inside the realized hom
        p = rh.presentation
        w = hom_word(rh, img)
        if w is None:
            if img.terms == () and img.base is not None:
                w = None
            obligations.append(f"cell {c.name}: image beyond bounds")
            continue
        if c.degree == 2:
            bd_img = f.map_hom_path(c.boundary_path or ())
        else:
            bd_img = tuple(f.map_hom_terms(c.boundary_terms or ()))
        base_img = f.map_chain(f.source.base_chain_of_cell(c.name)).chain
        mapped = hom_word(rh, CellImage(
            degree=c.degree - 1,
            path=bd_img if c.degree == 2 else None,
            terms=None if c.degree == 2 else bd_img,
            base=base_img,
        ))
        if c.degree == 2 and mapped is None and not bd_img:
            bt = rh.chain_token.get(base_img or ())
            mapped = CrxWord.of_path(PathWord.identity(bt)) if bt else None
        if mapped is None:
            obligations.append(f"cell {c.name}: boundary image beyond bounds")
            continue
        try:
            v = p.are_equal(p.delta(w), mapped)
        except DomainError as exc:
            fails.append(f"cell {c.name}: {exc}")
            continue
        if v is Verdict.NOT_EQUAL:
            fails.append(f"cell {c.name}: boundary not preserved")
        elif v is Verdict.UNDECIDED:
            obligations.append(f"cell {c.name}: boundary compatibility undecided")
    return (not fails, fails, obligations)


# -- canonical functors ------------------------------------------------------------


def theta(flavor: str = TENSOR) -> EnrichedFunctor:
    """The generating acyclic cofibration istar -> itilde."""
    src = istar(flavor)
    tgt = itilde(flavor)
    cell_map = {
        "k": CellImage.of_chain(("k",)),
        "h1": CellImage.of_path(((("h1",), 1),)),
        "h2": CellImage.of_path(((("h2",), 1),)),
    }
    return EnrichedFunctor(src, tgt, {"0": "0"}, cell_map, name=f"theta-{flavor}")


def interval_inclusion(flavor: str = TENSOR) -> EnrichedFunctor:
    src = interval(flavor)
    tgt = itilde(flavor)
    cell_map = {
        "f": CellImage.of_chain(("f",)),
        "g": CellImage.of_chain(("g",)),
        "l1": CellImage.of_path(((("l1",), 1),)),
        "l2": CellImage.of_path(((("l2",), 1),)),
    }
    return EnrichedFunctor(src, tgt, {"0": "0", "1": "1"}, cell_map,
                           name="interval-inclusion")


def interval_collapse(flavor: str = TENSOR) -> EnrichedFunctor:
    """The left inverse itilde -> interval: identity on f, g, l1, l2."""
    src = itilde(flavor)
    tgt = interval(flavor)
    cell_map = {
        "f": CellImage.of_chain(("f",)),
        "g": CellImage.of_chain(("g",)),
        "k": CellImage.of_chain(("f", "g")),
        "l1": CellImage.of_path(((("l1",), 1),)),
        "l2": CellImage.of_path(((("l2",), 1),)),
        "h1": CellImage.of_path(((("l1",), 1),)),
        "h2": CellImage.of_path(((("f", "l2", "g"), 1),)),
        "a": CellImage.of_path(()),      # identity at (f, g)
        "b": CellImage.of_path(()),      # identity at (f, g, f, g)
        "alpha": CellImage.of_terms(2, (), ()),
        "beta": CellImage.of_terms(2, (), ("f", "g")),
    }
    return EnrichedFunctor(src, tgt, {"0": "0", "1": "1"}, cell_map,
                           name="interval-collapse")


def unit_into_interval(flavor: str = TENSOR) -> EnrichedFunctor:
    from .enriched import one_object_unit

    src = one_object_unit()
    tgt = interval(flavor)
    return EnrichedFunctor(src, tgt, {"0": "0"}, {}, name="unit-into-interval")


# -- the covering example -----------------------------------------------------------


def covering_pair() -> Tuple[EnrichedPresentation, EnrichedPresentation, EnrichedFunctor]:
    """Two objects joined by inverse isomorphisms, with contractible-on-Z
    endomorphism homs upstairs, one-object-Z homs downstairs, and the
    covering between them."""
    up = EnrichedPresentation("Cov", TENSOR, ["0", "1"])
    up.set_structured("0", "0", StructuredHom("contractible", "Z"))
    up.set_structured("1", "1", StructuredHom("contractible", "Z"))
    up.set_structured("0", "1", StructuredHom("point"))
    up.set_structured("1", "0", StructuredHom("point"))
    down = EnrichedPresentation("Circ", TENSOR, ["0", "1"])
    down.set_structured("0", "0", StructuredHom("group", "Z"))
    down.set_structured("1", "1", StructuredHom("group", "Z"))
    down.set_structured("0", "1", StructuredHom("point"))
    down.set_structured("1", "0", StructuredHom("point"))
    hom_maps = {
        ("0", "0"): StructuredMap("cover"),
        ("1", "1"): StructuredMap("cover"),
        ("0", "1"): StructuredMap("identity"),
        ("1", "0"): StructuredMap("identity"),
    }
    f = EnrichedFunctor(up, down, {"0": "0", "1": "1"}, {}, hom_maps=hom_maps,
                        name="covering")
    return up, down, f


def _structured_invariants(h: StructuredHom):
    """(components, pi1 descriptor, higher trivial) for a structured hom."""
    if h.kind == "empty":
        return (0, None)
    if h.kind in ("point", "contractible"):
        return (1, "trivial")
    if h.kind == "group":
        return (1, h.detail or "Z")
    raise DomainError(f"unknown structured hom {h}")


# -- homotopy category ----------------------------------------------------------------


@dataclass
class HoCategory:
    objects: List[str]
    hom_classes: Dict[Tuple[str, str], List[str]]
    compose: Dict[Tuple[str, str, str, str, str], str]
    # (x, y, z, class_xy, class_yz) -> class_xz

    def iso_pairs(self) -> Set[Tuple[str, str]]:
        isos = set()
        for x in self.objects:
            for y in self.objects:
                for c1 in self.hom_classes.get((x, y), []):
                    for c2 in self.hom_classes.get((y, x), []):
                        left = self.compose.get((x, y, x, c1, c2))
                        right = self.compose.get((y, x, y, c2, c1))
                        if left == self._id_class(x) and right == self._id_class(y):
                            isos.add((x, y))
        return isos

    def _id_class(self, x: str) -> Optional[str]:
        for c in self.hom_classes.get((x, x), []):
            if c.startswith("id"):
                return c
        return None


def ho_category(cat: EnrichedPresentation, cache: Optional[HomCache] = None
                ) -> HoCategory:
    """pi0 of every hom, with the induced composition on class representatives."""
    cache = cache or HomCache()
    classes: Dict[Tuple[str, str], List[str]] = {}
    rep_of_chain: Dict[Tuple[str, str, Chain], str] = {}
    for x in cat.objects:
        for y in cat.objects:
            hom = cat.structured.get((x, y))
            if hom is not None:
                n, _ = _structured_invariants(hom)
                classes[(x, y)] = (["id0" if x == y else "c0"] if n else [])
                continue
            rh = cache.get(cat, x, y)
            comps = tietze.components(rh.presentation)
            names = []
            for comp in comps:
                if any(rh.token_chain.get(o) == () for o in comp):
                    label = f"id{len(names)}"
                else:
                    label = sorted(comp)[0]
                names.append(label)
                for o in comp:
                    rep_of_chain[(x, y, rh.token_chain[o])] = label
            classes[(x, y)] = names
    compose: Dict[Tuple[str, str, str, str, str], str] = {}
    for x in cat.objects:
        for y in cat.objects:
            for z in cat.objects:
                for c1 in classes.get((x, y), []):
                    for c2 in classes.get((y, z), []):
                        key = (x, y, z, c1, c2)
                        hom_xz = cat.structured.get((x, z))
                        if hom_xz is not None or (x, y) in cat.structured \
                                or (y, z) in cat.structured:
                            # structured composition: single classes compose
                            tgt = classes.get((x, z), [])
                            if len(tgt) == 1:
                                compose[key] = tgt[0]
                            continue
                        ch1 = _chain_of_class(cache.get(cat, x, y), c1, x)
                        ch2 = _chain_of_class(cache.get(cat, y, z), c2, y)
                        if ch1 is None or ch2 is None:
                            continue
                        comp_chain = ch1 + ch2
                        lbl = rep_of_chain.get((x, z, comp_chain))
                        if lbl is not None:
                            compose[key] = lbl
    return HoCategory(objects=list(cat.objects), hom_classes=classes,
                      compose=compose)


def _chain_of_class(rh: RealizedHom, label: str, x: str) -> Optional[Chain]:
    if label.startswith("id"):
        return ()
    return rh.token_chain.get(label)


@dataclass
class Ho21Hom:
    kind: str                      # structured kind or "groupoid"
    detail: str = ""
    presentation: Optional[tietze.GroupPresentation] = None


@dataclass
class Ho21Result:
    objects: List[str]
    homs: Dict[Tuple[str, str], Ho21Hom]
    unit_note: str = "identity on objects; collapses each hom to its fundamental groupoid"


def ho21(cat: EnrichedPresentation, cache: Optional[HomCache] = None) -> Ho21Result:
    """Local fundamental groupoid, reported hom by hom."""
    cache = cache or HomCache()
    homs: Dict[Tuple[str, str], Ho21Hom] = {}
    for x in cat.objects:
        for y in cat.objects:
            s = cat.structured.get((x, y))
            if s is not None:
                homs[(x, y)] = Ho21Hom(kind=s.kind, detail=s.detail)
                continue
            rh = cache.get(cat, x, y)
            p = rh.presentation
            comps = tietze.components(p)
            if not comps:
                homs[(x, y)] = Ho21Hom(kind="empty")
                continue
            pres = tietze.reduced_vertex_group(p, comps[0][0])
            if len(comps) == 1 and pres.tag == "trivial":
                homs[(x, y)] = Ho21Hom(kind="contractible",
                                       detail=str(len(p.objects)))
            elif len(comps) == 1 and pres.tag == "free" and len(pres.generators) == 1:
                homs[(x, y)] = Ho21Hom(kind="group", detail="Z",
                                       presentation=pres)
            else:
                homs[(x, y)] = Ho21Hom(kind="groupoid", presentation=pres)
    return Ho21Result(objects=list(cat.objects), homs=homs)


# -- diagnostics -----------------------------------------------------------------------


@dataclass
class Diagnostics:
    local_fibration: Verdict
    isofibration: Verdict
    acyclic_fibration: Verdict
    dk_weak_equivalence: Verdict
    notes: List[str] = field(default_factory=list)


def _structured_map_flags(src: StructuredHom, tgt: StructuredHom,
                          sm: Optional[StructuredMap]) -> Tuple[Verdict, Verdict, str]:
    """(is fibration, is weak equivalence, note) for a structured hom map."""
    kind = sm.kind if sm else "identity"
    if src.kind == "empty":
        return Verdict.EQUAL, (Verdict.EQUAL if tgt.kind == "empty" else Verdict.NOT_EQUAL), ""
    if src.kind == "point" and tgt.kind == "point":
        return Verdict.EQUAL, Verdict.EQUAL, ""
    if src.kind == "contractible" and tgt.kind == "group" and kind == "cover":
        return Verdict.EQUAL, Verdict.NOT_EQUAL, "covering: pi1 Z downstairs"
    if src.kind == tgt.kind and kind == "identity":
        return Verdict.EQUAL, Verdict.EQUAL, ""
    if src.kind == "point" and tgt.kind == "group":
        return Verdict.NOT_EQUAL, Verdict.NOT_EQUAL, "point into group: no path lifting"
    return Verdict.UNDECIDED, Verdict.UNDECIDED, f"unrecognized structured map {src}->{tgt}"


def _is_identity_functor(f: EnrichedFunctor) -> bool:
    if f.source is not f.target:
        return False
    if any(f.obj_map[o] != o for o in f.source.objects):
        return False
    for nm, img in f.cell_map.items():
        if img.degree == 0 and img.chain != (nm,):
            return False
        if img.degree == 1 and img.path != (((nm,), 1),):
            return False
        if img.degree >= 2 and img.terms != (((nm,), 1, ()),):
            return False
    return True


def fibration_diagnostics(f: EnrichedFunctor, cache: Optional[HomCache] = None
                          ) -> Diagnostics:
    cache = cache or HomCache()
    notes: List[str] = []
    if _is_identity_functor(f):
        return Diagnostics(Verdict.EQUAL, Verdict.EQUAL, Verdict.EQUAL,
                           Verdict.EQUAL, ["identity functor"])
    local_fib = Verdict.EQUAL
    local_weq = Verdict.EQUAL
    for x in f.source.objects:
        for y in f.source.objects:
            fx, fy = f.obj_map[x], f.obj_map[y]
            s_h = f.source.structured.get((x, y))
            t_h = f.target.structured.get((fx, fy))
            if s_h is not None and t_h is not None:
                fib, weq, note = _structured_map_flags(
                    s_h, t_h, f.hom_maps.get((x, y)))
                if note:
                    notes.append(f"hom ({x},{y}): {note}")
                local_fib = _meet(local_fib, fib)
                local_weq = _meet(local_weq, weq)
            elif s_h is None and t_h is None:
                notes.append(f"hom ({x},{y}): cellular map, fibration undecided")
                local_fib = _meet(local_fib, Verdict.UNDECIDED)
                local_weq = _meet(local_weq, Verdict.UNDECIDED)
            else:
                notes.append(f"hom ({x},{y}): structured/cellular mismatch")
                local_fib = _meet(local_fib, Verdict.UNDECIDED)
                local_weq = _meet(local_weq, Verdict.UNDECIDED)
    ho_src = ho_category(f.source, cache)
    ho_tgt = ho_category(f.target, cache)
    isofib = _isofibration_verdict(f, ho_src, ho_tgt)
    surj = len({f.obj_map[o] for o in f.source.objects}) == len(f.target.objects)
    acyclic = _meet(local_fib, local_weq)
    if not surj:
        acyclic = Verdict.NOT_EQUAL
        notes.append("not surjective on objects")
    ho_equiv = _ho_equivalence_verdict(f, ho_src, ho_tgt)
    dk = _meet(local_weq, ho_equiv)
    return Diagnostics(local_fibration=local_fib, isofibration=isofib,
                       acyclic_fibration=acyclic, dk_weak_equivalence=dk,
                       notes=notes)


def _meet(a: Verdict, b: Verdict) -> Verdict:
    if Verdict.NOT_EQUAL in (a, b):
        return Verdict.NOT_EQUAL
    if Verdict.UNDECIDED in (a, b):
        return Verdict.UNDECIDED
    return Verdict.EQUAL


def _isofibration_verdict(f, ho_src: HoCategory, ho_tgt: HoCategory) -> Verdict:
    src_isos = ho_src.iso_pairs()
    tgt_isos = ho_tgt.iso_pairs()
    for (x, y) in tgt_isos:
        starts = [a for a in ho_src.objects if f.obj_map[a] == x]
        for a in starts:
            if not any((a, b) in src_isos and f.obj_map[b] == y
                       for b in ho_src.objects):
                return Verdict.NOT_EQUAL
    return Verdict.EQUAL


def _ho_equivalence_verdict(f, ho_src: HoCategory, ho_tgt: HoCategory) -> Verdict:
    # essential surjectivity via iso classes
    tgt_isos = ho_tgt.iso_pairs()
    image = {f.obj_map[o] for o in ho_src.objects}
    for y in ho_tgt.objects:
        if y in image:
            continue
        if not any((x, y) in tgt_isos for x in image):
            return Verdict.NOT_EQUAL
    # full faithfulness on classes: compare class counts hom by hom
    for x in ho_src.objects:
        for y in ho_src.objects:
            n_src = len(ho_src.hom_classes.get((x, y), []))
            n_tgt = len(ho_tgt.hom_classes.get((f.obj_map[x], f.obj_map[y]), []))
            if n_src != n_tgt:
                return Verdict.NOT_EQUAL
    return Verdict.EQUAL


# -- lifting problems --------------------------------------------------------------


@dataclass
class LiftingSquare:
    i: EnrichedFunctor        # A -> B (cellular, finitely generated)
    f: EnrichedFunctor        # C -> D
    top: EnrichedFunctor      # A -> C
    bottom: EnrichedFunctor   # B -> D


@dataclass
class LiftOutcome:
    status: str               # found | refuted | not-found-within-bounds
    lift: Optional[EnrichedFunctor] = None
    obstruction: str = ""


def _images_equal(cat: EnrichedPresentation, a: CellImage, b: CellImage,
                  cache: HomCache, xy: Tuple[str, str]) -> Verdict:
    if a.symbol is not None or b.symbol is not None:
        return Verdict.EQUAL if a.symbol == b.symbol else Verdict.NOT_EQUAL
    if a.degree != b.degree:
        return Verdict.NOT_EQUAL
    if a.degree == 0:
        return Verdict.EQUAL if a.chain == b.chain else Verdict.NOT_EQUAL
    rh = cache.get(cat, *xy)
    wa, wb = hom_word(rh, a), hom_word(rh, b)
    if wa is None and wb is None and a.degree == 1 and not a.path and not b.path:
        return Verdict.EQUAL
    if wa is None or wb is None:
        return Verdict.UNDECIDED
    try:
        return rh.presentation.are_equal(wa, wb)
    except DomainError:
        return Verdict.NOT_EQUAL


def verify_lift(square: LiftingSquare, candidate: EnrichedFunctor,
                cache: Optional[HomCache] = None) -> Tuple[bool, List[str]]:
    """Check G.i = top and f.G = bottom on generating cells."""
    cache = cache or HomCache()
    fails: List[str] = []
    gi = square.i.compose(candidate)
    for nm in square.i.source.cells:
        cimg = gi.cell_map[nm]
        timg = square.top.cell_map.get(nm)
        cell = square.i.source.cell(nm)
        xy = (square.top.obj_map[cell.dom], square.top.obj_map[cell.cod])
        if timg is None:
            continue
        v = _images_equal(square.top.target, cimg, timg, cache, xy)
        if v is not Verdict.EQUAL:
            fails.append(f"upper triangle at {nm}: {v.value}")
    fg = candidate.compose(square.f)
    for nm in square.bottom.source.cells:
        cimg = fg.cell_map.get(nm)
        bimg = square.bottom.cell_map.get(nm)
        cell = square.bottom.source.cell(nm)
        xy = (square.bottom.obj_map[cell.dom], square.bottom.obj_map[cell.cod])
        if cimg is None or bimg is None:
            fails.append(f"lower triangle at {nm}: missing image")
            continue
        v = _images_equal(square.bottom.target, cimg, bimg, cache, xy)
        if v is not Verdict.EQUAL:
            fails.append(f"lower triangle at {nm}: {v.value}")
    ok, ffails, _ = functor_check(candidate, cache)
    fails.extend(f"candidate not a functor: {m}" for m in ffails)
    return (not fails, fails)


def search_lift(square: LiftingSquare, max_len: int = 4,
                cache: Optional[HomCache] = None) -> LiftOutcome:
    """Search for a lift B -> C.

    Structured middle objects (the covering example) are solved symbolically
    with the automorphism-preimage refutation; cellular ones by bounded
    enumeration of realized hom elements.
    """
    cache = cache or HomCache(max_len=max(max_len, DEFAULT_LEN))
    if _is_identity_functor(square.i):
        return LiftOutcome(status="found", lift=square.top)
    c_cat = square.f.source
    if any(True for _ in c_cat.structured) and not c_cat.cells:
        return _search_lift_structured(square)
    return _search_lift_cellular(square, max_len, cache)


def _search_lift_structured(square: LiftingSquare) -> LiftOutcome:
    """The two-object structured shape: endo homs contractible(Z), cross homs
    points, f and g inverse isomorphisms; lifting along the covering."""
    b = square.bottom.source
    c_cat = square.f.source
    obj_map = dict(square.bottom.obj_map)  # f identity on objects
    cell_map: Dict[str, CellImage] = {}
    # 0-cells: cross homs are points (forced); endo 0-cells get integer indices
    idx: Dict[str, int] = {}
    for nm, cell in b.cells.items():
        if cell.degree != 0:
            continue
        x, y = obj_map[cell.dom], obj_map[cell.cod]
        hom = c_cat.structured.get((x, y))
        if hom is None:
            return LiftOutcome("not-found-within-bounds",
                               obstruction="cellular hom in structured search")
        if hom.kind == "point":
            cell_map[nm] = CellImage.of_symbol(0, ("pt", x, y))
        elif hom.kind == "contractible":
            # start at the unit index; endo 0-cell composites land at sums
            idx[nm] = 0
            cell_map[nm] = CellImage.of_symbol(0, ("idx", x, 0))
        else:
            return LiftOutcome("not-found-within-bounds",
                               obstruction=f"unsupported hom {hom}")

    def chain_index(ch: Chain, x: str) -> Optional[int]:
        # value of a 0-chain in a contractible endo hom: crossing through the
        # point homs resets to the unit, endo entries add their indices
        total = 0
        for nm2 in ch:
            cell2 = b.cells[nm2]
            hx, hy = obj_map[cell2.dom], obj_map[cell2.cod]
            if hx == hy:
                total += idx.get(nm2, 0)
            else:
                total = 0
        return total

    # degree-1 cells: in contractible homs arrows are determined by endpoints;
    # the covering sends (a -> b) to b - a.  The bottom map pins that value.
    for nm, cell in b.cells.items():
        if cell.degree != 1:
            continue
        x, y = obj_map[cell.dom], obj_map[cell.cod]
        hom = c_cat.structured.get((x, y))
        if hom is None or hom.kind == "point":
            cell_map[nm] = CellImage.of_symbol(1, ("pt", x, y))
            continue
        if hom.kind != "contractible":
            return LiftOutcome("not-found-within-bounds",
                               obstruction=f"unsupported hom {hom}")
        a_idx = chain_index(cell.src or (), x)
        b_idx = chain_index(cell.tgt or (), x)
        bot_img = square.bottom.cell_map.get(nm)
        need = None
        if bot_img is not None and bot_img.symbol is not None \
                and bot_img.symbol[0] == "grp":
            need = bot_img.symbol[1]
        have = (b_idx or 0) - (a_idx or 0)
        if need is not None and need != have:
            return LiftOutcome(
                "refuted",
                obstruction=(
                    f"no automorphism preimage: cell {nm} must map to the loop "
                    f"{need} downstairs, but its endpoints force the unique "
                    f"arrow {a_idx} -> {b_idx} upstairs, covering {have}"
                ),
            )
        cell_map[nm] = CellImage.of_symbol(1, ("arr", x, a_idx, b_idx))
    # degree >= 2 cells: structured homs are aspherical, images are trivial;
    # boundaries must already be trivial, which the degree-1 constraints imply
    for nm, cell in b.cells.items():
        if cell.degree >= 2:
            x, y = obj_map[cell.dom], obj_map[cell.cod]
            cell_map[nm] = CellImage.of_symbol(cell.degree, ("triv", x, y))
    lift = EnrichedFunctor(b, c_cat, obj_map, cell_map, name="lift")
    return LiftOutcome(status="found", lift=lift)


def _search_lift_cellular(square: LiftingSquare, max_len: int,
                          cache: HomCache) -> LiftOutcome:
    b = square.bottom.source
    c_cat = square.f.source
    obj_map: Dict[str, str] = {}
    for o in b.objects:
        want = square.bottom.obj_map[o]
        cands = [oc for oc in c_cat.objects if square.f.obj_map[oc] == want]
        if not cands:
            return LiftOutcome("refuted", obstruction=f"object {o}: no preimage")
        obj_map[o] = cands[0]
    # cells fixed by the upper triangle: those in the image of i
    fixed: Dict[str, CellImage] = {}
    for nm, img in square.i.cell_map.items():
        if img.chain is not None and len(img.chain) == 1:
            fixed[img.chain[0]] = square.top.cell_map[nm]
        elif img.path is not None and len(img.path) == 1 and img.path[0][1] == 1 \
                and len(img.path[0][0]) == 1:
            fixed[img.path[0][0][0]] = square.top.cell_map[nm]
        elif img.terms is not None and len(img.terms) == 1:
            ch = img.terms[0][0]
            if len(ch) == 1:
                fixed[ch[0]] = square.top.cell_map[nm]

    order = {nm: k for k, nm in enumerate(b.cells)}
    cell_names = sorted(b.cells, key=lambda nm: (b.cells[nm].degree, order[nm]))
    assignment: Dict[str, CellImage] = {}

    def candidates(cell: Cell) -> List[CellImage]:
        if cell.name in fixed:
            return [fixed[cell.name]]
        x, y = obj_map[cell.dom], obj_map[cell.cod]
        rh = cache.get(c_cat, x, y)
        out: List[CellImage] = []
        if cell.degree == 0:
            for ch in sorted(rh.chain_token, key=lambda c: (len(c), c)):
                if c_cat.chain_degree(ch) == 0:
                    out.append(CellImage.of_chain(ch))
        elif cell.degree == 1:
            gens = [rh.token_chain[g.name] for g in rh.presentation.gens_of(1)]
            for ch in gens:
                out.append(CellImage.of_path(((ch, 1),)))
                out.append(CellImage.of_path(((ch, -1),)))
            # identity candidates come first when endpoints permit
            out.insert(0, CellImage.of_path(()))
        else:
            gens = [rh.token_chain[g.name]
                    for g in rh.presentation.gens_of(cell.degree)]
            out.append(CellImage.of_terms(cell.degree, (), ()))
            for ch in gens:
                out.append(CellImage.of_terms(cell.degree, ((ch, 1, ()),),
                                              c_cat.base_chain(ch)))
                out.append(CellImage.of_terms(cell.degree, ((ch, -1, ()),),
                                              c_cat.base_chain(ch)))
        return out

    def consistent(nm: str, img: CellImage) -> bool:
        cand = EnrichedFunctor(b, c_cat, obj_map, {**assignment, nm: img})
        cell = b.cells[nm]
        # lower-triangle constraint on this cell
        try:
            fg_img = _compose_single(cand, square.f, nm)
        except DomainError:
            return False
        bot = square.bottom.cell_map.get(nm)
        if bot is not None and fg_img is not None:
            xy = (square.bottom.obj_map[cell.dom], square.bottom.obj_map[cell.cod])
            if _images_equal(square.bottom.target, fg_img, bot, cache, xy) \
                    is Verdict.NOT_EQUAL:
                return False
        # local well-formedness: endpoints / boundary against already-assigned
        if cell.degree == 1 and img.path is not None:
            try:
                src = cand.map_chain(cell.src or ()).chain
                tgt = cand.map_chain(cell.tgt or ()).chain
            except (DomainError, KeyError):
                return False
            rh = cache.get(c_cat, obj_map[cell.dom], obj_map[cell.cod])
            w = hom_word(rh, img)
            if w is None:
                return src == tgt if not img.path else False
            if (w.path.start, w.path.end) != (rh.chain_token.get(src),
                                              rh.chain_token.get(tgt)):
                return False
        if cell.degree >= 2:
            rh = cache.get(c_cat, obj_map[cell.dom], obj_map[cell.cod])
            w = hom_word(rh, img)
            try:
                if cell.degree == 2:
                    bd = cand.map_hom_path(cell.boundary_path or ())
                    base = cand.map_chain(b.base_chain_of_cell(nm)).chain
                    mapped = hom_word(rh, CellImage(degree=1, path=bd, base=base))
                    if mapped is None and not bd:
                        bt = rh.chain_token.get(base or ())
                        mapped = CrxWord.of_path(PathWord.identity(bt)) if bt else None
                else:
                    bd = tuple(cand.map_hom_terms(cell.boundary_terms or ()))
                    base = cand.map_chain(b.base_chain_of_cell(nm)).chain
                    mapped = hom_word(rh, CellImage(degree=cell.degree - 1,
                                                    terms=bd, base=base))
            except (DomainError, KeyError):
                return False
            if w is not None and mapped is not None:
                if rh.presentation.are_equal(rh.presentation.delta(w), mapped) \
                        is Verdict.NOT_EQUAL:
                    return False
        return True

    def rec(k: int) -> Optional[EnrichedFunctor]:
        if k == len(cell_names):
            return EnrichedFunctor(b, c_cat, obj_map, dict(assignment), name="lift")
        nm = cell_names[k]
        for img in candidates(b.cells[nm]):
            if consistent(nm, img):
                assignment[nm] = img
                got = rec(k + 1)
                if got is not None:
                    return got
                del assignment[nm]
        return None

    lift = rec(0)
    if lift is None:
        return LiftOutcome("not-found-within-bounds",
                           obstruction=f"no lift within word length {max_len}")
    ok, fails = verify_lift(square, lift, cache)
    if not ok:
        return LiftOutcome("not-found-within-bounds",
                           obstruction="; ".join(fails))
    return LiftOutcome(status="found", lift=lift)


def _compose_single(g: EnrichedFunctor, f: EnrichedFunctor, nm: str
                    ) -> Optional[CellImage]:
    img = g.cell_map.get(nm)
    if img is None:
        return None
    if img.symbol is not None:
        return _structured_push(f, g, nm, img)
    if img.degree == 0:
        return f.map_chain(img.chain)  # type: ignore[arg-type]
    if img.degree == 1:
        return CellImage.of_path(f.map_hom_path(img.path))  # type: ignore[arg-type]
    base = f.map_chain(img.base or ()).chain
    return CellImage.of_terms(img.degree, tuple(f.map_hom_terms(img.terms or ())),
                              base or ())


def _structured_push(f: EnrichedFunctor, g: EnrichedFunctor, nm: str,
                     img: CellImage) -> CellImage:
    sym = img.symbol
    if sym is None:
        raise DomainError("not symbolic")
    tag = sym[0]
    if tag == "pt":
        return img
    if tag == "idx":
        _t, x, _n = sym
        return CellImage.of_symbol(0, ("unit", f.obj_map[x]))
    if tag == "arr":
        _t, x, a, bidx = sym
        sm = f.hom_maps.get((x, x))
        if sm and sm.kind == "cover":
            return CellImage.of_symbol(1, ("grp", bidx - a))
        return img
    if tag == "triv":
        return CellImage.of_symbol(img.degree, ("triv",) + sym[1:])
    raise DomainError(f"unknown symbol {sym}")


# -- truncation / connectivity for categories ----------------------------------------


@dataclass
class CatTruncConn:
    degree: int
    truncated: Verdict
    connected: Verdict
    per_hom: Dict[Tuple[str, str], Tuple[Verdict, Verdict]]


def truncation_connectivity_cat(cat: EnrichedPresentation, n: int,
                                bound: Optional[int] = None,
                                cache: Optional[HomCache] = None) -> CatTruncConn:
    """n-truncated iff every hom is (n-1)-truncated; same shift for
    connectivity."""
    cache = cache or HomCache()
    per: Dict[Tuple[str, str], Tuple[Verdict, Verdict]] = {}
    trunc = Verdict.EQUAL
    conn = Verdict.EQUAL
    for x in cat.objects:
        for y in cat.objects:
            s = cat.structured.get((x, y))
            if s is not None:
                if s.kind == "empty":
                    # empty homs are skipped by the connectivity quantifier
                    # (otherwise no suspension would be connected at all)
                    per[(x, y)] = (Verdict.EQUAL, Verdict.EQUAL)
                elif s.kind in ("point", "contractible"):
                    per[(x, y)] = (Verdict.EQUAL, Verdict.EQUAL)
                else:  # group
                    t = Verdict.EQUAL if n - 1 >= 1 else Verdict.NOT_EQUAL
                    c = Verdict.NOT_EQUAL if n - 1 >= 1 else (
                        Verdict.EQUAL if n - 1 < 0 else
                        (Verdict.EQUAL if n - 1 == 0 else Verdict.NOT_EQUAL))
                    # a one-object group hom: pi0 trivial, pi1 = Z
                    c = Verdict.EQUAL if n - 1 < 1 else Verdict.NOT_EQUAL
                    per[(x, y)] = (t, c)
                    trunc = _meet(trunc, t)
                    conn = _meet(conn, c)
                continue
            rh = cache.get(cat, x, y)
            if not rh.presentation.objects:
                per[(x, y)] = (Verdict.EQUAL, Verdict.EQUAL)
                continue
            rep = invariants.truncation_connectivity(rh.presentation, n - 1,
                                                     bound=bound)
            per[(x, y)] = (rep.truncated, rep.connected)
            trunc = _meet(trunc, rep.truncated)
            conn = _meet(conn, rep.connected)
    return CatTruncConn(degree=n, truncated=trunc, connected=conn, per_hom=per)
