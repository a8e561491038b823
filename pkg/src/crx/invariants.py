"""Homotopy invariants: pi0, pi1, pi_n, weak-equivalence and
truncation/connectivity checkers.

pi_n (n >= 2) is computed as chain homology of a component in strata where
that is literally correct: the component's vertex groups are trivial (so the
complex is its own universal cover), or the degree >= 2 layers are empty.
Everything else is reported undecided.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import intmat, tietze
from .complex import CrxMorphism, CrxPresentation, Verdict
from .intmat import AbelianGroup
from .words import DomainError, PathWord


@dataclass
class Pi1Result:
    basepoint: str
    presentation: tietze.GroupPresentation
    tag: str                      # trivial | free | undecided
    abelianization: AbelianGroup

    @property
    def is_trivial(self) -> bool:
        return self.tag == "trivial"


@dataclass
class PiNResult:
    degree: int
    basepoint: str
    verdict: Verdict              # EQUAL-ish semantics: decided or undecided
    group: Optional[AbelianGroup] = None
    reason: str = ""

    @property
    def decided(self) -> bool:
        return self.group is not None


def pi0(c: CrxPresentation) -> List[List[str]]:
    return tietze.components(c)


def pi1(c: CrxPresentation, basepoint: str, budget: int = 10_000) -> Pi1Result:
    if basepoint not in c.objects:
        raise DomainError(f"unknown basepoint {basepoint}")
    pres = tietze.reduced_vertex_group(c, basepoint, budget)
    return Pi1Result(
        basepoint=basepoint,
        presentation=pres,
        tag=pres.tag,
        abelianization=pres.abelianization(),
    )


@dataclass
class ComponentChains:
    """Integer chain model of one component (valid when pi1 is trivial)."""

    objects: List[str]
    bases: Dict[int, List[str]]           # degree -> generator names
    boundary: Dict[int, intmat.Matrix]    # degree -> matrix into degree-1 lower
    relations: Dict[int, intmat.Matrix]   # degree -> relation lattice columns

    def rank(self, d: int) -> int:
        if d == 0:
            return len(self.objects)
        return len(self.bases.get(d, []))


def component_chains(c: CrxPresentation, basepoint: str, top: int) -> ComponentChains:
    comp = set(tietze.component_of(c, basepoint))
    objs = [o for o in c.objects if o in comp]
    obj_idx = {o: i for i, o in enumerate(objs)}
    bases: Dict[int, List[str]] = {}
    index: Dict[int, Dict[str, int]] = {}
    for d in range(1, top + 2):
        names = [g.name for g in c.gens_of(d) if g.basepoint in comp]
        bases[d] = names
        index[d] = {n: i for i, n in enumerate(names)}
    boundary: Dict[int, intmat.Matrix] = {}
    m1 = intmat.zeros(len(objs), len(bases[1]))
    for j, name in enumerate(bases[1]):
        g = c.gen(1, name)
        m1[obj_idx[g.target]][j] += 1
        m1[obj_idx[g.source]][j] -= 1
    boundary[1] = m1
    for d in range(2, top + 2):
        m = intmat.zeros(len(bases[d - 1]), len(bases[d]))
        for j, name in enumerate(bases[d]):
            g = c.gen(d, name)
            for h, e in g.boundary.exponent_sums().items():  # type: ignore[union-attr]
                m[index[d - 1][h]][j] += e
        boundary[d] = m
    relations: Dict[int, intmat.Matrix] = {}
    for d in range(1, top + 2):
        cols = []
        for r in c.relations_of(d):
            if (r.lhs.base if d != 1 else r.lhs.path.start) not in comp:  # type: ignore[union-attr]
                continue
            col = [0] * len(bases[d])
            for h, e in r.lhs.exponent_sums().items():
                col[index[d][h]] += e
            for h, e in r.rhs.exponent_sums().items():
                col[index[d][h]] -= e
            cols.append(col)
        relations[d] = intmat.from_columns(cols, len(bases[d]))
    return ComponentChains(objects=objs, bases=bases, boundary=boundary,
                           relations=relations)


def _component_has_higher_data(c: CrxPresentation, comp: Sequence[str]) -> bool:
    cs = set(comp)
    for d, layer in c.gens.items():
        if d >= 2 and any(g.basepoint in cs for g in layer.values()):
            return True
    for r in c.relations:
        if r.degree >= 2 and r.lhs.base in cs:
            return True
    return False


def pi_n(c: CrxPresentation, basepoint: str, n: int, budget: int = 10_000) -> PiNResult:
    """pi_n(C, basepoint) for n >= 2 in computable strata."""
    if n < 2:
        raise DomainError("pi_n is for n >= 2; use pi0/pi1")
    comp = tietze.component_of(c, basepoint)
    if not _component_has_higher_data(c, comp):
        return PiNResult(n, basepoint, Verdict.EQUAL, AbelianGroup(0), "no data above degree 1")
    vg = tietze.reduced_vertex_group(c, basepoint, budget)
    if vg.tag != "trivial":
        return PiNResult(
            n, basepoint, Verdict.UNDECIDED, None,
            f"pi1 not certified trivial (tag {vg.tag}); module homology out of scope",
        )
    ch = component_chains(c, basepoint, n)
    h = intmat.homology_presented(
        d_out=ch.boundary[n],
        d_in=ch.boundary[n + 1],
        rel_here=ch.relations[n],
        rel_below=ch.relations[n - 1],
    )
    return PiNResult(n, basepoint, Verdict.EQUAL, h.group, "chain homology (trivial pi1)")


@dataclass
class WeqReport:
    verdict: Verdict
    witness: str = ""
    bound: int = 0
    details: List[str] = field(default_factory=list)

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.EQUAL


def _pi0_bijection(f: CrxMorphism) -> Tuple[Optional[Dict[int, int]], str]:
    src_comps = tietze.components(f.source)
    tgt_comps = tietze.components(f.target)
    tgt_of_obj = {}
    for i, comp in enumerate(tgt_comps):
        for o in comp:
            tgt_of_obj[o] = i
    assign: Dict[int, int] = {}
    hit = set()
    for i, comp in enumerate(src_comps):
        images = {tgt_of_obj[f.obj_map[o]] for o in comp}
        if len(images) != 1:
            return None, f"component {i} maps to several components"
        j = images.pop()
        assign[i] = j
        hit.add(j)
    if len(hit) != len(src_comps):
        return None, "pi0 not injective"
    if len(hit) != len(tgt_comps):
        return None, "pi0 not surjective"
    return assign, ""


def _induced_pi1_letter_map(f: CrxMorphism, x: str) -> Optional[Dict[str, Tuple[str, int]]]:
    """If every source vertex generator maps to a single target vertex letter,
    return that assignment (used for the free-to-free bijection shortcut)."""
    src_tree = tietze.spanning_tree(f.source, x)
    tgt_tree = tietze.spanning_tree(f.target, f.obj_map[x])
    tgt_tree_edges = {g for p in tgt_tree.values() for (g, _s) in p.letters}
    src_tree_edges = {g for p in src_tree.values() for (g, _s) in p.letters}
    out = {}
    for g in f.source.gens_of(1):
        if g.source not in src_tree or g.name in src_tree_edges:
            continue
        img = f.gen_map[(1, g.name)].path  # type: ignore[union-attr]
        letters = [(h, s) for (h, s) in img.reduce().letters if h not in tgt_tree_edges]
        if len(letters) != 1:
            return None
        out[g.name] = letters[0]
    return out


def _pi1_induced_verdict(f: CrxMorphism, x: str, budget: int) -> Tuple[Verdict, str]:
    src = tietze.reduced_vertex_group(f.source, x, budget)
    tgt = tietze.reduced_vertex_group(f.target, f.obj_map[x], budget)
    if src.tag == "trivial" and tgt.tag == "trivial":
        return Verdict.EQUAL, ""
    # abelianized induced map: rewrite images of source vertex generators
    full_src = tietze.vertex_group_presentation(f.source, x)
    tgt_full = tietze.vertex_group_presentation(f.target, f.obj_map[x])
    tgt_tree = tietze.spanning_tree(f.target, f.obj_map[x])
    tgt_tree_edges = {g for p in tgt_tree.values() for (g, _s) in p.letters}
    tgt_idx = {g: i for i, g in enumerate(tgt_full.generators)}
    src_tree = tietze.spanning_tree(f.source, x)
    cols = []
    for gname in full_src.generators:
        g = f.source.gen(1, gname)
        loop = (
            src_tree[g.source]
            .then(PathWord(((gname, 1),), g.source, g.target))
            .then(src_tree[g.target].inverse())
        )
        img = f.map_path(loop)
        col = [0] * len(tgt_full.generators)
        for h, s in img.reduce().letters:
            if h in tgt_tree_edges:
                continue
            col[tgt_idx[h]] += s
        cols.append(col)
    mat = intmat.from_columns(cols, len(tgt_full.generators))

    def rel_lattice(pres):
        idx = {g: i for i, g in enumerate(pres.generators)}
        cs = []
        for r in pres.relators:
            col = [0] * len(pres.generators)
            for g, s in r:
                col[idx[g]] += s
            cs.append(col)
        return intmat.from_columns(cs, len(pres.generators))

    h1_iso = intmat.map_is_isomorphism(
        mat, rel_lattice(full_src), rel_lattice(tgt_full),
        src_rank=len(full_src.generators), tgt_rank=len(tgt_full.generators),
    )
    if not h1_iso:
        return Verdict.NOT_EQUAL, "H1 of pi1 not an isomorphism"
    if src.tag == "free" and tgt.tag == "free":
        if len(src.generators) != len(tgt.generators):
            return Verdict.NOT_EQUAL, "free pi1 ranks differ"
        if len(src.generators) <= 1:
            return Verdict.EQUAL, ""
        letter = _induced_pi1_letter_map(f, x)
        if letter is not None and len({h for (h, _s) in letter.values()}) == len(letter):
            return Verdict.EQUAL, ""
        return Verdict.UNDECIDED, "free pi1: induced iso not certified"
    return Verdict.UNDECIDED, f"pi1 tags {src.tag}/{tgt.tag}"


def _induced_pin_iso(f: CrxMorphism, x: str, n: int) -> Tuple[Verdict, str]:
    csrc = component_chains(f.source, x, n)
    ctgt = component_chains(f.target, f.obj_map[x], n)
    hs = intmat.homology_presented(
        csrc.boundary[n], csrc.boundary[n + 1], csrc.relations[n], csrc.relations[n - 1]
    )
    ht = intmat.homology_presented(
        ctgt.boundary[n], ctgt.boundary[n + 1], ctgt.relations[n], ctgt.relations[n - 1]
    )
    tgt_index = {name: i for i, name in enumerate(ctgt.bases[n])}
    cols = []
    k_src = intmat.shape(hs.cycle_basis)[1]
    for jcol in range(k_src):
        chain = [hs.cycle_basis[i][jcol] for i in range(len(csrc.bases[n]))]
        img = [0] * len(ctgt.bases[n])
        for i, name in enumerate(csrc.bases[n]):
            if chain[i] == 0:
                continue
            w = f.gen_map[(n, name)]
            for h, e in w.exponent_sums().items():
                img[tgt_index[h]] += chain[i] * e
        coords = ht.class_of(img)
        if coords is None:
            return Verdict.NOT_EQUAL, f"pi_{n}: image of a cycle is not a cycle"
        cols.append(coords)
    k_tgt = intmat.shape(ht.cycle_basis)[1]
    mat = intmat.from_columns(cols, k_tgt)
    ok = intmat.map_is_isomorphism(
        mat, hs.relation_matrix, ht.relation_matrix,
        src_rank=k_src, tgt_rank=k_tgt,
    )
    return (Verdict.EQUAL, "") if ok else (Verdict.NOT_EQUAL, f"pi_{n} not iso")


def is_weak_equivalence(
    f: CrxMorphism, bound: Optional[int] = None, budget: int = 10_000
) -> WeqReport:
    n_max = bound if bound is not None else max(
        f.source.max_degree(), f.target.max_degree(), 1
    )
    assign, why = _pi0_bijection(f)
    if assign is None:
        return WeqReport(Verdict.NOT_EQUAL, witness=f"pi0: {why}", bound=n_max)
    details: List[str] = []
    undecided: List[str] = []
    for comp in tietze.components(f.source):
        x = comp[0]
        v, why = _pi1_induced_verdict(f, x, budget)
        if v is Verdict.NOT_EQUAL:
            return WeqReport(
                Verdict.NOT_EQUAL, witness=f"degree 1 at {x}: {why}", bound=n_max
            )
        if v is Verdict.UNDECIDED:
            undecided.append(f"pi1 at {x}: {why}")
            continue
        src_triv = tietze.reduced_vertex_group(f.source, x, budget).tag == "trivial"
        tgt_triv = tietze.reduced_vertex_group(f.target, f.obj_map[x], budget).tag == "trivial"
        for n in range(2, n_max + 1):
            if src_triv and tgt_triv:
                v2, why2 = _induced_pin_iso(f, x, n)
                if v2 is Verdict.NOT_EQUAL:
                    return WeqReport(
                        Verdict.NOT_EQUAL,
                        witness=f"degree {n} at {x}: {why2}",
                        bound=n_max,
                    )
                details.append(f"pi_{n} at {x}: iso")
            else:
                s_empty = not _component_has_higher_data(f.source, comp)
                t_comp = tietze.component_of(f.target, f.obj_map[x])
                t_empty = not _component_has_higher_data(f.target, t_comp)
                if s_empty and t_empty:
                    details.append(f"pi_{n} at {x}: both trivial (no data)")
                else:
                    undecided.append(f"pi_{n} at {x}: pi1 not trivial")
                    break
    if undecided:
        return WeqReport(Verdict.UNDECIDED, witness="; ".join(undecided), bound=n_max,
                         details=details)
    return WeqReport(Verdict.EQUAL, bound=n_max, details=details)


@dataclass
class TruncConnReport:
    degree: int
    truncated: Verdict
    connected: Verdict
    bound: int
    notes: List[str] = field(default_factory=list)


def truncation_connectivity(
    c: CrxPresentation, n: int, bound: Optional[int] = None, budget: int = 10_000
) -> TruncConnReport:
    """Flags per the definitions: n-truncated iff pi_k trivial for k > n;
    n-connected iff nonempty and pi_k trivial for 0 <= k <= n."""
    top = bound if bound is not None else max(c.max_degree(), n + 1, 1)
    notes: List[str] = []
    if not c.objects:
        return TruncConnReport(n, Verdict.EQUAL, Verdict.NOT_EQUAL, top,
                               ["empty complex"])

    comps = pi0(c)

    def pi_k_trivial(k: int) -> Verdict:
        if k == 0:
            return Verdict.EQUAL if len(comps) == 1 else Verdict.NOT_EQUAL
        out = Verdict.EQUAL
        for comp in comps:
            x = comp[0]
            if k == 1:
                vg = tietze.reduced_vertex_group(c, x, budget)
                if vg.tag == "trivial":
                    continue
                if vg.tag == "free" and vg.generators:
                    return Verdict.NOT_EQUAL
                if not vg.abelianization().is_trivial():
                    return Verdict.NOT_EQUAL
                out = Verdict.UNDECIDED
            else:
                r = pi_n(c, x, k, budget)
                if not r.decided:
                    out = Verdict.UNDECIDED
                elif not r.group.is_trivial():  # type: ignore[union-attr]
                    return Verdict.NOT_EQUAL
        return out

    truncated = Verdict.EQUAL
    for k in range(n + 1, top + 1):
        v = pi_k_trivial(k)
        if v is Verdict.NOT_EQUAL:
            truncated = Verdict.NOT_EQUAL
            notes.append(f"pi_{k} nontrivial")
            break
        if v is Verdict.UNDECIDED:
            truncated = Verdict.UNDECIDED
            notes.append(f"pi_{k} undecided")
    connected = Verdict.EQUAL
    for k in range(0, n + 1):
        v = pi_k_trivial(k)
        if v is Verdict.NOT_EQUAL:
            connected = Verdict.NOT_EQUAL
            notes.append(f"pi_{k} nontrivial")
            break
        if v is Verdict.UNDECIDED:
            connected = Verdict.UNDECIDED
            notes.append(f"pi_{k} undecided")
    return TruncConnReport(n, truncated, connected, top, notes)
