"""Finitely presented crossed complexes.

A presentation holds objects, degree-1 generators with endpoints, degree-n
generators (n >= 2) with a basepoint and a boundary word of degree n-1, and a
finite relation list.  The degree-1 layer is the free groupoid on the listed
generators modulo the degree-1 relations; higher layers are free
crossed-module / module data modulo the higher relations.

Equality of elements is decided stratum by stratum (free normal forms,
one-reduced integer vectors, trivial-pi1 abelianization) and otherwise
reported as undecided, never guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from . import intmat
from .words import (
    ActionedTerm,
    CompositionError,
    CrxWord,
    DomainError,
    PathWord,
    UnknownGenerator,
)


DEFAULT_BOUND = 10


@dataclass(frozen=True)
class GenData:
    name: str
    degree: int
    source: Optional[str] = None      # degree 1
    target: Optional[str] = None      # degree 1
    base: Optional[str] = None        # degree >= 2
    boundary: Optional[CrxWord] = None  # degree >= 2, a degree-(n-1) word

    @property
    def basepoint(self) -> str:
        if self.degree == 1:
            return self.source  # type: ignore[return-value]
        return self.base  # type: ignore[return-value]


@dataclass(frozen=True)
class Relation:
    degree: int
    lhs: CrxWord
    rhs: CrxWord


class Verdict(Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Regime:
    tag: str                      # free | one-reduced | trivial-pi1 | finite | opaque
    flags: frozenset
    detail: str = ""


class CrxPresentation:
    def __init__(
        self,
        name: str,
        objects: Sequence[str] = (),
        bound: int = DEFAULT_BOUND,
    ):
        self.name = name
        self.objects: List[str] = list(dict.fromkeys(objects))
        self.gens: Dict[int, Dict[str, GenData]] = {}
        self.relations: List[Relation] = []
        self.bound = bound
        self.meta: Dict[str, object] = {}

    # -- construction -----------------------------------------------------

    def add_object(self, obj: str) -> None:
        if obj not in self.objects:
            self.objects.append(obj)

    def add_gen1(self, name: str, source: str, target: str) -> GenData:
        g = GenData(name=name, degree=1, source=source, target=target)
        self._insert(g)
        return g

    def add_gen(self, name: str, degree: int, base: str, boundary: CrxWord) -> GenData:
        if degree < 2:
            raise DomainError("use add_gen1 for degree-1 generators")
        g = GenData(name=name, degree=degree, base=base, boundary=boundary)
        self._insert(g)
        return g

    def _insert(self, g: GenData) -> None:
        layer = self.gens.setdefault(g.degree, {})
        if g.name in layer:
            raise DomainError(f"duplicate generator {g.name} in degree {g.degree}")
        layer[g.name] = g

    def add_relation(self, degree: int, lhs: CrxWord, rhs: CrxWord) -> None:
        self.relations.append(Relation(degree, lhs, rhs))

    # -- accessors ---------------------------------------------------------

    def gens_of(self, degree: int) -> List[GenData]:
        return list(self.gens.get(degree, {}).values())

    def gen(self, degree: int, name: str) -> GenData:
        try:
            return self.gens[degree][name]
        except KeyError as exc:
            raise UnknownGenerator(f"{name} (degree {degree})") from exc

    def has_gen(self, degree: int, name: str) -> bool:
        return name in self.gens.get(degree, {})

    def max_degree(self) -> int:
        degs = [d for d, layer in self.gens.items() if layer]
        return max(degs) if degs else 0

    def endpoints(self, name: str) -> Tuple[str, str]:
        g = self.gen(1, name)
        return (g.source, g.target)  # type: ignore[return-value]

    def relations_of(self, degree: int) -> List[Relation]:
        return [r for r in self.relations if r.degree == degree]

    def gen_counts(self) -> Dict[int, int]:
        out = {0: len(self.objects)}
        for d, layer in sorted(self.gens.items()):
            if layer:
                out[d] = len(layer)
        return out

    # -- words -------------------------------------------------------------

    def path(self, letters: Sequence[Tuple[str, int]], at: Optional[str] = None) -> PathWord:
        if not letters:
            if at is None:
                raise DomainError("identity path needs an object")
            if at not in self.objects:
                raise UnknownGenerator(at)
            return PathWord.identity(at)
        locs = []
        for g, s in letters:
            src, tgt = self.endpoints(g)
            locs.append((src, tgt) if s == 1 else (tgt, src))
        for i in range(len(locs) - 1):
            if locs[i][1] != locs[i + 1][0]:
                raise CompositionError(
                    f"letters {i},{i+1} do not compose in {self.name}"
                )
        return PathWord(tuple(letters), locs[0][0], locs[-1][1]).reduce()

    def term(self, gen_name: str, degree: int, exp: int = 1,
             actor: Optional[PathWord] = None) -> ActionedTerm:
        g = self.gen(degree, gen_name)
        act = actor if actor is not None else PathWord.identity(g.base)  # type: ignore[arg-type]
        if act.end != g.base:
            raise CompositionError(
                f"actor for {gen_name} must end at {g.base}, got {act.end}"
            )
        return ActionedTerm(gen_name, exp, act)

    def word(self, degree: int, terms: Sequence[ActionedTerm], base: str) -> CrxWord:
        return CrxWord.of_terms(degree, terms, base)

    # -- boundary ----------------------------------------------------------

    def boundary_of_gen(self, g: GenData) -> CrxWord:
        if g.degree < 2 or g.boundary is None:
            raise DomainError(f"{g.name} has no boundary word")
        return g.boundary

    def delta(self, w: CrxWord) -> CrxWord:
        """Boundary of a degree >= 2 word."""
        if w.degree < 2:
            raise DomainError("delta needs degree >= 2")
        if w.degree == 2:
            path = PathWord.identity(w.base)
            for t in w.terms:
                g = self.gen(2, t.gen)
                bpath = g.boundary.path  # type: ignore[union-attr]
                piece = bpath
                if t.exp < 0:
                    piece = piece.inverse()
                reps = abs(t.exp)
                seg = PathWord.identity(bpath.start)
                for _ in range(reps):
                    seg = seg.then(piece)
                conj = t.actor.then(seg).then(t.actor.inverse())
                path = path.then(conj)
            return CrxWord.of_path(path.reduce())
        out = CrxWord.identity(w.degree - 1, w.base)
        for t in w.terms:
            g = self.gen(w.degree, t.gen)
            piece = g.boundary.power(t.exp)  # type: ignore[union-attr]
            piece = piece.transported(t.actor)
            out = out.times(piece)
        return out

    # -- regimes -----------------------------------------------------------

    def regime(self, tietze_budget: int = 10_000) -> Regime:
        flags = set()
        if len(self.objects) == 1 and not self.gens.get(1):
            flags.add("one-reduced")
        if not self.relations:
            flags.add("free")
        if not any(self.gens.get(d) for d in self.gens if d >= 1):
            flags.add("finite")
        if self._pi1_trivial_cached(tietze_budget):
            flags.add("trivial-pi1")
        for tag in ("one-reduced", "free", "trivial-pi1", "finite"):
            if tag in flags:
                return Regime(tag=tag, flags=frozenset(flags))
        return Regime(tag="opaque", flags=frozenset(flags))

    def _pi1_trivial_cached(self, budget: int) -> bool:
        key = ("pi1-trivial", budget)
        if key not in self.meta:
            from . import tietze

            self.meta[key] = tietze.all_vertex_groups_trivial(self, budget)
        return bool(self.meta[key])

    # -- equality ----------------------------------------------------------

    def are_equal(self, u: CrxWord, v: CrxWord) -> Verdict:
        if u.degree != v.degree:
            raise DomainError("degree mismatch")
        if u.degree == 0:
            return Verdict.EQUAL if u.obj == v.obj else Verdict.NOT_EQUAL
        if u.degree == 1:
            if (u.path.start, u.path.end) != (v.path.start, v.path.end):  # type: ignore[union-attr]
                raise DomainError("endpoint mismatch")
            ru, rv = u.path.reduce(), v.path.reduce()  # type: ignore[union-attr]
            if ru == rv:
                return Verdict.EQUAL
            rels = self.relations_of(1)
            if not rels:
                return Verdict.NOT_EQUAL
            # a single-relator instance is decidable without rewriting: the
            # difference word must be a rotation of the relator or its inverse
            diff_letters = ru.then(rv.inverse()).letters
            while len(diff_letters) >= 2 and diff_letters[0][0] == diff_letters[-1][0] \
                    and diff_letters[0][1] == -diff_letters[-1][1]:
                diff_letters = diff_letters[1:-1]
            for r in rels:
                relator = r.lhs.path.then(r.rhs.path.inverse()).letters  # type: ignore[union-attr]
                candidates = set()
                for w in (relator, tuple((g, -s) for g, s in reversed(relator))):
                    for i in range(max(len(w), 1)):
                        candidates.add(w[i:] + w[:i])
                if tuple(diff_letters) in candidates:
                    return Verdict.EQUAL
            return Verdict.UNDECIDED
        if u.base != v.base:
            raise DomainError("basepoint mismatch")
        degree = u.degree
        diff = u.times(v.inverse())
        if not diff.terms:
            return Verdict.EQUAL
        # trivial-pi1 stratum: abelianization is the normal form
        if self._pi1_trivial_cached(10_000):
            return self._equal_abelian(degree, diff)
        # free-action stratum for modules: no degree-2 generators, no degree-1
        # relations, no relations in this degree: reduced-actor multiset
        if (
            degree >= 3
            and not self.gens.get(2)
            and not self.relations_of(1)
            and not self.relations_of(degree)
        ):
            return self._equal_free_module(diff)
        # syntactically identical words are equal in every stratum
        if self._syntactic_nf(u) == self._syntactic_nf(v):
            return Verdict.EQUAL
        return Verdict.UNDECIDED

    def _equal_abelian(self, degree: int, diff: CrxWord) -> Verdict:
        names = [g.name for g in self.gens_of(degree)]
        index = {n: i for i, n in enumerate(names)}
        vec = [0] * len(names)
        for g, e in diff.exponent_sums().items():
            vec[index[g]] += e
        rel_cols: List[List[int]] = []
        for r in self.relations_of(degree):
            col = [0] * len(names)
            for g, e in r.lhs.exponent_sums().items():
                col[index[g]] += e
            for g, e in r.rhs.exponent_sums().items():
                col[index[g]] -= e
            rel_cols.append(col)
        if not any(vec):
            return Verdict.EQUAL
        if not rel_cols:
            return Verdict.NOT_EQUAL
        lattice = intmat.from_columns(rel_cols, len(names))
        return Verdict.EQUAL if intmat.in_lattice(lattice, vec) else Verdict.NOT_EQUAL

    def _actor_nf(self, path: PathWord):
        pair_map = self.meta.get("pair_map")
        if pair_map:
            left: List[Tuple[str, int]] = []
            right: List[Tuple[str, int]] = []
            for g, s in path.reduce().letters:
                side, orig = pair_map.get(("gen1", g), (None, None))
                if side == "l":
                    left.append((orig, s))
                elif side == "r":
                    right.append((orig, s))
                else:
                    return ("raw", path.reduce().letters)
            return ("pair", _reduce_letters(left), _reduce_letters(right))
        return ("raw", path.reduce().letters)

    def _equal_free_module(self, diff: CrxWord) -> Verdict:
        acc: Dict[Tuple, int] = {}
        for t in diff.terms:
            key = (t.gen, self._actor_nf(t.actor))
            acc[key] = acc.get(key, 0) + t.exp
        return Verdict.EQUAL if all(v == 0 for v in acc.values()) else Verdict.NOT_EQUAL

    def _syntactic_nf(self, w: CrxWord):
        return tuple((t.gen, t.exp, t.actor.reduce().letters) for t in w.terms)


def _reduce_letters(letters: List[Tuple[str, int]]) -> Tuple[Tuple[str, int], ...]:
    out: List[Tuple[str, int]] = []
    for let in letters:
        if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


# -- validation -------------------------------------------------------------


@dataclass
class CheckResult:
    axiom: str
    ok: bool
    diagnostics: List[str] = field(default_factory=list)
    obligations: List[str] = field(default_factory=list)


@dataclass
class ValidationReport:
    checks: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def undecided(self) -> bool:
        return any(c.obligations for c in self.checks)

    def failures(self) -> List[str]:
        out = []
        for c in self.checks:
            if not c.ok:
                out.extend(f"[{c.axiom}] {d}" for d in c.diagnostics)
        return out


def validate(c: CrxPresentation) -> ValidationReport:
    typed = CheckResult("typing", True)
    loop = CheckResult("loop-delta2", True)
    ddzero = CheckResult("dd-zero", True)
    action = CheckResult("action-compat", True)
    abelian = CheckResult("abelian-above-2", True)

    for d, layer in sorted(c.gens.items()):
        if d > c.bound:
            typed.ok = False
            typed.diagnostics.append(
                f"degree {d} exceeds truncation bound {c.bound}"
            )
        for g in layer.values():
            if d == 1:
                for o in (g.source, g.target):
                    if o not in c.objects:
                        typed.ok = False
                        typed.diagnostics.append(f"gen {g.name}: unknown object {o}")
            else:
                if g.base not in c.objects:
                    typed.ok = False
                    typed.diagnostics.append(f"gen {g.name}: unknown base {g.base}")
                    continue
                issue = _word_typing_issue(c, g.boundary, d - 1)
                if issue:
                    typed.ok = False
                    typed.diagnostics.append(f"gen {g.name} boundary: {issue}")
                    continue
                if d == 2:
                    p = g.boundary.path  # type: ignore[union-attr]
                    if not (p.start == p.end == g.base):
                        loop.ok = False
                        loop.diagnostics.append(
                            f"gen {g.name}: delta2 not a loop at {g.base} "
                            f"({p.start}->{p.end})"
                        )
                else:
                    if g.boundary.base != g.base:
                        typed.ok = False
                        typed.diagnostics.append(
                            f"gen {g.name}: boundary based at {g.boundary.base}, "
                            f"generator at {g.base}"
                        )

    # dd = 0 on generators of degree >= 3 (needs typing to have passed there)
    if typed.ok:
        for d, layer in sorted(c.gens.items()):
            if d < 3:
                continue
            for g in layer.values():
                bb = c.delta(g.boundary)  # type: ignore[arg-type]
                v = c.are_equal(bb, CrxWord.identity(d - 2, g.base))
                if v is Verdict.NOT_EQUAL:
                    ddzero.ok = False
                    ddzero.diagnostics.append(f"gen {g.name}: delta.delta != 0 ({bb})")
                elif v is Verdict.UNDECIDED:
                    ddzero.obligations.append(
                        f"gen {g.name}: delta.delta = 0 undecided in this regime"
                    )

    # relations: well-typed, boundary-compatible (covers the delta/phi
    # compatibility axiom on declared identifications)
    for i, r in enumerate(c.relations):
        for side, w in (("lhs", r.lhs), ("rhs", r.rhs)):
            issue = _word_typing_issue(c, w, r.degree)
            if issue:
                typed.ok = False
                typed.diagnostics.append(f"relation {i} {side}: {issue}")
                break
        else:
            if r.degree >= 1:
                if r.degree == 1:
                    same = (
                        r.lhs.path.start == r.rhs.path.start  # type: ignore[union-attr]
                        and r.lhs.path.end == r.rhs.path.end  # type: ignore[union-attr]
                    )
                else:
                    same = r.lhs.base == r.rhs.base
                if not same:
                    typed.ok = False
                    typed.diagnostics.append(f"relation {i}: endpoint mismatch")
                    continue
            if r.degree >= 2 and typed.ok:
                v = c.are_equal(c.delta(r.lhs), c.delta(r.rhs))
                if v is Verdict.NOT_EQUAL:
                    action.ok = False
                    action.diagnostics.append(
                        f"relation {i}: boundaries of the two sides differ"
                    )
                elif v is Verdict.UNDECIDED:
                    action.obligations.append(
                        f"relation {i}: boundary compatibility undecided"
                    )

    # abelianness violations encoded through relation pairs in degree >= 3
    rels3 = [(i, r) for i, r in enumerate(c.relations) if r.degree >= 3]
    for (i, r1), (j, r2) in itertools.combinations(rels3, 2):
        if r1.degree != r2.degree:
            continue
        try:
            l1, l2 = r1.lhs.exponent_sums(), r2.lhs.exponent_sums()
            q1, q2 = r1.rhs.exponent_sums(), r2.rhs.exponent_sums()
        except DomainError:
            continue
        if r1.lhs.base == r2.lhs.base and l1 == l2 and q1 != q2:
            abelian.ok = False
            abelian.diagnostics.append(
                f"relations {i},{j}: abelian-equal left sides forced to "
                f"distinct right sides (degree {r1.degree} must be abelian)"
            )

    return ValidationReport([typed, abelian, loop, ddzero, action])


def _word_typing_issue(c: CrxPresentation, w: Optional[CrxWord], degree: int) -> Optional[str]:
    if w is None:
        return "missing word"
    if w.degree != degree:
        return f"degree {w.degree}, expected {degree}"
    if degree == 0:
        return None if w.obj in c.objects else f"unknown object {w.obj}"
    if degree == 1:
        return _path_typing_issue(c, w.path)  # type: ignore[arg-type]
    for t in w.terms:
        if not c.has_gen(degree, t.gen):
            return f"unknown degree-{degree} generator {t.gen}"
        issue = _path_typing_issue(c, t.actor)
        if issue:
            return f"actor of {t.gen}: {issue}"
        if t.actor.end != c.gen(degree, t.gen).base:
            return f"actor of {t.gen} ends at {t.actor.end}, generator sits at " \
                   f"{c.gen(degree, t.gen).base}"
        if t.actor.start != w.base:
            return f"term {t.gen} lives at {t.actor.start}, word based at {w.base}"
    return None


def _path_typing_issue(c: CrxPresentation, p: PathWord) -> Optional[str]:
    at = p.start
    if at not in c.objects:
        return f"unknown object {at}"
    for g, s in p.letters:
        if not c.has_gen(1, g):
            return f"unknown degree-1 generator {g}"
        src, tgt = c.endpoints(g)
        a, b = (src, tgt) if s == 1 else (tgt, src)
        if a != at:
            return f"letter {g} starts at {a}, path is at {at}"
        at = b
    if at != p.end:
        return f"path ends at {at}, declared {p.end}"
    return None


# -- standard cells ----------------------------------------------------------


def point() -> CrxPresentation:
    return CrxPresentation("point", objects=("p",))


def empty() -> CrxPresentation:
    return CrxPresentation("empty")


def sphere(n: int) -> CrxPresentation:
    """S^n: one generator in dimension n (empty for n = -1)."""
    if n < -1:
        raise DomainError(f"sphere dimension {n} < -1")
    if n == -1:
        return empty()
    c = CrxPresentation(f"S{n}", objects=("p",))
    if n == 0:
        return c
    if n == 1:
        c.add_gen1("s", "p", "p")
    else:
        c.add_gen("s", n, "p", CrxWord.identity(n - 1, "p"))
    return c


def disk(n: int) -> CrxPresentation:
    """D^n: generators in dimensions n and n-1 with d(top) = bottom."""
    if n < 0:
        raise DomainError(f"disk dimension {n} < 0")
    if n == 0:
        c = CrxPresentation("D0", objects=("p",))
        return c
    if n == 1:
        c = CrxPresentation("D1", objects=("0", "1"))
        c.add_gen1("l", "0", "1")
        return c
    c = CrxPresentation(f"D{n}", objects=("p",))
    if n == 2:
        c.add_gen1("u", "p", "p")
        c.add_gen("v", 2, "p", CrxWord.of_path(PathWord((("u", 1),), "p", "p")))
    else:
        c.add_gen("u", n - 1, "p", CrxWord.identity(n - 2, "p"))
        c.add_gen(
            "v", n, "p",
            CrxWord.of_terms(n - 1, [ActionedTerm("u", 1, PathWord.identity("p"))], "p"),
        )
    return c


def globe(n: int) -> CrxPresentation:
    """G_n: two generators in dimensions 1..n-1, two objects, one top cell."""
    if n < 0:
        raise DomainError(f"globe dimension {n} < 0")
    if n == 0:
        return point()
    if n == 1:
        c = CrxPresentation("G1", objects=("0", "1"))
        c.add_gen1("u1", "0", "1")
        return c
    c = CrxPresentation(f"G{n}", objects=("0", "1"))
    c.add_gen1("u1", "0", "1")
    c.add_gen1("v1", "0", "1")
    hemi = PathWord((("u1", 1), ("v1", -1)), "0", "0")
    for d in range(2, n):
        if d == 2:
            bd: CrxWord = CrxWord.of_path(hemi)
        else:
            bd = CrxWord.of_terms(
                d - 1,
                [ActionedTerm(f"u{d-1}", 1, PathWord.identity("0")),
                 ActionedTerm(f"v{d-1}", -1, PathWord.identity("0"))],
                "0",
            )
        c.add_gen(f"u{d}", d, "0", bd)
        c.add_gen(f"v{d}", d, "0", bd)
    if n == 2:
        top_bd: CrxWord = CrxWord.of_path(hemi)
    else:
        top_bd = CrxWord.of_terms(
            n - 1,
            [ActionedTerm(f"u{n-1}", 1, PathWord.identity("0")),
             ActionedTerm(f"v{n-1}", -1, PathWord.identity("0"))],
            "0",
        )
    c.add_gen("w", n, "0", top_bd)
    return c


def j1() -> CrxPresentation:
    c = disk(1)
    c.name = "J1"
    return c


def standard(kind: str, n: int = 0) -> CrxPresentation:
    kind = kind.lower()
    if kind == "point":
        return point()
    if kind == "sphere":
        return sphere(n)
    if kind == "disk":
        return disk(n)
    if kind == "globe":
        return globe(n)
    if kind == "j1":
        return j1()
    raise DomainError(f"unknown standard cell kind {kind!r}")


# -- morphisms ----------------------------------------------------------------


class CrxMorphism:
    def __init__(
        self,
        source: CrxPresentation,
        target: CrxPresentation,
        obj_map: Dict[str, str],
        gen_map: Dict[Tuple[int, str], CrxWord],
        name: str = "f",
    ):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.gen_map = dict(gen_map)
        self.name = name

    @staticmethod
    def identity(c: CrxPresentation) -> "CrxMorphism":
        obj_map = {o: o for o in c.objects}
        gen_map: Dict[Tuple[int, str], CrxWord] = {}
        for d, layer in c.gens.items():
            for g in layer.values():
                gen_map[(d, g.name)] = _gen_as_word(c, g)
        return CrxMorphism(c, c, obj_map, gen_map, name=f"id_{c.name}")

    def map_path(self, p: PathWord) -> PathWord:
        out = PathWord.identity(self.obj_map[p.start])
        for g, s in p.letters:
            img = self.gen_map[(1, g)]
            piece = img.path  # type: ignore[union-attr]
            out = out.then(piece if s == 1 else piece.inverse())
        if out.end != self.obj_map[p.end]:
            raise CompositionError(
                f"morphism {self.name} breaks endpoints of path {p}"
            )
        return out

    def map_word(self, w: CrxWord) -> CrxWord:
        if w.degree == 0:
            return CrxWord.of_object(self.obj_map[w.obj])  # type: ignore[index]
        if w.degree == 1:
            return CrxWord.of_path(self.map_path(w.path))  # type: ignore[arg-type]
        out = CrxWord.identity(w.degree, self.obj_map[w.base])
        for t in w.terms:
            img = self.gen_map[(w.degree, t.gen)]
            piece = img.power(t.exp).transported(self.map_path(t.actor))
            out = out.times(piece)
        return out

    def compose(self, then: "CrxMorphism") -> "CrxMorphism":
        """self followed by `then`."""
        obj_map = {o: then.obj_map[v] for o, v in self.obj_map.items()}
        gen_map = {k: then.map_word(w) for k, w in self.gen_map.items()}
        return CrxMorphism(self.source, then.target, obj_map, gen_map,
                           name=f"{then.name}.{self.name}")

    def check(self) -> Tuple[bool, List[str], List[str]]:
        """(ok, failures, obligations): endpoint and boundary compatibility."""
        fails: List[str] = []
        obligations: List[str] = []
        for o in self.source.objects:
            if self.obj_map.get(o) not in self.target.objects:
                fails.append(f"object {o} unmapped or maps outside target")
        for d, layer in sorted(self.source.gens.items()):
            for g in layer.values():
                img = self.gen_map.get((d, g.name))
                if img is None or img.degree != d:
                    fails.append(f"generator {g.name}: missing/degree-wrong image")
                    continue
                if d == 1:
                    if (img.path.start, img.path.end) != (  # type: ignore[union-attr]
                        self.obj_map[g.source], self.obj_map[g.target]
                    ):
                        fails.append(f"generator {g.name}: endpoints not preserved")
                else:
                    if img.base != self.obj_map[g.base]:
                        fails.append(f"generator {g.name}: basepoint not preserved")
                        continue
                    v = self.target.are_equal(
                        self.target.delta(img), self.map_word(g.boundary)  # type: ignore[arg-type]
                    )
                    if v is Verdict.NOT_EQUAL:
                        fails.append(f"generator {g.name}: boundary not preserved")
                    elif v is Verdict.UNDECIDED:
                        obligations.append(
                            f"generator {g.name}: boundary compatibility undecided"
                        )
        for idx, r in enumerate(self.source.relations):
            try:
                v = self.target.are_equal(self.map_word(r.lhs), self.map_word(r.rhs))
            except (CompositionError, KeyError) as exc:
                fails.append(f"relation {idx}: image ill-formed ({exc})")
                continue
            if v is Verdict.NOT_EQUAL:
                fails.append(f"relation {idx} (degree {r.degree}): not preserved")
            elif v is Verdict.UNDECIDED:
                obligations.append(f"relation {idx}: preservation undecided")
        return (not fails, fails, obligations)


def _gen_as_word(c: CrxPresentation, g: GenData) -> CrxWord:
    if g.degree == 1:
        return CrxWord.of_path(PathWord(((g.name, 1),), g.source, g.target))  # type: ignore[arg-type]
    return CrxWord.of_terms(
        g.degree, [ActionedTerm(g.name, 1, PathWord.identity(g.base))], g.base  # type: ignore[arg-type]
    )


def gen_word(c: CrxPresentation, degree: int, name: str, exp: int = 1) -> CrxWord:
    w = _gen_as_word(c, c.gen(degree, name))
    return w if exp == 1 else w.power(exp)


# -- pushouts -----------------------------------------------------------------


def _same_presentation(a: CrxPresentation, b: CrxPresentation) -> bool:
    if a.objects != b.objects:
        return False
    if sorted(a.gens) != sorted(b.gens):
        return False
    for d in a.gens:
        if list(a.gens[d]) != list(b.gens[d]):
            return False
        for nm in a.gens[d]:
            if a.gens[d][nm] != b.gens[d][nm]:
                return False
    return a.relations == b.relations


@dataclass
class PushoutResult:
    presentation: CrxPresentation
    left: CrxMorphism    # B -> P
    right: CrxMorphism   # C -> P


def pushout(f: CrxMorphism, g: CrxMorphism, name: str = "pushout") -> PushoutResult:
    """Pushout of B <-f- A -g-> C by gluing presentations.

    Objects are glued along the images of A's objects; generators are the
    disjoint union (renamed on collision); each positive-degree generator a of
    A contributes the relation f(a) = g(a).
    """
    if f.source is not g.source and not _same_presentation(f.source, g.source):
        raise DomainError("pushout legs must share their source")
    a, b, c = f.source, f.target, g.target

    parent: Dict[Tuple[str, str], Tuple[str, str]] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for o in b.objects:
        parent[("b", o)] = ("b", o)
    for o in c.objects:
        parent[("c", o)] = ("c", o)
    for o in a.objects:
        union(("b", f.obj_map[o]), ("c", g.obj_map[o]))

    rep_name: Dict[Tuple[str, str], str] = {}
    used: Set[str] = set()

    def obj_token(key) -> str:
        root = find(key)
        if root not in rep_name:
            base = root[1]
            tok = base
            i = 2
            while tok in used:
                tok = f"{base}_{i}"
                i += 1
            used.add(tok)
            rep_name[root] = tok
        return rep_name[root]

    p = CrxPresentation(name, bound=max(a.bound, b.bound, c.bound))
    for o in b.objects:
        p.add_object(obj_token(("b", o)))
    for o in c.objects:
        p.add_object(obj_token(("c", o)))

    gen_rename: Dict[Tuple[str, int, str], str] = {}
    taken: Set[Tuple[int, str]] = set()

    def new_gen_name(side: str, degree: int, nm: str) -> str:
        tok = nm
        i = 2
        while (degree, tok) in taken:
            tok = f"{nm}_{side}{i}"
            i += 1
        taken.add((degree, tok))
        gen_rename[(side, degree, nm)] = tok
        return tok

    def side_obj(side: str, o: str) -> str:
        return obj_token((side, o))

    def side_path(side: str, pth: PathWord) -> PathWord:
        letters = tuple((gen_rename[(side, 1, gname)], s) for gname, s in pth.letters)
        return PathWord(letters, side_obj(side, pth.start), side_obj(side, pth.end))

    def side_word(side: str, w: CrxWord) -> CrxWord:
        if w.degree == 0:
            return CrxWord.of_object(side_obj(side, w.obj))  # type: ignore[arg-type]
        if w.degree == 1:
            return CrxWord.of_path(side_path(side, w.path))  # type: ignore[arg-type]
        terms = tuple(
            ActionedTerm(gen_rename[(side, w.degree, t.gen)], t.exp,
                         side_path(side, t.actor))
            for t in w.terms
        )
        return CrxWord(degree=w.degree, terms=terms,
                       base_obj=side_obj(side, w.base))

    for side, src in (("b", b), ("c", c)):
        for d in sorted(src.gens):
            for gd in src.gens_of(d):
                if d == 1:
                    nm = new_gen_name(side, 1, gd.name)
                    p.add_gen1(nm, side_obj(side, gd.source), side_obj(side, gd.target))
                else:
                    nm = new_gen_name(side, d, gd.name)
                    p.add_gen(nm, d, side_obj(side, gd.base),
                              side_word(side, gd.boundary))  # type: ignore[arg-type]
    for side, src in (("b", b), ("c", c)):
        for r in src.relations:
            p.add_relation(r.degree, side_word(side, r.lhs), side_word(side, r.rhs))

    inj_b = CrxMorphism(
        b, p,
        {o: side_obj("b", o) for o in b.objects},
        {(d, gd.name): _gen_as_word(p, p.gen(d, gen_rename[("b", d, gd.name)]))
         for d in b.gens for gd in b.gens_of(d)},
        name="inl",
    )
    inj_c = CrxMorphism(
        c, p,
        {o: side_obj("c", o) for o in c.objects},
        {(d, gd.name): _gen_as_word(p, p.gen(d, gen_rename[("c", d, gd.name)]))
         for d in c.gens for gd in c.gens_of(d)},
        name="inr",
    )

    for d in sorted(a.gens):
        for gd in a.gens_of(d):
            wa = _gen_as_word(a, gd)
            lhs = inj_b.map_word(f.map_word(wa))
            rhs = inj_c.map_word(g.map_word(wa))
            p.add_relation(d, lhs, rhs)

    return PushoutResult(presentation=p, left=inj_b, right=inj_c)


def coproduct(b: CrxPresentation, c: CrxPresentation, name: str = "coproduct") -> PushoutResult:
    e = empty()
    f = CrxMorphism(e, b, {}, {}, name="!b")
    g = CrxMorphism(e, c, {}, {}, name="!c")
    return pushout(f, g, name=name)


def point_inclusion(c: CrxPresentation, obj: str) -> CrxMorphism:
    pt = point()
    return CrxMorphism(pt, c, {"p": obj}, {}, name=f"at_{obj}")


# -- isomorphism search -------------------------------------------------------


def _candidate_words(c: CrxPresentation, degree: int, max_len: int) -> List[CrxWord]:
    out: List[CrxWord] = []
    gens = c.gens_of(degree)
    if degree == 1:
        singles = []
        for g in gens:
            singles.append(PathWord(((g.name, 1),), g.source, g.target))
            singles.append(PathWord(((g.name, -1),), g.target, g.source))
        pool = [p for p in singles]
        if max_len >= 2:
            for p1 in singles:
                for p2 in singles:
                    if p1.end == p2.start:
                        q = p1.then(p2)
                        if q.letters:
                            pool.append(q)
        seen = set()
        for p in pool:
            key = (p.letters, p.start, p.end)
            if key not in seen:
                seen.add(key)
                out.append(CrxWord.of_path(p))
        return out
    singles2 = [
        CrxWord.of_terms(degree, [ActionedTerm(g.name, e, PathWord.identity(g.base))], g.base)
        for g in gens
        for e in (1, -1)
    ]
    out.extend(singles2)
    if max_len >= 2:
        for w1 in singles2:
            for w2 in singles2:
                if w1.base == w2.base and not (
                    len(w1.terms) == len(w2.terms) == 1
                    and w1.terms[0].gen == w2.terms[0].gen
                    and w1.terms[0].exp == -w2.terms[0].exp
                ):
                    out.append(w1.times(w2))
    return out


def _search_morphisms(
    src: CrxPresentation,
    tgt: CrxPresentation,
    obj_map: Dict[str, str],
    max_len: int,
    post_filter=None,
):
    """Yield morphisms src -> tgt over a fixed object map, short-word images."""
    degrees = sorted(d for d in src.gens if src.gens_of(d))
    flat: List[GenData] = [g for d in degrees for g in src.gens_of(d)]
    gen_map: Dict[Tuple[int, str], CrxWord] = {}

    # degrees where a summand-extendability prune is sound: both sides free there
    prunable = {
        d for d in degrees
        if not src.relations_of(d) and not tgt.relations_of(d)
        and len(src.gens_of(d)) == len(tgt.gens_of(d))
    }

    def summand_ok(degree: int, extra: CrxWord) -> bool:
        names = [g.name for g in tgt.gens_of(degree)]
        idx = {n: i for i, n in enumerate(names)}
        cols = []
        for (d, _nm), w in gen_map.items():
            if d == degree:
                col = [0] * len(names)
                for h, e in w.exponent_sums().items():
                    col[idx[h]] += e
                cols.append(col)
        col = [0] * len(names)
        for h, e in extra.exponent_sums().items():
            col[idx[h]] += e
        cols.append(col)
        snf = intmat.smith_normal_form(intmat.from_columns(cols, len(names)))
        diag = snf.diagonal()
        return len([d for d in diag if d == 1]) == len(cols)

    def fits(g: GenData, w: CrxWord) -> bool:
        if g.degree == 1:
            if (w.path.start, w.path.end) != (  # type: ignore[union-attr]
                obj_map[g.source], obj_map[g.target]
            ):
                return False
        else:
            if w.base != obj_map[g.base]:
                return False
            m = CrxMorphism(src, tgt, obj_map, gen_map)
            v = tgt.are_equal(tgt.delta(w), m.map_word(g.boundary))  # type: ignore[arg-type]
            if v is not Verdict.EQUAL:
                return False
        if g.degree in prunable and not summand_ok(g.degree, w):
            return False
        return post_filter is None or post_filter(g, w)

    def rec(k: int):
        if k == len(flat):
            yield CrxMorphism(src, tgt, obj_map, dict(gen_map))
            return
        g = flat[k]
        for w in _candidate_words(tgt, g.degree, max_len):
            if fits(g, w):
                gen_map[(g.degree, g.name)] = w
                yield from rec(k + 1)
                del gen_map[(g.degree, g.name)]

    yield from rec(0)


def find_isomorphism(
    a: CrxPresentation, b: CrxPresentation, max_len: int = 2, max_tries: int = 3000
) -> Optional[Tuple[CrxMorphism, CrxMorphism]]:
    """Search for inverse morphisms (a -> b, b -> a) with short-word images."""
    if len(a.objects) != len(b.objects):
        return None
    tried = 0
    for perm in itertools.permutations(b.objects):
        obj_ab = dict(zip(a.objects, perm))
        obj_ba = {v: k for k, v in obj_ab.items()}
        for fwd in _search_morphisms(a, b, obj_ab, max_len):
            tried += 1
            if tried > max_tries:
                return None

            def roundtrips(g: GenData, w: CrxWord) -> bool:
                img = fwd.map_word(w)
                return b.are_equal(img, _gen_as_word(b, g)) is Verdict.EQUAL

            for back in _search_morphisms(b, a, obj_ba, max_len, post_filter=roundtrips):
                if _mutually_inverse(a, b, fwd, back):
                    return (fwd, back)
                tried += 1
                if tried > max_tries:
                    return None
    return None


def _mutually_inverse(a, b, fwd: CrxMorphism, back: CrxMorphism) -> bool:
    for d in a.gens:
        for g in a.gens_of(d):
            w = _gen_as_word(a, g)
            if a.are_equal(back.map_word(fwd.map_word(w)), w) is not Verdict.EQUAL:
                return False
    for d in b.gens:
        for g in b.gens_of(d):
            w = _gen_as_word(b, g)
            if b.are_equal(fwd.map_word(back.map_word(w)), w) is not Verdict.EQUAL:
                return False
    return True
