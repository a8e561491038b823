"""Categories enriched in crossed complexes, over either monoidal structure.

A cellular presentation lists generating cells between objects; a cell of
degree d in hom(x, y) has a boundary expression over *chains*: composable
tuples of lower cells through intermediate objects.  ``realize_hom`` produces
the hom crossed complex as a CrxPresentation, generated by chains.

For the tensor flavor every composable chain of total degree d is a free
degree-d generator; boundaries follow the generators-and-relations formula
for the tensor product, iterated over the chain (head against tail), with the
degree-1 twists and the Koszul sign on the right-hand term.  For the
cartesian flavor only chains with a single positive-degree entry generate;
mixed-positive chains of degree >= 2 collapse to identities and interchange
squares become relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .complex import CrxPresentation
from .words import ActionedTerm, CompositionError, CrxWord, DomainError, PathWord

Chain = Tuple[str, ...]               # cell names, composable left to right
HomPath = Tuple[Tuple[Chain, int], ...]
HomTerm = Tuple[Chain, int, HomPath]  # (chain, exponent, actor path of chains)

TENSOR = "tensor"
CARTESIAN = "cartesian"


@dataclass(frozen=True)
class StructuredHom:
    """Symbolic hom object: point / empty / contractible groupoid on an index
    set / one-object group.  Index set and group are the integers ('Z') or a
    finite Z/m (kind detail m)."""

    kind: str                 # point | empty | contractible | group
    detail: str = ""          # 'Z' or an integer modulus as a string

    def __str__(self) -> str:
        return f"{self.kind}:{self.detail}" if self.detail else self.kind


@dataclass
class Cell:
    name: str
    dom: str
    cod: str
    degree: int
    src: Optional[Chain] = None        # degree 1: source 0-chain
    tgt: Optional[Chain] = None        # degree 1: target 0-chain
    boundary_path: Optional[HomPath] = None   # degree 2
    boundary_terms: Optional[Tuple[HomTerm, ...]] = None  # degree >= 3
    base: Optional[Chain] = None       # degree >= 2 basepoint 0-chain


@dataclass
class HomRelation:
    x: str
    y: str
    degree: int
    lhs_path: Optional[HomPath] = None
    rhs_path: Optional[HomPath] = None
    lhs_terms: Optional[Tuple[HomTerm, ...]] = None
    rhs_terms: Optional[Tuple[HomTerm, ...]] = None
    base: Optional[Chain] = None


class EnrichedPresentation:
    def __init__(self, name: str, flavor: str, objects: Sequence[str]):
        if flavor not in (TENSOR, CARTESIAN):
            raise DomainError(f"flavor must be tensor or cartesian, got {flavor}")
        self.name = name
        self.flavor = flavor
        self.objects: List[str] = list(objects)
        self.cells: Dict[str, Cell] = {}
        self.structured: Dict[Tuple[str, str], StructuredHom] = {}
        self.hom_relations: List[HomRelation] = []
        self.display: Dict[str, str] = {}

    # -- construction -------------------------------------------------------

    def add_cell0(self, name: str, dom: str, cod: str) -> Cell:
        return self._add(Cell(name, dom, cod, 0))

    def add_cell1(self, name: str, dom: str, cod: str, src: Chain, tgt: Chain) -> Cell:
        return self._add(Cell(name, dom, cod, 1, src=src, tgt=tgt))

    def add_cell2(self, name: str, dom: str, cod: str, boundary: HomPath,
                  base: Optional[Chain] = None) -> Cell:
        if base is None:
            base = self.path_start(dom, boundary)
        return self._add(Cell(name, dom, cod, 2, boundary_path=boundary, base=base))

    def add_cell(self, name: str, dom: str, cod: str, degree: int,
                 terms: Tuple[HomTerm, ...], base: Chain) -> Cell:
        if degree < 3:
            raise DomainError("use add_cell0/1/2")
        return self._add(Cell(name, dom, cod, degree, boundary_terms=terms, base=base))

    def _add(self, cell: Cell) -> Cell:
        if cell.name in self.cells:
            raise DomainError(f"duplicate cell {cell.name}")
        if cell.dom not in self.objects or cell.cod not in self.objects:
            raise DomainError(f"cell {cell.name}: unknown objects")
        self.cells[cell.name] = cell
        return cell

    def set_structured(self, x: str, y: str, hom: StructuredHom) -> None:
        self.structured[(x, y)] = hom

    # -- chain geometry -------------------------------------------------------

    def cell(self, name: str) -> Cell:
        try:
            return self.cells[name]
        except KeyError as exc:
            raise DomainError(f"unknown cell {name}") from exc

    def chain_degree(self, ch: Chain) -> int:
        return sum(self.cell(n).degree for n in ch)

    def chain_dom(self, ch: Chain, at: Optional[str] = None) -> str:
        return self.cell(ch[0]).dom if ch else at  # type: ignore[return-value]

    def chain_cod(self, ch: Chain, at: Optional[str] = None) -> str:
        return self.cell(ch[-1]).cod if ch else at  # type: ignore[return-value]

    def chain_composable(self, ch: Chain) -> bool:
        for a, b in zip(ch, ch[1:]):
            if self.cell(a).cod != self.cell(b).dom:
                return False
        return True

    def base_chain_of_cell(self, name: str) -> Chain:
        c = self.cell(name)
        if c.degree == 0:
            return (name,)
        if c.degree == 1:
            return c.src  # type: ignore[return-value]
        return c.base  # type: ignore[return-value]

    def tgt_chain_of_cell(self, name: str) -> Chain:
        c = self.cell(name)
        if c.degree == 0:
            return (name,)
        if c.degree == 1:
            return c.tgt  # type: ignore[return-value]
        return c.base  # type: ignore[return-value]

    def base_chain(self, ch: Chain) -> Chain:
        out: List[str] = []
        for n in ch:
            out.extend(self.base_chain_of_cell(n))
        return tuple(out)

    def tgt_chain(self, ch: Chain) -> Chain:
        out: List[str] = []
        for n in ch:
            out.extend(self.tgt_chain_of_cell(n))
        return tuple(out)

    def path_start(self, dom: str, path: HomPath) -> Chain:
        if not path:
            raise DomainError("empty hom path needs an explicit base")
        ch, s = path[0]
        return self.base_chain(ch) if s == 1 else self.tgt_chain(ch)

    def positive_entries(self, ch: Chain) -> List[int]:
        return [i for i, n in enumerate(ch) if self.cell(n).degree > 0]

    # -- enumeration ----------------------------------------------------------

    def chains_between(
        self, x: str, y: str, max_len: int, max_deg: int
    ) -> List[Chain]:
        """All composable chains x -> y with length <= max_len and degree <=
        max_deg, in deterministic (length, declaration-index) order."""
        order = {n: i for i, n in enumerate(self.cells)}
        by_dom: Dict[str, List[Cell]] = {}
        for c in self.cells.values():
            by_dom.setdefault(c.dom, []).append(c)
        out: List[Chain] = []
        if x == y:
            out.append(())

        def rec(at: str, acc: List[str], deg: int):
            if len(acc) >= max_len:
                return
            for c in by_dom.get(at, []):
                nd = deg + c.degree
                if nd > max_deg:
                    continue
                acc.append(c.name)
                if c.cod == y:
                    out.append(tuple(acc))
                rec(c.cod, acc, nd)
                acc.pop()

        rec(x, [], 0)
        out.sort(key=lambda ch: (len(ch), tuple(order[n] for n in ch)))
        return out


# -- the boundary calculus ----------------------------------------------------


class ChainWords:
    """Formal word algebra over chains of one enriched presentation.

    Words are CrxWord-shaped but letters are Chain tuples; the realization
    maps them to tokens afterwards.
    """

    def __init__(self, cat: EnrichedPresentation):
        self.cat = cat

    # words are represented as:
    #   degree 0: Chain
    #   degree 1: list[(Chain, sign)]
    #   degree >= 2: list[HomTerm] together with a base Chain

    def prefix_path(self, pre: Chain, path: HomPath) -> HomPath:
        return tuple((pre + ch, s) for ch, s in path)

    def suffix_path(self, path: HomPath, suf: Chain) -> HomPath:
        return tuple((ch + suf, s) for ch, s in path)

    def prefix_terms(self, pre: Chain, terms: Sequence[HomTerm]) -> List[HomTerm]:
        return [(pre + ch, e, self.prefix_path(pre, act)) for ch, e, act in terms]

    def suffix_terms(self, terms: Sequence[HomTerm], suf: Chain) -> List[HomTerm]:
        return [(ch + suf, e, self.suffix_path(act, suf)) for ch, e, act in terms]

    def invert_path(self, path: HomPath) -> HomPath:
        return tuple((ch, -s) for ch, s in reversed(path))

    def invert_terms(self, terms: Sequence[HomTerm]) -> List[HomTerm]:
        return [(ch, -e, act) for ch, e, act in reversed(terms)]

    def transport_terms(self, terms: Sequence[HomTerm], actor: HomPath) -> List[HomTerm]:
        return [(ch, e, actor + act) for ch, e, act in terms]

    # -- expansions of a degree-1 word against positive-degree data ---------

    def left_expand(self, path: HomPath, tail: Chain, tail_src: Chain) -> List[HomTerm]:
        """(path of degree-1 chains) tensor (tail chain of degree >= 1):
        per-letter twisted rule with accumulating whisker actors."""
        out: List[HomTerm] = []
        for i, (ch, s) in enumerate(path):
            if s == 1:
                pre = path[:i]
            else:
                pre = path[: i + 1]
            actor = tuple((c + tail_src, t) for c, t in pre)
            out.append((ch + tail, s, actor))
        out.reverse()
        return out

    def right_expand(self, head: Chain, head_src: Chain, path: HomPath) -> List[HomTerm]:
        """(head chain of degree >= 1) tensor (path of degree-1 chains)."""
        out: List[HomTerm] = []
        for i, (ch, s) in enumerate(path):
            if s == 1:
                pre = path[:i]
            else:
                pre = path[: i + 1]
            actor = tuple((head_src + c, t) for c, t in pre)
            out.append((head + ch, s, actor))
        return out

    # -- boundary of a chain -------------------------------------------------

    def cell_boundary_path(self, name: str) -> HomPath:
        c = self.cat.cell(name)
        if c.degree != 2:
            raise DomainError(f"{name} is not a 2-cell")
        return c.boundary_path  # type: ignore[return-value]

    def cell_boundary_terms(self, name: str) -> Tuple[HomTerm, ...]:
        c = self.cat.cell(name)
        if c.degree < 3:
            raise DomainError(f"{name} is not a >=3 cell")
        return c.boundary_terms  # type: ignore[return-value]

    def chain_boundary(self, ch: Chain):
        """Boundary of a chain of degree >= 2: a HomPath if the chain has
        degree 2, else a list of HomTerm."""
        cat = self.cat
        deg = cat.chain_degree(ch)
        if deg < 2:
            raise DomainError("chain_boundary needs degree >= 2")
        # strip degree-0 head/tail entries by whiskering
        k = 0
        while cat.cell(ch[k]).degree == 0:
            k += 1
        pre = ch[:k]
        rest = ch[k:]
        if pre:
            inner = self.chain_boundary(rest)
            if deg == 2:
                return self.prefix_path(pre, inner)
            return self.prefix_terms(pre, inner)
        j = len(rest)
        while cat.cell(rest[j - 1]).degree == 0:
            j -= 1
        suf = rest[j:]
        core = rest[:j]
        if suf:
            inner = self.chain_boundary(core)
            if deg == 2:
                return self.suffix_path(inner, suf)
            return self.suffix_terms(inner, suf)
        # core starts and ends with positive cells
        head, tail = core[0], core[1:]
        hc = cat.cell(head)
        m = hc.degree
        n = cat.chain_degree(tail)
        if not tail:
            # a single cell: its declared boundary
            if m == 2:
                return list(self.cell_boundary_path(head))
            return list(self.cell_boundary_terms(head))
        if n == 0:
            inner = self.chain_boundary((head,))
            if deg == 2:
                return self.suffix_path(inner, tail)
            return self.suffix_terms(inner, tail)
        if m == 0:
            inner = self.chain_boundary(tail)
            if deg == 2:
                return self.prefix_path((head,), inner)
            return self.prefix_terms((head,), inner)

        s_head = cat.base_chain_of_cell(head)
        t_head = cat.tgt_chain_of_cell(head)
        s_tail = cat.base_chain(tail)
        t_tail = cat.tgt_chain(tail)

        if m == 1 and n == 1:
            # the non-commuting square, as a composable path:
            #   (c ox sd) ; (tc ox d) ; (c ox td)^-1 ; (sc ox d)^-1
            return [
                ((head,) + s_tail, 1),
                (t_head + tail, 1),
                ((head,) + t_tail, -1),
                (s_head + tail, -1),
            ]

        if m == 1:  # n >= 2
            # stored: (c ox dd)^-1 . (tc ox d)^[c ox sd] . (sc ox d)^-1
            dd = self.chain_boundary(tail)  # degree n-1
            if n == 2:
                part = self.invert_terms(self.right_expand((head,), s_head, dd))
            else:
                part = self.invert_terms(
                    [( (head,) + c2, e2, self.prefix_path(s_head, a2) )
                     for c2, e2, a2 in dd]
                )
            actor: HomPath = (((head,) + s_tail, 1),)
            out = list(part)
            out.append((t_head + tail, 1, actor))
            out.append((s_head + tail, -1, ()))
            return out

        if n == 1:  # m >= 2
            # stored: [(c ox td)^[sc ox d] . (c ox sd)^-1]^((-1)^m) . (dc ox d)
            dc = self.chain_boundary((head,))  # degree m-1
            if m == 2:
                part = self.left_expand(dc, tail, s_tail)
            else:
                part = [(c2 + tail, e2, self.suffix_path(a2, s_tail))
                        for c2, e2, a2 in dc]
            actor: HomPath = ((s_head + tail, 1),)
            repl: List[HomTerm] = [
                ((head,) + t_tail, 1, actor),
                ((head,) + s_tail, -1, ()),
            ]
            if m % 2 == 1:
                repl = self.invert_terms(repl)
            return repl + list(part)

        # m >= 2 and n >= 2: stored (c ox dd)^((-1)^m) . (dc ox d)
        dd = self.chain_boundary(tail)
        if n == 2:
            right = self.right_expand((head,), s_head, dd)
        else:
            right = [((head,) + c2, e2, self.prefix_path(s_head, a2))
                     for c2, e2, a2 in dd]
        if m % 2 == 1:
            right = self.invert_terms(right)
        dc = self.chain_boundary((head,))
        if m == 2:
            left = self.left_expand(dc, tail, s_tail)
        else:
            left = [(c2 + tail, e2, self.suffix_path(a2, s_tail))
                    for c2, e2, a2 in dc]
        return list(right) + list(left)


# -- realization ---------------------------------------------------------------


@dataclass
class RealizedHom:
    presentation: CrxPresentation
    chain_token: Dict[Chain, str]
    token_chain: Dict[str, Chain]
    complete: bool
    notes: List[str] = field(default_factory=list)


class ResourceBound(Exception):
    def __init__(self, message: str, partial: Optional[RealizedHom] = None):
        super().__init__(message)
        self.partial = partial


def _default_token(cat: EnrichedPresentation, ch: Chain, x: str, joiner: str) -> str:
    if not ch:
        return f"id_{x}"
    return joiner.join(cat.display.get(n, n) for n in ch)


def realize_hom(
    cat: EnrichedPresentation,
    x: str,
    y: str,
    max_len: int = 6,
    max_deg: int = 6,
    joiner: str = "_o_",
    name: Optional[str] = None,
    strict_bounds: bool = False,
) -> RealizedHom:
    """The hom crossed complex generated by composable chains x -> y.

    Boundaries whose letters exceed the chain-length bound mark the result
    incomplete (ResourceBound if strict_bounds is set).
    """
    if (x, y) in cat.structured:
        raise DomainError(
            f"hom ({x},{y}) is structured ({cat.structured[(x, y)]}); "
            "realize_hom needs a cellular hom"
        )
    cw = ChainWords(cat)
    chains = cat.chains_between(x, y, max_len, max_deg)
    if cat.flavor == CARTESIAN:
        gens = [ch for ch in chains if len(cat.positive_entries(ch)) <= 1]
    else:
        gens = chains
    token: Dict[Chain, str] = {}
    used: Set[str] = set()
    for ch in gens:
        t = _default_token(cat, ch, x, joiner)
        i = 2
        base = t
        while t in used:
            t = f"{base}_{i}"
            i += 1
        used.add(t)
        token[ch] = t

    pres = CrxPresentation(name or f"{cat.name}[{x},{y}]",
                           bound=max(max_deg, 2))
    notes: List[str] = []
    complete = True

    def tok(ch: Chain) -> Optional[str]:
        if ch in token:
            return token[ch]
        return None

    zero_chains = [ch for ch in gens if cat.chain_degree(ch) == 0]
    for ch in zero_chains:
        pres.add_object(token[ch])

    def src_tgt_chains(ch: Chain) -> Tuple[Chain, Chain]:
        i = cat.positive_entries(ch)[0]
        c = cat.cell(ch[i])
        return (ch[:i] + c.src + ch[i + 1:], ch[:i] + c.tgt + ch[i + 1:])  # type: ignore[operator]

    # degree-1 generators (always chains with a single degree-1 entry)
    for ch in gens:
        if cat.chain_degree(ch) != 1:
            continue
        s_chain, t_chain = src_tgt_chains(ch)
        ts, tt = tok(s_chain), tok(t_chain)
        if ts is None or tt is None:
            complete = False
            notes.append(f"degree-1 chain {token[ch]}: endpoint beyond bounds")
            continue
        pres.add_gen1(token[ch], ts, tt)

    def path_word(path, at: Chain) -> Optional[PathWord]:
        at_tok = tok(at)
        if at_tok is None:
            return None
        if not path:
            return PathWord.identity(at_tok)
        letters = []
        for ch, s in path:
            t = tok(ch)
            if t is None or not pres.has_gen(1, t):
                return None
            letters.append((t, s))
        try:
            return pres.path(letters)
        except (CompositionError, KeyError):
            return None

    def terms_word(degree: int, terms, base: Chain) -> Optional[CrxWord]:
        base_tok = tok(base)
        if base_tok is None:
            return None
        tlist = []
        for ch, e, act in terms:
            if cat.flavor == CARTESIAN and len(cat.positive_entries(ch)) > 1:
                continue  # mixed-positive chains collapse to identities
            t = tok(ch)
            if t is None or not pres.has_gen(degree, t):
                return None
            ap = path_word(act, base)
            if ap is None:
                return None
            tlist.append(ActionedTerm(t, e, ap))
        return CrxWord.of_terms(degree, tlist, base_tok)

    # degree >= 2 generators with boundaries
    for d in range(2, max_deg + 1):
        for ch in gens:
            if cat.chain_degree(ch) != d:
                continue
            base = cat.base_chain(ch)
            base_tok = tok(base)
            if base_tok is None:
                complete = False
                notes.append(f"chain {token[ch]}: basepoint beyond bounds")
                continue
            try:
                bd = cw.chain_boundary(ch)
            except DomainError as exc:
                complete = False
                notes.append(f"chain {token[ch]}: {exc}")
                continue
            if d == 2:
                w = path_word(bd, base)
                if w is None:
                    complete = False
                    notes.append(f"chain {token[ch]}: boundary beyond bounds")
                    continue
                pres.add_gen(token[ch], 2, base_tok, CrxWord.of_path(w))
            else:
                w = terms_word(d - 1, bd, base)
                if w is None:
                    complete = False
                    notes.append(f"chain {token[ch]}: boundary beyond bounds")
                    continue
                pres.add_gen(token[ch], d, base_tok, w)

    if cat.flavor == CARTESIAN:
        _add_cartesian_relations(cat, pres, chains, gens, token, path_word)

    result = RealizedHom(presentation=pres, chain_token=token,
                         token_chain={v: k for k, v in token.items()},
                         complete=complete, notes=notes)
    if not complete and strict_bounds:
        raise ResourceBound("; ".join(notes), partial=result)
    return result


def _add_cartesian_relations(cat, pres, chains, gens, token, path_word) -> None:
    """Interchange squares for (1,1)-mixed chains and elementary transport
    relations making the action componentwise."""
    cw = ChainWords(cat)

    def tok(ch):
        return token.get(ch)

    # interchange: chains of degree 2 with two degree-1 entries
    for ch in chains:
        pos = cat.positive_entries(ch)
        if len(pos) != 2 or cat.chain_degree(ch) != 2:
            continue
        i, j = pos
        u, v = cat.cell(ch[i]), cat.cell(ch[j])
        if u.degree != 1 or v.degree != 1:
            continue

        def subst(k: int, repl: Chain) -> Chain:
            return ch[:k] + repl + ch[k + 1:]

        a1 = subst(j, v.src)       # u kept, v at source
        a2 = subst(i, u.tgt)       # v kept, u at target
        b1 = subst(i, u.src)       # v kept, u at source
        b2 = subst(j, v.tgt)       # u kept, v at target
        base = cat.base_chain(ch)
        lhs = path_word([(a1, 1), (a2, 1)], base)
        rhs = path_word([(b1, 1), (b2, 1)], base)
        if lhs is not None and rhs is not None:
            pres.add_relation(1, CrxWord.of_path(lhs), CrxWord.of_path(rhs))

    # elementary transports: a degree-1 generator whose positive cell moves a
    # parallel block of a degree >= 2 generator's base chain
    higher = [ch for ch in gens if cat.chain_degree(ch) >= 2
              and len(cat.positive_entries(ch)) == 1]
    ones = [ch for ch in gens if cat.chain_degree(ch) == 1]
    for g in higher:
        i = cat.positive_entries(g)[0]
        e = cat.cell(g[i])
        p_part, q_part = g[:i], g[i + 1:]
        base_e = cat.base_chain_of_cell(g[i])
        base_g = p_part + base_e + q_part
        d = cat.chain_degree(g)
        for w in ones:
            jw = cat.positive_entries(w)[0]
            f = cat.cell(w[jw])
            a_part, b_part = w[:jw], w[jw + 1:]
            if a_part + f.tgt + b_part != base_g:  # type: ignore[operator]
                continue
            la, lt = len(a_part), len(f.tgt)  # type: ignore[arg-type]
            # the moved block must avoid the base_e region
            lo, hi = len(p_part), len(p_part) + len(base_e)
            if la + lt <= lo:
                new_p = (a_part + f.src + b_part)[: lo + len(f.src) - lt]  # type: ignore[operator]
                g2 = new_p + (g[i],) + q_part
            elif la >= hi:
                shift = la - hi
                new_q = q_part[:shift] + f.src + q_part[shift + lt:]  # type: ignore[operator]
                g2 = p_part + (g[i],) + new_q
            else:
                continue
            t_g, t_g2, t_w = tok(g), tok(g2), tok(w)
            if t_g is None or t_g2 is None or t_w is None:
                continue
            if not (pres.has_gen(d, t_g) and pres.has_gen(d, t_g2)
                    and pres.has_gen(1, t_w)):
                continue
            actor = path_word([(w, 1)], cat.base_chain(g2))
            if actor is None:
                continue
            lhs = CrxWord.of_terms(d, [ActionedTerm(t_g, 1, actor)], actor.start)
            rhs = CrxWord.of_terms(
                d, [ActionedTerm(t_g2, 1, PathWord.identity(actor.start))], actor.start
            )
            pres.add_relation(d, lhs, rhs)


# -- suspension and hom extraction ----------------------------------------------


def suspension(v, flavor: str, name: Optional[str] = None) -> EnrichedPresentation:
    """Two objects 0, 1 with hom(0,1) = V; endomorphism homs are points."""
    cat = EnrichedPresentation(name or f"S({v.name})", flavor, ["0", "1"])
    for o in v.objects:
        cat.add_cell0(f"o_{o}", "0", "1")
        cat.display[f"o_{o}"] = o
    for deg in sorted(v.gens):
        for g in v.gens_of(deg):
            nm = f"c{deg}_{g.name}"
            if deg == 1:
                cat.add_cell1(nm, "0", "1", (f"o_{g.source}",), (f"o_{g.target}",))
            elif deg == 2:
                path = tuple(((f"c1_{h}",), s) for h, s in g.boundary.path.letters)
                cat.add_cell2(nm, "0", "1", path, base=(f"o_{g.base}",))
            else:
                terms = tuple(
                    ((f"c{deg-1}_{t.gen}",), t.exp,
                     tuple(((f"c1_{h}",), s) for h, s in t.actor.letters))
                    for t in g.boundary.terms
                )
                cat.add_cell(nm, "0", "1", deg, terms, base=(f"o_{g.base}",))
            cat.display[nm] = g.name
    cat.set_structured("1", "0", StructuredHom("empty"))
    return cat


def one_object_unit() -> EnrichedPresentation:
    """The unit enriched category: one object, hom the point."""
    return EnrichedPresentation("unit-cat", TENSOR, ["0"])


# -- the standard interval categories -------------------------------------------


def interval(flavor: str = TENSOR) -> EnrichedPresentation:
    """The generating interval: f, g and the invertibility paths l1, l2."""
    cat = EnrichedPresentation("I", flavor, ["0", "1"])
    cat.add_cell0("f", "0", "1")
    cat.add_cell0("g", "1", "0")
    cat.add_cell1("l1", "0", "0", (), ("f", "g"))
    cat.add_cell1("l2", "1", "1", (), ("g", "f"))
    return cat


def istar(flavor: str = TENSOR) -> EnrichedPresentation:
    """The endomorphism restriction of the interval: free on k, h1, h2."""
    cat = EnrichedPresentation("iI", flavor, ["0"])
    cat.add_cell0("k", "0", "0")
    cat.add_cell1("h1", "0", "0", (), ("k",))
    cat.add_cell1("h2", "0", "0", ("k",), ("k", "k"))
    return cat


def itilde(flavor: str = TENSOR) -> EnrichedPresentation:
    """The fattened interval with the eleven generating cells."""
    cat = EnrichedPresentation("Itilde", flavor, ["0", "1"])
    cat.add_cell0("f", "0", "1")
    cat.add_cell0("g", "1", "0")
    cat.add_cell0("k", "0", "0")
    cat.add_cell1("l1", "0", "0", (), ("f", "g"))
    cat.add_cell1("l2", "1", "1", (), ("g", "f"))
    cat.add_cell1("h1", "0", "0", (), ("k",))
    cat.add_cell1("h2", "0", "0", ("k",), ("k", "k"))
    cat.add_cell1("a", "0", "0", ("f", "g"), ("k",))
    cat.add_cell1("b", "0", "0", ("f", "g", "f", "g"), ("k", "k"))
    # alpha: loop l1 ; a ; h1^-1 at the empty chain
    cat.add_cell2("alpha", "0", "0",
                  ((("l1",), 1), (("a",), 1), (("h1",), -1)), base=())
    # beta: loop (f l2 g) ; (f g a) ; (a k) ; h2^-1 ; a^-1 at (f, g)
    cat.add_cell2("beta", "0", "0",
                  ((("f", "l2", "g"), 1), (("f", "g", "a"), 1), (("a", "k"), 1),
                   (("h2",), -1), (("a",), -1)),
                  base=("f", "g"))
    return cat


def p11(flavor: str = TENSOR) -> EnrichedPresentation:
    """Two suspended intervals glued end to end: three objects."""
    cat = EnrichedPresentation("P11", flavor, ["0", "1", "2"])
    cat.add_cell0("x0", "0", "1")
    cat.add_cell0("x1", "0", "1")
    cat.add_cell1("e", "0", "1", ("x0",), ("x1",))
    cat.add_cell0("y0", "1", "2")
    cat.add_cell0("y1", "1", "2")
    cat.add_cell1("ee", "1", "2", ("y0",), ("y1",))
    for (x, y) in (("1", "0"), ("2", "0"), ("2", "1")):
        cat.set_structured(x, y, StructuredHom("empty"))
    return cat


def standard_category(kind: str, flavor: str = TENSOR):
    kind = kind.lower()
    if kind == "i":
        return interval(flavor)
    if kind == "istar":
        return istar(flavor)
    if kind == "itilde":
        return itilde(flavor)
    if kind == "p11":
        return p11(flavor)
    if kind == "unit":
        return one_object_unit()
    raise DomainError(f"unknown standard category {kind!r}")


# -- functors --------------------------------------------------------------------


@dataclass
class CellImage:
    """Image of a cell: a word over chains of the target hom, or a symbolic
    value in a structured hom."""

    degree: int
    chain: Optional[Chain] = None            # degree 0 cellular
    path: Optional[HomPath] = None           # degree 1 cellular
    terms: Optional[Tuple[HomTerm, ...]] = None  # degree >= 2 cellular
    base: Optional[Chain] = None
    symbol: Optional[tuple] = None           # structured value

    @staticmethod
    def of_chain(ch: Chain) -> "CellImage":
        return CellImage(degree=0, chain=ch)

    @staticmethod
    def of_path(path: HomPath) -> "CellImage":
        return CellImage(degree=1, path=path)

    @staticmethod
    def of_terms(degree: int, terms: Tuple[HomTerm, ...], base: Chain) -> "CellImage":
        return CellImage(degree=degree, terms=terms, base=base)

    @staticmethod
    def of_symbol(degree: int, sym: tuple) -> "CellImage":
        return CellImage(degree=degree, symbol=sym)


@dataclass
class StructuredMap:
    """Canonical hom maps between structured homs."""

    kind: str    # identity | cover | to-point | unit


class EnrichedFunctor:
    def __init__(self, source: EnrichedPresentation, target: EnrichedPresentation,
                 obj_map: Dict[str, str], cell_map: Dict[str, CellImage],
                 hom_maps: Optional[Dict[Tuple[str, str], StructuredMap]] = None,
                 name: str = "F"):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.cell_map = dict(cell_map)
        self.hom_maps = dict(hom_maps or {})
        self.name = name

    @staticmethod
    def identity(cat: EnrichedPresentation) -> "EnrichedFunctor":
        cell_map = {}
        for c in cat.cells.values():
            if c.degree == 0:
                cell_map[c.name] = CellImage.of_chain((c.name,))
            elif c.degree == 1:
                cell_map[c.name] = CellImage.of_path((((c.name,), 1),))
            else:
                cell_map[c.name] = CellImage.of_terms(
                    c.degree, (((c.name,), 1, ()),), cat.base_chain_of_cell(c.name)
                )
        hom_maps = {xy: StructuredMap("identity") for xy in cat.structured}
        return EnrichedFunctor(cat, cat, obj_map={o: o for o in cat.objects},
                               cell_map=cell_map, hom_maps=hom_maps,
                               name=f"id_{cat.name}")

    # -- evaluation -------------------------------------------------------

    def map_chain(self, ch: Chain) -> CellImage:
        """Image of a composable chain (cellular target).  Supports chains
        with at most one positive-degree slot whose image is a single word,
        which covers every cellular verification in the corpus."""
        tgt = self.target
        deg = self.source.chain_degree(ch)
        if deg == 0:
            out: List[str] = []
            for n in ch:
                img = self.cell_map[n]
                if img.chain is None:
                    raise DomainError(f"cell {n}: expected 0-chain image")
                out.extend(img.chain)
            return CellImage.of_chain(tuple(out))
        pos = self.source.positive_entries(ch)
        if len(pos) > 1:
            raise DomainError(
                f"chain {ch}: mixed-positive functor evaluation not supported"
            )
        i = pos[0]
        pre = self.map_chain(ch[:i]).chain if ch[:i] else ()
        suf = self.map_chain(ch[i + 1:]).chain if ch[i + 1:] else ()
        img = self.cell_map[ch[i]]
        if img.symbol is not None:
            raise DomainError("structured image inside a cellular chain")
        if img.degree == 1:
            path = tuple((pre + c + suf, s) for c, s in img.path)  # type: ignore[union-attr]
            return CellImage.of_path(path)
        terms = tuple(
            (pre + c + suf, e, tuple((pre + ac + suf, s) for ac, s in act))
            for c, e, act in img.terms  # type: ignore[union-attr]
        )
        return CellImage.of_terms(img.degree, terms, pre + (img.base or ()) + suf)

    def map_hom_path(self, path: HomPath) -> HomPath:
        out: List[Tuple[Chain, int]] = []
        for ch, s in path:
            img = self.map_chain(ch)
            piece = img.path  # type: ignore[union-attr]
            if piece is None:
                raise DomainError("degree mismatch in path image")
            if s == -1:
                piece = tuple((c, -t) for c, t in reversed(piece))
            out.extend(piece)
        return tuple(out)

    def map_hom_terms(self, terms: Sequence[HomTerm]) -> List[HomTerm]:
        out: List[HomTerm] = []
        for ch, e, act in terms:
            img = self.map_chain(ch)
            if img.terms is None:
                raise DomainError("degree mismatch in term image")
            block = list(img.terms)
            if e < 0:
                block = [(c, -x, a) for c, x, a in reversed(block)]
            for _ in range(abs(e) - 1):
                block = block + block[: len(img.terms)]
            actor = self.map_hom_path(act)
            out.extend((c, x, actor + a) for c, x, a in block)
        return out

    def compose(self, then: "EnrichedFunctor") -> "EnrichedFunctor":
        obj_map = {o: then.obj_map[v] for o, v in self.obj_map.items()}
        cell_map: Dict[str, CellImage] = {}
        for nm, img in self.cell_map.items():
            if img.symbol is not None:
                cell_map[nm] = then.map_symbol_image(img, self.source.cell(nm))
            elif img.degree == 0:
                cell_map[nm] = then.map_chain(img.chain)  # type: ignore[arg-type]
            elif img.degree == 1:
                cell_map[nm] = CellImage.of_path(then.map_hom_path(img.path))  # type: ignore[arg-type]
            else:
                base = then.map_chain(img.base or ()).chain if img.base is not None else ()
                cell_map[nm] = CellImage.of_terms(
                    img.degree, tuple(then.map_hom_terms(img.terms)), base or ()  # type: ignore[arg-type]
                )
        return EnrichedFunctor(self.source, then.target, obj_map, cell_map,
                               name=f"{then.name}.{self.name}")

    def map_symbol_image(self, img: CellImage, cell: Cell) -> CellImage:
        hom = (self.obj_map.get(cell.dom), self.obj_map.get(cell.cod))
        sm = self.hom_maps.get((cell.dom, cell.cod))
        raise DomainError("composition through structured homs not supported here")
