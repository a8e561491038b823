"""Vertex-group presentations of the fundamental groupoid and bounded
Tietze simplification.

pi1 of a crossed complex is the base groupoid modulo boundaries of 2-cells.
We present its vertex group at a basepoint via a spanning tree, then run a
deterministic, budgeted sequence of Tietze moves.  Within budget we certify
`trivial` or `free of rank r`; otherwise the verdict is `undecided`, never a
guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .words import ActionedTerm, CrxWord, PathWord

Relator = Tuple[Tuple[str, int], ...]


def _free_reduce(word: Sequence[Tuple[str, int]]) -> List[Tuple[str, int]]:
    out: List[Tuple[str, int]] = []
    for let in word:
        if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
            out.pop()
        else:
            out.append(let)
    return out


def _cyclic_reduce(word: Sequence[Tuple[str, int]]) -> List[Tuple[str, int]]:
    w = _free_reduce(word)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return w


def _invert(word: Sequence[Tuple[str, int]]) -> List[Tuple[str, int]]:
    return [(g, -s) for (g, s) in reversed(word)]


@dataclass
class GroupPresentation:
    generators: List[str]
    relators: List[Relator]
    tag: str = "undecided"  # trivial | free | undecided

    def free_rank(self) -> Optional[int]:
        if self.tag == "trivial":
            return 0
        if self.tag == "free":
            return len(self.generators)
        return None

    def abelianization(self):
        from . import intmat

        idx = {g: i for i, g in enumerate(self.generators)}
        cols = []
        for r in self.relators:
            col = [0] * len(self.generators)
            for g, s in r:
                col[idx[g]] += s
            cols.append(col)
        m = intmat.from_columns(cols, len(self.generators))
        return intmat.cokernel_structure(m, ambient_rank=len(self.generators))


def tietze_reduce(pres: GroupPresentation, budget: int = 10_000) -> GroupPresentation:
    gens = list(pres.generators)
    relators: List[List[Tuple[str, int]]] = [
        _cyclic_reduce(r) for r in pres.relators
    ]
    relators = [r for r in relators if r]
    moves = 0

    while moves <= budget:
        moves += 1
        # dedupe up to rotation and inversion
        seen = set()
        kept = []
        for r in relators:
            keys = set()
            for w in (r, _invert(r)):
                for i in range(len(w)):
                    keys.add(tuple(w[i:] + w[:i]))
            if not (keys & seen):
                kept.append(r)
                seen |= keys
        relators = kept
        # a length-1 relator kills its generator
        unit = next((r for r in relators if len(r) == 1), None)
        if unit is not None:
            g = unit[0][0]
            gens.remove(g)
            relators = [
                _cyclic_reduce([let for let in r if let[0] != g])
                for r in relators
                if r is not unit
            ]
            relators = [r for r in relators if r]
            continue
        # substitute a generator that occurs exactly once in some relator
        sub = None
        for ri, r in enumerate(relators):
            counts: Dict[str, int] = {}
            for g, _s in r:
                counts[g] = counts.get(g, 0) + 1
            for i, (g, s) in enumerate(r):
                if counts[g] == 1:
                    sub = (ri, i, g, s)
                    break
            if sub:
                break
        if sub is None:
            break
        ri, i, g, s = sub
        r = relators[ri]
        rest = r[i + 1:] + r[:i]               # relator ~ (g,s) . rest
        repl = _invert(rest)                   # g^s = rest^-1
        if s == -1:
            repl = _invert(repl)
        new_relators = []
        for rj, rr in enumerate(relators):
            if rj == ri:
                continue
            out: List[Tuple[str, int]] = []
            for h, t in rr:
                if h == g:
                    out.extend(repl if t == 1 else _invert(repl))
                else:
                    out.append((h, t))
            w = _cyclic_reduce(out)
            if w:
                new_relators.append(w)
        gens.remove(g)
        relators = new_relators
        moves += len(relators)

    tag = "undecided"
    if not gens and not relators:
        tag = "trivial"
    elif not relators:
        tag = "free"
    return GroupPresentation(
        generators=gens, relators=[tuple(r) for r in relators], tag=tag
    )


# -- from crossed complexes ----------------------------------------------------


def components(c) -> List[List[str]]:
    parent = {o: o for o in c.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in c.gens_of(1):
        ra, rb = find(g.source), find(g.target)
        if ra != rb:
            parent[rb] = ra
    comps: Dict[str, List[str]] = {}
    for o in c.objects:
        comps.setdefault(find(o), []).append(o)
    return list(comps.values())


def component_of(c, obj: str) -> List[str]:
    for comp in components(c):
        if obj in comp:
            return comp
    raise KeyError(obj)


def spanning_tree(c, basepoint: str) -> Dict[str, PathWord]:
    """Map object -> reduced path basepoint -> object within its component."""
    tree = {basepoint: PathWord.identity(basepoint)}
    frontier = [basepoint]
    edges = c.gens_of(1)
    while frontier:
        nxt = []
        for o in frontier:
            for g in edges:
                for (a, b, s) in ((g.source, g.target, 1), (g.target, g.source, -1)):
                    if a == o and b not in tree:
                        tree[b] = tree[o].then(PathWord(((g.name, s),), a, b))
                        nxt.append(b)
        frontier = nxt
    return tree


def vertex_group_presentation(c, basepoint: str) -> GroupPresentation:
    """Presentation of the vertex group of coker(delta2) at `basepoint`."""
    tree = spanning_tree(c, basepoint)
    tree_edges = set()
    for p in tree.values():
        for g, _s in p.letters:
            tree_edges.add(g)
    gen_names = [
        g.name
        for g in c.gens_of(1)
        if g.source in tree and g.name not in tree_edges
    ]

    def rewrite_loop(p: PathWord) -> Relator:
        # tree edges collapse to the identity, non-tree edges to generators
        out = [(g, s) for (g, s) in p.letters if g not in tree_edges]
        return tuple(_cyclic_reduce(out))

    relators: List[Relator] = []
    for r in c.relations_of(1):
        u, v = r.lhs.path, r.rhs.path
        if u.start not in tree:
            continue
        loop = u.then(v.inverse())
        w = rewrite_loop(loop)
        if w:
            relators.append(w)
    for g2 in c.gens_of(2):
        if g2.base not in tree:
            continue
        bd = c.delta(
            CrxWord.of_terms(
                2, [ActionedTerm(g2.name, 1, PathWord.identity(g2.base))], g2.base
            )
        )
        w = rewrite_loop(bd.path)
        if w:
            relators.append(w)
    return GroupPresentation(generators=gen_names, relators=relators)


def reduced_vertex_group(c, basepoint: str, budget: int = 10_000) -> GroupPresentation:
    return tietze_reduce(vertex_group_presentation(c, basepoint), budget)


def all_vertex_groups_trivial(c, budget: int = 10_000) -> bool:
    for comp in components(c):
        pres = reduced_vertex_group(c, comp[0], budget)
        if pres.tag != "trivial":
            return False
    return True
