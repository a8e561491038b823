"""Text formats: .crx (crossed complexes and morphisms), .encat (enriched
presentations and functors), .dga, .ssx.

Parsers report located errors; emit(parse(x)) round-trips to an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .complex import CrxPresentation, CrxMorphism, GenData
from .dga import Combination, FiniteDga, FreeDga, tensor_algebra
from .enriched import (
    Cell,
    CellImage,
    Chain,
    EnrichedFunctor,
    EnrichedPresentation,
    StructuredHom,
    StructuredMap,
)
from .simplicial import Degenerate, Face, SimplicialSetFinite
from .words import ActionedTerm, CrxWord, DomainError, PathWord


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 0):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.col = col


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


_NAME = re.compile(r"[A-Za-z0-9_]+")


# -- word grammar ----------------------------------------------------------------


def _split_letters(s: str, ln: int) -> List[str]:
    """Split on whitespace outside ^[...] brackets."""
    out: List[str] = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ']'", ln)
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced '['", ln)
    if cur:
        out.append("".join(cur))
    return out


def _parse_letter(tok: str, ln: int) -> Tuple[str, int, Optional[str]]:
    """-> (name, exponent, actor text or None); also handles 1_<obj>."""
    m = _NAME.match(tok)
    if not m:
        raise ParseError(f"bad letter {tok!r}", ln)
    name = m.group(0)
    rest = tok[m.end():]
    exp = 1
    actor: Optional[str] = None
    while rest:
        if not rest.startswith("^"):
            raise ParseError(f"junk after letter: {rest!r}", ln)
        rest = rest[1:]
        if rest.startswith("["):
            end = rest.rfind("]")
            if end < 0:
                raise ParseError("missing ']'", ln)
            actor = rest[1:end]
            rest = rest[end + 1:]
        else:
            m2 = re.match(r"-?\d+", rest)
            if not m2:
                raise ParseError(f"bad exponent in {tok!r}", ln)
            exp *= int(m2.group(0))
            rest = rest[m2.end():]
    return name, exp, actor


def parse_path(c: CrxPresentation, text: str, ln: int) -> PathWord:
    toks = _split_letters(text, ln)
    if len(toks) == 1 and toks[0].startswith("1_"):
        obj = toks[0][2:]
        if obj not in c.objects:
            raise ParseError(f"unknown object {obj}", ln)
        return PathWord.identity(obj)
    letters = []
    for tok in toks:
        name, exp, actor = _parse_letter(tok, ln)
        if actor is not None:
            raise ParseError("actors are not allowed on degree-1 letters", ln)
        if exp not in (1, -1):
            for _ in range(abs(exp)):
                letters.append((name, 1 if exp > 0 else -1))
        else:
            letters.append((name, exp))
    try:
        return c.path(letters)
    except Exception as exc:
        raise ParseError(str(exc), ln)


def parse_word(c: CrxPresentation, degree: int, text: str, ln: int) -> CrxWord:
    if degree == 0:
        tok = text.strip()
        if tok not in c.objects:
            raise ParseError(f"unknown object {tok}", ln)
        return CrxWord.of_object(tok)
    if degree == 1:
        return CrxWord.of_path(parse_path(c, text, ln))
    toks = _split_letters(text, ln)
    if len(toks) == 1 and toks[0].startswith("1_"):
        obj = toks[0][2:]
        if obj not in c.objects:
            raise ParseError(f"unknown object {obj}", ln)
        return CrxWord.identity(degree, obj)
    terms = []
    base: Optional[str] = None
    for tok in toks:
        name, exp, actor_text = _parse_letter(tok, ln)
        if not c.has_gen(degree, name):
            raise ParseError(f"unknown degree-{degree} generator {name}", ln)
        gbase = c.gen(degree, name).base
        actor = PathWord.identity(gbase) if actor_text is None else \
            parse_path(c, actor_text, ln)
        if actor.end != gbase:
            raise ParseError(f"actor of {name} must end at {gbase}", ln)
        if base is None:
            base = actor.start
        terms.append(ActionedTerm(name, exp, actor))
    try:
        return CrxWord.of_terms(degree, terms, base or "")
    except Exception as exc:
        raise ParseError(str(exc), ln)


def emit_word(w: CrxWord) -> str:
    return str(w)


# -- .crx -------------------------------------------------------------------------


@dataclass
class CrxFile:
    presentations: Dict[str, CrxPresentation] = field(default_factory=dict)
    morphisms: Dict[str, CrxMorphism] = field(default_factory=dict)

    def only(self) -> CrxPresentation:
        if len(self.presentations) != 1:
            raise DomainError(
                f"expected exactly one complex, found {len(self.presentations)}"
            )
        return next(iter(self.presentations.values()))


def parse_crx(text: str) -> CrxFile:
    out = CrxFile()
    cur: Optional[CrxPresentation] = None
    mor: Optional[dict] = None

    def finish_mor():
        nonlocal mor
        if mor is not None:
            m = CrxMorphism(mor["src"], mor["tgt"], mor["obj"], mor["gen"],
                            name=mor["name"])
            out.morphisms[mor["name"]] = m
            mor = None

    for ln, line in _lines(text):
        if line.startswith("crx "):
            finish_mor()
            name = line[4:].strip()
            cur = CrxPresentation(name)
            out.presentations[name] = cur
            continue
        if line.startswith("crxmor "):
            finish_mor()
            m = re.match(r"crxmor\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", line)
            if not m:
                raise ParseError("bad morphism header", ln)
            nm, s, t = m.groups()
            if s not in out.presentations or t not in out.presentations:
                raise ParseError(f"morphism {nm}: unknown complexes", ln)
            mor = {"name": nm, "src": out.presentations[s],
                   "tgt": out.presentations[t], "obj": {}, "gen": {}}
            cur = None
            continue
        if mor is not None:
            m = re.match(r"mor\s+obj\s+(\S+)\s*->\s*(\S+)$", line)
            if m:
                mor["obj"][m.group(1)] = m.group(2)
                continue
            m = re.match(r"mor\s+gen\s+deg\s+(\d+)\s+(\S+)\s*->\s*(.+)$", line)
            if m:
                deg = int(m.group(1))
                mor["gen"][(deg, m.group(2))] = parse_word(
                    mor["tgt"], deg, m.group(3), ln)
                continue
            raise ParseError(f"bad morphism line: {line!r}", ln)
        if cur is None:
            raise ParseError("content before any 'crx <name>' header", ln)
        if line.startswith("objects:"):
            for tok in line[len("objects:"):].split():
                cur.add_object(tok)
            continue
        if line.startswith("bound "):
            cur.bound = int(line[6:].strip())
            continue
        m = re.match(r"gen\s+(\S+)\s+deg\s+(\d+)\s*:\s*(\S+)\s*->\s*(\S+)$", line)
        if m and int(m.group(2)) == 1:
            cur.add_gen1(m.group(1), m.group(3), m.group(4))
            continue
        m = re.match(r"gen\s+(\S+)\s+deg\s+(\d+)\s*@\s*(\S+)\s*:\s*(.+)$", line)
        if m:
            nm, deg, base, bd = m.group(1), int(m.group(2)), m.group(3), m.group(4)
            if deg < 2:
                raise ParseError("degree >= 2 expected with '@'", ln)
            w = parse_word(cur, deg - 1, bd, ln)
            try:
                cur.add_gen(nm, deg, base, w)
            except Exception as exc:
                raise ParseError(str(exc), ln)
            continue
        m = re.match(r"rel\s+deg\s+(\d+)\s*:\s*(.+?)\s*=\s*(.+)$", line)
        if m:
            deg = int(m.group(1))
            lhs = parse_word(cur, deg, m.group(2), ln)
            rhs = parse_word(cur, deg, m.group(3), ln)
            cur.add_relation(deg, lhs, rhs)
            continue
        raise ParseError(f"unrecognized line: {line!r}", ln)
    finish_mor()
    return out


def emit_crx(c: CrxPresentation) -> str:
    lines = [f"crx {c.name}"]
    if c.bound != 10:
        lines.append(f"bound {c.bound}")
    if c.objects:
        lines.append("objects: " + " ".join(c.objects))
    for d in sorted(c.gens):
        for g in c.gens_of(d):
            if d == 1:
                lines.append(f"gen {g.name} deg 1 : {g.source} -> {g.target}")
            else:
                lines.append(f"gen {g.name} deg {d} @ {g.base} : {g.boundary}")
    for r in c.relations:
        lines.append(f"rel deg {r.degree} : {r.lhs} = {r.rhs}")
    return "\n".join(lines) + "\n"


def emit_crx_morphism(m: CrxMorphism) -> str:
    lines = [f"crxmor {m.name} : {m.source.name} -> {m.target.name}"]
    for o, v in m.obj_map.items():
        lines.append(f"mor obj {o} -> {v}")
    for (d, nm), w in m.gen_map.items():
        lines.append(f"mor gen deg {d} {nm} -> {w}")
    return "\n".join(lines) + "\n"


# -- .encat ------------------------------------------------------------------------


def _parse_chain(cat: EnrichedPresentation, tok: str, ln: int) -> Chain:
    tok = tok.strip()
    if tok == "1":
        return ()
    if tok.startswith("comp(") and tok.endswith(")"):
        parts = [p.strip() for p in tok[5:-1].split(",")]
        out: List[str] = []
        for p in parts:
            out.extend(_parse_chain(cat, p, ln))
        return tuple(out)
    if tok in cat.cells:
        return (tok,)
    raise ParseError(f"unknown cell {tok!r} in chain", ln)


def _split_chain_letters(s: str, ln: int) -> List[str]:
    out: List[str] = []
    depth = 0
    cur: List[str] = []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def _parse_chain_letter(cat, tok: str, ln: int) -> Tuple[Chain, int, Optional[str]]:
    actor = None
    exp = 1
    while "^" in tok:
        head, tail = tok.rsplit("^", 1)
        if tail.startswith("[") and tail.endswith("]"):
            actor = tail[1:-1]
        else:
            try:
                exp *= int(tail)
            except ValueError:
                raise ParseError(f"bad exponent {tail!r}", ln)
        tok = head
    return _parse_chain(cat, tok, ln), exp, actor


def _parse_hom_path(cat, text: str, ln: int):
    letters = []
    for tok in _split_chain_letters(text, ln):
        ch, exp, actor = _parse_chain_letter(cat, tok, ln)
        if actor is not None:
            raise ParseError("no actors on degree-1 chain letters", ln)
        s = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            letters.append((ch, s))
    return tuple(letters)


def _parse_hom_terms(cat, text: str, ln: int):
    terms = []
    for tok in _split_chain_letters(text, ln):
        ch, exp, actor = _parse_chain_letter(cat, tok, ln)
        act = _parse_hom_path(cat, actor, ln) if actor else ()
        terms.append((ch, exp, act))
    return tuple(terms)


def parse_encat(text: str):
    """-> (dict name -> EnrichedPresentation, dict name -> EnrichedFunctor)."""
    cats: Dict[str, EnrichedPresentation] = {}
    funs: Dict[str, EnrichedFunctor] = {}
    cur: Optional[EnrichedPresentation] = None
    fun: Optional[dict] = None

    def finish_fun():
        nonlocal fun
        if fun is not None:
            funs[fun["name"]] = EnrichedFunctor(
                fun["src"], fun["tgt"], fun["obj"], fun["cell"],
                hom_maps=fun["hom"], name=fun["name"])
            fun = None

    for ln, line in _lines(text):
        m = re.match(r"encat\s+(\S+)\s+flavor=(tensor|cartesian)$", line)
        if m:
            finish_fun()
            cur = EnrichedPresentation(m.group(1), m.group(2), [])
            cats[m.group(1)] = cur
            continue
        m = re.match(r"enfun\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", line)
        if m:
            finish_fun()
            nm, s, t = m.groups()
            if s not in cats or t not in cats:
                raise ParseError(f"functor {nm}: unknown categories", ln)
            fun = {"name": nm, "src": cats[s], "tgt": cats[t],
                   "obj": {}, "cell": {}, "hom": {}}
            cur = None
            continue
        if fun is not None:
            m = re.match(r"fun\s+obj\s+(\S+)\s*->\s*(\S+)$", line)
            if m:
                fun["obj"][m.group(1)] = m.group(2)
                continue
            m = re.match(r"fun\s+hom\s+(\S+)\s+(\S+)\s*->\s*(\S+)$", line)
            if m:
                fun["hom"][(m.group(1), m.group(2))] = StructuredMap(m.group(3))
                continue
            m = re.match(r"fun\s+cell\s+(\S+)\s*->\s*(.+)$", line)
            if m:
                nm, rhs = m.group(1), m.group(2).strip()
                cell = fun["src"].cell(nm)
                fun["cell"][nm] = _parse_cell_image(fun["tgt"], cell, rhs, ln)
                continue
            raise ParseError(f"bad functor line: {line!r}", ln)
        if cur is None:
            raise ParseError("content before any 'encat' header", ln)
        if line.startswith("objects:"):
            cur.objects.extend(line[len("objects:"):].split())
            continue
        m = re.match(r"hom\s+(\S+)\s+(\S+)\s*=\s*structured:(\S+)$", line)
        if m:
            kind, _, detail = m.group(3).partition(":")
            cur.set_structured(m.group(1), m.group(2), StructuredHom(kind, detail))
            continue
        m = re.match(r"cell\s+(\S+)\s+deg\s+(\d+)\s*:\s*(\S+)\s*->\s*(\S+)(?:\s*@\s*(.*))?$",
                     line)
        if m:
            nm, deg, dom, cod, extra = (m.group(1), int(m.group(2)), m.group(3),
                                        m.group(4), m.group(5))
            if deg == 0:
                cur.add_cell0(nm, dom, cod)
            elif deg == 1:
                if not extra or "->" not in extra:
                    raise ParseError(f"cell {nm}: degree 1 needs '@ src -> tgt'", ln)
                s_txt, t_txt = extra.split("->", 1)
                cur.add_cell1(nm, dom, cod, _parse_chain(cur, s_txt, ln),
                              _parse_chain(cur, t_txt, ln))
            elif deg == 2:
                if extra and extra.startswith("base "):
                    base_txt, _, word_txt = extra[5:].partition(":")
                    base = _parse_chain(cur, base_txt, ln)
                    path = _parse_hom_path(cur, word_txt, ln)
                else:
                    path = _parse_hom_path(cur, extra or "", ln)
                    base = None
                cur.add_cell2(nm, dom, cod, path, base=base)
            else:
                if not extra or not extra.startswith("base "):
                    raise ParseError(f"cell {nm}: degree >= 3 needs '@ base <chain> : <word>'", ln)
                base_txt, _, word_txt = extra[5:].partition(":")
                base = _parse_chain(cur, base_txt, ln)
                terms = _parse_hom_terms(cur, word_txt, ln)
                cur.add_cell(nm, dom, cod, deg, terms, base)
            continue
        raise ParseError(f"unrecognized line: {line!r}", ln)
    finish_fun()
    return cats, funs


def _parse_cell_image(tgt: EnrichedPresentation, cell: Cell, rhs: str,
                      ln: int) -> CellImage:
    if rhs.startswith("!"):
        parts = rhs[1:].split()
        tag = parts[0]
        if tag == "grp":
            return CellImage.of_symbol(cell.degree, ("grp", int(parts[1])))
        if tag == "idx":
            return CellImage.of_symbol(cell.degree, ("idx", parts[1], int(parts[2])))
        if tag == "arr":
            return CellImage.of_symbol(
                cell.degree, ("arr", parts[1], int(parts[2]), int(parts[3])))
        if tag == "pt":
            return CellImage.of_symbol(cell.degree, ("pt", parts[1], parts[2]))
        if tag == "unit":
            return CellImage.of_symbol(cell.degree, ("unit", parts[1]))
        if tag == "triv":
            return CellImage.of_symbol(cell.degree, ("triv", parts[1], parts[2]))
        raise ParseError(f"unknown symbolic image {rhs!r}", ln)
    if cell.degree == 0:
        return CellImage.of_chain(_parse_chain(tgt, rhs, ln))
    if cell.degree == 1:
        return CellImage.of_path(_parse_hom_path(tgt, rhs, ln))
    if "@" in rhs:
        word_txt, _, base_txt = rhs.partition("@")
        base = _parse_chain(tgt, base_txt.strip(), ln)
        word_txt = word_txt.strip()
    else:
        word_txt, base = rhs, ()
    terms = _parse_hom_terms(tgt, word_txt, ln) if word_txt not in ("", "1") else ()
    return CellImage.of_terms(cell.degree, terms, base)


def _emit_chain(ch: Chain) -> str:
    if not ch:
        return "1"
    if len(ch) == 1:
        return ch[0]
    return "comp(" + ",".join(ch) + ")"


def _emit_hom_path(path) -> str:
    if not path:
        return "1"
    return " ".join(
        _emit_chain(ch) + ("" if s == 1 else "^-1") for ch, s in path
    )


def _emit_hom_terms(terms) -> str:
    if not terms:
        return "1"
    out = []
    for ch, e, act in terms:
        s = _emit_chain(ch)
        if e != 1:
            s += f"^{e}"
        if act:
            s += "^[" + _emit_hom_path(act) + "]"
        out.append(s)
    return " ".join(out)


def emit_encat(cat: EnrichedPresentation) -> str:
    lines = [f"encat {cat.name} flavor={cat.flavor}"]
    lines.append("objects: " + " ".join(cat.objects))
    for (x, y), s in cat.structured.items():
        lines.append(f"hom {x} {y} = structured:{s}")
    for c in cat.cells.values():
        head = f"cell {c.name} deg {c.degree} : {c.dom} -> {c.cod}"
        if c.degree == 0:
            lines.append(head)
        elif c.degree == 1:
            lines.append(f"{head} @ {_emit_chain(c.src)} -> {_emit_chain(c.tgt)}")
        elif c.degree == 2:
            lines.append(
                f"{head} @ base {_emit_chain(c.base or ())} : "
                f"{_emit_hom_path(c.boundary_path or ())}"
            )
        else:
            lines.append(
                f"{head} @ base {_emit_chain(c.base or ())} : "
                f"{_emit_hom_terms(c.boundary_terms or ())}"
            )
    return "\n".join(lines) + "\n"


def emit_enfun(f: EnrichedFunctor) -> str:
    lines = [f"enfun {f.name} : {f.source.name} -> {f.target.name}"]
    for o, v in f.obj_map.items():
        lines.append(f"fun obj {o} -> {v}")
    for (x, y), sm in f.hom_maps.items():
        lines.append(f"fun hom {x} {y} -> {sm.kind}")
    for nm, img in f.cell_map.items():
        lines.append(f"fun cell {nm} -> {_emit_cell_image(img)}")
    return "\n".join(lines) + "\n"


def _emit_cell_image(img: CellImage) -> str:
    if img.symbol is not None:
        tag = img.symbol[0]
        rest = " ".join(str(x) for x in img.symbol[1:])
        return f"!{tag} {rest}".strip()
    if img.degree == 0:
        return _emit_chain(img.chain or ())
    if img.degree == 1:
        return _emit_hom_path(img.path or ())
    return f"{_emit_hom_terms(img.terms or ())} @ {_emit_chain(img.base or ())}"


# -- .dga --------------------------------------------------------------------------


def parse_dga(text: str) -> FreeDga:
    gens: List[Tuple[str, int]] = []
    diff: Dict[str, Combination] = {}
    for ln, line in _lines(text):
        if line.startswith("dga "):
            continue
        m = re.match(r"gen\s+(\S+)\s+deg\s+(\d+)$", line)
        if m:
            gens.append((m.group(1), int(m.group(2))))
            continue
        m = re.match(r"diff\s+(\S+)\s*=\s*(.+)$", line)
        if m:
            diff[m.group(1)] = _parse_combination(m.group(2), ln)
            continue
        raise ParseError(f"unrecognized line: {line!r}", ln)
    return tensor_algebra(gens, diff)


def _parse_combination(text: str, ln: int) -> Combination:
    text = text.strip()
    if text == "0":
        return {}
    out: Combination = {}
    text = text.replace("-", "+-")
    for piece in text.split("+"):
        piece = piece.strip()
        if not piece:
            continue
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:].strip()
        m = re.match(r"(\d+)\s+(.+)$", piece)
        coef = 1
        if m:
            coef = int(m.group(1))
            piece = m.group(2)
        word = tuple(p.strip() for p in piece.split("*") if p.strip())
        if not word:
            raise ParseError(f"empty word in combination", ln)
        out[word] = out.get(word, 0) + sign * coef
    return {w: c for w, c in out.items() if c}


def emit_dga(a: FreeDga, name: str = "dga") -> str:
    lines = [f"dga {name}"]
    for g in a.gen_names:
        lines.append(f"gen {g} deg {a.gen_degree[g]}")
    for g in a.gen_names:
        comb = a.diff.get(g) or {}
        if comb:
            lines.append(f"diff {g} = " + _emit_combination(comb))
    return "\n".join(lines) + "\n"


def _emit_combination(comb: Combination) -> str:
    pieces = []
    for w, c in sorted(comb.items()):
        word = "*".join(w)
        if c == 1:
            pieces.append(f"+ {word}")
        elif c == -1:
            pieces.append(f"- {word}")
        elif c > 0:
            pieces.append(f"+ {c} {word}")
        else:
            pieces.append(f"- {-c} {word}")
    s = " ".join(pieces)
    return s[2:] if s.startswith("+ ") else s


# -- .ssx --------------------------------------------------------------------------


def _parse_face(tok: str, ln: int) -> Face:
    if tok.startswith("degenerate(") and tok.endswith(")"):
        return Degenerate(_parse_face(tok[len("degenerate("):-1], ln))
    if not _NAME.fullmatch(tok):
        raise ParseError(f"bad face token {tok!r}", ln)
    return tok


def parse_ssx(text: str) -> SimplicialSetFinite:
    x: Optional[SimplicialSetFinite] = None
    for ln, line in _lines(text):
        if line.startswith("ssx "):
            x = SimplicialSetFinite(line[4:].strip())
            continue
        if x is None:
            raise ParseError("content before 'ssx <name>' header", ln)
        if line.startswith("basepoint "):
            x.basepoint = line[len("basepoint "):].strip()
            continue
        m = re.match(r"simplex\s+(\S+)\s+dim\s+(\d+)(?:\s+faces\s+(.+))?$", line)
        if m:
            faces = tuple(
                _parse_face(t, ln) for t in (m.group(3) or "").split()
            )
            try:
                x.add(m.group(1), int(m.group(2)), faces)
            except DomainError as exc:
                raise ParseError(str(exc), ln)
            continue
        raise ParseError(f"unrecognized line: {line!r}", ln)
    if x is None:
        raise ParseError("empty .ssx file", 1)
    return x


def _emit_face(f: Face) -> str:
    if isinstance(f, Degenerate):
        return f"degenerate({_emit_face(f.of)})"
    return f


def emit_ssx(x: SimplicialSetFinite) -> str:
    lines = [f"ssx {x.name}"]
    if x.basepoint:
        lines.append(f"basepoint {x.basepoint}")
    for nm, (d, faces) in x.simplices.items():
        if faces:
            lines.append(f"simplex {nm} dim {d} faces " +
                         " ".join(_emit_face(f) for f in faces))
        else:
            lines.append(f"simplex {nm} dim {d}")
    return "\n".join(lines) + "\n"


@dataclass
class DgaFile:
    generators: List[Tuple[str, int]]
    diff: Dict[str, Combination]
    forbidden: List[Tuple[str, ...]]
    name: str = "dga"

    @property
    def is_free(self) -> bool:
        return not self.forbidden

    def free(self) -> FreeDga:
        if not self.is_free:
            raise DomainError("dga has monomial relations; build a quotient")
        return tensor_algebra(self.generators, self.diff)

    def quotient(self, top: int) -> FiniteDga:
        from .dga import monomial_quotient_dga

        return monomial_quotient_dga(self.generators, self.diff,
                                     self.forbidden, top, name=self.name)


def parse_dga_file(text: str) -> DgaFile:
    gens: List[Tuple[str, int]] = []
    diff: Dict[str, Combination] = {}
    forbidden: List[Tuple[str, ...]] = []
    name = "dga"
    for ln, line in _lines(text):
        if line.startswith("dga "):
            name = line[4:].strip()
            continue
        m = re.match(r"gen\s+(\S+)\s+deg\s+(\d+)$", line)
        if m:
            gens.append((m.group(1), int(m.group(2))))
            continue
        m = re.match(r"diff\s+(\S+)\s*=\s*(.+)$", line)
        if m:
            diff[m.group(1)] = _parse_combination(m.group(2), ln)
            continue
        m = re.match(r"rel\s+(.+)$", line)
        if m:
            word = tuple(p.strip() for p in m.group(1).split("*") if p.strip())
            forbidden.append(word)
            continue
        raise ParseError(f"unrecognized line: {line!r}", ln)
    return DgaFile(generators=gens, diff=diff, forbidden=forbidden, name=name)


def emit_dga_file(d: DgaFile) -> str:
    lines = [f"dga {d.name}"]
    for g, deg in d.generators:
        lines.append(f"gen {g} deg {deg}")
    for g, comb in d.diff.items():
        if comb:
            lines.append(f"diff {g} = " + _emit_combination(comb))
    for w in d.forbidden:
        lines.append("rel " + "*".join(w))
    return "\n".join(lines) + "\n"
