"""Parsers, emitters, and the round-trip property over the bundled corpus."""

from pathlib import Path

import pytest

from crx import formats
from crx.formats import ParseError

CORPUS = Path(__file__).resolve().parent.parent / "src" / "crx" / "corpus"


def corpus_files(suffix):
    return sorted(p for p in CORPUS.iterdir() if p.suffix == suffix)


class TestRoundTrip:
    @pytest.mark.parametrize("path", corpus_files(".crx"), ids=lambda p: p.name)
    def test_crx(self, path):
        cf = formats.parse_crx(path.read_text())
        for pres in cf.presentations.values():
            again = formats.emit_crx(pres)
            cf2 = formats.parse_crx(again)
            assert formats.emit_crx(cf2.only()) == again

    @pytest.mark.parametrize("path", corpus_files(".encat"), ids=lambda p: p.name)
    def test_encat(self, path):
        cats, funs = formats.parse_encat(path.read_text())
        again = "".join(formats.emit_encat(c) for c in cats.values())
        again += "".join(formats.emit_enfun(f) for f in funs.values())
        cats2, funs2 = formats.parse_encat(again)
        again2 = "".join(formats.emit_encat(c) for c in cats2.values())
        again2 += "".join(formats.emit_enfun(f) for f in funs2.values())
        assert again == again2
        assert list(cats) == list(cats2) and list(funs) == list(funs2)

    @pytest.mark.parametrize("path", corpus_files(".dga"), ids=lambda p: p.name)
    def test_dga(self, path):
        d = formats.parse_dga_file(path.read_text())
        again = formats.emit_dga_file(d)
        assert formats.emit_dga_file(formats.parse_dga_file(again)) == again

    @pytest.mark.parametrize("path", corpus_files(".ssx"), ids=lambda p: p.name)
    def test_ssx(self, path):
        x = formats.parse_ssx(path.read_text())
        again = formats.emit_ssx(x)
        assert formats.emit_ssx(formats.parse_ssx(again)) == again


class TestCrxGrammar:
    def test_d1_shape(self):
        pres = formats.parse_crx(
            "crx d1\nobjects: 0 1\ngen l deg 1 : 0 -> 1\n").only()
        assert len(pres.objects) == 2 and len(pres.gens_of(1)) == 1

    def test_comments_and_blanks(self):
        pres = formats.parse_crx(
            "# header comment\ncrx c\n\nobjects: p  # trailing\n").only()
        assert pres.objects == ["p"]

    def test_actions_parse(self):
        text = ("crx c\nobjects: p\ngen u deg 1 : p -> p\n"
                "gen v deg 2 @ p : u\n"
                "gen w deg 3 @ p : v^-1^[u u^-1] v\n")
        pres = formats.parse_crx(text).only()
        w = pres.gen(3, "w")
        assert w.boundary.terms[0].exp == -1

    def test_malformed_boundary_names_line(self):
        text = "crx c\nobjects: p\ngen u deg 1 : p -> p\ngen v deg 2 @ p : zz\n"
        with pytest.raises(ParseError) as exc:
            formats.parse_crx(text)
        assert "line 4" in str(exc.value)

    def test_identity_words(self):
        text = "crx c\nobjects: p\ngen u deg 1 : p -> p\nrel deg 1 : u u^-1 = 1_p\n"
        pres = formats.parse_crx(text).only()
        assert pres.relations[0].rhs.path.is_identity()

    def test_morphism_block(self):
        text = (
            "crx a\nobjects: p\ngen u deg 1 : p -> p\n"
            "crx b\nobjects: q\ngen w deg 1 : q -> q\n"
            "crxmor f : a -> b\nmor obj p -> q\nmor gen deg 1 u -> w w\n"
        )
        cf = formats.parse_crx(text)
        f = cf.morphisms["f"]
        assert f.obj_map == {"p": "q"}
        assert len(f.gen_map[(1, "u")].path.letters) == 2


class TestEncatGrammar:
    def test_cells_with_comp(self):
        text = (
            "encat c flavor=tensor\nobjects: 0\n"
            "cell k deg 0 : 0 -> 0\n"
            "cell h deg 1 : 0 -> 0 @ 1 -> comp(k,k)\n"
        )
        cats, _ = formats.parse_encat(text)
        cell = cats["c"].cell("h")
        assert cell.src == () and cell.tgt == ("k", "k")

    def test_structured_hom(self):
        text = "encat c flavor=tensor\nobjects: 0 1\nhom 0 1 = structured:contractible:Z\n"
        cats, _ = formats.parse_encat(text)
        assert cats["c"].structured[("0", "1")].kind == "contractible"

    def test_unknown_cell_reported_with_line(self):
        text = "encat c flavor=tensor\nobjects: 0\ncell h deg 1 : 0 -> 0 @ 1 -> zz\n"
        with pytest.raises(ParseError) as exc:
            formats.parse_encat(text)
        assert "line 3" in str(exc.value)


class TestDgaGrammar:
    def test_combination_with_coefficients(self):
        d = formats.parse_dga_file(
            "dga t\ngen x deg 2\ngen y deg 5\ndiff y = x*x - 2 x*x\n")
        a = d.free()
        assert a.diff["y"] == {("x", "x"): -1}

    def test_monomial_relation(self):
        d = formats.parse_dga_file("dga q\ngen x deg 2\nrel x*x\n")
        q = d.quotient(8)
        assert q.rank(4) == 0


class TestSsxGrammar:
    def test_nested_degeneracies(self):
        x = formats.parse_ssx(
            "ssx s3\nbasepoint v\nsimplex v dim 0\n"
            "simplex s dim 3 faces degenerate(degenerate(v)) "
            "degenerate(degenerate(v)) degenerate(degenerate(v)) "
            "degenerate(degenerate(v))\n")
        ok, fails = x.validate()
        assert ok, fails
