"""Word-level unit tests: paths, actioned terms, graded words."""

import pytest

from crx.words import (
    ActionedTerm,
    CompositionError,
    CrxWord,
    DomainError,
    PathWord,
)


def loop(name, n=1):
    letters = tuple([(name, 1 if n > 0 else -1)] * abs(n))
    return PathWord(letters, "p", "p")


class TestPathWord:
    def test_identity(self):
        e = PathWord.identity("p")
        assert e.is_identity() and e.start == e.end == "p"

    def test_then_checks_endpoints(self):
        a = PathWord((("f", 1),), "x", "y")
        b = PathWord((("g", 1),), "z", "w")
        with pytest.raises(CompositionError):
            a.then(b)

    def test_inverse_reverses(self):
        a = PathWord((("f", 1), ("g", -1)), "x", "y")
        assert a.inverse().letters == (("g", 1), ("f", -1))
        assert a.then(a.inverse()).is_identity()

    def test_exponent_sums(self):
        w = loop("g", 2).then(loop("h", -1))
        assert w.exponent_sums() == {"g": 2, "h": -1}


class TestCrxWord:
    def test_power(self):
        w = CrxWord.of_terms(3, [ActionedTerm("a", 1, PathWord.identity("p"))], "p")
        assert w.power(3).exponent_sums() == {"a": 3}
        assert w.power(-2).exponent_sums() == {"a": -2}
        assert w.power(0).is_identity_word()

    def test_product_needs_matching_base(self):
        u = CrxWord.of_terms(2, [ActionedTerm("a", 1, PathWord.identity("p"))], "p")
        v = CrxWord.of_terms(2, [ActionedTerm("a", 1, PathWord.identity("q"))], "q")
        with pytest.raises(CompositionError):
            u.times(v)

    def test_transport_moves_base(self):
        path = PathWord((("f", 1),), "q", "p")
        w = CrxWord.of_terms(3, [ActionedTerm("a", 1, PathWord.identity("p"))], "p")
        t = w.transported(path)
        assert t.base == "q"
        assert t.terms[0].actor.letters == (("f", 1),)

    def test_transport_requires_matching_end(self):
        path = PathWord((("f", 1),), "p", "q")
        w = CrxWord.of_terms(3, [ActionedTerm("a", 1, PathWord.identity("p"))], "p")
        with pytest.raises(CompositionError):
            w.transported(path)

    def test_term_base_invariant_enforced(self):
        with pytest.raises(CompositionError):
            CrxWord.of_terms(2, [ActionedTerm("a", 1, PathWord.identity("p"))], "q")

    def test_objects_do_not_multiply(self):
        with pytest.raises(DomainError):
            CrxWord.of_object("p").times(CrxWord.of_object("q"))

    def test_inverse_reverses_terms(self):
        u = CrxWord.of_terms(
            2,
            [ActionedTerm("a", 1, PathWord.identity("p")),
             ActionedTerm("b", -2, PathWord.identity("p"))],
            "p",
        )
        inv = u.inverse()
        assert [t.gen for t in inv.terms] == ["b", "a"]
        assert [t.exp for t in inv.terms] == [2, -1]
