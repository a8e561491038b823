"""Formal words in crossed complexes.

Degree 0: object tokens.  Degree 1: paths in the underlying groupoid, stored
reduced, composed diagrammatically (left letter first).  Degree >= 2:
products of actioned terms g^e transported along a degree-1 actor path whose
end object is g's basepoint; the term lives at the actor's start object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class CompositionError(ValueError):
    """Word letters do not compose."""


class UnknownGenerator(KeyError):
    """A letter is not a generator of the ambient presentation."""


class DomainError(ValueError):
    """Operation preconditions violated."""


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    degree: int


Letter = Tuple[str, int]  # (generator name, +1 or -1)


@dataclass(frozen=True)
class PathWord:
    """A composable word in degree-1 generators, diagrammatic order."""

    letters: Tuple[Letter, ...]
    start: str
    end: str

    @staticmethod
    def identity(obj: str) -> "PathWord":
        return PathWord((), obj, obj)

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "PathWord":
        return PathWord(
            tuple((g, -s) for (g, s) in reversed(self.letters)), self.end, self.start
        )

    def then(self, other: "PathWord") -> "PathWord":
        if self.end != other.start:
            raise CompositionError(
                f"paths do not compose: ...->{self.end} then {other.start}->..."
            )
        return PathWord(self.letters + other.letters, self.start, other.end).reduce()

    def reduce(self) -> "PathWord":
        out: List[Letter] = []
        for let in self.letters:
            if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
                out.pop()
            else:
                out.append(let)
        return PathWord(tuple(out), self.start, self.end)

    def exponent_sums(self) -> Dict[str, int]:
        acc: Dict[str, int] = {}
        for g, s in self.letters:
            acc[g] = acc.get(g, 0) + s
        return {g: v for g, v in acc.items() if v}

    def __str__(self) -> str:
        if not self.letters:
            return f"1_{self.start}"
        return " ".join(g if s == 1 else f"{g}^-1" for (g, s) in self.letters)


@dataclass(frozen=True)
class ActionedTerm:
    """g^exp transported backwards along `actor` (actor.end == base of g)."""

    gen: str
    exp: int
    actor: PathWord

    @property
    def base(self) -> str:
        return self.actor.start

    def inverse(self) -> "ActionedTerm":
        return ActionedTerm(self.gen, -self.exp, self.actor)

    def transported(self, path: PathWord) -> "ActionedTerm":
        """Transport further back along `path` (path.end == self.base)."""
        return ActionedTerm(self.gen, self.exp, path.then(self.actor))

    def __str__(self) -> str:
        s = self.gen
        if self.exp != 1:
            s += f"^{self.exp}"
        if not self.actor.is_identity():
            s += f"^[{self.actor}]"
        return s


@dataclass(frozen=True)
class CrxWord:
    """An element of a crossed complex, in one of the three graded shapes."""

    degree: int
    obj: Optional[str] = None
    path: Optional[PathWord] = None
    terms: Tuple[ActionedTerm, ...] = ()
    base_obj: Optional[str] = None  # basepoint for degree >= 2 (needed when empty)

    @staticmethod
    def of_object(obj: str) -> "CrxWord":
        return CrxWord(degree=0, obj=obj)

    @staticmethod
    def of_path(path: PathWord) -> "CrxWord":
        return CrxWord(degree=1, path=path)

    @staticmethod
    def of_terms(degree: int, terms: Sequence[ActionedTerm], base: str) -> "CrxWord":
        terms = tuple(t for t in terms if t.exp != 0)
        for t in terms:
            if t.base != base:
                raise CompositionError(
                    f"term {t} based at {t.base}, word based at {base}"
                )
        return CrxWord(degree=degree, terms=terms, base_obj=base)

    @staticmethod
    def identity(degree: int, base: str) -> "CrxWord":
        if degree == 0:
            return CrxWord.of_object(base)
        if degree == 1:
            return CrxWord.of_path(PathWord.identity(base))
        return CrxWord(degree=degree, terms=(), base_obj=base)

    @property
    def base(self) -> str:
        if self.degree == 0:
            return self.obj  # type: ignore[return-value]
        if self.degree == 1:
            return self.path.start  # type: ignore[union-attr]
        return self.base_obj  # type: ignore[return-value]

    def is_identity_word(self) -> bool:
        if self.degree == 0:
            return False
        if self.degree == 1:
            return self.path.reduce().is_identity()  # type: ignore[union-attr]
        return not self.terms

    def inverse(self) -> "CrxWord":
        if self.degree == 0:
            raise DomainError("objects have no inverse")
        if self.degree == 1:
            return CrxWord.of_path(self.path.inverse())  # type: ignore[union-attr]
        return CrxWord(
            degree=self.degree,
            terms=tuple(t.inverse() for t in reversed(self.terms)),
            base_obj=self.base_obj,
        )

    def times(self, other: "CrxWord") -> "CrxWord":
        if self.degree != other.degree:
            raise CompositionError("degree mismatch in product")
        if self.degree == 0:
            raise DomainError("objects do not multiply")
        if self.degree == 1:
            return CrxWord.of_path(self.path.then(other.path))  # type: ignore[union-attr]
        if self.base != other.base:
            raise CompositionError(
                f"degree-{self.degree} product at different basepoints "
                f"{self.base} vs {other.base}"
            )
        return CrxWord(
            degree=self.degree,
            terms=self.terms + other.terms,
            base_obj=self.base_obj,
        )

    def power(self, e: int) -> "CrxWord":
        if self.degree == 0:
            raise DomainError("objects have no powers")
        if e == 0:
            return CrxWord.identity(self.degree, self.base)
        w = self if e > 0 else self.inverse()
        out = w
        for _ in range(abs(e) - 1):
            out = out.times(w)
        return out

    def transported(self, path: PathWord) -> "CrxWord":
        """Transport a degree >= 2 word backwards along `path`."""
        if self.degree < 2:
            raise DomainError("only degree >= 2 words transport via actors")
        if path.end != self.base:
            raise CompositionError("actor path must end at the word's basepoint")
        return CrxWord(
            degree=self.degree,
            terms=tuple(t.transported(path) for t in self.terms),
            base_obj=path.start,
        )

    def exponent_sums(self) -> Dict[str, int]:
        """Abelianization: generator -> total exponent (actors dropped)."""
        if self.degree == 1:
            return self.path.exponent_sums()  # type: ignore[union-attr]
        if self.degree == 0:
            raise DomainError("objects have no exponent sums")
        acc: Dict[str, int] = {}
        for t in self.terms:
            acc[t.gen] = acc.get(t.gen, 0) + t.exp
        return {g: v for g, v in acc.items() if v}

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.obj)
        if self.degree == 1:
            return str(self.path)
        if not self.terms:
            return f"1_{self.base_obj}"
        return " ".join(str(t) for t in self.terms)


def word_letters(letters: Iterable[Tuple[str, int]], endpoints) -> PathWord:
    """Build a reduced PathWord from letters, checking composability.

    `endpoints` maps a generator name to its (source, target) pair.
    """
    lets = list(letters)
    if not lets:
        raise DomainError("cannot infer endpoints of an empty path; use identity()")
    locs: List[Tuple[str, str]] = []
    for g, s in lets:
        try:
            src, tgt = endpoints(g)
        except KeyError as exc:
            raise UnknownGenerator(g) from exc
        locs.append((src, tgt) if s == 1 else (tgt, src))
    for i in range(len(locs) - 1):
        if locs[i][1] != locs[i + 1][0]:
            raise CompositionError(
                f"letter {i} ends at {locs[i][1]} but letter {i+1} starts at {locs[i+1][0]}"
            )
    return PathWord(tuple(lets), locs[0][0], locs[-1][1]).reduce()
