"""Finite simplicial sets: nondegenerate simplices with face data, and their
(reduced) chain complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import intmat
from .dga import GradedChain
from .words import DomainError


@dataclass(frozen=True)
class Degenerate:
    """A formally degenerate face of a named nondegenerate simplex."""

    of: Union[str, "Degenerate"]

    def root(self) -> str:
        x = self.of
        while isinstance(x, Degenerate):
            x = x.of
        return x

    def depth(self) -> int:
        n, x = 1, self.of
        while isinstance(x, Degenerate):
            n, x = n + 1, x.of
        return n


Face = Union[str, Degenerate]


class SimplicialSetFinite:
    def __init__(self, name: str, basepoint: Optional[str] = None):
        self.name = name
        self.simplices: Dict[str, Tuple[int, Tuple[Face, ...]]] = {}
        self.basepoint = basepoint

    def add(self, name: str, dim: int, faces: Sequence[Face] = ()) -> None:
        if name in self.simplices:
            raise DomainError(f"duplicate simplex {name}")
        if dim == 0 and faces:
            raise DomainError("vertices have no faces")
        if dim > 0 and len(faces) != dim + 1:
            raise DomainError(f"{name}: a {dim}-simplex needs {dim + 1} faces")
        self.simplices[name] = (dim, tuple(faces))
        if dim == 0 and self.basepoint is None:
            self.basepoint = name

    def dim_of(self, f: Face) -> int:
        if isinstance(f, Degenerate):
            root = f.root()
            if root not in self.simplices:
                raise DomainError(f"unknown simplex {root}")
            return self.simplices[root][0] + f.depth()
        if f not in self.simplices:
            raise DomainError(f"unknown simplex {f}")
        return self.simplices[f][0]

    def by_dim(self) -> Dict[int, List[str]]:
        out: Dict[int, List[str]] = {}
        for nm, (d, _f) in self.simplices.items():
            out.setdefault(d, []).append(nm)
        return out

    def validate(self) -> Tuple[bool, List[str]]:
        fails: List[str] = []
        for nm, (d, faces) in self.simplices.items():
            for i, f in enumerate(faces):
                try:
                    fd = self.dim_of(f)
                except DomainError as exc:
                    fails.append(f"{nm}: face {i}: {exc}")
                    continue
                if fd != d - 1:
                    fails.append(f"{nm}: face {i} has dimension {fd}, wanted {d - 1}")
        if self.basepoint is not None and self.basepoint not in self.simplices:
            fails.append(f"basepoint {self.basepoint} is not a vertex")
        if not fails:
            ch = self.chains()
            top = max(ch.bases) if ch.bases else 0
            if not ch.check_dd(top):
                fails.append("face data violates d.d = 0")
        return (not fails, fails)

    def is_reduced(self) -> bool:
        return len(self.by_dim().get(0, [])) == 1

    def is_one_reduced(self) -> bool:
        return self.is_reduced() and not self.by_dim().get(1)

    def chains(self) -> GradedChain:
        """Nondegenerate simplices with the alternating face sum; degenerate
        faces contribute nothing."""
        by = self.by_dim()
        top = max(by) if by else 0
        bases = {d: sorted(by.get(d, [])) for d in range(top + 1)}
        index = {d: {nm: i for i, nm in enumerate(bases[d])} for d in bases}
        diff: Dict[int, intmat.Matrix] = {}
        for d in range(1, top + 1):
            m = intmat.zeros(len(bases[d - 1]), len(bases[d]))
            for j, nm in enumerate(bases[d]):
                _dd, faces = self.simplices[nm]
                for i, f in enumerate(faces):
                    if isinstance(f, Degenerate):
                        continue
                    m[index[d - 1][f]][j] += (-1) ** i
            diff[d] = m
        return GradedChain(bases=bases, diff=diff)

    def reduced_chains(self) -> GradedChain:
        """Quotient the basepoint in degree 0."""
        if not self.is_reduced():
            raise DomainError(f"{self.name} is not reduced (one vertex required)")
        ch = self.chains()
        bases = dict(ch.bases)
        bases[0] = []
        diff = dict(ch.diff)
        if 1 in diff:
            diff[1] = intmat.zeros(0, len(bases.get(1, [])))
        return GradedChain(bases=bases, diff=diff)


def sphere_ssx(n: int) -> SimplicialSetFinite:
    """One vertex and one nondegenerate n-simplex, all faces degenerate."""
    x = SimplicialSetFinite(f"S{n}", basepoint="v")
    x.add("v", 0)
    if n >= 1:
        face: Face = "v"
        for _ in range(n - 1):
            face = Degenerate(face)
        x.add("s", n, tuple(face for _ in range(n + 1)))
    return x


def wedge_spheres(dims: Sequence[int]) -> SimplicialSetFinite:
    x = SimplicialSetFinite("wedge", basepoint="v")
    x.add("v", 0)
    for k, n in enumerate(dims):
        face: Face = "v"
        for _ in range(n - 1):
            face = Degenerate(face)
        x.add(f"s{k}_{n}", n, tuple(face for _ in range(n + 1)))
    return x


def standard_simplex2() -> SimplicialSetFinite:
    x = SimplicialSetFinite("Delta2", basepoint="v0")
    for v in ("v0", "v1", "v2"):
        x.add(v, 0)
    x.add("e01", 1, ("v1", "v0"))
    x.add("e02", 1, ("v2", "v0"))
    x.add("e12", 1, ("v2", "v1"))
    x.add("t", 2, ("e12", "e02", "e01"))
    return x
