"""Exact integer matrices, Smith normal form, and abelian group bookkeeping.

Everything here is arbitrary-precision (plain Python ints): intermediate
entries in a Smith reduction overflow fixed-width words even on small inputs.
All functions are pure; matrices are lists of lists and never mutated by
callers' references (we copy on entry).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple


Matrix = List[List[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def copy(m: Matrix) -> Matrix:
    return [row[:] for row in m]


def shape(m: Matrix) -> Tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            aik = arow[k]
            if aik:
                brow = b[k]
                for j in range(cb):
                    orow[j] += aik * brow[j]
    return out


def transpose(m: Matrix) -> Matrix:
    r, c = shape(m)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def det_sign_unimodular(m: Matrix) -> int:
    """Determinant of a unimodular matrix (must be +-1); used in tests."""
    r, c = shape(m)
    if r != c:
        raise ValueError("not square")
    a = copy(m)
    det = 1
    for col in range(r):
        piv = None
        for i in range(col, r):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        # gcd-style elimination keeps everything integral
        for i in range(col + 1, r):
            while a[i][col] != 0:
                q = a[col][col] // a[i][col]
                for j in range(col, r):
                    a[col][j] -= q * a[i][j]
                a[col], a[i] = a[i], a[col]
                det = -det
        det_piece = a[col][col]
        if det_piece == 0:
            return 0
        det *= det_piece
    return det


@dataclass
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1} >= 0."""

    u: Matrix
    d: Matrix
    v: Matrix
    rank: int

    def diagonal(self) -> List[int]:
        r, c = shape(self.d)
        return [self.d[i][i] for i in range(min(r, c))]


def _pivot(a: Matrix, t: int, rows: int, cols: int) -> Optional[Tuple[int, int]]:
    """Nonzero entry of minimal |value| in a[t:,t:], ties by (row, col)."""
    best = None
    best_val = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i][j]
            if x != 0:
                ax = abs(x)
                if best_val is None or ax < best_val:
                    best, best_val = (i, j), ax
                    if ax == 1:
                        return best
    return best


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Smith normal form with full unimodular transforms.

    Pivot rule: minimal absolute value, ties broken by (row, col) lexicographic
    order, so the output is deterministic for a fixed input.
    """
    rows, cols = shape(m)
    a = copy(m)
    u = identity(rows)
    v = identity(cols)

    def row_op(i: int, t: int, q: int) -> None:
        for j in range(cols):
            a[i][j] -= q * a[t][j]
        for j in range(rows):
            u[i][j] -= q * u[t][j]

    def col_op(j: int, t: int, q: int) -> None:
        for i in range(rows):
            a[i][j] -= q * a[i][t]
        for i in range(cols):
            v[i][j] -= q * v[i][t]

    t = 0
    while t < min(rows, cols):
        piv = _pivot(a, t, rows, cols)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        p = a[t][t]
        # if any entry in column/row t is not divisible by the pivot, perform
        # one Euclidean step and re-select the global pivot (the submatrix
        # minimum strictly decreases, so this terminates and keeps entries tame)
        remainder = False
        for i in range(t + 1, rows):
            if a[i][t] % p != 0:
                row_op(i, t, a[i][t] // p)
                remainder = True
                break
        if remainder:
            continue
        for j in range(t + 1, cols):
            if a[t][j] % p != 0:
                col_op(j, t, a[t][j] // p)
                remainder = True
                break
        if remainder:
            continue
        # exact clearing: column first (row t may be dirty), then the row
        # (column t is clean afterwards, so these touch row t only)
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                row_op(i, t, a[i][t] // p)
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                col_op(j, t, a[t][j] // p)
        # divisibility of the remaining block: fold an offending row into row t
        # and restart this pivot position
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for k in range(cols):
                a[t][k] += a[offender][k]
            for k in range(rows):
                u[t][k] += u[offender][k]
            continue
        if a[t][t] < 0:
            for j in range(cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1
    return SmithDecomposition(u=u, d=a, v=v, rank=t)


@dataclass(frozen=True)
class AbelianGroup:
    """Isomorphism type of a finitely generated abelian group."""

    free_rank: int
    torsion: Tuple[int, ...] = ()  # invariant factors > 1, each dividing the next

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel_structure(m: Matrix, ambient_rank: Optional[int] = None) -> AbelianGroup:
    """Invariant factors of coker(M : Z^cols -> Z^rows).

    `ambient_rank` overrides the codomain rank (for maps presented on a
    sublattice); defaults to rows(M).
    """
    rows, cols = shape(m)
    n = rows if ambient_rank is None else ambient_rank
    if cols == 0 or rows == 0:
        return AbelianGroup(free_rank=n)
    snf = smith_normal_form(m)
    diag = [d for d in snf.diagonal() if d != 0]
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroup(free_rank=n - len(diag), torsion=torsion)


def solve(m: Matrix, b: Sequence[int]) -> Optional[List[int]]:
    """One integer solution x of M x = b, or None."""
    rows, cols = shape(m)
    if len(b) != rows:
        raise ValueError("rhs length mismatch")
    if cols == 0:
        return [] if all(x == 0 for x in b) else None
    snf = smith_normal_form(m)
    ub = [sum(snf.u[i][k] * b[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = snf.d[i][i] if i < cols else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            if i < cols:
                y[i] = ub[i] // d
    return [sum(snf.v[i][k] * y[k] for k in range(cols)) for i in range(cols)]


def kernel_basis(m: Matrix) -> List[List[int]]:
    """Basis (as column vectors) of ker(M : Z^cols -> Z^rows)."""
    rows, cols = shape(m)
    if cols == 0:
        return []
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    snf = smith_normal_form(m)
    out = []
    for j in range(snf.rank, cols):
        out.append([snf.v[i][j] for i in range(cols)])
    return out


def columns(m: Matrix) -> List[List[int]]:
    rows, cols = shape(m)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def from_columns(cols_list: List[List[int]], rows: int) -> Matrix:
    out = zeros(rows, len(cols_list))
    for j, col in enumerate(cols_list):
        for i in range(rows):
            out[i][j] = col[i]
    return out


def in_lattice(basis: Matrix, v: Sequence[int]) -> bool:
    """Is v in the column lattice of `basis`?"""
    return solve(basis, list(v)) is not None


@dataclass
class PresentedHomology:
    """H = (cycles of d_out) / (boundaries of d_in + relation lattice).

    `cycle_basis` columns express the homology generators in chain
    coordinates, so classes of arbitrary cycles can be computed.
    """

    group: AbelianGroup
    cycle_basis: Matrix            # chain_rank x k
    relation_matrix: Matrix        # k x m : boundaries+relations in cycle coords

    def class_of(self, vector: Sequence[int]) -> Optional[List[int]]:
        """Coordinates of a cycle in the cycle basis (None if not a cycle
        representative expressible in the computed cycle lattice)."""
        return solve(self.cycle_basis, list(vector))


def homology_presented(
    d_out: Matrix,
    d_in: Matrix,
    rel_here: Optional[Matrix] = None,
    rel_below: Optional[Matrix] = None,
) -> PresentedHomology:
    """Homology at the middle of Z^a --d_in--> Z^n --d_out--> Z^b where the
    middle chain group is presented as Z^n modulo the columns of `rel_here`
    and the target as Z^b modulo the columns of `rel_below`.

    Cycles are vectors whose d_out-image lies in the rel_below lattice.
    """
    n = shape(d_out)[1] if shape(d_out)[0] else shape(d_in)[0]
    if shape(d_in)[0] and n and shape(d_in)[0] != n:
        raise ValueError("chain rank mismatch between d_in and d_out")
    b_rows = shape(d_out)[0]
    rb = rel_below if rel_below is not None else zeros(b_rows, 0)
    # cycles: solutions of d_out x = rb y  -> kernel of [d_out | -rb]
    if b_rows == 0:
        cyc = identity(n)
    else:
        block = [d_out[i][:] + [-rb[i][j] for j in range(shape(rb)[1])] for i in range(b_rows)]
        kb = kernel_basis(block)
        cyc = from_columns([k[:n] for k in kb], n)
    k = shape(cyc)[1]
    # boundaries + relations expressed in cycle coordinates; the projected
    # kernel columns may be a redundant generating set, so their syzygies are
    # relations too
    killers: List[List[int]] = [kv for kv in kernel_basis(cyc)]
    for src in (d_in, rel_here):
        if src is None:
            continue
        for col in columns(src):
            coords = solve(cyc, col)
            if coords is None:
                raise ValueError("boundary/relation is not a cycle; d.d != 0?")
            killers.append(coords)
    relmat = from_columns(killers, k)
    group = cokernel_structure(relmat, ambient_rank=k)
    return PresentedHomology(group=group, cycle_basis=cyc, relation_matrix=relmat)


def map_is_isomorphism(
    mat: Matrix,
    rel_src: Matrix,
    rel_tgt: Matrix,
    src_rank: Optional[int] = None,
    tgt_rank: Optional[int] = None,
) -> bool:
    """Is the induced map coker(rel_src) -> coker(rel_tgt) (given on ambient
    generators by `mat`) an isomorphism of abelian groups?

    Ranks must be passed explicitly when a dimension is zero, since an empty
    list of rows cannot carry its column count.
    """
    rows, cols = shape(mat)
    if tgt_rank is not None:
        rows = tgt_rank
    if src_rank is not None:
        cols = src_rank
    # surjective: [mat | rel_tgt] must have trivial cokernel
    aug = [mat[i][:] + rel_tgt[i][:] for i in range(rows)] if rows else []
    if not cokernel_structure(aug if rows else zeros(0, 0), ambient_rank=rows).is_trivial():
        return False
    # injective: whenever mat*a lies in lattice(rel_tgt), a must lie in lattice(rel_src)
    rt_cols = shape(rel_tgt)[1]
    if rows:
        block = [mat[i][:] + [-rel_tgt[i][j] for j in range(rt_cols)] for i in range(rows)]
        ker = kernel_basis(block)
    else:
        ker = columns(identity(cols))
    for kv in ker:
        a = kv[:cols]
        if solve(rel_src, a) is None:
            return False
    return True
