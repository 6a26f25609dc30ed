"""Finitely generated abelian groups and integer-matrix homomorphisms.

A group ``Z^r + Z/d1 + ... + Z/dk`` has generators ordered free-first, then the
torsion summands in the order given.  A homomorphism is an integer matrix with
one column per source generator and one row per target generator.  Every
decision (isomorphism, kernel, cokernel) goes through the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Sequence

Matrix = list[list[int]]


class IllFormedMap(ValueError):
    """The matrix does not send source relations into target relations."""


class ShapeMismatch(ValueError):
    """Groups or matrix shapes do not line up."""


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def matmul(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(y)
    cols = len(y[0]) if y else 0
    return [[sum(row[k] * y[k][j] for k in range(inner)) for j in range(cols)] for row in x]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative entries
    forming a divisibility chain.  The pivot is always the entry of smallest
    nonzero absolute value in the active block, ties going to the lowest row
    and then the lowest column.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [[int(x) for x in r] for r in M]
    if any(len(r) != cols for r in A):
        raise ShapeMismatch("ragged matrix")
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(A[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                return U, A, V
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, cols):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith form, padded with zeros to ``min(shape)``."""
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


@dataclass(frozen=True)
class FgabGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {self.torsion}")

    @classmethod
    def cyclic(cls, d: int) -> FgabGroup:
        """``Z`` for ``d == 0``, trivial for ``d == 1``, else ``Z/d``."""
        if d == 0:
            return cls(1)
        return cls(0, () if d == 1 else (d,))

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> FgabGroup:
        """Group from cyclic orders (0 meaning ``Z``), dropping trivial ones."""
        return cls(
            sum(1 for d in orders if d == 0),
            tuple(abs(d) for d in orders if abs(d) > 1),
        )

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each generator, 0 for free generators."""
        return (0,) * self.rank + self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int | None:
        return prod(self.torsion) if self.rank == 0 else None

    def relations(self) -> Matrix:
        """Columns generate the relation lattice inside ``Z^ngens``."""
        R = zeros(self.ngens, len(self.torsion))
        for j, d in enumerate(self.torsion):
            R[self.rank + j][j] = d
        return R

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Normal form of an element given in generator coordinates."""
        return tuple(x if d == 0 else x % d for x, d in zip(vec, self.orders))

    def elements(self):
        """Iterate all elements of a finite group, as coordinate tuples."""
        if self.rank:
            raise ValueError("group is infinite")
        return product(*(range(d) for d in self.torsion))

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


TRIVIAL = FgabGroup()
Z = FgabGroup(1)


def canonicalize(G: FgabGroup) -> FgabGroup:
    """Same group with torsion rewritten as a divisibility chain."""
    if not G.torsion:
        return G
    k = len(G.torsion)
    diag = [[G.torsion[i] if i == j else 0 for j in range(k)] for i in range(k)]
    return FgabGroup(G.rank, tuple(d for d in invariant_factors(diag) if d > 1))


def direct_sum_groups(*groups: FgabGroup) -> FgabGroup:
    return FgabGroup(sum(g.rank for g in groups), tuple(d for g in groups for d in g.torsion))


def _summand_positions(groups: Sequence[FgabGroup]) -> list[list[int]]:
    # generator index of each summand's generators inside the direct sum
    total_rank = sum(g.rank for g in groups)
    free_at, tor_at = 0, total_rank
    out = []
    for g in groups:
        idx = list(range(free_at, free_at + g.rank)) + list(range(tor_at, tor_at + len(g.torsion)))
        free_at += g.rank
        tor_at += len(g.torsion)
        out.append(idx)
    return out


@dataclass(frozen=True)
class IsoReport:
    is_iso: bool
    kernel: FgabGroup
    cokernel: FgabGroup

    def __bool__(self) -> bool:
        return self.is_iso


@dataclass(frozen=True)
class FgabMap:
    source: FgabGroup
    target: FgabGroup
    matrix: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if not M and self.target.ngens:
            M = tuple((0,) * self.source.ngens for _ in range(self.target.ngens))
        object.__setattr__(self, "matrix", M)
        if len(M) != self.target.ngens or any(len(r) != self.source.ngens for r in M):
            raise ShapeMismatch(
                f"matrix shape does not match {self.source} -> {self.target}"
            )

    @classmethod
    def zero(cls, source: FgabGroup, target: FgabGroup) -> FgabMap:
        return cls(source, target, zeros(target.ngens, source.ngens))

    @classmethod
    def identity(cls, G: FgabGroup) -> FgabMap:
        return cls(G, G, identity(G.ngens))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def check_well_defined(self) -> None:
        for j, d in enumerate(self.source.orders):
            if d == 0:
                continue
            for i, e in enumerate(self.target.orders):
                x = self.matrix[i][j]
                if (e == 0 and x != 0) or (e and (d * x) % e):
                    raise IllFormedMap(
                        f"generator {j} of order {d} maps to {self.column(j)}, "
                        f"not killed by {d} in {self.target}"
                    )

    def is_well_defined(self) -> bool:
        try:
            self.check_well_defined()
        except IllFormedMap:
            return False
        return True

    def normalized(self) -> FgabMap:
        """Torsion rows reduced modulo the target orders."""
        M = [
            [x % e if e else x for x in row]
            for row, e in zip(self.matrix, self.target.orders)
        ]
        return FgabMap(self.source, self.target, M)

    def __call__(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.source.ngens:
            raise ShapeMismatch("vector length does not match source")
        img = [sum(r * x for r, x in zip(row, vec)) for row in self.matrix]
        return self.target.reduce(img)

    def equals(self, other: FgabMap) -> bool:
        """Equality as homomorphisms (entries compared modulo target torsion)."""
        return (
            self.source == other.source
            and self.target == other.target
            and self.normalized().matrix == other.normalized().matrix
        )

    def __add__(self, other: FgabMap) -> FgabMap:
        if self.source != other.source or self.target != other.target:
            raise ShapeMismatch("can only add parallel maps")
        M = [[x + y for x, y in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return FgabMap(self.source, self.target, M)

    def __rmul__(self, k: int) -> FgabMap:
        return FgabMap(self.source, self.target, [[k * x for x in r] for r in self.matrix])

    def render(self) -> str:
        if not self.matrix or not self.matrix[0]:
            return "[]"
        rows = [" ".join(str(x) for x in r) for r in self.matrix]
        return "[" + "; ".join(rows) + "]"

    def __str__(self) -> str:
        return f"{self.render()} : {self.source} → {self.target}"


def compose(f: FgabMap, g: FgabMap) -> FgabMap:
    """``f ∘ g``."""
    if g.target != f.source:
        raise ShapeMismatch(f"cannot compose: {g.target} != {f.source}")
    if not f.matrix or not g.matrix:
        return FgabMap.zero(g.source, f.target)
    return FgabMap(g.source, f.target, matmul(f.matrix, g.matrix, inner=f.source.ngens))


def direct_sum(*maps: FgabMap) -> FgabMap:
    """Block-diagonal map between the direct sums of sources and targets."""
    src = direct_sum_groups(*(f.source for f in maps))
    tgt = direct_sum_groups(*(f.target for f in maps))
    spos = _summand_positions([f.source for f in maps])
    tpos = _summand_positions([f.target for f in maps])
    M = zeros(tgt.ngens, src.ngens)
    for f, sp, tp in zip(maps, spos, tpos):
        for i, ti in enumerate(tp):
            for j, sj in enumerate(sp):
                M[ti][sj] = f.matrix[i][j]
    return FgabMap(src, tgt, M)


def inclusion(groups: Sequence[FgabGroup], k: int) -> FgabMap:
    """Inclusion of the ``k``-th summand into the direct sum."""
    total = direct_sum_groups(*groups)
    pos = _summand_positions(groups)[k]
    M = zeros(total.ngens, groups[k].ngens)
    for j, p in enumerate(pos):
        M[p][j] = 1
    return FgabMap(groups[k], total, M)


def projection(groups: Sequence[FgabGroup], k: int) -> FgabMap:
    total = direct_sum_groups(*groups)
    pos = _summand_positions(groups)[k]
    M = zeros(groups[k].ngens, total.ngens)
    for i, p in enumerate(pos):
        M[i][p] = 1
    return FgabMap(total, groups[k], M)


def diagonal(G: FgabGroup, r: int = 2) -> FgabMap:
    """``x -> (x, ..., x)`` into ``r`` copies of ``G``."""
    groups = [G] * r
    total = direct_sum_groups(*groups)
    M = zeros(total.ngens, G.ngens)
    for pos in _summand_positions(groups):
        for j, p in enumerate(pos):
            M[p][j] = 1
    return FgabMap(G, total, M)


def codiagonal(G: FgabGroup, r: int = 2) -> FgabMap:
    """``(x_1, ..., x_r) -> x_1 + ... + x_r``."""
    groups = [G] * r
    total = direct_sum_groups(*groups)
    M = zeros(G.ngens, total.ngens)
    for pos in _summand_positions(groups):
        for i, p in enumerate(pos):
            M[i][p] = 1
    return FgabMap(total, G, M)


def pair(*maps: FgabMap) -> FgabMap:
    """``x -> (f_1(x), ..., f_r(x))`` for maps sharing a source."""
    src = maps[0].source
    if any(f.source != src for f in maps):
        raise ShapeMismatch("pair needs a common source")
    return compose(direct_sum(*maps), diagonal(src, len(maps)))


def _group_from_diagonal(D: Matrix, nrows: int) -> FgabGroup:
    # quotient Z^nrows / column span of a diagonal matrix
    k = min(nrows, len(D[0]) if D else 0)
    orders = [D[i][i] for i in range(k)] + [0] * (nrows - k)
    return FgabGroup.from_orders(orders)


def cokernel(f: FgabMap) -> FgabGroup:
    f.check_well_defined()
    t = f.target.ngens
    if t == 0:
        return TRIVIAL
    R = f.target.relations()
    stacked = [list(f.matrix[i]) + list(R[i]) for i in range(t)]
    if not stacked[0]:
        return f.target
    _, D, _ = smith_normal_form(stacked)
    return canonicalize(_group_from_diagonal(D, t))


def _lattice_basis(gens: Matrix, dim: int) -> tuple[Matrix, Matrix, list[int]]:
    """Basis of the column span of ``gens`` (``dim`` rows).

    Returns ``(U, D, diag)`` where the span equals ``U^{-1}`` applied to the
    first ``len(diag)`` columns of ``D``; ``diag`` holds the nonzero invariants.
    """
    U, D, _ = smith_normal_form(gens)
    k = min(dim, len(gens[0]) if gens and gens[0] else 0)
    diag = [D[i][i] for i in range(k) if D[i][i]]
    return U, D, diag


def kernel(f: FgabMap) -> FgabGroup:
    """Kernel of ``f`` as an abstract group."""
    f.check_well_defined()
    s = f.source.ngens
    if s == 0:
        return TRIVIAL
    t = f.target.ngens
    Rt = f.target.relations()
    ntr = len(Rt[0]) if Rt else 0
    # x in Z^s with f(x) in the target relation lattice
    if t == 0:
        pre = identity(s)
    else:
        A = [list(f.matrix[i]) + list(Rt[i]) for i in range(t)]
        _, D, V = smith_normal_form(A)
        r = sum(1 for i in range(min(t, s + ntr)) if D[i][i])
        ker_cols = [[V[row][c] for c in range(r, s + ntr)] for row in range(s)]
        pre = ker_cols if ker_cols and ker_cols[0] else [[] for _ in range(s)]
    if not pre[0]:
        return TRIVIAL
    U, D, diag = _lattice_basis(pre, s)
    k = len(diag)
    if k == 0:
        return TRIVIAL
    # express the source relations in the basis of the preimage lattice
    Rs = f.source.relations()
    if not Rs or not Rs[0]:
        return FgabGroup(k)
    URs = matmul(U, Rs)
    Y = []
    for i in range(s):
        if i < k:
            row = []
            for x in URs[i]:
                q, rem = divmod(x, diag[i])
                if rem:
                    raise IllFormedMap("source relations escape the kernel lattice")
                row.append(q)
            Y.append(row)
        elif any(URs[i]):
            raise IllFormedMap("source relations escape the kernel lattice")
    _, DY, _ = smith_normal_form(Y)
    return canonicalize(_group_from_diagonal(DY, k))


def is_isomorphism(f: FgabMap) -> IsoReport:
    """Decide bijectivity of ``f``; the report carries kernel and cokernel."""
    ker = kernel(f)
    cok = cokernel(f)
    return IsoReport(ker.is_trivial and cok.is_trivial, ker, cok)
