"""Exact integer linear algebra.

Smith normal form, ranks, homology of free chain complexes presented by
integer boundary matrices, and tensor/Tor of finitely generated abelian
groups. Everything runs on Python's arbitrary-precision integers; no
floating point is used anywhere in this module.

Matrices are sparse and column-major: boundary matrices of the complexes
built elsewhere in this package have a handful of +-1 entries per column,
and every algorithm here consumes columns. Rank and torsion are extracted
in two phases: first the column span is triangularized by unimodular
column operations (cheap, and the only phase that sees the full, possibly
very wide, matrix), then a full Smith reduction runs on the compressed
basis, which has at most one vector per pivot row.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .errors import InvalidComplexError


class IntMatrix:
    """Sparse integer matrix, stored as one dict (row -> entry) per column."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: tuple[dict, ...]):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        for col in cols:
            for r, v in col.items():
                if not 0 <= r < nrows:
                    raise ValueError(f"row index {r} out of range 0..{nrows - 1}")
                if v == 0:
                    raise ValueError("explicit zero entry stored")
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, tuple({} for _ in range(ncols)))

    @classmethod
    def from_columns(cls, nrows: int, cols: Iterable[Mapping[int, int]]) -> "IntMatrix":
        packed = tuple({r: v for r, v in col.items() if v} for col in cols)
        return cls(nrows, len(packed), packed)

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols: list[dict] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cls(nrows, ncols, tuple(cols))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError("entry access out of bounds")
        return self.cols[j].get(i, 0)

    def to_rows(self) -> list[list[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def transpose(self) -> "IntMatrix":
        cols: list[dict] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return IntMatrix(self.ncols, self.nrows, tuple(cols))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        """Matrix product self @ other."""
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        out = []
        for col in other.cols:
            acc: dict[int, int] = {}
            for k, v in col.items():
                for i, w in self.cols[k].items():
                    nv = acc.get(i, 0) + v * w
                    if nv:
                        acc[i] = nv
                    else:
                        acc.pop(i, None)
            out.append(acc)
        return IntMatrix(self.nrows, other.ncols, tuple(out))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(sorted(c.items())) for c in self.cols)))

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={sum(len(c) for c in self.cols)})"


def _sub_scaled(v: dict, b: dict, q: int) -> None:
    """v -= q * b, in place."""
    if q == 0:
        return
    for r, w in b.items():
        nv = v.get(r, 0) - q * w
        if nv:
            v[r] = nv
        else:
            v.pop(r, None)


def _combine(x: int, a: dict, y: int, b: dict) -> dict:
    """x*a + y*b as a fresh sparse vector."""
    out: dict[int, int] = {}
    if x:
        for r, w in a.items():
            out[r] = x * w
    if y:
        for r, w in b.items():
            nv = out.get(r, 0) + y * w
            if nv:
                out[r] = nv
            else:
                out.pop(r, None)
    return out


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) > 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _reduce_columns(columns: Iterable[Mapping[int, int]]) -> dict[int, dict]:
    """Triangularize the span of the given columns by unimodular column ops.

    Returns a map pivot_row -> vector, where each vector's topmost nonzero
    row is its pivot. The vectors generate exactly the same subgroup of
    Z^rows as the input columns.
    """
    basis: dict[int, dict] = {}
    for col in columns:
        v = {r: w for r, w in col.items() if w}
        while v:
            r = min(v)
            b = basis.get(r)
            if b is None:
                if v[r] < 0:
                    v = {k: -w for k, w in v.items()}
                basis[r] = v
                break
            a, c = b[r], v[r]
            if c % a == 0:
                _sub_scaled(v, b, c // a)
            else:
                g, x, y = _ext_gcd(a, c)
                basis[r] = _combine(x, b, y, v)
                v = _combine(a // g, v, -(c // g), b)
                v.pop(r, None)
        # a fully reduced column contributes nothing
    return basis


def column_rank(M: IntMatrix) -> int:
    """Rank of M over the rationals (= rank of its column span over Z)."""
    return len(_reduce_columns(M.cols))


def _invariant_chain(values: Iterable[int]) -> list[int]:
    """Normalize a multiset of cyclic orders into an invariant-factor chain.

    diag(a, b) is equivalent to diag(gcd, lcm), so pairwise fixes converge
    to the unique chain with d1 | d2 | ... Entries equal to 1 are kept
    until the end so the chain length matches the diagonal rank.
    """
    vals = sorted(abs(v) for v in values)
    if any(v == 0 for v in vals):
        raise ValueError("zero is not a cyclic order")
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
        vals.sort()
    return vals


class _SparseSmith:
    """Full Smith reduction of a small sparse matrix via row and column ops.

    Only the diagonal values are tracked; transforms are not accumulated.
    """

    def __init__(self, columns: Iterable[Mapping[int, int]]):
        self.cols: dict[int, dict[int, int]] = {}
        self.row_occ: dict[int, set[int]] = {}
        for j, col in enumerate(columns):
            c = {r: v for r, v in col.items() if v}
            if c:
                self.cols[j] = c
                for r in c:
                    self.row_occ.setdefault(r, set()).add(j)
        self.units: set[tuple[int, int]] = {
            (r, j) for j, c in self.cols.items() for r, v in c.items() if v in (1, -1)
        }

    def _set(self, r: int, j: int, v: int) -> None:
        col = self.cols.get(j)
        if v:
            if col is None:
                col = self.cols[j] = {}
            col[r] = v
            self.row_occ.setdefault(r, set()).add(j)
            if v in (1, -1):
                self.units.add((r, j))
            else:
                self.units.discard((r, j))
        else:
            if col is not None and r in col:
                del col[r]
                if not col:
                    del self.cols[j]
                occ = self.row_occ[r]
                occ.discard(j)
                if not occ:
                    del self.row_occ[r]
            self.units.discard((r, j))

    def _row_op(self, dst: int, src: int, q: int) -> None:
        """row[dst] -= q * row[src]"""
        if q == 0:
            return
        for j in list(self.row_occ.get(src, ())):
            v = self.cols[j][src]
            self._set(dst, j, self.cols.get(j, {}).get(dst, 0) - q * v)

    def _col_op(self, dst: int, src: int, q: int) -> None:
        """col[dst] -= q * col[src]"""
        if q == 0:
            return
        for r, v in list(self.cols.get(src, {}).items()):
            self._set(r, dst, self.cols.get(dst, {}).get(r, 0) - q * v)

    def _pick_pivot(self) -> tuple[int, int]:
        # prefer a +-1 entry with small fill, else a minimal absolute value
        if self.units:
            best = None
            for n, (r, j) in enumerate(self.units):
                fill = (len(self.row_occ[r]) - 1) * (len(self.cols[j]) - 1)
                if best is None or fill < best[0]:
                    best = (fill, r, j)
                if fill == 0 or n >= 64:
                    break
            return best[1], best[2]
        best = None
        for j, col in self.cols.items():
            for r, v in col.items():
                key = (abs(v), (len(self.row_occ[r]) - 1) * (len(col) - 1))
                if best is None or key < best[0]:
                    best = (key, r, j)
        return best[1], best[2]

    def diagonal(self) -> list[int]:
        diag: list[int] = []
        while self.cols:
            r, j = self._pick_pivot()
            while True:
                pivot = self.cols[j][r]
                # clear the pivot column with row ops
                for r2 in [x for x in self.cols[j] if x != r]:
                    self._row_op(r2, r, self.cols[j][r2] // pivot)
                rest = [x for x in self.cols[j] if x != r]
                if rest:
                    r = min(rest, key=lambda x: abs(self.cols[j][x]))
                    continue
                # clear the pivot row with column ops
                for j2 in [x for x in self.row_occ[r] if x != j]:
                    self._col_op(j2, j, self.cols[j2][r] // pivot)
                rest = [x for x in self.row_occ[r] if x != j]
                if rest:
                    j = min(rest, key=lambda x: abs(self.cols[x][r]))
                    continue
                break
            diag.append(abs(self.cols[j][r]))
            self._set(r, j, 0)
        return diag


def smith_normal_form(M: IntMatrix) -> tuple[list[int], int]:
    """Invariant factors of M (nonzero Smith diagonal, in divisibility order).

    Returns (factors, rank) where rank == len(factors). The unimodular
    transforms are not computed.
    """
    basis = _reduce_columns(M.cols)
    if not basis:
        return [], 0
    diag = _SparseSmith(basis.values()).diagonal()
    factors = _invariant_chain(diag)
    return factors, len(factors)


@dataclass(frozen=True)
class FgAbelianGroup:
    """A finitely generated abelian group: Z^free_rank + Z/d1 + Z/d2 + ...

    The torsion coefficients form a divisibility chain d1 | d2 | ... with
    every di >= 2.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invalid torsion coefficient {d}")
            if prev is not None and d % prev:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
            prev = d

    @classmethod
    def from_parts(cls, free_rank: int, torsion: Iterable[int]) -> "FgAbelianGroup":
        chain = [d for d in _invariant_chain(torsion) if d > 1]
        return cls(free_rank, tuple(chain))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return FgAbelianGroup.from_parts(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


ZERO_GROUP = FgAbelianGroup()
Z = FgAbelianGroup(1)


def free_abelian(rank: int) -> FgAbelianGroup:
    return FgAbelianGroup(rank)


def cyclic(n: int) -> FgAbelianGroup:
    """Z/n as an FgAbelianGroup; n = 0 means Z, n = 1 means the trivial group."""
    if n == 0:
        return Z
    if n == 1:
        return ZERO_GROUP
    return FgAbelianGroup(0, (n,))


def tensor_fg(A: FgAbelianGroup, B: FgAbelianGroup) -> FgAbelianGroup:
    """Tensor product over Z, expanded bilinearly over the decompositions."""
    rank = A.free_rank * B.free_rank
    torsion: list[int] = []
    torsion.extend(d for d in A.torsion for _ in range(B.free_rank))
    torsion.extend(e for e in B.torsion for _ in range(A.free_rank))
    torsion.extend(gcd(d, e) for d in A.torsion for e in B.torsion)
    return FgAbelianGroup.from_parts(rank, (t for t in torsion if t > 1))


def tor_fg(A: FgAbelianGroup, B: FgAbelianGroup) -> FgAbelianGroup:
    """Tor_1 over Z. Free parts are flat and contribute nothing."""
    torsion = (gcd(d, e) for d in A.torsion for e in B.torsion)
    return FgAbelianGroup.from_parts(0, (t for t in torsion if t > 1))


def homology_between(d_k: IntMatrix, d_k_plus_1: IntMatrix, check: bool = True) -> FgAbelianGroup:
    """Homology ker(d_k) / im(d_k_plus_1) at the middle of two boundary maps.

    d_k has the chain group in its columns; d_k_plus_1 maps into it. The
    kernel of d_k is a pure submodule of Z^n containing the image, so the
    torsion of the quotient is read off the Smith form of d_k_plus_1 alone.
    """
    n = d_k.ncols
    if d_k_plus_1.nrows != n:
        raise InvalidComplexError(
            f"boundary dimensions do not compose: {d_k.nrows}x{d_k.ncols} "
            f"after {d_k_plus_1.nrows}x{d_k_plus_1.ncols}"
        )
    if check and not d_k.mul(d_k_plus_1).is_zero():
        raise InvalidComplexError("composite of consecutive boundaries is nonzero")
    rank_out = column_rank(d_k)
    factors, rank_in = smith_normal_form(d_k_plus_1)
    free = n - rank_out - rank_in
    if free < 0:
        raise InvalidComplexError("negative free rank; input is not a complex")
    return FgAbelianGroup.from_parts(free, (f for f in factors if f > 1))
