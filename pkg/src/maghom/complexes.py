"""Chain complexes over Z with named bases.

Single complexes, double complexes, complexes graded by exact rational
lengths, total complexes, tensor products, and homology extraction.

Every complex records the degree through which its homology is faithful;
requests past that bound raise TruncationError instead of silently
returning groups computed from incomplete data. A complex that is
genuinely zero above its top degree may carry a large faithful_degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional

from .errors import InvalidComplexError, TruncationError
from .exact_linalg import FgAbelianGroup, IntMatrix, homology_between

Label = Hashable

COMPLETE = 10**9  # faithful_degree for complexes with nothing above the top


@dataclass(frozen=True)
class BasedChainComplex:
    """Free chain complex on degrees 0..max_degree with named generators.

    boundary[k] maps degree k to degree k-1; boundary[0] is the zero map
    out of degree 0 (a matrix with no rows).
    """

    basis: tuple[tuple[Label, ...], ...]
    boundary: tuple[IntMatrix, ...]
    faithful_degree: int

    @property
    def max_degree(self) -> int:
        return len(self.basis) - 1

    def dim(self, k: int) -> int:
        return len(self.basis[k]) if 0 <= k <= self.max_degree else 0

    def index_of(self, k: int) -> dict:
        return {lab: i for i, lab in enumerate(self.basis[k])}

    def boundary_or_zero(self, k: int) -> IntMatrix:
        if 1 <= k <= self.max_degree:
            return self.boundary[k]
        if k == 0:
            return self.boundary[0]
        return IntMatrix.zero(self.dim(k - 1), self.dim(k))


def validate_complex(C: BasedChainComplex) -> None:
    """Raise InvalidComplexError at the first failing degree."""
    if len(C.boundary) != len(C.basis):
        raise InvalidComplexError("one boundary matrix required per degree")
    if C.boundary[0].nrows != 0 or C.boundary[0].ncols != len(C.basis[0]):
        raise InvalidComplexError("degree 0 must carry the zero map out")
    for k in range(1, len(C.basis)):
        d = C.boundary[k]
        if d.nrows != len(C.basis[k - 1]) or d.ncols != len(C.basis[k]):
            raise InvalidComplexError(
                f"boundary in degree {k} is {d.nrows}x{d.ncols}, expected "
                f"{len(C.basis[k - 1])}x{len(C.basis[k])}"
            )
        if not C.boundary[k - 1].mul(d).is_zero():
            raise InvalidComplexError(f"d*d != 0 at degree {k}")


def make_chain_complex(
    basis: Iterable[Iterable[Label]],
    boundary: Iterable[IntMatrix],
    faithful_degree: int,
    check: bool = True,
) -> BasedChainComplex:
    C = BasedChainComplex(
        tuple(tuple(b) for b in basis), tuple(boundary), faithful_degree
    )
    if check:
        validate_complex(C)
    return C


def empty_complex(max_degree: int, faithful_degree: Optional[int] = None) -> BasedChainComplex:
    basis = tuple(() for _ in range(max_degree + 1))
    boundary = tuple(IntMatrix.zero(0, 0) for _ in range(max_degree + 1))
    if faithful_degree is None:
        faithful_degree = max_degree - 1
    return BasedChainComplex(basis, boundary, faithful_degree)


def unit_complex() -> BasedChainComplex:
    """Z concentrated in degree 0."""
    return make_chain_complex([["*"]], [IntMatrix.zero(0, 1)], COMPLETE)


def direct_sum_chain(
    summands: list[tuple[Hashable, BasedChainComplex]],
) -> BasedChainComplex:
    """Block-diagonal direct sum; labels become (tag, original label)."""
    if not summands:
        return empty_complex(0, COMPLETE)
    max_degree = max(c.max_degree for _, c in summands)
    faithful = min(c.faithful_degree for _, c in summands)
    basis: list[tuple] = []
    boundary: list[IntMatrix] = []
    for n in range(max_degree + 1):
        labels: list = []
        cols: list[dict[int, int]] = []
        offset = 0
        prev_offsets = []
        for _, c in summands:
            prev_offsets.append(offset)
            offset += c.dim(n - 1)
        for (tag, c), off in zip(summands, prev_offsets):
            labels.extend((tag, lab) for lab in (c.basis[n] if n <= c.max_degree else ()))
            if n >= 1 and n <= c.max_degree:
                for col in c.boundary[n].cols:
                    cols.append({off + i: v for i, v in col.items()})
        basis.append(tuple(labels))
        if n == 0:
            boundary.append(IntMatrix.zero(0, len(labels)))
        else:
            boundary.append(IntMatrix.from_columns(len(basis[n - 1]), cols))
    return BasedChainComplex(tuple(basis), tuple(boundary), faithful)


@dataclass(frozen=True)
class BasedDoubleComplex:
    """First-quadrant double complex with commuting differentials.

    Bidegrees live in the rectangle [0,P]x[0,Q], optionally cut to the
    triangle p + q <= total_bound. horizontal[(p,q)] maps to (p-1,q) and
    vertical[(p,q)] to (p,q-1). Rows and columns are chain complexes and
    the two differentials commute; the Koszul sign appears only in Tot.
    """

    P: int
    Q: int
    basis: Mapping[tuple[int, int], tuple[Label, ...]]
    horizontal: Mapping[tuple[int, int], IntMatrix]
    vertical: Mapping[tuple[int, int], IntMatrix]
    total_bound: Optional[int] = None

    def present(self, p: int, q: int) -> bool:
        if not (0 <= p <= self.P and 0 <= q <= self.Q):
            return False
        return self.total_bound is None or p + q <= self.total_bound

    def dim(self, p: int, q: int) -> int:
        return len(self.basis.get((p, q), ()))

    @property
    def total_exact_degree(self) -> int:
        """Largest n with every (p,q), p+q = n, inside the stored region."""
        if self.total_bound is not None:
            return self.total_bound
        return min(self.P, self.Q)


def validate_double_complex(B: BasedDoubleComplex) -> None:
    for (p, q) in B.basis:
        if not B.present(p, q):
            raise InvalidComplexError(f"basis stored outside the region at {(p, q)}")
    for (p, q), m in B.horizontal.items():
        if m.nrows != B.dim(p - 1, q) or m.ncols != B.dim(p, q):
            raise InvalidComplexError(f"horizontal dimensions wrong at {(p, q)}")
    for (p, q), m in B.vertical.items():
        if m.nrows != B.dim(p, q - 1) or m.ncols != B.dim(p, q):
            raise InvalidComplexError(f"vertical dimensions wrong at {(p, q)}")
    for (p, q) in B.basis:
        if p >= 2 and B.present(p - 2, q):
            if not B.horizontal[(p - 1, q)].mul(B.horizontal[(p, q)]).is_zero():
                raise InvalidComplexError(f"horizontal d*d != 0 at {(p, q)}")
        if q >= 2 and B.present(p, q - 2):
            if not B.vertical[(p, q - 1)].mul(B.vertical[(p, q)]).is_zero():
                raise InvalidComplexError(f"vertical d*d != 0 at {(p, q)}")
        if p >= 1 and q >= 1 and B.present(p - 1, q - 1):
            hv = B.horizontal[(p, q - 1)].mul(B.vertical[(p, q)])
            vh = B.vertical[(p - 1, q)].mul(B.horizontal[(p, q)])
            if hv != vh:
                raise InvalidComplexError(f"differentials do not commute at {(p, q)}")


def total_complex(B: BasedDoubleComplex) -> BasedChainComplex:
    """Collapse along antidiagonals: Tot_n = sum of B[p][q] with p + q = n.

    The differential on the (p,q) block is horizontal plus (-1)^p vertical.
    """
    N = B.total_exact_degree
    blocks: list[list[tuple[int, int]]] = []
    basis: list[tuple] = []
    offsets: dict[tuple[int, int], int] = {}
    for n in range(N + 1):
        degree_blocks = [(p, n - p) for p in range(n + 1) if B.present(p, n - p)]
        blocks.append(degree_blocks)
        labels: list = []
        for pq in degree_blocks:
            offsets[pq] = len(labels)
            labels.extend((pq[0], pq[1], lab) for lab in B.basis.get(pq, ()))
        basis.append(tuple(labels))

    boundary = [IntMatrix.zero(0, len(basis[0]))]
    for n in range(1, N + 1):
        cols: list[dict[int, int]] = []
        for (p, q) in blocks[n]:
            h = B.horizontal.get((p, q))
            v = B.vertical.get((p, q))
            sign = -1 if p % 2 else 1
            for j in range(B.dim(p, q)):
                col: dict[int, int] = {}
                if p >= 1 and h is not None:
                    base = offsets[(p - 1, q)]
                    for i, val in h.cols[j].items():
                        col[base + i] = val
                if q >= 1 and v is not None:
                    base = offsets[(p, q - 1)]
                    for i, val in v.cols[j].items():
                        nv = col.get(base + i, 0) + sign * val
                        if nv:
                            col[base + i] = nv
                        else:
                            col.pop(base + i, None)
                cols.append(col)
        boundary.append(IntMatrix.from_columns(len(basis[n - 1]), cols))
    C = BasedChainComplex(tuple(basis), tuple(boundary), N - 1)
    validate_complex(C)
    return C


def _exactness(C: BasedChainComplex) -> int:
    """Degree through which groups and boundaries are trustworthy."""
    return COMPLETE if C.faithful_degree >= COMPLETE else C.faithful_degree + 1


def tensor_complex(C: BasedChainComplex, D: BasedChainComplex) -> BasedChainComplex:
    """Tensor product of chain complexes with the usual Koszul sign.

    d(c x d) = dc x d + (-1)^deg(c) c x dd. Basis labels are pairs
    ((j, c), (k, d)) recording the bidegree split.
    """
    max_degree = C.max_degree + D.max_degree
    faithful = min(_exactness(C), _exactness(D)) - 1
    c_index = [C.index_of(j) for j in range(C.max_degree + 1)]
    d_index = [D.index_of(k) for k in range(D.max_degree + 1)]

    basis: list[tuple] = []
    index: list[dict] = []
    for n in range(max_degree + 1):
        labels = []
        for j in range(n + 1):
            k = n - j
            if j <= C.max_degree and k <= D.max_degree:
                labels.extend(
                    ((j, cl), (k, dl)) for cl in C.basis[j] for dl in D.basis[k]
                )
        basis.append(tuple(labels))
        index.append({lab: i for i, lab in enumerate(labels)})

    boundary = [IntMatrix.zero(0, len(basis[0]))]
    for n in range(1, max_degree + 1):
        cols = []
        target = index[n - 1]
        for ((j, cl), (k, dl)) in basis[n]:
            col: dict[int, int] = {}
            if j >= 1:
                for i, v in C.boundary[j].cols[c_index[j][cl]].items():
                    lab = ((j - 1, C.basis[j - 1][i]), (k, dl))
                    col[target[lab]] = v
            if k >= 1:
                sign = -1 if j % 2 else 1
                for i, v in D.boundary[k].cols[d_index[k][dl]].items():
                    lab = ((j, cl), (k - 1, D.basis[k - 1][i]))
                    t = target[lab]
                    nv = col.get(t, 0) + sign * v
                    if nv:
                        col[t] = nv
                    else:
                        col.pop(t, None)
            cols.append(col)
        boundary.append(IntMatrix.from_columns(len(basis[n - 1]), cols))
    out = BasedChainComplex(tuple(basis), tuple(boundary), faithful)
    validate_complex(out)
    return out


@dataclass(frozen=True)
class GradedChainComplex:
    """A chain complex for each exact nonnegative rational grading.

    Absent gradings are the zero complex.
    """

    pieces: Mapping[Fraction, BasedChainComplex]

    def gradings(self) -> list[Fraction]:
        return sorted(self.pieces)

    def piece(self, ell) -> Optional[BasedChainComplex]:
        return self.pieces.get(Fraction(ell))


def graded_tensor(C: GradedChainComplex, D: GradedChainComplex) -> GradedChainComplex:
    """Convolution tensor: grading l collects all splittings r + s = l."""
    splittings: dict[Fraction, list[tuple[Fraction, Fraction]]] = {}
    for r in C.pieces:
        for s in D.pieces:
            splittings.setdefault(r + s, []).append((r, s))
    pieces = {}
    for ell, parts in sorted(splittings.items()):
        summands = [
            ((r, s), tensor_complex(C.pieces[r], D.pieces[s])) for (r, s) in sorted(parts)
        ]
        pieces[ell] = direct_sum_chain(summands)
    return GradedChainComplex(pieces)


class HomologyTable:
    """Map from (degree, optional length grading) to FgAbelianGroup.

    Missing keys read as the zero group; equality compares nonzero entries.
    """

    def __init__(self, entries: Mapping[tuple[int, Optional[Fraction]], FgAbelianGroup]):
        self._entries = dict(entries)

    def group(self, degree: int, grading=None) -> FgAbelianGroup:
        if grading is not None:
            grading = Fraction(grading)
        return self._entries.get((degree, grading), FgAbelianGroup())

    def degrees(self) -> list[int]:
        return sorted({k for k, _ in self._entries})

    def gradings(self) -> list:
        gr = {g for _, g in self._entries}
        if gr <= {None}:
            return [None] if gr else []
        return sorted(g for g in gr if g is not None)

    def items(self):
        def key(item):
            (k, g), _ = item
            return (g is not None, g if g is not None else Fraction(0), k)

        return sorted(self._entries.items(), key=key)

    def nonzero(self) -> dict:
        return {k: v for k, v in self._entries.items() if not v.is_trivial}

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologyTable) and self.nonzero() == other.nonzero()

    def __repr__(self) -> str:
        parts = []
        for (k, g), grp in self.items():
            name = f"H_{k}" if g is None else f"H_{k}^{g}"
            parts.append(f"{name}={grp}")
        return "HomologyTable(" + ", ".join(parts) + ")"


def homology_table(C: BasedChainComplex, max_degree: int) -> HomologyTable:
    """Homology in degrees 0..max_degree, honoring the faithfulness bound."""
    if max_degree > C.faithful_degree:
        raise TruncationError(max_degree, C.faithful_degree)
    entries = {}
    for k in range(max_degree + 1):
        entries[(k, None)] = homology_between(
            C.boundary_or_zero(k), C.boundary_or_zero(k + 1)
        )
    return HomologyTable(entries)


def graded_homology_table(G: GradedChainComplex, max_degree: int) -> HomologyTable:
    entries = {}
    for ell in G.gradings():
        piece = G.pieces[ell]
        if max_degree > piece.faithful_degree:
            raise TruncationError(max_degree, piece.faithful_degree)
        for k in range(max_degree + 1):
            entries[(k, ell)] = homology_between(
                piece.boundary_or_zero(k), piece.boundary_or_zero(k + 1)
            )
    return HomologyTable(entries)
