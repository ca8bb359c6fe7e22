"""Based simplicial and bisimplicial objects in free abelian groups.

Face maps send each generator to a single generator or to zero; degeneracy
maps send generators to generators, injectively. This is the shape of every
nerve built in this package, and it makes normalization a basis filter:
the quotient by degenerate generators just drops them from the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Optional

from .complexes import (
    BasedChainComplex,
    BasedDoubleComplex,
    validate_complex,
    validate_double_complex,
)
from .errors import ValidationError
from .exact_linalg import IntMatrix

Label = Hashable


@dataclass(frozen=True)
class BasedSimplicialObject:
    """Degrees 0..D; face[n][i] and degeneracy[n][i] act on generators.

    face[n] is a tuple of n+1 maps (degree n -> n-1, present for n >= 1,
    value None means zero); degeneracy[n] is a tuple of n+1 maps
    (degree n -> n+1, present for n < D).
    """

    basis: tuple[tuple[Label, ...], ...]
    face: tuple[tuple[Mapping[Label, Optional[Label]], ...], ...]
    degeneracy: tuple[tuple[Mapping[Label, Label], ...], ...]

    @property
    def max_degree(self) -> int:
        return len(self.basis) - 1

    def dim(self, n: int) -> int:
        return len(self.basis[n]) if 0 <= n <= self.max_degree else 0


def _compose(f: Mapping, g: Mapping, x):
    """Apply g then f, propagating zero (None)."""
    y = g.get(x)
    return None if y is None else f.get(y)


def validate_simplicial(S: BasedSimplicialObject) -> None:
    D = S.max_degree
    if len(S.face) != D + 1 or len(S.degeneracy) != max(D, 0):
        raise ValidationError("face/degeneracy tables have the wrong length")
    for n in range(D + 1):
        seen = set(S.basis[n])
        if len(seen) != len(S.basis[n]):
            raise ValidationError(f"duplicate generator labels in degree {n}")
        if n >= 1:
            if len(S.face[n]) != n + 1:
                raise ValidationError(f"degree {n} needs {n + 1} face maps")
            lower = set(S.basis[n - 1])
            for i, fm in enumerate(S.face[n]):
                if set(fm) != seen:
                    raise ValidationError(f"face {i} in degree {n} not defined on the basis")
                for v in fm.values():
                    if v is not None and v not in lower:
                        raise ValidationError(
                            f"face {i} in degree {n} leaves the basis: {v!r}"
                        )
        if n < D:
            if len(S.degeneracy[n]) != n + 1:
                raise ValidationError(f"degree {n} needs {n + 1} degeneracy maps")
            upper = set(S.basis[n + 1])
            for i, sm in enumerate(S.degeneracy[n]):
                if set(sm) != seen:
                    raise ValidationError(
                        f"degeneracy {i} in degree {n} not defined on the basis"
                    )
                if any(v not in upper for v in sm.values()):
                    raise ValidationError(f"degeneracy {i} in degree {n} leaves the basis")
                if len(set(sm.values())) != len(sm):
                    raise ValidationError(f"degeneracy {i} in degree {n} is not injective")

    # simplicial identities, checked on every generator
    for n in range(2, D + 1):
        for j in range(n + 1):
            for i in range(j):
                fi, fj = S.face[n - 1][i], S.face[n][j]
                fjm, fi2 = S.face[n - 1][j - 1], S.face[n][i]
                for x in S.basis[n]:
                    if _compose(fi, fj, x) != _compose(fjm, fi2, x):
                        raise ValidationError(
                            f"face identity d{i} d{j} failed in degree {n} on {x!r}"
                        )
    for n in range(D - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                si, sj = S.degeneracy[n + 1][j + 1], S.degeneracy[n][i]
                sj2, si2 = S.degeneracy[n + 1][i], S.degeneracy[n][j]
                for x in S.basis[n]:
                    if si[sj[x]] != sj2[si2[x]]:
                        raise ValidationError(
                            f"degeneracy identity s{i} s{j} failed in degree {n} on {x!r}"
                        )
    for n in range(D):
        for j in range(n + 1):
            for i in range(n + 2):
                sj = S.degeneracy[n][j]
                di = S.face[n + 1][i]
                for x in S.basis[n]:
                    got = di.get(sj[x])
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        y = S.face[n][i].get(x) if n >= 1 else None
                        want = None if y is None else S.degeneracy[n - 1][j - 1][y]
                    else:
                        y = S.face[n][i - 1].get(x) if n >= 1 else None
                        want = None if y is None else S.degeneracy[n - 1][j][y]
                    if got != want:
                        raise ValidationError(
                            f"mixed identity d{i} s{j} failed in degree {n} on {x!r}"
                        )


def make_simplicial(basis, face, degeneracy, check: bool = True) -> BasedSimplicialObject:
    S = BasedSimplicialObject(
        tuple(tuple(b) for b in basis),
        tuple(tuple(dict(m) for m in level) for level in face),
        tuple(tuple(dict(m) for m in level) for level in degeneracy),
    )
    if check:
        validate_simplicial(S)
    return S


def _alternating_matrix(
    source: tuple, target: tuple, maps: tuple, signs: Optional[list[int]] = None,
    keep: Optional[set] = None,
) -> IntMatrix:
    index = {lab: i for i, lab in enumerate(target)}
    cols = []
    for x in source:
        col: dict[int, int] = {}
        for i, fm in enumerate(maps):
            y = fm.get(x)
            if y is None or (keep is not None and y not in keep):
                continue
            s = signs[i] if signs is not None else (-1 if i % 2 else 1)
            t = index[y]
            nv = col.get(t, 0) + s
            if nv:
                col[t] = nv
            else:
                col.pop(t, None)
        cols.append(col)
    return IntMatrix.from_columns(len(target), cols)


def unnormalized_chains(S: BasedSimplicialObject) -> BasedChainComplex:
    """Chains with differential the alternating sum of all face maps."""
    D = S.max_degree
    boundary = [IntMatrix.zero(0, S.dim(0))]
    for n in range(1, D + 1):
        boundary.append(_alternating_matrix(S.basis[n], S.basis[n - 1], S.face[n]))
    C = BasedChainComplex(S.basis, tuple(boundary), D - 1)
    validate_complex(C)
    return C


def degenerate_labels(S: BasedSimplicialObject, n: int) -> set:
    """Generators of degree n in the image of some degeneracy."""
    if n == 0:
        return set()
    out: set = set()
    for sm in S.degeneracy[n - 1]:
        out.update(sm.values())
    return out


def normalized_chains(S: BasedSimplicialObject) -> BasedChainComplex:
    """Quotient by the degenerate generators.

    The basis keeps only nondegenerate generators; face terms landing on a
    degenerate generator are sent to zero rather than rewritten.
    """
    D = S.max_degree
    nondeg = [
        tuple(lab for lab in S.basis[n] if lab not in degenerate_labels(S, n))
        for n in range(D + 1)
    ]
    boundary = [IntMatrix.zero(0, len(nondeg[0]))]
    for n in range(1, D + 1):
        keep = set(nondeg[n - 1])
        boundary.append(
            _alternating_matrix(nondeg[n], nondeg[n - 1], S.face[n], keep=keep)
        )
    C = BasedChainComplex(tuple(nondeg), tuple(boundary), D - 1)
    validate_complex(C)
    return C


@dataclass(frozen=True)
class BasedBisimplicialObject:
    """Bidegrees in [0,P]x[0,Q], optionally cut to p + q <= total_bound.

    h_face[(p,q)] is a tuple of p+1 maps to (p-1,q) (stored for p >= 1);
    v_face[(p,q)] has q+1 maps to (p,q-1). Degeneracies are stored only
    where the target bidegree lies in the region.
    """

    P: int
    Q: int
    basis: Mapping[tuple[int, int], tuple[Label, ...]]
    h_face: Mapping[tuple[int, int], tuple[Mapping, ...]]
    v_face: Mapping[tuple[int, int], tuple[Mapping, ...]]
    h_degen: Mapping[tuple[int, int], tuple[Mapping, ...]]
    v_degen: Mapping[tuple[int, int], tuple[Mapping, ...]]
    total_bound: Optional[int] = None

    def present(self, p: int, q: int) -> bool:
        if not (0 <= p <= self.P and 0 <= q <= self.Q):
            return False
        return self.total_bound is None or p + q <= self.total_bound

    def dim(self, p: int, q: int) -> int:
        return len(self.basis.get((p, q), ()))

    def h_faces(self, p: int, q: int) -> tuple:
        got = self.h_face.get((p, q))
        return got if got is not None else tuple({} for _ in range(p + 1))

    def v_faces(self, p: int, q: int) -> tuple:
        got = self.v_face.get((p, q))
        return got if got is not None else tuple({} for _ in range(q + 1))

    def h_degens(self, p: int, q: int) -> tuple:
        got = self.h_degen.get((p, q))
        return got if got is not None else tuple({} for _ in range(p + 1))

    def v_degens(self, p: int, q: int) -> tuple:
        got = self.v_degen.get((p, q))
        return got if got is not None else tuple({} for _ in range(q + 1))


def _check_direction(B, face, degen, horizontal: bool):
    word = "horizontal" if horizontal else "vertical"
    for (p, q), labels in B.basis.items():
        deg = p if horizontal else q
        fmaps = face.get((p, q), tuple({} for _ in range(deg + 1)))
        if deg >= 1:
            if len(fmaps) != deg + 1:
                raise ValidationError(f"{word} faces missing at {(p, q)}")
            tgt = (p - 1, q) if horizontal else (p, q - 1)
            lower = set(B.basis.get(tgt, ()))
            for fm in fmaps:
                if set(fm) != set(labels):
                    raise ValidationError(f"{word} face domain wrong at {(p, q)}")
                if any(v is not None and v not in lower for v in fm.values()):
                    raise ValidationError(f"{word} face leaves the basis at {(p, q)}")
        tgt = (p + 1, q) if horizontal else (p, q + 1)
        if B.present(*tgt):
            smaps = degen.get((p, q), tuple({} for _ in range(deg + 1)))
            if len(smaps) != deg + 1:
                raise ValidationError(f"{word} degeneracies missing at {(p, q)}")
            upper = set(B.basis.get(tgt, ()))
            for sm in smaps:
                if set(sm) != set(labels) or any(v not in upper for v in sm.values()):
                    raise ValidationError(f"{word} degeneracy wrong at {(p, q)}")
                if len(set(sm.values())) != len(sm):
                    raise ValidationError(f"{word} degeneracy not injective at {(p, q)}")


def _identity_check_1d(basis_at, face_at, degen_at, D, tag: str):
    """Check simplicial identities along one direction of a bisimplicial object.

    basis_at/face_at/degen_at map a 1d degree to data, for one frozen value
    of the other degree.
    """
    fake = BasedSimplicialObject(
        tuple(tuple(basis_at(n)) for n in range(D + 1)),
        tuple(tuple(face_at(n)) if n >= 1 else () for n in range(D + 1)),
        tuple(tuple(degen_at(n)) for n in range(D)),
    )
    try:
        validate_simplicial(fake)
    except ValidationError as e:
        raise ValidationError(f"{tag}: {e}") from None


def validate_bisimplicial(B: BasedBisimplicialObject) -> None:
    for (p, q) in B.basis:
        if not B.present(p, q):
            raise ValidationError(f"basis stored outside the region at {(p, q)}")
    _check_direction(B, B.h_face, B.h_degen, True)
    _check_direction(B, B.v_face, B.v_degen, False)

    # each row and column is simplicial
    for q in range(B.Q + 1):
        pmax = B.P if B.total_bound is None else min(B.P, B.total_bound - q)
        if pmax < 0:
            continue
        _identity_check_1d(
            lambda p, q=q: B.basis.get((p, q), ()),
            lambda p, q=q: B.h_faces(p, q),
            lambda p, q=q: B.h_degens(p, q),
            pmax,
            f"row q={q}",
        )
    for p in range(B.P + 1):
        qmax = B.Q if B.total_bound is None else min(B.Q, B.total_bound - p)
        if qmax < 0:
            continue
        _identity_check_1d(
            lambda q, p=p: B.basis.get((p, q), ()),
            lambda q, p=p: B.v_faces(p, q),
            lambda q, p=p: B.v_degens(p, q),
            qmax,
            f"column p={p}",
        )

    # the two directions commute
    for (p, q), labels in B.basis.items():
        if p >= 1 and q >= 1 and B.present(p - 1, q - 1):
            for i, hf in enumerate(B.h_faces(p, q)):
                for j, vf in enumerate(B.v_faces(p, q)):
                    hf2 = B.h_faces(p, q - 1)[i]
                    vf2 = B.v_faces(p - 1, q)[j]
                    for x in labels:
                        if _compose(vf2, hf, x) != _compose(hf2, vf, x):
                            raise ValidationError(
                                f"h-face {i} and v-face {j} do not commute at {(p, q)}"
                            )
        if p >= 1 and B.present(p - 1, q + 1) and B.present(p, q + 1):
            for i, hf in enumerate(B.h_faces(p, q)):
                for j, vs in enumerate(B.v_degens(p, q)):
                    hf2 = B.h_faces(p, q + 1)[i]
                    vs2 = B.v_degens(p - 1, q)[j]
                    for x in labels:
                        lhs = hf2.get(vs[x])
                        y = hf.get(x)
                        rhs = None if y is None else vs2[y]
                        if lhs != rhs:
                            raise ValidationError(
                                f"h-face {i} and v-degeneracy {j} do not commute at {(p, q)}"
                            )
        if q >= 1 and B.present(p + 1, q - 1) and B.present(p + 1, q):
            for i, hs in enumerate(B.h_degens(p, q)):
                for j, vf in enumerate(B.v_faces(p, q)):
                    vf2 = B.v_faces(p + 1, q)[j]
                    hs2 = B.h_degens(p, q - 1)[i]
                    for x in labels:
                        lhs = vf2.get(hs[x])
                        y = vf.get(x)
                        rhs = None if y is None else hs2[y]
                        if lhs != rhs:
                            raise ValidationError(
                                f"h-degeneracy {i} and v-face {j} do not commute at {(p, q)}"
                            )
        if B.present(p + 1, q + 1):
            for i, hs in enumerate(B.h_degens(p, q)):
                for j, vs in enumerate(B.v_degens(p, q)):
                    vs2 = B.v_degens(p + 1, q)[j]
                    hs2 = B.h_degens(p, q + 1)[i]
                    for x in labels:
                        if vs2[hs[x]] != hs2[vs[x]]:
                            raise ValidationError(
                                f"degeneracies do not commute at {(p, q)}"
                            )


def make_bisimplicial(
    P, Q, basis, h_face, v_face, h_degen, v_degen, total_bound=None, check=True
) -> BasedBisimplicialObject:
    B = BasedBisimplicialObject(
        P, Q, dict(basis), dict(h_face), dict(v_face), dict(h_degen), dict(v_degen),
        total_bound,
    )
    if check:
        validate_bisimplicial(B)
    return B


def diagonal(B: BasedBisimplicialObject) -> BasedSimplicialObject:
    """Restrict to bidegrees (n,n); faces and degeneracies compose both ways."""
    if B.P != B.Q or B.total_bound is not None:
        raise ValidationError("diagonal requires a square truncation")
    D = B.P
    basis = tuple(B.basis.get((n, n), ()) for n in range(D + 1))
    face = [()]
    for n in range(1, D + 1):
        maps = []
        for i in range(n + 1):
            vf = B.v_faces(n, n)[i]
            hf = B.h_faces(n, n - 1)[i]
            maps.append({x: _compose(hf, vf, x) for x in B.basis.get((n, n), ())})
        face.append(tuple(maps))
    degen = []
    for n in range(D):
        maps = []
        for i in range(n + 1):
            vs = B.v_degens(n, n)[i]
            hs = B.h_degens(n, n + 1)[i]
            maps.append({x: hs[vs[x]] for x in B.basis.get((n, n), ())})
        degen.append(tuple(maps))
    S = BasedSimplicialObject(basis, tuple(face), tuple(degen))
    return S


def double_chains(B: BasedBisimplicialObject) -> BasedDoubleComplex:
    """Alternating-sum boundaries in both directions, no normalization."""
    horizontal = {}
    vertical = {}
    for (p, q), labels in B.basis.items():
        if p >= 1:
            horizontal[(p, q)] = _alternating_matrix(
                labels, B.basis.get((p - 1, q), ()), B.h_faces(p, q)
            )
        if q >= 1:
            vertical[(p, q)] = _alternating_matrix(
                labels, B.basis.get((p, q - 1), ()), B.v_faces(p, q)
            )
    C = BasedDoubleComplex(
        B.P, B.Q, dict(B.basis), horizontal, vertical, B.total_bound
    )
    validate_double_complex(C)
    return C


def h_degenerate_labels(B: BasedBisimplicialObject, p: int, q: int) -> set:
    if p == 0:
        return set()
    out: set = set()
    source = (p - 1, q)
    for sm in B.h_degen.get(source, ()):
        out.update(sm.values())
    return out


def row_normalize(B: BasedBisimplicialObject) -> BasedDoubleComplex:
    """Normalize every row (horizontal direction), keep columns unnormalized.

    Total homology is unchanged; the rows often collapse dramatically.
    """
    nondeg = {
        (p, q): tuple(l for l in labels if l not in h_degenerate_labels(B, p, q))
        for (p, q), labels in B.basis.items()
    }
    horizontal = {}
    vertical = {}
    for (p, q), labels in nondeg.items():
        if p >= 1:
            keep = set(nondeg.get((p - 1, q), ()))
            horizontal[(p, q)] = _alternating_matrix(
                labels, nondeg.get((p - 1, q), ()), B.h_faces(p, q), keep=keep
            )
        if q >= 1:
            keep = set(nondeg.get((p, q - 1), ()))
            vertical[(p, q)] = _alternating_matrix(
                labels, nondeg.get((p, q - 1), ()), B.v_faces(p, q), keep=keep
            )
    C = BasedDoubleComplex(B.P, B.Q, nondeg, horizontal, vertical, B.total_bound)
    validate_double_complex(C)
    return C


def external_product(
    A: BasedSimplicialObject, Bs: BasedSimplicialObject
) -> BasedBisimplicialObject:
    """Bisimplicial object with (p,q) part A_p x B_q.

    Horizontal structure acts on the first factor, vertical on the second,
    so the total complex of its chains is the tensor of the two chain
    complexes and the diagonal is the degreewise tensor.
    """
    P, Q = A.max_degree, Bs.max_degree
    basis = {}
    h_face = {}
    v_face = {}
    h_degen = {}
    v_degen = {}
    for p in range(P + 1):
        for q in range(Q + 1):
            labels = tuple((a, b) for a in A.basis[p] for b in Bs.basis[q])
            basis[(p, q)] = labels
            if p >= 1:
                h_face[(p, q)] = tuple(
                    {
                        (a, b): (None if fm.get(a) is None else (fm[a], b))
                        for (a, b) in labels
                    }
                    for fm in A.face[p]
                )
            if p < P:
                h_degen[(p, q)] = tuple(
                    {(a, b): (sm[a], b) for (a, b) in labels} for sm in A.degeneracy[p]
                )
            if q >= 1:
                v_face[(p, q)] = tuple(
                    {
                        (a, b): (None if fm.get(b) is None else (a, fm[b]))
                        for (a, b) in labels
                    }
                    for fm in Bs.face[q]
                )
            if q < Q:
                v_degen[(p, q)] = tuple(
                    {(a, b): (a, sm[b]) for (a, b) in labels} for sm in Bs.degeneracy[q]
                )
    return BasedBisimplicialObject(P, Q, basis, h_face, v_face, h_degen, v_degen)
