"""First-order magnitude nerves and complexes.

Categories get the simplicial object freely generated by their nerve.
Generalized metric spaces get the length-graded theory: a generator in
degree n is a tuple of points, its grading is the sum of its consecutive
distances, and faces drop a point exactly when it sits between its
neighbours. Tuples through an infinite distance are never generated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .complexes import (
    BasedChainComplex,
    GradedChainComplex,
    HomologyTable,
    graded_homology_table,
    homology_table,
    validate_complex,
)
from .enriched_data import INF, FinCategory, GenMetricSpace, d_add
from .errors import ValidationError
from .exact_linalg import IntMatrix
from .simplicial import BasedSimplicialObject

GradingSpec = Union[str, Iterable]


def nerve_category(X: FinCategory, max_degree: int) -> BasedSimplicialObject:
    """Simplicial object on composable tuples of morphisms.

    Degree 0 is the object set; degree n is all n-tuples (f1, ..., fn)
    with target(fi) = source(fi+1). Inner faces compose in diagram order,
    outer faces drop an end, degeneracies insert identities.
    """
    D = max_degree
    basis: list[tuple] = [tuple(X.objects)]
    for n in range(1, D + 1):
        prev = basis[-1]
        if n == 1:
            basis.append(tuple((m,) for m in X.morphisms))
            continue
        new = []
        for tup in prev:
            last = tup[-1]
            for m in X.morphisms:
                if X.source[m] == X.target[last]:
                    new.append(tup + (m,))
        basis.append(tuple(new))

    face: list[tuple] = [()]
    for n in range(1, D + 1):
        maps = []
        for i in range(n + 1):
            fm = {}
            for tup in basis[n]:
                if n == 1:
                    f = tup[0]
                    fm[tup] = X.target[f] if i == 0 else X.source[f]
                elif i == 0:
                    fm[tup] = tup[1:]
                elif i == n:
                    fm[tup] = tup[:-1]
                else:
                    fm[tup] = tup[: i - 1] + (X.compose[(tup[i], tup[i - 1])],) + tup[i + 1:]
            maps.append(fm)
        face.append(tuple(maps))

    degeneracy: list[tuple] = []
    for n in range(D):
        maps = []
        for i in range(n + 1):
            sm = {}
            for tup in basis[n]:
                if n == 0:
                    sm[tup] = (X.identity[tup],)
                else:
                    at = X.source[tup[i]] if i < n else X.target[tup[n - 1]]
                    sm[tup] = tup[:i] + (X.identity[at],) + tup[i:]
            maps.append(sm)
        degeneracy.append(tuple(maps))

    return BasedSimplicialObject(tuple(basis), tuple(face), tuple(degeneracy))


class MetricChainGenerator(NamedTuple):
    """A tuple of points with no equal neighbours, and its total length."""

    points: tuple
    grading: Fraction


def tuple_grading(X: GenMetricSpace, tup: tuple) -> Fraction:
    total = Fraction(0)
    for a, b in zip(tup, tup[1:]):
        d = X.d(a, b)
        if d is INF:
            raise ValidationError("tuple crosses an infinite distance")
        total += d
    return total


def _enumerate_tuples(X: GenMetricSpace, max_degree: int, distinct: bool):
    """All finite-length tuples, bucketed by (degree, grading).

    distinct=True skips tuples with equal adjacent entries (the
    nondegenerate generators).
    """
    buckets: dict[tuple[int, Fraction], list] = {}
    order = {p: i for i, p in enumerate(X.points)}

    def walk(tup, total, n):
        buckets.setdefault((n, total), []).append(tup)
        if n == max_degree:
            return
        last = tup[-1]
        for p in X.points:
            if distinct and p == last:
                continue
            d = X.d(last, p)
            if d is INF:
                continue
            walk(tup + (p,), total + d, n + 1)

    for p in X.points:
        walk((p,), Fraction(0), 0)
    for key in buckets:
        buckets[key].sort(key=lambda t: tuple(order[p] for p in t))
    return buckets


def reachable_gradings(X: GenMetricSpace, max_degree: int) -> list[Fraction]:
    """Every grading realized by a nondegenerate tuple of length <= max_degree."""
    buckets = _enumerate_tuples(X, max_degree, distinct=True)
    return sorted({ell for (_, ell) in buckets})


def _resolve_gradings(X, max_degree, gradings: GradingSpec) -> list[Fraction]:
    if isinstance(gradings, str):
        if gradings != "all-reachable":
            raise ValidationError(f"unknown grading request {gradings!r}")
        return reachable_gradings(X, max_degree)
    return sorted({Fraction(g) for g in gradings})


def is_between(X: GenMetricSpace, z, x, y) -> bool:
    return X.d(x, y) == d_add(X.d(x, z), X.d(z, y))


def adjacency(X: GenMetricSpace, x, y):
    """A point strictly between x and y, or None when they are adjacent."""
    if x == y:
        raise ValidationError("adjacency needs two distinct points")
    for z in X.points:
        if z != x and z != y and is_between(X, z, x, y):
            return z
    return None


def magnitude_complex_metric(
    X: GenMetricSpace, max_degree: int, gradings: GradingSpec = "all-reachable"
) -> GradedChainComplex:
    """Normalized length-graded chain complex of a metric space.

    In each grading, degree n is spanned by tuples with distinct
    neighbours summing to that length; the differential only uses the
    inner faces (the outer ones change the grading and die).
    """
    if max_degree < 0:
        raise ValidationError("max_degree must be nonnegative")
    wanted = _resolve_gradings(X, max_degree, gradings)
    buckets = _enumerate_tuples(X, max_degree, distinct=True)
    pieces = {}
    for ell in wanted:
        basis = [tuple(buckets.get((n, ell), ())) for n in range(max_degree + 1)]
        index = [{t: i for i, t in enumerate(level)} for level in basis]
        boundary = [IntMatrix.zero(0, len(basis[0]))]
        for n in range(1, max_degree + 1):
            cols = []
            for tup in basis[n]:
                col: dict[int, int] = {}
                for i in range(1, n):
                    if is_between(X, tup[i], tup[i - 1], tup[i + 1]):
                        dropped = tup[:i] + tup[i + 1:]
                        assert dropped[i - 1] != dropped[i], "face produced equal neighbours"
                        t = index[n - 1][dropped]
                        nv = col.get(t, 0) + (-1 if i % 2 else 1)
                        if nv:
                            col[t] = nv
                        else:
                            col.pop(t, None)
                cols.append(col)
            boundary.append(IntMatrix.from_columns(len(basis[n - 1]), cols))
        piece = BasedChainComplex(tuple(basis), tuple(boundary), max_degree - 1)
        validate_complex(piece)
        pieces[ell] = piece
    return GradedChainComplex(pieces)


def metric_nerve(
    X: GenMetricSpace, max_degree: int, gradings: GradingSpec = "all-reachable"
) -> dict[Fraction, BasedSimplicialObject]:
    """Unnormalized graded nerve: one simplicial object per grading.

    Degree n of the slice at l is spanned by all tuples (repeats allowed)
    of total length l. Outer faces drop an end point when the adjacent
    step has length 0; inner faces test betweenness; degeneracies repeat
    a point.
    """
    wanted = _resolve_gradings(X, max_degree, gradings)
    buckets = _enumerate_tuples(X, max_degree, distinct=False)
    out = {}
    for ell in wanted:
        basis = [tuple(buckets.get((n, ell), ())) for n in range(max_degree + 1)]
        face: list[tuple] = [()]
        for n in range(1, max_degree + 1):
            maps = []
            for i in range(n + 1):
                fm = {}
                for tup in basis[n]:
                    if i == 0:
                        fm[tup] = tup[1:] if tup[0] == tup[1] else None
                    elif i == n:
                        fm[tup] = tup[:-1] if tup[n - 1] == tup[n] else None
                    elif is_between(X, tup[i], tup[i - 1], tup[i + 1]):
                        fm[tup] = tup[:i] + tup[i + 1:]
                    else:
                        fm[tup] = None
                maps.append(fm)
            face.append(tuple(maps))
        degeneracy: list[tuple] = []
        for n in range(max_degree):
            maps = []
            for i in range(n + 1):
                maps.append({tup: tup[: i + 1] + tup[i:] for tup in basis[n]})
            degeneracy.append(tuple(maps))
        out[ell] = BasedSimplicialObject(tuple(basis), tuple(face), tuple(degeneracy))
    return out


def category_homology(X: FinCategory, max_degree: int) -> HomologyTable:
    """Homology of the normalized nerve chains through max_degree."""
    from .simplicial import normalized_chains

    S = nerve_category(X, max_degree + 1)
    return homology_table(normalized_chains(S), max_degree)


def metric_homology(
    X: GenMetricSpace, max_degree: int, gradings: GradingSpec = "all-reachable"
) -> HomologyTable:
    G = magnitude_complex_metric(X, max_degree + 1, gradings)
    return graded_homology_table(G, max_degree)
