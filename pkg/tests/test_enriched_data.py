from fractions import Fraction

import pytest

from maghom import (
    INF,
    NCatSet,
    NCatSuspension,
    ValidationError,
    all_groups_up_to_order_8,
    as_category,
    cat_group_from_preordered,
    codiscrete_cat_group,
    complete_graph,
    component_group,
    connected_components,
    count_cells,
    cycle_digraph,
    cycle_graph,
    cyclic_group,
    discrete_cat_group,
    discrete_category,
    discrete_space,
    indecomposables,
    make_metric_space,
    make_normed_group,
    metric_of_normed_group,
    one_point_space,
    parallel_arrows_category,
    positive_cone,
    preordered_group_from_cone,
    product_category,
    sphere_ncat,
    suspension,
    symmetric_group,
    tensor_metric,
    terminal_category,
    two_cat_from_category,
    two_cat_of_cat_group,
    two_group_from_normal_subgroup,
    validate_cat_group,
    validate_category,
    validate_metric,
    validate_ncat,
    validate_normed_group,
    validate_preordered_group,
    word_norm_group,
)

S3 = symmetric_group(3)
TRANSPOSITION = (1, 0, 2)
A3 = frozenset({(0, 1, 2), (1, 2, 0), (2, 0, 1)})


# --- validators --------------------------------------------------------------


def test_normed_group_validator_accepts_z2():
    N = make_normed_group(cyclic_group(2), {0: 0, 1: 1})
    validate_normed_group(N)


def test_discrete_norm_on_s3():
    norm = {g: (0 if g == S3.identity else 1) for g in S3.elements}
    validate_normed_group(make_normed_group(S3, norm))


def test_norm_validator_names_subadditivity_violation():
    norm = {g: 0 if g == S3.identity else 5 for g in S3.elements}
    norm[TRANSPOSITION] = Fraction(1)
    with pytest.raises(ValidationError, match="conjugation|subadditive"):
        make_normed_group(S3, norm)


def test_norm_validator_rejects_zero_outside_identity():
    with pytest.raises(ValidationError, match="norm 0"):
        make_normed_group(cyclic_group(2), {0: 0, 1: 0})


def test_metric_validator():
    validate_metric(cycle_digraph(4))
    with pytest.raises(ValidationError, match="triangle"):
        make_metric_space(["a", "b", "c"],
                          {("a", "a"): 0, ("b", "b"): 0, ("c", "c"): 0,
                           ("a", "b"): 1, ("b", "a"): 1,
                           ("b", "c"): 1, ("c", "b"): 1,
                           ("a", "c"): 5, ("c", "a"): 5})
    with pytest.raises(ValidationError, match="separat"):
        make_metric_space(["a", "b"],
                          {("a", "a"): 0, ("b", "b"): 0,
                           ("a", "b"): 0, ("b", "a"): 1})


def test_category_validator_catches_missing_composite():
    s1 = parallel_arrows_category()
    broken = s1.__class__(
        s1.objects, s1.morphisms, s1.source, s1.target, s1.identity,
        {k: v for k, v in s1.compose.items() if k != ("idB", "f")},
    )
    with pytest.raises(ValidationError, match="composite"):
        validate_category(broken)


# --- word norms --------------------------------------------------------------


def test_word_norm_s3_transpositions():
    N = word_norm_group(S3, [TRANSPOSITION])
    by_value = {}
    for g in S3.elements:
        by_value.setdefault(N.norm[g], set()).add(g)
    assert by_value[Fraction(0)] == {S3.identity}
    assert len(by_value[Fraction(1)]) == 3  # transpositions
    assert len(by_value[Fraction(2)]) == 2  # 3-cycles


def test_word_norm_z2():
    N = word_norm_group(cyclic_group(2), [1])
    assert N.norm[1] == 1


def test_word_norm_z4_closed_under_inverses():
    N = word_norm_group(cyclic_group(4), [1])
    assert [N.norm[g] for g in (0, 1, 2, 3)] == [0, 1, 2, 1]


def test_word_norm_requires_normal_generation():
    with pytest.raises(ValidationError, match="normally generate"):
        word_norm_group(cyclic_group(4), [2])


def test_indecomposables_s3():
    N = word_norm_group(S3, [TRANSPOSITION])
    ind = set(indecomposables(N))
    assert ind == {g for g in S3.elements if N.norm[g] == 1}


# --- Cat-groups --------------------------------------------------------------


def test_two_group_from_normal_subgroup_s3_a3():
    C = two_group_from_normal_subgroup(S3, A3)
    validate_cat_group(C)
    for g in S3.elements:
        for h in S3.elements:
            n_arrows = len(C.cells.hom(g, h))
            expected = 1 if S3.mul(h, S3.inv(g)) in A3 else 0
            assert n_arrows == expected


def test_two_group_rejects_non_normal():
    H = frozenset({(0, 1, 2), TRANSPOSITION})
    with pytest.raises(ValidationError, match="normal"):
        two_group_from_normal_subgroup(S3, H)


def test_discrete_cat_group_shape():
    C = discrete_cat_group(cyclic_group(2))
    assert len(C.cells.morphisms) == 2
    validate_cat_group(C)


def test_all_pairs_up_to_order_8_validate():
    for G in all_groups_up_to_order_8():
        for N in G.normal_subgroups():
            validate_cat_group(two_group_from_normal_subgroup(G, N))


def test_component_group():
    C = two_group_from_normal_subgroup(S3, A3)
    con = component_group(C)
    assert len(con) == 2
    assert len(component_group(discrete_cat_group(cyclic_group(4)))) == 4
    assert len(component_group(codiscrete_cat_group(S3))) == 1


def test_two_cat_of_cat_group_validates():
    C = two_group_from_normal_subgroup(cyclic_group(4), [0, 2])
    validate_ncat(two_cat_of_cat_group(C))


# --- preordered groups -------------------------------------------------------


def test_cone_trivial_and_full():
    G = cyclic_group(4)
    P1 = preordered_group_from_cone(G, [0])
    assert positive_cone(P1) == frozenset([0])
    assert P1.leq == frozenset((g, g) for g in G.elements)
    P2 = preordered_group_from_cone(G, G.elements)
    assert len(P2.leq) == 16


def test_cone_a3_gives_congruence():
    P = preordered_group_from_cone(S3, A3)
    validate_preordered_group(P)
    cone = positive_cone(P)
    assert cone == A3
    # finite cones are subgroups, so the order is symmetric
    assert all((b, a) in P.leq for (a, b) in P.leq)


def test_cone_rejects_non_submonoid():
    with pytest.raises(ValidationError, match="closed|identity"):
        preordered_group_from_cone(S3, [TRANSPOSITION])


def test_cat_group_from_preordered():
    P = preordered_group_from_cone(S3, A3)
    C = cat_group_from_preordered(P)
    validate_cat_group(C)
    assert len(component_group(C)) == 2


# --- suspensions and spheres -------------------------------------------------


def test_suspension_levels():
    assert sphere_ncat(0).level == 0
    assert sphere_ncat(1).level == 1
    assert sphere_ncat(3).level == 3


def test_suspension_of_set_is_parallel_arrows():
    cat = as_category(sphere_ncat(1))
    validate_category(cat)
    assert len(cat.objects) == 2
    assert len([m for m in cat.morphisms if cat.source[m] != cat.target[m]]) == 2


def test_cell_counts():
    s2 = sphere_ncat(2)
    assert count_cells(s2, 0) == 2
    assert count_cells(s2, 1) == 4   # two crossing 1-cells plus two identities
    assert count_cells(s2, 2) == 6
    assert count_cells(s2, 3) == 0


def test_connected_components():
    assert len(connected_components(discrete_category(["a", "b", "c"]))) == 3
    assert len(connected_components(parallel_arrows_category())) == 1
    assert len(connected_components(suspension(discrete_category(["x"])))) == 1
    assert len(connected_components(NCatSuspension(NCatSet(())))) == 2
    for n in (1, 2, 3):
        assert len(connected_components(sphere_ncat(n))) == 1


def test_validate_ncat_families():
    validate_ncat(sphere_ncat(3))
    validate_ncat(two_cat_from_category(parallel_arrows_category()))


# --- metric builders ---------------------------------------------------------


def test_cycle_digraph_distances():
    X = cycle_digraph(3)
    assert X.d(0, 1) == 1 and X.d(1, 0) == 2


def test_cycle_graph_distances():
    X = cycle_graph(4)
    assert all(X.d(a, b) <= 2 for a in X.points for b in X.points)
    assert all(X.d(a, b) == X.d(b, a) for a in X.points for b in X.points)


def test_complete_graph_and_discrete():
    X = complete_graph(4)
    assert all(X.d(a, b) == 1 for a in X.points for b in X.points if a != b)
    Y = discrete_space(3, INF)
    assert Y.d(0, 1) is INF


def test_tensor_metric():
    X = discrete_space(2, 1)
    P = tensor_metric(X, one_point_space())
    assert len(P.points) == 2
    assert P.d((0, 0), (1, 0)) == 1
    Q = tensor_metric(X, X)
    assert Q.d((0, 0), (1, 1)) == 2
    assert Q.d((0, 0), (0, 1)) == 1


def test_product_category():
    s1 = parallel_arrows_category()
    P = product_category(s1, terminal_category())
    validate_category(P)
    assert len(P.objects) == 2
    T = product_category(s1, s1)
    validate_category(T)
    assert len(T.objects) == 4


def test_metric_of_normed_group_asymmetric_when_norm_is():
    # norms need not satisfy |g| = |g^-1|; build one where they differ
    G = cyclic_group(3)
    N = make_normed_group(G, {0: 0, 1: 1, 2: 2})
    M = metric_of_normed_group(N)
    validate_metric(M)
    assert M.d(1, 0) == 1 and M.d(0, 1) == 2
