"""Shared generators for structured random instances.

Random categories come from preorders (closure of a random relation),
random metric spaces from shortest paths in weighted digraphs; both are
valid by construction, which keeps the property tests honest about what
they feed the validators.
"""

import random
from fractions import Fraction

import pytest

from maghom import (
    category_from_preorder,
    cyclic_group,
    dihedral_group,
    klein_four_group,
    metric_from_digraph,
    quaternion_group,
    symmetric_group,
)


def random_preorder_category(rnd: random.Random, max_elems: int = 4):
    n = rnd.randint(1, max_elems)
    elems = [f"x{i}" for i in range(n)]
    pairs = [
        (a, b) for a in elems for b in elems if a != b and rnd.random() < 0.4
    ]
    return category_from_preorder(elems, pairs)


def random_metric_space(rnd: random.Random, n_points: int = 5, complete: bool = True):
    pts = [f"p{i}" for i in range(n_points)]
    denoms = (1, 2, 3)
    edges = []
    weights = {}
    for u in pts:
        for v in pts:
            if u == v:
                continue
            if complete or rnd.random() < 0.8:
                w = Fraction(rnd.randint(1, 6), rnd.choice(denoms))
                edges.append((u, v))
                weights[(u, v)] = w
    return metric_from_digraph(pts, edges, weights)


def small_groups():
    return [
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_four_group(),
        symmetric_group(3),
        cyclic_group(6),
        dihedral_group(4),
        quaternion_group(),
        cyclic_group(8),
    ]


@pytest.fixture
def rnd():
    return random.Random(20260810)
