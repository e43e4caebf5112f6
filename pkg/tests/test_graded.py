from itertools import product

import numpy as np
import pytest

from clover.diagram import canonical_form, disjoint_union, reverse_orientation, theta
from clover.enumerator import enumerate_degree
from clover.errors import DegreeMismatchError
from clover.graded import (
    FormalSum,
    as_normalize,
    ihx_relation,
    ihx_relations,
    ihx_terms,
    rational_rank,
    reduce,
    space_structure,
)

from conftest import doubled_square, k4


def _structure_constants(dim):
    """Fully antisymmetric f_ijk of so(dim) in the basis E_ab - E_ba."""
    basis = []
    for a in range(dim):
        for b in range(a + 1, dim):
            m = np.zeros((dim, dim), dtype=int)
            m[a, b], m[b, a] = 1, -1
            basis.append(m)
    size = len(basis)
    f = np.zeros((size,) * 3, dtype=int)
    for i, j, k in product(range(size), repeat=3):
        bracket = basis[i] @ basis[j] - basis[j] @ basis[i]
        f[i, j, k] = -np.trace(bracket @ basis[k]) // 2
    return f


def weight(d, f):
    """Lie algebra weight system: contract one f per vertex along every edge."""
    size = f.shape[0]
    total = 0
    for colors in product(range(size), repeat=len(d.edges)):
        color = {}
        for (a, b), c in zip(d.edges, colors):
            color[a] = color[b] = c
        term = 1
        for t in d.triples:
            term *= f[color[t[0]], color[t[1]], color[t[2]]]
            if not term:
                break
        total += term
    return total


SO3 = _structure_constants(3)
SO4 = _structure_constants(4)


def test_weight_system_sanity():
    assert weight(theta(), SO3) == 6
    assert weight(reverse_orientation(theta()), SO3) == -6


@pytest.mark.parametrize("f", [SO3, SO4], ids=["so3", "so4"])
def test_generated_relations_lie_in_weight_kernel(f):
    for k in (1, 2):
        for rel in ihx_relations(k):
            assert sum(v * weight(d, f) for d, v in rel.items()) == 0


def test_as_normalize_merges_orientations():
    th = theta()
    assert as_normalize([th, reverse_orientation(th)]) == FormalSum()
    assert as_normalize([(3, th), reverse_orientation(th)]) == FormalSum({th: 2})
    assert as_normalize([]) == FormalSum()


def test_ihx_on_theta():
    # the weight of theta is nonzero, so its relations must cancel outright
    for c in range(6):
        assert canonical_form(ihx_terms(theta(), c)[0]) == (theta(), 1)
        assert ihx_relation(theta(), c) == FormalSum()


def test_ihx_on_k4_edge():
    terms = ihx_terms(k4(), 0)
    assert None not in terms
    got = sorted(canonical_form(t)[0].edges for t in terms)
    K, S = canonical_form(k4())[0], canonical_form(doubled_square())[0]
    assert got == sorted([K.edges, K.edges, S.edges])
    assert ihx_relation(k4(), 0).degrees() == {2}


def test_space_degree_zero():
    s = space_structure(0)
    assert s.rank == 1 and s.torsion == []
    assert [b for b in s.basis] == [FormalSum({enumerate_degree(0).classes[0]: 1})]


@pytest.mark.parametrize("k, rank", [(1, 1), (2, 2), (3, 3), (4, 6)])
def test_space_ranks(k, rank):
    s = space_structure(k)
    assert s.rank == rank == rational_rank(k)
    assert s.torsion == []


@pytest.mark.parametrize("k", [1, 2, 3])
def test_relations_reduce_to_zero(k):
    s = space_structure(k)
    zero = [0] * len(s.coordinate_moduli)
    for rel in ihx_relations(k):
        assert reduce(rel, k) == zero


def test_reduce_is_additive_and_basis_is_unital():
    k = 2
    s = space_structure(k)
    classes = s.classes
    a = FormalSum({classes[0]: 2, classes[1]: -1})
    b = FormalSum({classes[1]: 5, classes[2]: 3})
    assert [x + y for x, y in zip(reduce(a, k), reduce(b, k))] == reduce(a + b, k)
    for i, basis in enumerate(s.basis):
        unit = [int(i == j) for j in range(len(s.basis))]
        assert reduce(basis, k) == unit


def test_k4_and_doubled_square_are_dependent():
    k = 2
    u, v = reduce(FormalSum({k4(): 1}), k), reduce(FormalSum({doubled_square(): 1}), k)
    assert u != [0, 0] and v != [0, 0]
    # parallel vectors in the free part
    assert u[0] * v[1] == u[1] * v[0]
    assert reduce(FormalSum({disjoint_union(theta(), theta()): 1}), k) not in (u, v)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        reduce(FormalSum({theta(): 1}), 2)
