import random

import pytest
from hypothesis import given, settings, strategies as st

from clover.diagram import (
    JacobiDiagram,
    automorphism_counts,
    automorphisms,
    canonical_form,
    disjoint_union,
    empty_diagram,
    is_reversible,
    isomorphisms,
    relabel,
    reverse_orientation,
    theta,
    validate,
)
from clover.enumerator import enumerate_degree
from clover.errors import ValidationError

from conftest import brute_isomorphisms, doubled_square, k4


def test_validate_theta_json():
    d = validate({"vertices": 2, "half_edges": [[0, 1, 2], [3, 4, 5]], "edges": [[0, 3], [1, 4], [2, 5]]})
    assert d == theta()


def test_validate_rejects_loop():
    with pytest.raises(ValidationError) as err:
        validate({"vertices": 2, "half_edges": [[0, 1, 2], [3, 4, 5]], "edges": [[0, 1], [2, 3], [4, 5]]})
    assert err.value.code == "LOOP"


def test_validate_rejects_odd_vertex_count():
    with pytest.raises(ValidationError) as err:
        validate({"vertices": 1, "half_edges": [[0, 1, 2]], "edges": [[0, 1]]})
    assert err.value.code == "ODD_VERTEX_COUNT"


def test_validate_rejects_dangling_half_edge():
    with pytest.raises(ValidationError) as err:
        validate({"vertices": 2, "half_edges": [[0, 1, 2], [3, 4, 5]], "edges": [[0, 3], [1, 4]]})
    assert err.value.code == "DANGLING"


def test_theta_automorphisms_against_brute_force():
    isos = isomorphisms(theta(), theta())
    assert len(isos) == 12 == len(brute_isomorphisms(theta(), theta()))
    assert {phi.sign for phi in isos} == {1}


def test_theta_against_its_flip_has_only_negative_isos():
    flipped = reverse_orientation(theta())
    isos = isomorphisms(theta(), flipped)
    assert len(isos) == 12
    assert {phi.sign for phi in isos} == {-1}


def test_theta_and_k4_are_not_isomorphic():
    assert isomorphisms(theta(), k4()) == []


@pytest.mark.parametrize(
    "d, expected",
    [
        (theta(), (12, 6, False)),
        (empty_diagram(), (1, 1, False)),
        (disjoint_union(theta(), theta()), (288, 36, False)),
        (k4(), (24, 1, False)),
        (doubled_square(), (16, 4, False)),
    ],
)
def test_automorphism_counts(d, expected):
    assert automorphism_counts(d) == expected


@pytest.mark.parametrize("d", [theta(), k4(), doubled_square()])
def test_isomorphism_signs_match_brute_force(d):
    flipped = reverse_orientation(d)
    for target in (d, flipped):
        fast = sorted(phi.sign for phi in isomorphisms(d, target))
        assert fast == sorted(brute_isomorphisms(d, target))


def test_composition_closes_and_signs_multiply():
    d = doubled_square()
    auts = automorphisms(d)
    maps = {phi.map for phi in auts}
    signs = {phi.map: phi.sign for phi in auts}
    for a in auts[:8]:
        for b in auts[:8]:
            c = a.compose(b)
            assert c.map in maps
            assert signs[c.map] == c.sign == a.sign * b.sign


def _random_relabel(d, r):
    vperm = list(range(d.vertex_count))
    hperm = list(range(3 * d.vertex_count))
    r.shuffle(vperm)
    r.shuffle(hperm)
    return relabel(d, vperm, hperm)


def _catalog():
    return [d for k in range(4) for d in enumerate_degree(k)]


def test_reversibility_is_a_negative_automorphism():
    for d in _catalog():
        signs = {phi.sign for phi in automorphisms(d)}
        assert is_reversible(d) == (-1 in signs)


def test_degree_three_has_reversible_classes():
    assert sum(is_reversible(d) for d in enumerate_degree(3)) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_canonical_form_is_invariant_and_signed(seed, data):
    classes = _catalog()
    d = classes[data.draw(st.integers(0, len(classes) - 1))]
    r = random.Random(seed)
    e = _random_relabel(d, r)
    canon, sign = canonical_form(e)
    assert canon == d
    isos = isomorphisms(e, canon)
    assert sign in {phi.sign for phi in isos}
    if not is_reversible(d):
        # the sign of an isomorphism onto a non-reversible class is forced
        assert {phi.sign for phi in isos} == {sign}


def test_canonical_form_sees_orientation_flips():
    for d in _catalog():
        if d.vertex_count == 0 or is_reversible(d):
            continue
        for v in range(d.vertex_count):
            canon, sign = canonical_form(reverse_orientation(d, v))
            assert canon == d and sign == -1


def test_cyclic_rotation_keeps_sign():
    d = theta()
    rotated = JacobiDiagram(((1, 2, 0), (3, 4, 5)), d.edges)
    assert canonical_form(rotated) == (d, 1)


def test_canonical_form_is_idempotent():
    for d in _catalog():
        assert canonical_form(d) == (d, 1)
