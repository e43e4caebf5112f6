import pytest

from clover.contraction import Coefficient, ell
from clover.diagram import empty_diagram, reverse_orientation, theta
from clover.enumerator import enumerate_degree
from clover.errors import ArityError, ValidationError
from clover.ylink import YLinkData, expected_fondjac, lp_from_jacobi, lp_from_ylink, verify_fondjac

from conftest import doubled_square, k4


def test_single_y_three():
    D = lp_from_ylink(YLinkData(((1, (1, 1, 1)),)))
    c = D.components[0]
    assert (c.genus, c.triple_form, c.rohlin_delta) == (3, {(1, 2, 3): 1}, 1)


def test_framing_zero_leaf():
    D = lp_from_ylink(YLinkData(((-1, (1, 0, 1)),)))
    assert D.components[0].rohlin_delta == 0
    assert D.components[0].triple_form == {(1, 2, 3): -1}


def test_hopf_pair_copied():
    y = YLinkData(((1, (0, 0, 0)), (1, (0, 0, 0))), {((1, 2), (2, 3)): 1})
    assert lp_from_ylink(y).linking == {((1, 2), (2, 3)): 1}


def test_json_round_trip_and_self_link():
    y = YLinkData(((1, (1, 0, 1)), (-1, (0, 0, 1))), {((1, 1), (2, 3)): 2})
    assert YLinkData.from_json(y.to_json()) == y
    data = y.to_json()
    data["leaf_linking"][0][1] = data["leaf_linking"][1][0] = 1
    with pytest.raises(ValidationError) as err:
        YLinkData.from_json(data)
    assert err.value.code == "SELF_LINK"


def test_lp_from_jacobi_examples():
    D = lp_from_jacobi(theta(), 2)
    assert D.n == 2 and sorted(D.linking.values()) == [1, 1, 1]
    assert [c.rohlin_delta for c in D.components] == [0, 0]
    D3 = lp_from_jacobi(theta(), 3)
    assert D3.components[2].rohlin_delta == 1 and D3.linking == D.linking
    D0 = lp_from_jacobi(empty_diagram(), 1)
    assert D0.n == 1 and D0.components[0].rohlin_delta == 1
    with pytest.raises(ArityError):
        lp_from_jacobi(k4(), 3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_one_unit_link_per_edge(k):
    for G in enumerate_degree(k):
        D = lp_from_jacobi(G, G.vertex_count)
        assert len(D.linking) == len(G.edges)
        assert set(D.linking.values()) == {1}


def test_flip_negates_the_component_and_the_diagonal():
    for G in (theta(), k4(), doubled_square()):
        flipped = reverse_orientation(G, 1)
        D, E = lp_from_jacobi(G, G.vertex_count), lp_from_jacobi(flipped, G.vertex_count)
        assert E.components[1].triple_form == {(1, 2, 3): -D.components[1].triple_form[(1, 2, 3)]}
        assert ell(E, G).value == -ell(D, G).value


def test_degree_three_diagonal():
    for G in enumerate_degree(3):
        assert ell(lp_from_jacobi(G, 6), G) == expected_fondjac(G, G, 6)


def test_invariance_under_equivalent_framings():
    G = theta()
    links = {((1, 1), (2, 1)): 1, ((1, 2), (2, 2)): 1, ((1, 3), (2, 3)): 1}
    a = YLinkData(((1, (1, 0, 0)), (1, (0, 0, 0)), (1, (1, 1, 1))), links)
    b = YLinkData(((1, (0, 1, 1)), (1, (1, 1, 0)), (1, (1, 1, 1))), links)
    assert ell(lp_from_ylink(a), G) == ell(lp_from_ylink(b), G)


def test_leaf_row_splitting(rng):
    comps = tuple((rng.choice((1, -1)), (1, 1, 1)) for _ in range(4))
    pairs = [((i, p), (j, q)) for i in range(1, 5) for j in range(i + 1, 5) for p in (1, 2, 3) for q in (1, 2, 3)]
    for _ in range(5):
        base = {key: rng.randint(-2, 2) for key in pairs}
        row = [key for key in pairs if key[0] == (1, 2)]
        first, second = dict(base), dict(base)
        for key in row:
            part = rng.randint(-2, 2)
            first[key], second[key] = part, base[key] - part
        for G in enumerate_degree(2):
            whole = ell(lp_from_ylink(YLinkData(comps, base)), G)
            split = ell(lp_from_ylink(YLinkData(comps, first)), G) + ell(lp_from_ylink(YLinkData(comps, second)), G)
            assert whole == split


def test_verify_fondjac_small():
    report = verify_fondjac(1)
    assert report["passed"]
    assert report["matrix"][1][1] == Coefficient("Z", 1)
    report = verify_fondjac(1, n_extra=1)
    assert report["passed"] and report["matrix"][1][1] == Coefficient("Z2", 1)
