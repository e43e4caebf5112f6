import random
from itertools import permutations, product

import pytest

from clover.diagram import cyclic_sign, from_multigraph, theta
from clover.lp import LPComponent, LPSurgeryData


def k4():
    return from_multigraph([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])


def doubled_square():
    return from_multigraph([[0, 2, 0, 1], [2, 0, 1, 0], [0, 1, 0, 2], [1, 0, 2, 0]])


def brute_isomorphisms(d1, d2):
    """Signs of all half-edge bijections that respect vertices and edges.

    Enumerates every vertex bijection and every per-vertex half-edge
    bijection without pruning; only usable for a handful of vertices.
    """
    if d1.vertex_count != d2.vertex_count:
        return []
    target_edges = {frozenset(e) for e in d2.edges}
    signs = []
    n = d1.vertex_count
    for vperm in permutations(range(n)):
        per_vertex = [list(permutations(d2.triples[vperm[v]])) for v in range(n)]
        for images in product(*per_vertex):
            hmap = {}
            for v, img in enumerate(images):
                hmap.update(zip(d1.triples[v], img))
            if all(frozenset((hmap[a], hmap[b])) in target_edges for a, b in d1.edges):
                sign = 1
                for v, img in enumerate(images):
                    sign *= cyclic_sign(img, d2.triples[vperm[v]])
                signs.append(sign)
    return signs


def random_lp(rng, n, max_genus=4, form_range=3, link_range=2, genus_floor=0):
    comps = []
    for _ in range(n):
        g = rng.randint(genus_floor, max_genus)
        form = {}
        for p in range(1, g + 1):
            for q in range(p + 1, g + 1):
                for r in range(q + 1, g + 1):
                    form[(p, q, r)] = rng.randint(-form_range, form_range)
        comps.append(LPComponent(g, form, rng.randint(0, 1)))
    links = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for p in range(1, comps[i - 1].genus + 1):
                for q in range(1, comps[j - 1].genus + 1):
                    links[((i, p), (j, q))] = rng.randint(-link_range, link_range)
    return LPSurgeryData(tuple(comps), links)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def th():
    return theta()
