"""Isomorphism classes of Jacobi diagrams of a given degree.

Connected trivalent multigraphs are grown edge by edge from a single vertex;
partial graphs are deduplicated up to isomorphism at every step (vertices
coloured by their current valence).  Catalogs are then assembled as multisets
of connected classes.
"""
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

from ._canon import canonical_order
from .diagram import aut_count, canonical_form, empty_diagram, from_multigraph
from .errors import LimitError, ValidationError

DEFAULT_MAX_DEGREE = 5


def max_degree_limit(limit=None):
    if limit is not None:
        return int(limit)
    return int(os.environ.get("CLOVER_MAX_DEGREE", DEFAULT_MAX_DEGREE))


def check_degree(k, limit=None):
    if k < 0:
        raise ValidationError(f"degree must be non-negative, got {k}")
    bound = max_degree_limit(limit)
    if k > bound:
        raise LimitError(f"degree {k} exceeds the configured bound {bound}")


@dataclass(frozen=True)
class DiagramCatalog:
    degree: int
    classes: tuple

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def to_json(self):
        return [d.to_json() for d in self.classes]


def _normalize(mult, deg):
    order = canonical_order(mult, deg)
    n = len(order)
    m = tuple(tuple(mult[order[a]][order[b]] for b in range(n)) for a in range(n))
    return m, tuple(deg[v] for v in order)


@lru_cache(maxsize=None)
def connected_multigraphs(n):
    """Canonical adjacency matrices of connected loopless cubic multigraphs on ``n`` vertices."""
    if n <= 0 or n % 2:
        return ()
    frontier = {(((0,),), (0,))}
    done = set()
    while frontier:
        nxt = set()
        for mult, deg in frontier:
            t = len(deg)
            open_v = [v for v in range(t) if deg[v] < 3]
            if not open_v:
                if t == n:
                    done.add(mult)
                continue
            v = open_v[0]
            targets = [u for u in open_v if u != v]
            if t < n:
                targets.append(t)
            for u in targets:
                size = max(t, u + 1)
                m = [list(row) + [0] * (size - t) for row in mult] + [[0] * size for _ in range(size - t)]
                d = list(deg) + [0] * (size - t)
                m[v][u] += 1
                m[u][v] += 1
                d[v] += 1
                d[u] += 1
                nxt.add(_normalize(m, d))
        frontier = nxt
    return tuple(sorted(done))


def _union_matrix(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    shift = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[shift + i][shift + j] = x
        shift += len(b)
    return out


def _even_partitions(total, largest):
    """Partitions of ``total`` into even parts, non-increasing, each <= largest."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 1, -1):
        if part % 2:
            continue
        for rest in _even_partitions(total - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def _catalog(k):
    if k == 0:
        return (empty_diagram(),)
    classes = {}
    for parts in _even_partitions(2 * k, 2 * k):
        groups = {}
        for p in parts:
            groups[p] = groups.get(p, 0) + 1
        choices = [list(combinations_with_replacement(connected_multigraphs(p), c)) for p, c in sorted(groups.items())]
        for combo in _product(choices):
            blocks = [b for group in combo for b in group]
            canon, _ = canonical_form(from_multigraph(_union_matrix(blocks)))
            classes[canon.edges] = canon
    return tuple(classes[key] for key in sorted(classes))


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def enumerate_degree(k, limit=None, connected_only=False):
    """Catalog with one canonical diagram per isomorphism class of degree ``k``."""
    check_degree(k, limit)
    classes = _catalog(k)
    if connected_only:
        classes = tuple(d for d in classes if d.is_connected() and d.vertex_count)
    return DiagramCatalog(k, classes)


def representatives_up_to(n, limit=None):
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}")
    return [enumerate_degree(k, limit) for k in range(n // 2 + 1)]


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def loop_free_pairing_count(vertices):
    """Perfect matchings of ``3V`` half-edges in ``V`` fixed triples avoiding loops.

    Inclusion-exclusion over the vertices forced to carry a loop (at most one
    loop fits at a trivalent vertex, in three ways).
    """
    total = 0
    for j in range(vertices + 1):
        rest = 3 * vertices - 2 * j
        term = _binom(vertices, j) * 3 ** j * (double_factorial(rest - 1) if rest else 1)
        total += -term if j % 2 else term
    return total


def _binom(n, r):
    return factorial(n) // (factorial(r) * factorial(n - r))


def labelled_count(catalog):
    """Orbit-counting mass: sum of ``V! 6^V / |Aut|`` over the catalog."""
    total = 0
    for d in catalog:
        v = d.vertex_count
        total += factorial(v) * 6 ** v // aut_count(d)
    return total


def raw_pairings(vertices):
    """Yield every loop-free perfect matching on the half-edges of ``V`` triples."""
    n = 3 * vertices
    pairing = [None] * n

    def rec():
        try:
            a = pairing.index(None)
        except ValueError:
            yield tuple((a, pairing[a]) for a in range(n) if a < pairing[a])
            return
        for b in range(a + 1, n):
            if pairing[b] is None and b // 3 != a // 3:
                pairing[a], pairing[b] = b, a
                yield from rec()
                pairing[a] = pairing[b] = None

    yield from rec()
