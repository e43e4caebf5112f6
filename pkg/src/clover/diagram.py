"""Oriented Jacobi diagrams stored as half-edge structures.

A diagram on ``V`` vertices owns the half-edges ``0 .. 3V-1``.  Each vertex is
an ordered triple of half-edges whose cyclic order is the vertex-orientation,
and the edges form a perfect matching on the half-edges.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from math import factorial, prod

from ._canon import canonical_order
from .errors import ValidationError


def perm_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct comparable items)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def cyclic_sign(triple, reference):
    """+1 if ``triple`` is a cyclic rotation of ``reference``, -1 otherwise."""
    a, b, c = reference
    if tuple(triple) in ((a, b, c), (b, c, a), (c, a, b)):
        return 1
    return -1


@dataclass(frozen=True)
class JacobiDiagram:
    triples: tuple
    edges: tuple

    def __post_init__(self):
        triples = tuple(tuple(int(h) for h in t) for t in self.triples)
        edges = tuple(sorted(tuple(sorted(int(h) for h in e)) for e in self.edges))
        object.__setattr__(self, "triples", triples)
        object.__setattr__(self, "edges", edges)
        _check(triples, edges)

    @property
    def vertex_count(self):
        return len(self.triples)

    @property
    def degree(self):
        return len(self.triples) // 2

    @cached_property
    def vertex_of(self):
        out = [0] * (3 * len(self.triples))
        for v, t in enumerate(self.triples):
            for h in t:
                out[h] = v
        return tuple(out)

    @cached_property
    def partner(self):
        out = [0] * (3 * len(self.triples))
        for a, b in self.edges:
            out[a], out[b] = b, a
        return tuple(out)

    @cached_property
    def multiplicity(self):
        n = len(self.triples)
        mult = [[0] * n for _ in range(n)]
        for a, b in self.edges:
            u, w = self.vertex_of[a], self.vertex_of[b]
            mult[u][w] += 1
            mult[w][u] += 1
        return tuple(tuple(row) for row in mult)

    def edges_between(self, u, w):
        """Edges joining ``u`` and ``w`` as (half at u, half at w), sorted."""
        vo = self.vertex_of
        out = []
        for a, b in self.edges:
            if vo[a] == u and vo[b] == w:
                out.append((a, b))
            elif vo[a] == w and vo[b] == u:
                out.append((b, a))
        return sorted(out)

    def is_connected(self):
        from ._canon import components
        return len(components(self.multiplicity)) <= 1

    def to_json(self):
        return {
            "vertices": self.vertex_count,
            "half_edges": [list(t) for t in self.triples],
            "edges": [list(e) for e in self.edges],
        }

    def __repr__(self):
        return f"JacobiDiagram(V={self.vertex_count}, triples={self.triples}, edges={self.edges})"


def _check(triples, edges):
    n = len(triples)
    if n % 2:
        raise ValidationError(f"vertex count {n} is odd", "ODD_VERTEX_COUNT")
    ids = [h for t in triples for h in t]
    if any(len(t) != 3 for t in triples):
        raise ValidationError("every vertex needs exactly three half-edges")
    if sorted(ids) != list(range(3 * n)):
        raise ValidationError("half-edge identifiers must be exactly 0..3V-1, each at one vertex")
    vertex_of = {}
    for v, t in enumerate(triples):
        for h in t:
            vertex_of[h] = v
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise ValidationError(f"edge {e} does not have two ends")
        a, b = e
        if a not in vertex_of or b not in vertex_of:
            raise ValidationError(f"edge {e} uses an unknown half-edge", "DANGLING")
        if a == b or a in seen or b in seen:
            raise ValidationError(f"half-edge used twice in edges near {e}")
        if vertex_of[a] == vertex_of[b]:
            raise ValidationError(f"edge {e} is a loop at vertex {vertex_of[a]}", "LOOP")
        seen.update(e)
    if len(seen) != len(ids):
        missing = sorted(set(ids) - seen)
        raise ValidationError(f"unmatched half-edges {missing}", "DANGLING")


def validate(candidate):
    """Return a :class:`JacobiDiagram` built from ``candidate`` or raise.

    Accepts a diagram, or a mapping in the JSON layout
    ``{"vertices": V, "half_edges": [[h, h, h], ...], "edges": [[h, h], ...]}``.
    """
    if isinstance(candidate, JacobiDiagram):
        return candidate
    try:
        triples = candidate["half_edges"]
        edges = candidate["edges"]
        declared = candidate.get("vertices", len(triples))
    except (TypeError, KeyError) as exc:
        raise ValidationError(f"malformed diagram record: {exc}") from None
    if declared % 2:
        raise ValidationError(f"vertex count {declared} is odd", "ODD_VERTEX_COUNT")
    if declared != len(triples):
        raise ValidationError("'vertices' disagrees with the number of half-edge triples")
    return JacobiDiagram(tuple(map(tuple, triples)), tuple(map(tuple, edges)))


def empty_diagram():
    return JacobiDiagram((), ())


def theta():
    return JacobiDiagram(((0, 1, 2), (3, 4, 5)), ((0, 3), (1, 4), (2, 5)))


def reverse_orientation(d, vertex=0):
    """Swap two half-edges at ``vertex``; the result is ``-d``."""
    triples = list(d.triples)
    a, b, c = triples[vertex]
    triples[vertex] = (b, a, c)
    return JacobiDiagram(tuple(triples), d.edges)


def relabel(d, vertex_perm, half_perm):
    """Apply a vertex permutation and a half-edge permutation (as lists)."""
    n = d.vertex_count
    triples = [None] * n
    for v, t in enumerate(d.triples):
        triples[vertex_perm[v]] = tuple(half_perm[h] for h in t)
    edges = tuple((half_perm[a], half_perm[b]) for a, b in d.edges)
    return JacobiDiagram(tuple(triples), edges)


def disjoint_union(*diagrams):
    triples, edges, shift = [], [], 0
    for d in diagrams:
        triples.extend(tuple(h + shift for h in t) for t in d.triples)
        edges.extend((a + shift, b + shift) for a, b in d.edges)
        shift += 3 * d.vertex_count
    return JacobiDiagram(tuple(triples), tuple(edges))


def from_multigraph(mult):
    """Diagram with half-edges assigned in order along the sorted edge list.

    Every vertex gets the orientation ``(3v, 3v+1, 3v+2)``.
    """
    n = len(mult)
    nxt = [3 * v for v in range(n)]
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            for _ in range(mult[a][b]):
                edges.append((nxt[a], nxt[b]))
                nxt[a] += 1
                nxt[b] += 1
    triples = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(n))
    return JacobiDiagram(triples, tuple(edges))


@dataclass(frozen=True)
class SignedIso:
    """Half-edge bijection ``map[h_source] = h_target`` and its orientation sign."""

    map: tuple
    sign: int

    def vertex_map(self, source, target):
        return tuple(target.vertex_of[self.map[t[0]]] for t in source.triples)

    def compose(self, other):
        """``self`` after ``other``."""
        return SignedIso(tuple(self.map[h] for h in other.map), self.sign * other.sign)


def iso_sign(source, target, hmap):
    sign = 1
    for t in source.triples:
        image = tuple(hmap[h] for h in t)
        sign *= cyclic_sign(image, target.triples[target.vertex_of[image[0]]])
    return sign


def _profile(mult, v):
    return tuple(sorted(m for m in mult[v] if m))


def vertex_isomorphisms(d1, d2):
    """Yield every vertex bijection (tuple, source -> target) of the multigraphs."""
    n = d1.vertex_count
    if n != d2.vertex_count:
        return
    m1, m2 = d1.multiplicity, d2.multiplicity
    prof2 = [_profile(m2, v) for v in range(n)]
    # breadth-first order so each new vertex is usually adjacent to mapped ones
    order, seen = [], set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in range(n):
                if m1[v][u] and u not in seen:
                    seen.add(u)
                    queue.append(u)
    prof1 = [_profile(m1, v) for v in range(n)]
    image = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            yield tuple(image)
            return
        v = order[i]
        for w in range(n):
            if used[w] or prof2[w] != prof1[v]:
                continue
            if all(m1[v][order[j]] == m2[w][image[order[j]]] for j in range(i)):
                image[v], used[w] = w, True
                yield from extend(i + 1)
                image[v], used[w] = None, False

    yield from extend(0)


def _half_edge_maps(d1, d2, vmap):
    n = d1.vertex_count
    blocks = []
    for u in range(n):
        for w in range(u + 1, n):
            src = d1.edges_between(u, w)
            if src:
                blocks.append((src, d2.edges_between(vmap[u], vmap[w])))
    choices = [permutations(range(len(src))) for src, _ in blocks]
    for perms in product(*choices):
        hmap = [None] * (3 * n)
        for (src, dst), p in zip(blocks, perms):
            for k, (a, b) in enumerate(src):
                hmap[a], hmap[b] = dst[p[k]]
        yield tuple(hmap)


def isomorphisms(d1, d2):
    """All half-edge isomorphisms ``d1 -> d2`` with their orientation signs."""
    d1, d2 = validate(d1), validate(d2)
    out = []
    for vmap in vertex_isomorphisms(d1, d2):
        for hmap in _half_edge_maps(d1, d2, vmap):
            out.append(SignedIso(hmap, iso_sign(d1, d2, hmap)))
    return out


def automorphisms(d):
    return isomorphisms(d, d)


def aut_v_count(d):
    """Order of the group of automorphisms fixing every vertex."""
    n = d.vertex_count
    return prod(factorial(d.multiplicity[u][w]) for u in range(n) for w in range(u + 1, n))


def _one_half_edge_map(d1, d2, vmap):
    return next(_half_edge_maps(d1, d2, vmap))


def automorphism_counts(d):
    """Return ``(|Aut|, |Aut_V|, reversible)``.

    Permuting parallel edges flips two half-edges at each end, so every
    automorphism over a fixed vertex permutation has the same sign; one
    representative per vertex automorphism suffices.
    """
    d = validate(d)
    aut_v = aut_v_count(d)
    count, reversible = 0, False
    for vmap in vertex_isomorphisms(d, d):
        count += 1
        if not reversible and iso_sign(d, d, _one_half_edge_map(d, d, vmap)) < 0:
            reversible = True
    return count * aut_v, aut_v, reversible


def aut_count(d):
    return automorphism_counts(d)[0]


def is_reversible(d):
    return automorphism_counts(d)[2]


def canonical_form(d):
    """Return ``(canonical, sign)`` with ``d == sign * canonical`` as oriented diagrams.

    The canonical diagram uses half-edges ``3p, 3p+1, 3p+2`` at position ``p`` of
    the canonical vertex order, each oriented increasingly.
    """
    d = validate(d)
    n = d.vertex_count
    order = canonical_order(d.multiplicity)
    canon = from_multigraph([[d.multiplicity[order[a]][order[b]] for b in range(n)] for a in range(n)])
    if _same_structure(d, canon):
        hmap = list(range(3 * n))
    else:
        hmap = [None] * (3 * n)
        for a in range(n):
            for b in range(a + 1, n):
                src = d.edges_between(order[a], order[b])
                dst = canon.edges_between(a, b)
                for (x, y), (cx, cy) in zip(src, dst):
                    hmap[x], hmap[y] = cx, cy
    return canon, iso_sign(d, canon, hmap)


def _same_structure(d, canon):
    if d.edges != canon.edges:
        return False
    return all(sorted(t) == sorted(c) for t, c in zip(d.triples, canon.triples))


def canonical_key(d):
    """Hashable key identifying the unoriented isomorphism class."""
    canon, _ = canonical_form(d)
    return canon.vertex_count, canon.edges
