"""Linking numbers of LP-surgeries with respect to Jacobi diagrams.

``ell_sigma`` places the triple form of component ``sigma(w)`` at every vertex
``w`` of the diagram, slots following the vertex-orientation, and contracts
each edge with the linking matrix between the two components it joins.
``ell_sigma_expansion`` evaluates the same number term by term over vertex
labelings and basis-index choices; it is slow and kept as a cross-check.
"""
from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .diagram import (
    aut_v_count,
    automorphism_counts,
    cyclic_sign,
    validate,
    vertex_isomorphisms,
)
from .errors import ArityError, DivisibilityError, ValidationError
from .lp import restrict, validate_lp


@dataclass(frozen=True, eq=False)
class Coefficient:
    """An integer living in Z (``ring="Z"``) or Z/2 (``ring="Z2"``)."""

    ring: str
    value: int

    def __post_init__(self):
        if self.ring not in ("Z", "Z2"):
            raise ValueError(f"unknown ring {self.ring!r}")
        if self.ring == "Z2":
            object.__setattr__(self, "value", self.value % 2)

    def __eq__(self, other):
        if isinstance(other, Coefficient):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other if other == 0 or self.ring == "Z" else self.value == other % 2
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __add__(self, other):
        if isinstance(other, int):
            other = Coefficient(self.ring, other)
        ring = "Z" if self.ring == other.ring == "Z" else "Z2"
        return Coefficient(ring, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(self.ring, -self.value)

    def __mul__(self, scalar):
        return Coefficient(self.ring, self.value * int(scalar))

    __rmul__ = __mul__

    def mod2(self):
        return Coefficient("Z2", self.value)

    def __repr__(self):
        return f"{self.value} in {'Z' if self.ring == 'Z' else 'Z/2'}"

    def to_json(self):
        return {"ring": self.ring, "value": self.value}


def _check_coloring(sigma, n):
    sigma = tuple(int(c) for c in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValidationError(f"coloration {sigma} is not a bijection onto 1..{n}")
    return sigma


def _arity(D, G):
    if D.n != G.vertex_count:
        raise ArityError(f"surgery has {D.n} components but the diagram has {G.vertex_count} vertices")


def _contract(tensors):
    """Contract ``[(array, labels)]`` where every label occurs in exactly two tensors."""
    tensors = list(tensors)
    if not tensors:
        return 1
    while len(tensors) > 1:
        best = None
        for a in range(len(tensors)):
            for b in range(a + 1, len(tensors)):
                shared = set(tensors[a][1]) & set(tensors[b][1])
                size = 1
                for arr, labels in (tensors[a], tensors[b]):
                    for dim, lab in zip(arr.shape, labels):
                        if lab not in shared:
                            size *= dim
                key = (not shared, size)
                if best is None or key < best[0]:
                    best = (key, a, b, shared)
        _, a, b, shared = best
        (x, lx), (y, ly) = tensors[a], tensors[b]
        shared = sorted(shared)
        ax = [lx.index(s) for s in shared]
        ay = [ly.index(s) for s in shared]
        z = np.tensordot(x, y, axes=(ax, ay))
        lz = [s for s in lx if s not in shared] + [s for s in ly if s not in shared]
        tensors = [t for i, t in enumerate(tensors) if i not in (a, b)] + [(z, lz)]
    arr, labels = tensors[0]
    if labels:
        raise AssertionError("uncontracted labels remain")
    return int(arr.item() if isinstance(arr, np.ndarray) else arr)


def _object_array(nested, shape):
    arr = np.zeros(shape, dtype=object)
    for idx in np.ndindex(*shape):
        value = nested
        for i in idx:
            value = value[i]
        arr[idx] = value
    return arr


def ell_sigma(D, G, sigma, labeling=None):
    """``ell(D; G; sigma)``: the full contraction of the coloured triple forms.

    ``sigma[w]`` is the component (1-based) sent to vertex ``w``.  ``labeling``
    optionally gives, per vertex, the order of its half-edges used to place the
    tensor slots; the result carries the matching ``sign(h)`` and does not
    depend on it.
    """
    D, G = validate_lp(D), validate(G)
    _arity(D, G)
    sigma = _check_coloring(sigma, D.n)
    sign = 1
    tensors = []
    for w, triple in enumerate(G.triples):
        order = tuple(labeling[w]) if labeling is not None else triple
        if sorted(order) != sorted(triple):
            raise ValidationError(f"labeling at vertex {w} is not a permutation of its half-edges")
        sign *= cyclic_sign(order, triple)
        comp = D.components[sigma[w] - 1]
        arr = _object_array(comp.dense(), (comp.genus,) * 3)
        tensors.append((arr, [("h", h) for h in order]))
    for a, b in G.edges:
        i, j = sigma[G.vertex_of[a]], sigma[G.vertex_of[b]]
        shape = (D.components[i - 1].genus, D.components[j - 1].genus)
        arr = _object_array(D.linking_block(i, j), shape)
        tensors.append((arr, [("h", a), ("h", b)]))
    return sign * _contract(tensors)


def ell_sigma_expansion(D, G, sigma):
    """Term-by-term sum over labelings ``h'`` and increasing index triples ``j``."""
    D, G = validate_lp(D), validate(G)
    _arity(D, G)
    sigma = _check_coloring(sigma, D.n)
    n = D.n
    if n == 0:
        return 1
    vertex_labelings = []
    for triple in G.triples:
        options = []
        for order in permutations(triple):
            # h'(order[t]) = t + 1
            options.append(({h: t + 1 for t, h in enumerate(order)}, cyclic_sign(order, triple)))
        vertex_labelings.append(options)
    # per component: nonzero increasing triples with their form values
    index_choices = [list(c.triple_form.items()) for c in D.components]
    total = 0
    for hs in product(*vertex_labelings):
        hmap, sign = {}, 1
        for labels, s in hs:
            hmap.update(labels)
            sign *= s
        for js in product(*index_choices):
            weight = 1
            for _, value in js:
                weight *= value
            prod_lk = 1
            for a, b in G.edges:
                ca, cb = sigma[G.vertex_of[a]], sigma[G.vertex_of[b]]
                pa = js[ca - 1][0][hmap[a] - 1]
                pb = js[cb - 1][0][hmap[b] - 1]
                prod_lk *= D.lk(ca, pa, cb, pb)
                if not prod_lk:
                    break
            total += sign * weight * prod_lk
    return total


def ell_zero(D, G, sigma):
    """``ell_sigma / |Aut_V(G)|``, which must be exact."""
    value = ell_sigma(D, G, sigma)
    order = aut_v_count(validate(G))
    if value % order:
        raise DivisibilityError(f"|Aut_V| = {order} does not divide ell_sigma = {value}")
    return value // order


def calL(D, subset):
    """Product of the Rohlin deltas over ``subset`` (1-based), in Z/2."""
    D = validate_lp(D)
    out = 1
    for i in subset:
        if not 1 <= i <= D.n:
            raise ValidationError(f"component {i} outside 1..{D.n}", "INDEX_RANGE")
        out *= D.components[i - 1].rohlin_delta
    return out % 2


def act(phi_v, sigma):
    """``phi . sigma = sigma o phi_v^-1`` for a vertex permutation ``phi_v``."""
    out = [None] * len(sigma)
    for w, image in enumerate(phi_v):
        out[image] = sigma[w]
    return tuple(out)


def orbit_representatives(G):
    """Least coloration in each orbit of Bij(G) under Aut(G)."""
    n = G.vertex_count
    vmaps = list(vertex_isomorphisms(G, G))
    seen, reps = set(), []
    for sigma in permutations(range(1, n + 1)):
        if sigma in seen:
            continue
        reps.append(sigma)
        for phi_v in vmaps:
            seen.add(act(phi_v, sigma))
    return reps


def ell(D, G):
    """``ell(D; G)`` as a :class:`Coefficient` (Z or Z/2 by the three cases)."""
    D, G = validate_lp(D), validate(G)
    n, size = D.n, G.vertex_count
    if n < size:
        raise ArityError(f"surgery has {n} components, fewer than the {size} vertices of the diagram")
    if n == size:
        if n == 0:
            return Coefficient("Z", 1)
        aut, _, reversible = automorphism_counts(G)
        if not reversible:
            total = sum(ell_sigma(D, G, sigma) for sigma in permutations(range(1, n + 1)))
            if total % aut:
                raise DivisibilityError(f"|Aut| = {aut} does not divide the coloration sum {total}")
            return Coefficient("Z", total // aut)
        return Coefficient("Z2", sum(ell_zero(D, G, sigma) for sigma in orbit_representatives(G)))
    total = 0
    everyone = set(range(1, n + 1))
    for J in combinations(range(1, n + 1), size):
        if not calL(D, everyone - set(J)):
            continue
        total += ell(restrict(D, J), G).value
    return Coefficient("Z2", total)


def bracket(D, limit=None):
    """Expansion of the bracket of ``D`` over the class representatives of degree <= n/2."""
    from .enumerator import representatives_up_to
    from .graded import FormalSum

    D = validate_lp(D)
    terms = {}
    for catalog in representatives_up_to(D.n, limit):
        for G in catalog:
            terms[G] = ell(D, G)
    return FormalSum(terms)
