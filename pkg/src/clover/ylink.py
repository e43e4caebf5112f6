"""LP-surgery data built from Y-links and from Jacobi diagrams.

A Y-graph component becomes a genus-3 piece whose Lagrangian basis is dual to
the three leaf cores; its triple form is the signed unit form and its Rohlin
delta is the product of the leaf framings mod 2.  Linking numbers between the
leaf cores of distinct components are copied verbatim.
"""
from dataclasses import dataclass, field

from .contraction import Coefficient, ell
from .diagram import cyclic_sign, is_reversible, validate
from .enumerator import check_degree, enumerate_degree
from .errors import ArityError, ValidationError
from .lp import LPComponent, LPSurgeryData


@dataclass(frozen=True)
class YLinkData:
    """``components``: ``(orientation_sign, (f1, f2, f3))`` per Y-graph.

    ``leaf_linking`` maps ``((i, p), (j, q))`` (1-based component and leaf slot,
    ``i != j``) to the linking number of the two leaves.
    """

    components: tuple
    leaf_linking: dict = field(default_factory=dict)

    def __post_init__(self):
        comps = []
        for sign, framings in self.components:
            if sign not in (1, -1):
                raise ValidationError(f"orientation sign must be +1 or -1, got {sign!r}")
            framings = tuple(int(f) % 2 for f in framings)
            if len(framings) != 3:
                raise ValidationError("a Y-graph has exactly three leaves")
            comps.append((sign, framings))
        n = len(comps)
        links = {}
        for ((i, p), (j, q)), value in dict(self.leaf_linking).items():
            if i == j:
                if value:
                    raise ValidationError(f"leaf linking inside component {i}", "SELF_LINK")
                continue
            if not (1 <= i <= n and 1 <= j <= n and 1 <= p <= 3 and 1 <= q <= 3):
                raise ValidationError(f"leaf ({i},{p})-({j},{q}) out of range", "INDEX_RANGE")
            key = ((i, p), (j, q)) if i < j else ((j, q), (i, p))
            if key in links and links[key] != value:
                raise ValidationError(f"leaf linking {key} is not symmetric")
            links[key] = int(value)
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "leaf_linking", {k: v for k, v in links.items() if v})

    @classmethod
    def from_json(cls, data):
        try:
            comps = [(c["orientation_sign"], tuple(c["framings"])) for c in data["components"]]
            matrix = data.get("leaf_linking", [])
        except (TypeError, KeyError) as exc:
            raise ValidationError(f"malformed Y-link record: {exc!r}") from None
        size = 3 * len(comps)
        if matrix and (len(matrix) != size or any(len(row) != size for row in matrix)):
            raise ValidationError(f"leaf_linking must be a {size}x{size} matrix")
        links = {}
        for a in range(len(matrix)):
            for b in range(len(matrix)):
                i, p, j, q = a // 3 + 1, a % 3 + 1, b // 3 + 1, b % 3 + 1
                value = matrix[a][b]
                if i == j:
                    if value:
                        raise ValidationError(f"leaf linking inside component {i}", "SELF_LINK")
                    continue
                if value != matrix[b][a]:
                    raise ValidationError("leaf_linking matrix is not symmetric")
                if i < j:
                    links[((i, p), (j, q))] = value
        return cls(tuple(comps), links)

    def to_json(self):
        size = 3 * len(self.components)
        matrix = [[0] * size for _ in range(size)]
        for ((i, p), (j, q)), value in self.leaf_linking.items():
            a, b = 3 * (i - 1) + p - 1, 3 * (j - 1) + q - 1
            matrix[a][b] = matrix[b][a] = value
        return {
            "components": [{"orientation_sign": s, "framings": list(f)} for s, f in self.components],
            "leaf_linking": matrix,
        }


def lp_from_ylink(y):
    if not isinstance(y, YLinkData):
        y = YLinkData.from_json(y)
    comps = []
    for sign, (f1, f2, f3) in y.components:
        comps.append(LPComponent(3, {(1, 2, 3): sign}, (f1 * f2 * f3) % 2))
    return LPSurgeryData(tuple(comps), dict(y.leaf_linking))


def y_three():
    """The Y-graph with three framing-1 leaves, unlinked from everything."""
    return LPComponent(3, {(1, 2, 3): 1}, 1)


def lp_from_jacobi(G, n):
    """Data of the Y-link obtained from ``G`` plus ``n - |V(G)|`` isolated Y_III copies.

    Vertex ``w`` becomes component ``w + 1``; its leaf slots are its half-edges
    in increasing order, and its form sign compares that order with the
    vertex-orientation.  Leaves of the two ends of an edge link once.
    """
    G = validate(G)
    size = G.vertex_count
    if n < size:
        raise ArityError(f"n = {n} is smaller than the {size} vertices of the diagram")
    slot = {}
    comps = []
    for w, triple in enumerate(G.triples):
        ordered = sorted(triple)
        for p, h in enumerate(ordered, start=1):
            slot[h] = p
        comps.append(LPComponent(3, {(1, 2, 3): cyclic_sign(ordered, triple)}, 0))
    links = {}
    for a, b in G.edges:
        links[((G.vertex_of[a] + 1, slot[a]), (G.vertex_of[b] + 1, slot[b]))] = 1
    comps.extend(y_three() for _ in range(n - size))
    return LPSurgeryData(tuple(comps), links)


def expected_fondjac(G_y, G, n):
    """Predicted value: 1 when the classes agree (identical representatives), else 0."""
    ring = "Z" if n == G.vertex_count and not is_reversible(G) else "Z2"
    return Coefficient(ring, 1 if G_y == G else 0)


def verify_fondjac(max_degree, n_extra=0, limit=None):
    """Compare ``ell(lp_from_jacobi(G_y, n), G)`` with the signed identity over the catalogs."""
    check_degree(max_degree, limit)
    if n_extra < 0:
        raise ValidationError("n_extra must be non-negative")
    classes = [G for k in range(max_degree + 1) for G in enumerate_degree(k, limit)]
    matrix, mismatches = [], []
    for a, G_y in enumerate(classes):
        row = []
        for b, G in enumerate(classes):
            n = max(G_y.vertex_count, G.vertex_count) + n_extra
            got = ell(lp_from_jacobi(G_y, n), G)
            want = expected_fondjac(G_y, G, n)
            row.append(got)
            if got != want:
                mismatches.append({"row": a, "col": b, "got": got.to_json(), "expected": want.to_json()})
        matrix.append(row)
    return {
        "classes": classes,
        "matrix": matrix,
        "mismatches": mismatches,
        "passed": not mismatches,
    }
