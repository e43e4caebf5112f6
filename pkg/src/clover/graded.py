"""The graded groups A_k: oriented diagrams modulo AS and IHX, over Z."""
from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import JacobiDiagram, canonical_form, is_reversible, validate
from .enumerator import check_degree, enumerate_degree
from .errors import DegreeMismatchError, ValidationError
from .linalg import bareiss_rank, smith_normal_form, vec_mat


class FormalSum:
    """Finite linear combination of canonical diagrams.

    Values are anything supporting ``+``, ``*`` by int and comparison with 0
    (ints here; :class:`clover.contraction.Coefficient` for brackets).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, value in dict(terms or {}).items():
            if not isinstance(key, JacobiDiagram):
                raise ValidationError(f"formal sum keys must be diagrams, got {type(key).__name__}")
            if value != 0:
                clean[key] = value
        self.terms = clean

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return FormalSum({k: scalar * v for k, v in self.terms.items()})

    def __repr__(self):
        inner = ", ".join(f"{v}*{k.edges}" for k, v in self.terms.items())
        return f"FormalSum({{{inner}}})"

    def degrees(self):
        return {k.degree for k in self.terms}

    def to_json(self):
        return [{"diagram": k.to_json(), "value": v} for k, v in self.terms.items()]


def as_normalize(signed):
    """Rewrite ``[(coeff, diagram), ...]`` onto canonical orientation representatives.

    Bare diagrams count with coefficient +1.
    """
    out = {}
    for item in signed:
        if isinstance(item, JacobiDiagram) or isinstance(item, dict):
            coeff, d = 1, item
        else:
            coeff, d = item
        canon, sign = canonical_form(validate(d))
        out[canon] = out.get(canon, 0) + sign * coeff
    return FormalSum(out)


def ihx_terms(d, c):
    """The three diagrams of the IHX relation at the edge through half-edge ``c``.

    ``c`` sits at the lower vertex ``u`` of the pictured I; its partner at the
    upper vertex ``w``.  Returns ``[I, H, X]`` with ``None`` for a term that
    would contain a loop.
    """
    d = validate(d)
    dd = d.partner[c]
    u, w = d.vertex_of[c], d.vertex_of[dd]
    tu, tw = d.triples[u], d.triples[w]
    i = tu.index(c)
    # I-picture: u = (top, w, bottom-right), w = (u, top-left, bottom-left)
    x, y = tu[(i + 1) % 3], tu[(i + 2) % 3]
    top, bottom_right = y, x
    j = tw.index(dd)
    top_left, bottom_left = tw[(j + 1) % 3], tw[(j + 2) % 3]
    shapes = [
        ((top, c, bottom_right), (dd, top_left, bottom_left)),
        ((top, bottom_left, c), (dd, top_left, bottom_right)),
        ((c, bottom_left, bottom_right), (top, dd, top_left)),
    ]
    out = []
    for new_u, new_w in shapes:
        triples = list(d.triples)
        triples[u], triples[w] = new_u, new_w
        try:
            out.append(JacobiDiagram(tuple(triples), d.edges))
        except ValidationError as exc:
            if exc.code != "LOOP":
                raise
            out.append(None)
    return out


def ihx_relation(d, c):
    return as_normalize([t for t in ihx_terms(d, c) if t is not None])


@lru_cache(maxsize=None)
def _ihx_relations(k):
    rels, seen = [], set()
    for d in enumerate_degree(k, limit=max(k, 0)).classes:
        for a, b in d.edges:
            for c in (a, b):
                rel = ihx_relation(d, c)
                key = frozenset(rel.items())
                if key not in seen:
                    seen.add(key)
                    rels.append(rel)
    return tuple(rels)


def ihx_relations(k, limit=None):
    """IHX relations at every edge (both ends) of every catalog diagram of degree ``k``."""
    check_degree(k, limit)
    if k < 1:
        return []
    return list(_ihx_relations(k))


@dataclass
class SpaceStructure:
    degree: int
    rank: int
    torsion: list
    basis: list
    classes: tuple
    relation_matrix: list = field(repr=False)
    _V: list = field(repr=False, default=None)
    _diag: list = field(repr=False, default=None)

    @property
    def coordinate_moduli(self):
        """Per basis element: 0 for a free generator, ``d`` for Z/d."""
        return [d for d in self._full_diag() if d != 1]

    def _full_diag(self):
        m = len(self.classes)
        return list(self._diag) + [0] * (m - len(self._diag))

    def vector(self, s):
        index = {d: i for i, d in enumerate(self.classes)}
        x = [0] * len(self.classes)
        for key, value in s.items():
            if key.degree != self.degree:
                raise DegreeMismatchError(f"term of degree {key.degree} in a degree-{self.degree} space")
            if key not in index:
                canon, sign = canonical_form(key)
                x[index[canon]] += sign * value
            else:
                x[index[key]] += value
        return x

    def reduce(self, s):
        """Coordinates of ``s`` in ``basis``: free ones in Z, torsion ones mod their order."""
        y = vec_mat(self.vector(s), self._V)
        out = []
        for value, d in zip(y, self._full_diag()):
            if d == 1:
                continue
            out.append(value % d if d else value)
        return out


def relation_matrix(k, limit=None):
    """Rows over the catalog classes: IHX relations plus ``2*G`` for reversible ``G``."""
    classes = enumerate_degree(k, limit).classes
    index = {d: i for i, d in enumerate(classes)}
    rows = []
    for rel in ihx_relations(k, limit):
        row = [0] * len(classes)
        for key, value in rel.items():
            row[index[key]] += value
        rows.append(row)
    for d in classes:
        if is_reversible(d):
            row = [0] * len(classes)
            row[index[d]] = 2
            rows.append(row)
    return classes, rows


def space_structure(k, limit=None):
    """Smith normal form of the relation matrix and a reducer onto the quotient."""
    check_degree(k, limit)
    return _space_structure(k)


@lru_cache(maxsize=None)
def _space_structure(k):
    classes, rows = relation_matrix(k, limit=k)
    snf = smith_normal_form(rows, len(classes))
    nonzero = [d for d in snf.diagonal if d]
    m = len(classes)
    diag = nonzero + [0] * (m - len(nonzero))
    basis = []
    for i, d in enumerate(diag):
        if d != 1:
            basis.append(FormalSum({classes[j]: snf.V_inv[i][j] for j in range(m)}))
    return SpaceStructure(
        degree=k,
        rank=m - len(nonzero),
        torsion=[d for d in nonzero if d > 1],
        basis=basis,
        classes=classes,
        relation_matrix=rows,
        _V=snf.V,
        _diag=nonzero,
    )


def rational_rank(k, limit=None):
    """Rank of A_k tensor Q via fraction-free elimination, independent of the SNF path."""
    classes, rows = relation_matrix(k, limit)
    return len(classes) - bareiss_rank(rows)


def reduce(s, k, limit=None):
    if any(d != k for d in s.degrees()):
        raise DegreeMismatchError(f"formal sum has degrees {sorted(s.degrees())}, expected {k}")
    return space_structure(k, limit).reduce(s)
