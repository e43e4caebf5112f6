"""LP-surgeries as pure algebraic data.

Components and basis vectors are indexed from 1, as in the JSON format.  A
component carries its genus, the antisymmetric triple form on its Lagrangian
basis ``a_1..a_g`` (stored on strictly increasing triples), and the mod-2
Rohlin change of its single replacement.  Linking numbers between the dual
bases ``z_p`` of distinct components are stored once per unordered pair.
"""
from dataclasses import dataclass, field
from itertools import permutations

from .diagram import perm_sign
from .errors import ValidationError


@dataclass(frozen=True)
class LPComponent:
    genus: int
    triple_form: dict = field(default_factory=dict)
    rohlin_delta: int = 0

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValidationError(f"genus must be a non-negative integer, got {self.genus!r}")
        form = {}
        for key, value in dict(self.triple_form).items():
            key = tuple(int(i) for i in key)
            if len(key) != 3 or not key[0] < key[1] < key[2]:
                raise ValidationError(f"triple {key} is not strictly increasing", "BAD_TRIPLE")
            if key[0] < 1 or key[2] > self.genus:
                raise ValidationError(f"triple {key} outside genus {self.genus}", "INDEX_RANGE")
            if int(value):
                form[key] = int(value)
        if self.rohlin_delta not in (0, 1):
            raise ValidationError(f"rohlin_delta must be 0 or 1, got {self.rohlin_delta!r}")
        object.__setattr__(self, "triple_form", form)

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self.triple_form.items())), self.rohlin_delta))

    def dense(self):
        """Full antisymmetric tensor as nested lists indexed from 0."""
        g = self.genus
        t = [[[0] * g for _ in range(g)] for _ in range(g)]
        for key, value in self.triple_form.items():
            for perm in permutations(key):
                p, q, r = (i - 1 for i in perm)
                t[p][q][r] = perm_sign(perm) * value
        return t


def triple_eval(component, p, q, r):
    """``I(a_p, a_q, a_r)`` for indices in any order."""
    for i in (p, q, r):
        if not 1 <= i <= component.genus:
            raise ValidationError(f"index {i} outside 1..{component.genus}", "INDEX_RANGE")
    if len({p, q, r}) < 3:
        return 0
    return perm_sign((p, q, r)) * component.triple_form.get(tuple(sorted((p, q, r))), 0)


@dataclass(frozen=True)
class LPSurgeryData:
    components: tuple
    linking: dict = field(default_factory=dict)

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if not isinstance(c, LPComponent):
                raise ValidationError("components must be LPComponent instances")
        n = len(comps)
        links = {}
        for key, value in dict(self.linking).items():
            (i, p), (j, q) = key
            if i == j:
                raise ValidationError(f"linking entry {key} joins component {i} to itself", "SELF_LINK")
            if i > j:
                (i, p), (j, q) = (j, q), (i, p)
            for c, b in ((i, p), (j, q)):
                if not 1 <= c <= n or not 1 <= b <= comps[c - 1].genus:
                    raise ValidationError(f"linking entry {key} out of range", "INDEX_RANGE")
            k = ((i, p), (j, q))
            if k in links:
                raise ValidationError(f"linking entry {k} given twice")
            if int(value):
                links[k] = int(value)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "linking", links)

    def __hash__(self):
        return hash((self.components, tuple(sorted(self.linking.items()))))

    @property
    def n(self):
        return len(self.components)

    def lk(self, i, p, j, q):
        if i == j:
            return 0
        if i > j:
            i, p, j, q = j, q, i, p
        return self.linking.get(((i, p), (j, q)), 0)

    def linking_block(self, i, j):
        """Matrix ``lk(z^i_p, z^j_q)`` as nested lists indexed from 0."""
        gi, gj = self.components[i - 1].genus, self.components[j - 1].genus
        return [[self.lk(i, p, j, q) for q in range(1, gj + 1)] for p in range(1, gi + 1)]

    def to_json(self):
        return {
            "components": [
                {
                    "genus": c.genus,
                    "triple_form": [
                        {"p": p, "q": q, "r": r, "value": v} for (p, q, r), v in sorted(c.triple_form.items())
                    ],
                    "rohlin_delta": c.rohlin_delta,
                }
                for c in self.components
            ],
            "linking": [
                {"ci": i, "pi": p, "cj": j, "qj": q, "value": v}
                for ((i, p), (j, q)), v in sorted(self.linking.items())
            ],
        }


def validate_lp(candidate):
    """Build :class:`LPSurgeryData` from itself or its JSON mapping, or raise."""
    if isinstance(candidate, LPSurgeryData):
        return candidate
    try:
        comps = []
        for c in candidate["components"]:
            form = {}
            for entry in c.get("triple_form", []):
                key = (entry["p"], entry["q"], entry["r"])
                if key in form:
                    raise ValidationError(f"triple {key} given twice", "BAD_TRIPLE")
                form[key] = entry["value"]
            comps.append(LPComponent(c["genus"], form, c.get("rohlin_delta", 0)))
        links = {}
        for e in candidate.get("linking", []):
            if e["ci"] == e["cj"]:
                raise ValidationError(f"linking entry joins component {e['ci']} to itself", "SELF_LINK")
            if e["ci"] > e["cj"]:
                raise ValidationError("linking entries need ci < cj", "INDEX_RANGE")
            key = ((e["ci"], e["pi"]), (e["cj"], e["qj"]))
            if key in links:
                raise ValidationError(f"linking entry {key} given twice")
            links[key] = e["value"]
    except (TypeError, KeyError, AttributeError) as exc:
        raise ValidationError(f"malformed LP-surgery record: {exc!r}") from None
    return LPSurgeryData(tuple(comps), links)


def restrict(D, J):
    """Sub-surgery on the components in ``J``, renumbered in increasing order."""
    J = sorted(set(J))
    if any(not 1 <= i <= D.n for i in J):
        raise ValidationError(f"subset {J} outside 1..{D.n}", "INDEX_RANGE")
    new = {old: k + 1 for k, old in enumerate(J)}
    links = {}
    for ((i, p), (j, q)), v in D.linking.items():
        if i in new and j in new:
            links[((new[i], p), (new[j], q))] = v
    return LPSurgeryData(tuple(D.components[i - 1] for i in J), links)


def split_component(D, i, form, delta):
    """Split component ``i`` into ``(form, delta)`` and the remainder.

    Returns ``(D', D'')`` whose component ``i`` carry ``form``/``delta`` and
    ``I - form``/``delta_i - delta`` (mod 2) respectively.
    """
    if not 1 <= i <= D.n:
        raise ValidationError(f"component {i} outside 1..{D.n}", "INDEX_RANGE")
    c = D.components[i - 1]
    first = LPComponent(c.genus, form, int(delta) % 2)
    rest = dict(c.triple_form)
    for key, value in first.triple_form.items():
        rest[key] = rest.get(key, 0) - value
    second = LPComponent(c.genus, rest, (c.rohlin_delta - first.rohlin_delta) % 2)

    def swap(comp):
        comps = list(D.components)
        comps[i - 1] = comp
        return LPSurgeryData(tuple(comps), D.linking)

    return swap(first), swap(second)


EPSILON = {(1, 2, 3): 1}
