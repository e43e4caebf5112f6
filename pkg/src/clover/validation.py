"""Input coercion for the estimator front ends."""
from .diagram import JacobiDiagram
from .errors import ArityError, DegreeMismatchError, ValidationError
from .graded import FormalSum, as_normalize
from .lp import LPSurgeryData, validate_lp


def check_formal_sum(x):
    """Accept a FormalSum, a list of ``(coeff, diagram)``/diagrams, or JSON records."""
    if isinstance(x, FormalSum):
        return as_normalize([(v, k) for k, v in x.items()])
    if isinstance(x, JacobiDiagram):
        return as_normalize([x])
    if isinstance(x, dict) and "half_edges" in x:
        return as_normalize([x])
    items = []
    for entry in x:
        if isinstance(entry, dict) and "diagram" in entry:
            items.append((int(entry.get("value", 1)), entry["diagram"]))
        elif isinstance(entry, (JacobiDiagram, dict)):
            items.append((1, entry))
        else:
            try:
                coeff, d = entry
            except (TypeError, ValueError):
                raise ValidationError(f"cannot read formal sum term {entry!r}") from None
            items.append((int(coeff), d))
    return as_normalize(items)


def check_formal_sums(X, degree):
    if isinstance(X, (FormalSum, JacobiDiagram)):
        X = [X]
    sums = [check_formal_sum(x) for x in X]
    for s in sums:
        bad = s.degrees() - {degree}
        if bad:
            raise DegreeMismatchError(f"terms of degree {sorted(bad)} in a degree-{degree} space")
    return sums


def check_surgeries(X, n):
    if isinstance(X, (LPSurgeryData, dict)):
        X = [X]
    out = []
    for x in X:
        D = validate_lp(x)
        if D.n != n:
            raise ArityError(f"expected {n} components, got {D.n}")
        out.append(D)
    return out
