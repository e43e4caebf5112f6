"""Command line entry point: one JSON document per invocation.

Exit status: 0 success, 1 invalid input or usage, 2 degree limit exceeded,
3 failed internal check.
"""
import argparse
import json
import logging
import sys

from . import contraction, enumerator, freegroup, graded, ylink
from .diagram import validate
from .errors import CloverError, ValidationError
from .lp import validate_lp
from .validation import check_formal_sum

log = logging.getLogger("clover")

SCHEMAS = """\
diagram file:  {"vertices": V, "half_edges": [[h,h,h], ...], "edges": [[h,h], ...]}
surgery file:  {"components": [{"genus": g, "triple_form": [{"p":1,"q":2,"r":3,"value":v}],
                "rohlin_delta": 0|1}], "linking": [{"ci":i,"pi":p,"cj":j,"qj":q,"value":v}]}
y-link file:   {"components": [{"orientation_sign": 1, "framings": [f,f,f]}],
                "leaf_linking": 3N x 3N symmetric integer matrix}
element file:  [{"diagram": <diagram>, "value": n}, ...]
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{SCHEMAS}")
        raise SystemExit(1)


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}", "IO") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}", "JSON") from None


def _parse_sigma(text):
    sigma = {}
    for part in text.split(","):
        try:
            vertex, color = part.split(":")
            sigma[int(vertex.strip().lstrip("v"))] = int(color)
        except ValueError:
            raise ValidationError(f"cannot parse coloration entry {part!r}") from None
    if sorted(sigma) != list(range(len(sigma))):
        raise ValidationError("coloration must list vertices v0..v(2k-1)")
    return tuple(sigma[v] for v in range(len(sigma)))


def _coefficient_terms(fs):
    return [{"diagram": G.to_json(), "ring": c.ring, "value": c.value} for G, c in fs.items()]


def cmd_enumerate(args):
    catalog = enumerator.enumerate_degree(args.degree, args.limit_degree, args.connected_only)
    return catalog.to_json()


def cmd_space(args):
    s = graded.space_structure(args.degree, args.limit_degree)
    return {
        "degree": s.degree,
        "rank": s.rank,
        "torsion": s.torsion,
        "classes": [d.to_json() for d in s.classes],
        "basis": [b.to_json() for b in s.basis],
    }


def cmd_reduce(args):
    element = check_formal_sum(_load(args.element))
    return {"degree": args.degree, "coordinates": graded.reduce(element, args.degree, args.limit_degree)}


def cmd_contract(args):
    D = validate_lp(_load(args.surgery))
    G = validate(_load(args.diagram))
    if args.sigma:
        sigma = _parse_sigma(args.sigma)
        return {"sigma": list(sigma), "ell_sigma": contraction.ell_sigma(D, G, sigma)}
    c = contraction.ell(D, G)
    return {"ring": c.ring, "value": c.value}


def cmd_bracket(args):
    D = validate_lp(_load(args.surgery))
    return _coefficient_terms(contraction.bracket(D, args.limit_degree))


def cmd_fondjac(args):
    report = ylink.verify_fondjac(args.max_degree, args.extra, args.limit_degree)
    out = {
        "classes": [d.to_json() for d in report["classes"]],
        "matrix": [[c.to_json() for c in row] for row in report["matrix"]],
        "mismatches": report["mismatches"],
        "result": "PASS" if report["passed"] else "FAIL",
    }
    return out, 0 if report["passed"] else 3


def cmd_build_lp(args):
    if args.jacobi:
        D = ylink.lp_from_jacobi(validate(_load(args.jacobi)), args.n)
    else:
        D = ylink.lp_from_ylink(_load(args.ylink))
    return D.to_json()


def cmd_check_identity(args):
    length = len(freegroup.reduce_word(freegroup.ihx_word()))
    return {"identity": "appendix-ihx", "reduced_length": length}, 0 if length == 0 else 3


def build_parser():
    p = _Parser(prog="clover", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--limit-degree", type=int, default=None,
                   help="largest degree to enumerate (default $CLOVER_MAX_DEGREE or 5)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", help="catalog of diagram classes of one degree")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--connected-only", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("space", help="rank, torsion and basis of A_k")
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_space)

    s = sub.add_parser("reduce", help="coordinates of an element of A_k")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--element", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("contract", help="linking number of a surgery with respect to a diagram")
    s.add_argument("--surgery", required=True)
    s.add_argument("--diagram", required=True)
    s.add_argument("--sigma", help='coloration such as "v0:1,v1:2"')
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("bracket", help="expansion of the bracket over class representatives")
    s.add_argument("--surgery", required=True)
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("fondjac", help="check the signed identity on Jacobi-diagram surgeries")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--extra", type=int, default=0)
    s.set_defaults(func=cmd_fondjac)

    s = sub.add_parser("build-lp", help="surgery data from a Jacobi diagram or a Y-link")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--jacobi")
    src.add_argument("--ylink")
    s.add_argument("-n", type=int, default=None)
    s.add_argument("--out")
    s.set_defaults(func=cmd_build_lp)

    s = sub.add_parser("check-identity", help="free reduction of the commutator identity behind IHX")
    s.set_defaults(func=cmd_check_identity)
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if getattr(args, "jacobi", None) and args.n is None:
        build_parser().error("build-lp --jacobi needs -n")
    status = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, status = result
    except CloverError as exc:
        log.info("%s: %s", exc.code, exc)
        result, status = exc.to_json(), exc.exit_status
    except AssertionError as exc:
        result, status = {"error": "ASSERTION", "message": str(exc)}, 3
    text = json.dumps(result, separators=(",", ":"))
    out_path = getattr(args, "out", None)
    if out_path and status == 0:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        stdout.write(text + "\n")
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
