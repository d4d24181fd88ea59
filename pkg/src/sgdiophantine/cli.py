"""Command-line front end.

Exit codes: 0 ok, 1 invalid input, 2 no theorem covers the equation,
3 cross-check mismatch. ``--format`` defaults to $SGDIOPH_FORMAT or "table".
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classical, mordell, primes, theorems
from .search import EquationSpec, SearchBounds, brute_force

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_MISMATCH = 0, 1, 2, 3
FORMAT_ENV = "SGDIOPH_FORMAT"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _triples(ts):
    return [{"x": str(x), "y": str(y), "z": str(z)} for x, y, z in ts]


def _spec_dict(spec):
    return {k: str(getattr(spec, k)) for k in ("alpha", "beta", "p", "k")}


def _spec(args) -> EquationSpec:
    return EquationSpec(args.alpha, args.beta, args.p, args.k)


def cmd_solve(args) -> int:
    spec = _spec(args)
    try:
        sset = theorems.closed_form(spec)
    except theorems.UnsupportedSpecError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.format == "json":
        print(theorems.to_json(sset))
        return EXIT_OK
    print(f"equation: {spec}")
    print(f"result:   {sset.tag.value} ({sset.applicability})")
    sols = sset.solutions()
    print(f"solutions at k={spec.k}: {len(sols)}")
    for s in sols:
        print(f"  (x,y,z) = ({s.x},{s.y},{s.z})  [{s.provenance}]")
    fams = theorems.families_for(sset.tag)
    if fams:
        print("parametric families (all k):")
        for f in fams:
            print(f"  {f.name}: {f.describe()}")
            if args.expand > 0:
                for m in theorems.expand_family(f, f.n_min, f.n_min + args.expand - 1):
                    print(f"      k={m.k}: (x,y,z) = ({m.x},{m.y},{m.z})")
    return EXIT_OK


def cmd_search(args) -> int:
    spec = _spec(args)
    sols = brute_force(spec, SearchBounds(args.xmax, args.ymax))
    if args.format == "json":
        print(_dump({
            "spec": _spec_dict(spec),
            "bounds": {"x_max": str(args.xmax), "y_max": str(args.ymax)},
            "solutions": _triples(s.triple for s in sols),
        }))
        return EXIT_OK
    print(f"equation: {spec}, x <= {args.xmax}, y <= {args.ymax}")
    print(f"{len(sols)} solution(s)")
    for s in sols:
        print(f"  (x,y,z) = ({s.x},{s.y},{s.z})")
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    spec = _spec(args)
    try:
        rep = theorems.cross_check(spec, SearchBounds(args.xmax, args.ymax))
    except theorems.UnsupportedSpecError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.format == "json":
        print(_dump({
            "spec": _spec_dict(spec),
            "verdict": rep.verdict,
            "closed": _triples(rep.closed),
            "brute": _triples(rep.brute),
            "only_closed": _triples(rep.only_closed),
            "only_brute": _triples(rep.only_brute),
        }))
    else:
        print(f"equation: {spec}, x <= {args.xmax}, y <= {args.ymax}")
        print(f"closed form: {list(rep.closed)}")
        print(f"brute force: {list(rep.brute)}")
        print(f"verdict: {rep.verdict}")
        if not rep.equal:
            print(f"  only in closed form: {list(rep.only_closed)}")
            print(f"  only in brute force: {list(rep.only_brute)}")
    return EXIT_OK if rep.equal else EXIT_MISMATCH


def cmd_sg(args) -> int:
    m = args.mod.bit_length() - 1
    if args.mod < 2 or args.mod != 1 << m:
        raise ValueError(f"--mod must be a power of two >= 2, got {args.mod}")
    if args.cls is not None:
        ps = primes.sg_residue_class(args.limit, m, args.cls)
        if args.format == "json":
            print(_dump({"limit": str(args.limit), "mod": str(args.mod),
                         "class": str(args.cls), "primes": [str(p) for p in ps]}))
        else:
            print(f"Sophie Germain primes p <= {args.limit}, p = {args.cls} (mod {args.mod}):")
            print("  " + ", ".join(map(str, ps)))
        return EXIT_OK
    st = primes.sg_density_stats(args.limit, m)
    if args.format == "json":
        print(_dump({"limit": str(st.limit), "mod": str(st.modulus),
                     "includes_two": st.includes_two,
                     "counts": {str(k): str(v) for k, v in st.counts.items()}}))
    else:
        print(f"Sophie Germain primes 2 < p <= {st.limit} by residue mod {st.modulus}:")
        for r, c in st.counts.items():
            print(f"  {r:>4}: {c}")
        print(f"  total: {st.total}" + (" (plus p = 2)" if st.includes_two else ""))
    return EXIT_OK


def cmd_mordell(args) -> int:
    curve = mordell.known_curve(args.n)
    pts = mordell.integral_points(curve, args.xbound)
    if args.format == "json":
        print(_dump({"n": str(args.n), "x_bound": str(args.xbound),
                     "table_trusted": curve.table_trusted,
                     "points": [{"x": str(p.x), "y": str(p.y)} for p in pts]}))
    else:
        print(f"y^2 = x^3 + ({args.n}), |x| <= {args.xbound}: {len(pts)} point(s), y >= 0")
        for p in pts:
            print(f"  ({p.x}, {p.y})")
    if curve.table_trusted and tuple(pts) != curve.known_complete_points:
        print("warning: scan disagrees with the shipped point table", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_catalan(args) -> int:
    sols = classical.catalan_search(args.amax, args.bmax, args.xmax, args.ymax)
    if args.format == "json":
        print(_dump({"solutions": [{k: str(getattr(s, k)) for k in "abxy"} for s in sols]}))
    else:
        print(f"a^x - b^y = 1 with a <= {args.amax}, b <= {args.bmax}, "
              f"x <= {args.xmax}, y <= {args.ymax}: {len(sols)} solution(s)")
        for s in sols:
            print(f"  (a,b,x,y) = ({s.a},{s.b},{s.x},{s.y})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"),
                     default=os.environ.get(FORMAT_ENV, "table"))
    eq = _Parser(add_help=False)
    eq.add_argument("-a", "--alpha", type=int, required=True)
    eq.add_argument("-b", "--beta", type=int, required=True)
    eq.add_argument("-p", type=int, required=True)
    eq.add_argument("-k", type=int, required=True)
    bounds = _Parser(add_help=False)
    bounds.add_argument("--xmax", type=int, default=40)
    bounds.add_argument("--ymax", type=int, default=12)

    parser = _Parser(prog="sgdioph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[eq, fmt], help="closed-form solution set")
    s.add_argument("--expand", type=int, default=10, help="family members to list")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("search", parents=[eq, bounds, fmt], help="brute-force scan")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("crosscheck", parents=[eq, bounds, fmt],
                       help="closed form vs brute force")
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("sg", parents=[fmt], help="Sophie Germain primes by residue class")
    s.add_argument("--limit", type=int, default=1000)
    s.add_argument("--mod", type=int, default=8)
    s.add_argument("--class", dest="cls", type=int, default=None)
    s.set_defaults(func=cmd_sg)

    s = sub.add_parser("mordell", parents=[fmt], help="integral points on y^2 = x^3 + n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--xbound", type=int, default=mordell.DEFAULT_X_BOUND)
    s.set_defaults(func=cmd_mordell)

    s = sub.add_parser("catalan", parents=[fmt], help="bounded Catalan search")
    s.add_argument("--amax", type=int, default=20)
    s.add_argument("--bmax", type=int, default=20)
    s.add_argument("--xmax", type=int, default=10)
    s.add_argument("--ymax", type=int, default=10)
    s.set_defaults(func=cmd_catalan)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
