"""Command-line front end.

Subcommands: epoly, ctable, weylchar, basis, limitchar, fusion, walks,
verify.  Every subcommand takes --format text|json; text output uses the
canonical term ordering, JSON follows the schemas documented in the README.
Exit codes: 0 success, 1 usage error, 2 verification mismatch outside the
frozen errata table.
"""

import argparse
import json
import sys
from fractions import Fraction

from macweyl import cform, fusion, ramyip, verify, walks, weylchar


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(1)


def _q_terms_json(poly):
    out = []
    for x, c in poly.sorted_terms():
        for q, v in c.sorted_terms():
            out.append({"x": x, "q": q, "coeff": str(v)})
    return out


def _bi_terms_json(bipoly):
    return [
        {"q": qe, "v": ve, "coeff": str(c)}
        for (qe, ve), c in bipoly.sorted_terms()
    ]


def _rf_terms_json(poly):
    out = []
    for x, rf in poly.sorted_terms():
        out.append(
            {"x": x, "num": _bi_terms_json(rf.num), "den": _bi_terms_json(rf.den)}
        )
    return out


def _emit(args, text_fn, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    else:
        print(text_fn())


def _cmd_epoly(args):
    if args.spec == "full":
        poly = ramyip.ramyip_sum(args.family, args.n, normalize=not args.no_normalize)
        _emit(
            args,
            poly.render,
            {
                "family": args.family,
                "n": args.n,
                "spec": "full",
                "normalized": not args.no_normalize,
                "terms": _rf_terms_json(poly),
            },
        )
        return 0
    if args.no_normalize:
        sys.stderr.write("note: --no-normalize only affects --spec full; "
                         "specializations always use the normalized sum\n")
    poly = ramyip.specialize(args.family, args.n, args.spec)
    _emit(
        args,
        poly.render,
        {
            "family": args.family,
            "n": args.n,
            "spec": args.spec,
            "terms": _q_terms_json(poly),
        },
    )
    return 0


def _cmd_ctable(args):
    rows = []
    for (k22, kmid, k11), value in cform.ctable(args.family, args.r, args.max_n):
        rows.append(
            {
                "k22": k22,
                "k21" if args.family == "A2dagger" else "k12": kmid,
                "k11": k11,
                "poly": [{"q": e, "coeff": str(c)} for e, c in value.sorted_terms()],
                "text": value.render(),
            }
        )
    print(json.dumps({"family": args.family, "r": args.r, "values": rows}, indent=2))
    return 0


_CHAR_FN = {
    "D": lambda n: weylchar.ch_D(n),
    "W": lambda n: weylchar.ch_W(n),
    "Wsigma": lambda n: weylchar.ch_W_sigma(n),
    "grW": lambda n: weylchar.pbw_character_specialized(n, twisted=False),
    "grWsigma": lambda n: weylchar.pbw_character_specialized(n, twisted=True),
}


def _cmd_weylchar(args):
    poly = _CHAR_FN[args.module](args.n)
    _emit(
        args,
        poly.render,
        {"module": args.module, "n": args.n, "terms": _q_terms_json(poly)},
    )
    return 0


def _cmd_basis(args):
    monomials = weylchar.enumerate_basis(args.kind, args.n)
    rows = [
        {
            "e": list(m.e_degrees),
            "g": list(m.g_degrees),
            "weight": m.weight,
            "tdeg": m.t_degree,
            "pbw": m.pbw_degree,
        }
        for m in monomials
    ]
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "n": args.n, "count": len(rows), "monomials": rows}, indent=2))
    else:
        for r in rows:
            print(
                "e=%-16s g=%-16s weight=%-3d tdeg=%-3d pbw=%d"
                % (r["e"], r["g"], r["weight"], r["tdeg"], r["pbw"])
            )
        print("count: %d" % len(rows))
    return 0


def _cmd_limitchar(args):
    if args.approx is not None:
        poly = weylchar.approximant(args.kind, args.approx, args.qmax, args.xmax)
    else:
        poly = weylchar.limit_char(args.kind, args.qmax, args.xmax)
    _emit(
        args,
        poly.render,
        {
            "kind": args.kind,
            "qmax": args.qmax,
            "xmax": args.xmax,
            "approximant_n": args.approx,
            "terms": _q_terms_json(poly),
        },
    )
    return 0


def _cmd_fusion(args):
    points = [Fraction(p) for p in args.points.split(",")]
    poly = fusion.fusion_character(args.n, points, twisted=args.twisted)
    _emit(
        args,
        lambda: "%s\ndimension: %d" % (poly.render(), poly.eval_at_ones()),
        {
            "n": args.n,
            "points": [str(p) for p in points],
            "twisted": args.twisted,
            "dimension": poly.eval_at_ones(),
            "terms": _q_terms_json(poly),
        },
    )
    return 0


def _cmd_walks(args):
    records = []
    all_walks = walks.enumerate_walks(args.n)
    if args.filter:
        family, spec = args.filter.split("-")
        all_walks = walks.qb_filter(all_walks, family, spec)
    for w in all_walks:
        records.append(walks.walk_record(w, args.n))
    if args.format == "json":
        print(json.dumps({"n": args.n, "walks": records}, indent=2))
    else:
        for r in records:
            print(
                "mask=%s wt=%-3d d=%d h=%s leg=%-2d J0+=%s J0-=%s J+=%s J-=%s"
                % (r["mask"], r["wt"], r["d"], r["h"], r["leg"], r["J0+"], r["J0-"], r["J+"], r["J-"])
            )
        print("count: %d" % len(records))
    return 0


def _cmd_verify(args):
    entries, exit_code = verify.run_suites(args.suite, args.max_n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "max_n": args.max_n,
                    "exit_code": exit_code,
                    "entries": entries,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(verify.format_text_report(entries))
        print("")
        print("exit code: %d" % exit_code)
    return exit_code


def build_parser():
    parser = _Parser(prog="macweyl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("epoly", help="E-polynomial, full or specialized")
    p.add_argument("--family", choices=walks.FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spec", choices=("full", "t0", "tinf"), required=True)
    p.add_argument("--no-normalize", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_epoly)

    p = sub.add_parser("ctable", help="coefficient table dump (JSON)")
    p.add_argument("--family", choices=walks.FAMILIES, required=True)
    p.add_argument("--r", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=_cmd_ctable)

    p = sub.add_parser("weylchar", help="module characters")
    p.add_argument("--module", choices=tuple(_CHAR_FN), required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_weylchar)

    p = sub.add_parser("basis", help="basis monomial enumeration")
    p.add_argument("--kind", choices=weylchar.KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_basis)

    p = sub.add_parser("limitchar", help="truncated limit characters")
    p.add_argument("--kind", choices=weylchar.LIMIT_KINDS, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--approx", type=int, default=None, help="render the n-th approximant instead")
    add_format(p)
    p.set_defaults(fn=_cmd_limitchar)

    p = sub.add_parser("fusion", help="fusion-product graded character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=str, required=True, help="comma-separated rationals")
    p.add_argument("--twisted", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_fusion)

    p = sub.add_parser("walks", help="alcove walk dump")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter",
        choices=tuple("%s-%s" % (f, s) for f in walks.FAMILIES for s in walks.SPECS),
        default=None,
    )
    add_format(p)
    p.set_defaults(fn=_cmd_walks)

    p = sub.add_parser("verify", help="cross-verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    p.add_argument("--max-n", type=int, default=3)
    add_format(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
