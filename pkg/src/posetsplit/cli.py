"""Command-line interface.

Subcommands:

    check-finite   analyze a poset text file (splitting, strong density,
                   maximal antichains, DOT export)
    c-leq          compare two elements of the layered order
    c-truncate     export a finite fragment of the layered order
    c-claims       verify the headline claims about the standard pair
    verify-aeg     sample strongly dense posets and check they all split

Exit codes: 0 all requested properties hold, 1 a property fails (a witness
is printed), 2 malformed input or a capacity bound was exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import dense, sampler, textio
from .errors import PosetError
from .finite import DEFAULT_BOUND


def _fmt_set(names) -> str:
    return "{%s}" % ",".join(str(n) for n in names)


def cmd_check_finite(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fp:
        poset = textio.load(fp)
    print("loaded %s: %d elements" % (args.file, len(poset)))
    bound = args.max_bruteforce
    status = 0
    if args.list_maximal_antichains:
        for a in poset.maximal_antichains(bound=bound):
            print("maximal-antichain %s" % _fmt_set(a))
    if args.splitting:
        check = poset.has_splitting_property(bound=bound)
        if check.has_property:
            print("splitting: pass")
        else:
            print("splitting: FAIL witness=%s" % _fmt_set(check.counterexample))
            status = 1
    if args.strongly_dense:
        check = poset.is_strongly_dense()
        if check.strongly_dense:
            print("strongly-dense: pass")
        else:
            print("strongly-dense: FAIL interval=(%s,%s)" % check.gap)
            status = 1
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fp:
            fp.write(textio.to_dot(poset))
        print("dot written to %s" % args.dot)
    return status


def cmd_c_leq(args) -> int:
    x = dense.parse_node(args.x)
    y = dense.parse_node(args.y)
    below = dense.leq(x, y)
    above = dense.leq(y, x)
    if below and above:
        print("=")
    elif below:
        print("<")
    elif above:
        print(">")
    else:
        print("incomparable")
    return 0


def cmd_c_truncate(args) -> int:
    frag = dense.truncation(args.levels, args.depth)
    if args.format == "text":
        payload = textio.dumps(frag.poset)
    else:
        payload = textio.to_dot(frag.poset)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write(payload)
        print("%d elements written to %s" % (len(frag.poset), args.out))
    else:
        sys.stdout.write(payload)
    return 0


def cmd_c_claims(args) -> int:
    status = 0

    mc = dense.check_pair_maximality(args.levels, args.depth)
    print("maximality: elements_checked=%d counterexamples=%d"
          % (mc.elements_checked, len(mc.counterexamples)))
    for z in mc.counterexamples:
        print("  incomparable to both: %s" % dense.render_node(z))
    if not mc.ok:
        status = 1

    cert = dense.nonsplit_certificate()
    for name, holds in cert.facts:
        print("fact %s: %s" % ("ok" if holds else "FAIL", name))
        if not holds:
            status = 1
    for r in cert.refutations:
        d = _fmt_set(dense.render_node(n) for n in r.down)
        u = _fmt_set(dense.render_node(n) for n in r.up)
        if r.refuted:
            print("partition D=%s U=%s refuted w=%s"
                  % (d, u, dense.render_node(r.witness)))
        else:
            print("partition D=%s U=%s NOT refuted" % (d, u))
            status = 1
    print("claims: %s" % ("pass" if status == 0 else "FAIL"))
    return status


def cmd_verify_aeg(args) -> int:
    config = sampler.SampleConfig(args.size, args.count, args.seed, args.density)
    report = sampler.verify_aeg(config, bound=args.max_bruteforce)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetsplit",
        description="Finite-poset splitting analysis and the layered "
                    "strongly dense order.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-finite", help="analyze a poset text file")
    p.add_argument("file")
    p.add_argument("--splitting", action="store_true",
                   help="check every maximal antichain splits")
    p.add_argument("--strongly-dense", action="store_true",
                   help="check every non-empty open interval holds an "
                        "incomparable pair")
    p.add_argument("--list-maximal-antichains", action="store_true")
    p.add_argument("--dot", metavar="OUT", help="write a DOT rendering")
    p.add_argument("--max-bruteforce", type=int, default=DEFAULT_BOUND,
                   metavar="N", help="override the subset-search size bound")
    p.set_defaults(func=cmd_check_finite)

    p = sub.add_parser("c-leq", help="compare two layered-order literals")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_c_leq)

    p = sub.add_parser("c-truncate", help="export a finite fragment")
    p.add_argument("--levels", type=int, required=True,
                   help="highest construction stage to include")
    p.add_argument("--depth", type=int, required=True,
                   help="longest word to include")
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_c_truncate)

    p = sub.add_parser("c-claims",
                       help="verify maximality and non-splitting of the "
                            "standard pair")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_c_claims)

    p = sub.add_parser("verify-aeg",
                       help="check sampled strongly dense posets all split")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--max-bruteforce", type=int, default=DEFAULT_BOUND,
                   metavar="N")
    p.set_defaults(func=cmd_verify_aeg)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PosetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
