"""Command-line front end: ``sigdim analyze|embed|verify|sig|audit|gen``.

Exit codes: 0 success, 1 verification or audit failure, 2 bad input.
Every file argument accepts ``-`` for standard input or output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .audit import audit
from .embedding import embed
from .errors import DuplicatePoints, SigdimError
from .formats import edges_to_text, pointset_from_json, representation_from_json, representation_to_json
from .sig import dimension_bounds, is_sig_representation, sig_graph
from .tree import gen_caterpillar, gen_h_graph, gen_path, gen_random_tree, gen_star, leaf_stats, parse_edge_list

DEFAULT_SEED = 20070101

AMBIGUOUS_NOTE = (
    "note: beta = 2^k - 1, so the SIG dimension is k or k+1 and the formulas cannot decide; "
    "stars K(1, beta+1) attain k, the H-graph family attains k+1"
)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _dump(data, compact: bool) -> str:
    if compact:
        return json.dumps(data, separators=(",", ":")) + "\n"
    return json.dumps(data, indent=2) + "\n"


def cmd_analyze(args) -> int:
    t = parse_edge_list(_read(args.tree))
    stats = leaf_stats(t)
    report = dimension_bounds(t)
    argmax = [t.labels[v] for v in stats.argmax_set]
    if args.json:
        _write(args.output, _dump({
            "n": t.n,
            "alpha": stats.alpha,
            "argmax_set": argmax,
            "beta": stats.beta,
            "lower": report.lower,
            "upper": report.upper,
            "exact": report.exact,
            "ambiguous": report.ambiguous,
        }, args.compact))
        return 0
    lines = [
        f"n          {t.n}",
        f"alpha      {stats.alpha}",
        f"argmax     {' '.join(map(str, argmax))}",
        f"beta       {stats.beta}",
        f"lower      {report.lower}",
        f"upper      {report.upper}",
        f"exact      {report.exact if report.exact is not None else '-'}",
        f"ambiguous  {str(report.ambiguous).lower()}",
    ]
    if report.ambiguous:
        lines.append(AMBIGUOUS_NOTE)
    _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_embed(args) -> int:
    t = parse_edge_list(_read(args.tree))
    rep = embed(t)
    check = is_sig_representation(t, rep)
    _write(args.output, representation_to_json(rep, compact=args.compact) + "\n")
    if not check.ok:
        print("self-check failed:\n" + check.describe(t.labels), file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    t = parse_edge_list(_read(args.tree))
    rep = representation_from_json(_read(args.representation), t)
    check = is_sig_representation(t, rep)
    print(check.describe(t.labels))
    return 0 if check.ok else 1


def cmd_sig(args) -> int:
    ps = pointset_from_json(_read(args.points))
    _write(args.output, edges_to_text(sig_graph(ps)))
    return 0


def cmd_audit(args) -> int:
    t = parse_edge_list(_read(args.tree))
    if args.representation:
        rep = representation_from_json(_read(args.representation), t)
    else:
        rep = embed(t)
    report = audit(rep)
    if args.json:
        _write(args.output, report.to_json(t.labels, compact=args.compact) + "\n")
    else:
        _write(args.output, report.table(t.labels) + "\n")
    return 0 if report.all_pass else 1


def cmd_gen(args) -> int:
    p = args.params
    need = {"star": 1, "h": 1, "random": 1, "path": 1, "caterpillar": 2}[args.kind]
    if len(p) != need:
        raise InputError(f"gen {args.kind} takes {need} integer parameter(s), got {len(p)}")
    if args.kind == "star":
        t = gen_star(p[0])
    elif args.kind == "h":
        t = gen_h_graph(p[0])
    elif args.kind == "random":
        t = gen_random_tree(p[0], args.seed)
    elif args.kind == "path":
        t = gen_path(p[0])
    else:
        t = gen_caterpillar(p[0], p[1], args.seed)
    _write(args.output, t.to_edge_list())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigdim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flags(sp, json_flag=True):
        sp.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
        sp.add_argument("--compact", action="store_true", help="compact JSON")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sp = sub.add_parser("analyze", help="leaf-degree parameters and SIG dimension bounds")
    sp.add_argument("tree")
    out_flags(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("embed", help="construct an exact SIG representation")
    sp.add_argument("tree")
    out_flags(sp, json_flag=False)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("verify", help="check a representation against a tree")
    sp.add_argument("tree")
    sp.add_argument("representation")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sig", help="SIG edge list of a point set")
    sp.add_argument("points")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_sig)

    sp = sub.add_parser("audit", help="embed a tree and audit every geometric check")
    sp.add_argument("tree")
    sp.add_argument("--representation", default=None, help="audit this representation instead of a fresh embedding")
    out_flags(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("gen", help="generate a tree edge list")
    sp.add_argument("kind", choices=["star", "h", "random", "path", "caterpillar"])
    sp.add_argument("params", nargs="*", type=int,
                    help="star M | h BETA | random N | path N | caterpillar SPINE MAX_LEGS")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DuplicatePoints as exc:
        print(f"error: DuplicatePoints: {exc}", file=sys.stderr)
        return 1 if args.command == "verify" else 2
    except (SigdimError, InputError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
