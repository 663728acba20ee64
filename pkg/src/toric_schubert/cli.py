"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (a JSON error document is
printed), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .errors import IndexOutOfRange, ToricSchubertError
from .interval_lattice import feasible_sets, interval_report, poset_from_family
from .root_system import parse_type
from .smoothness import gamma_graph, jp_indices, smoothness_report
from .spherical import levi_factorization, spherical_smoothness
from .subexpressions import deodhar_shape, index_sets, is_distinguished, is_positive, make_subexpression, positive_subexpression
from .sweep import DEFAULT_TYPES, sweep
from .toric_fan import SCHEMA, cone_contains, full_flag_fan, partial_flag_fan, random_rational_points
from .weyl_group import DEFAULT_ORDER_CAP, ParabolicSpec, element_from_word, parse_parabolic, parse_word


def _word(text: str) -> tuple[int, ...]:
    try:
        return parse_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")


def _parabolic(text: str) -> ParabolicSpec:
    try:
        return parse_parabolic(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices or 'none', got {text!r}")


def _steps(text: str) -> list[bool]:
    try:
        return [bool(int(s)) for s in text.split(",")] if text.strip() else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a 0/1 mask such as 1,0,1, got {text!r}")


def _types(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def _dump(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, sort_keys=True, indent=2)


def cmd_fan(args) -> str:
    rs = parse_type(args.type)
    if args.parabolic.subset:
        fan = partial_flag_fan(rs, args.word, args.parabolic)
    else:
        fan = full_flag_fan(rs, args.word)
    doc = fan.to_dict()
    if args.samples:
        points = random_rational_points(fan.rank, args.samples, args.seed)
        misses = [p for p in points if not any(cone_contains(c, p) for c in fan.maximal_cones)]
        doc["completeness"] = {"seed": args.seed, "samples": args.samples, "misses": len(misses)}
    if args.format == "text":
        text = fan.to_text()
        if "completeness" in doc:
            text += f"\ncompleteness seed={args.seed} samples={args.samples} misses={doc['completeness']['misses']}"
        return text
    return _dump(doc)


def cmd_smooth(args) -> str:
    rs = parse_type(args.type)
    report = smoothness_report(rs, args.word, args.parabolic)
    if args.format == "text":
        lines = [f"{'smooth' if report['smooth'] else 'singular'} ({report['method']})"]
        lines += [f"  {c['check']}: {'smooth' if c['smooth'] else 'singular'}" for c in report["cross_checks"]]
        return "\n".join(lines)
    return _dump(report)


def cmd_interval(args) -> str:
    rs = parse_type(args.type)
    if args.format == "dot":
        poset = poset_from_family(feasible_sets(rs, args.word, args.parabolic))
        return poset.to_dot(lambda s: "{" + ",".join(map(str, sorted(s))) + "}")
    report = interval_report(rs, args.word, args.parabolic)
    if args.format == "text":
        fam = " ".join("{" + ",".join(map(str, s)) + "}" for s in report["family"])
        return f"F = {fam}\nlattice={report['lattice']} distributive={report.get('distributive')} " \
               f"join_distributive={report.get('join_distributive')}"
    return _dump(report)


def cmd_graph(args) -> str:
    rs = parse_type(args.type)
    graph = gamma_graph(rs, args.word)
    jp = jp_indices(rs, args.word, args.parabolic) if args.parabolic.subset else []
    if args.format == "dot":
        return graph.to_dot(jp)
    return _dump({"input": {"type": rs.name, "word": list(args.word)}, "jp": jp, **graph.to_dict()})


def cmd_subexpr(args) -> str:
    rs = parse_type(args.type)
    if args.steps is not None:
        if len(args.steps) != len(args.word):
            raise IndexOutOfRange(f"step mask has {len(args.steps)} entries, word has {len(args.word)}")
        sub = make_subexpression(rs, args.word, args.steps)
    else:
        sub = positive_subexpression(rs, args.word, element_from_word(rs, args.v))
    plus, circ, minus = index_sets(sub)
    doc = {
        "input": {"type": rs.name, "word": list(args.word)},
        "subexpression": sub.to_dict(),
        "J_plus": sorted(plus),
        "J_circ": sorted(circ),
        "J_minus": sorted(minus),
        "distinguished": is_distinguished(sub),
        "positive": is_positive(sub),
    }
    if doc["distinguished"]:
        doc["deodhar_shape"] = list(deodhar_shape(sub))
    return _dump(doc)


def cmd_spherical(args) -> str:
    rs = parse_type(args.type or args.type_opt)
    w = element_from_word(rs, args.word)
    fac = levi_factorization(rs, w, args.levi.subset)
    verdict = spherical_smoothness(rs, w, args.levi.subset)
    return _dump({
        "input": {"type": rs.name, "word": list(args.word), "levi": sorted(args.levi.subset)},
        "factorization": fac.to_dict(),
        "conditional_on": "X_wB spherical for the Levi subgroup L_J (not verified)",
        **verdict.to_dict(),
    })


def cmd_sweep(args) -> str:
    started = time.perf_counter()
    reports = sweep(args.types, args.cap, args.workers, boolean=not args.no_boolean)
    elapsed = time.perf_counter() - started
    rows = [r.to_dict(table=args.table) for r in reports]
    if args.format == "text":
        lines = [f"{'type':<5} {'instances':>9} {'smooth':>7} {'singular':>8} {'failures':>8}"]
        lines += [f"{r['type']:<5} {r['instances']:>9} {r['smooth']:>7} {r['singular']:>8} {r['failures']:>8}" for r in rows]
        lines.append(f"total failures: {sum(r['failures'] for r in rows)}")
        return "\n".join(lines)
    doc = {"types": rows, "total_failures": sum(r["failures"] for r in rows)}
    if args.timing:
        doc["seconds"] = round(elapsed, 3)
    return _dump(doc)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-schubert", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text"), parabolic=True):
        p.add_argument("type", help='root system, e.g. "A3"')
        p.add_argument("--word", type=_word, required=True, help='comma-separated indices, e.g. "2,1,3"')
        if parabolic:
            p.add_argument("--parabolic", type=_parabolic, default=ParabolicSpec(),
                           help='S_P as comma-separated indices, or "none"')
        p.add_argument("--format", choices=formats, default="json")

    p = sub.add_parser("fan", help="fan of X_wB or X_wP")
    common(p)
    p.add_argument("--samples", type=int, default=0, help="random points for a completeness check")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("smooth", help="smoothness verdict with cross-checks")
    common(p)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("interval", help="feasible family and lattice properties of [e,w]^P")
    common(p, formats=("json", "text", "dot"))
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("graph", help="the digraph of -1 Cartan integers along the word")
    common(p, formats=("json", "dot"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("subexpr", help="subexpression index sets and positivity")
    common(p, parabolic=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--steps", type=_steps, help='0/1 step mask, e.g. "1,0,1"')
    group.add_argument("--v", type=_word, help="word for v; prints its positive subexpression")
    p.set_defaults(func=cmd_subexpr)

    p = sub.add_parser("spherical", help="Levi factorization and smoothness (sphericality assumed)")
    p.add_argument("type", nargs="?")
    p.add_argument("--type", dest="type_opt")
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--levi", type=_parabolic, default=ParabolicSpec())
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("sweep", help="exhaustive oracle-agreement sweep")
    p.add_argument("--types", type=_types, default=list(DEFAULT_TYPES))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--table", action="store_true", help="include the per-instance verdict table")
    p.add_argument("--no-boolean", action="store_true", help="skip the Bruhat-interval Boolean check")
    p.add_argument("--timing", action="store_true", help="record wall time (output no longer byte-stable)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if getattr(args, "command", None) == "spherical" and not (args.type or args.type_opt):
        parser.error("spherical needs a root system type")
    try:
        out = args.func(args)
    except ToricSchubertError as exc:
        print(_dump({"error": exc.code, "message": str(exc)}))
        return 1
    print(out)
    return 0


def main():
    sys.exit(run())
