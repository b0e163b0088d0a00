"""``eulercat`` command line tool.

Exit status: 0 on success, 1 on a domain error (the message names the
failed invariant), 2 on malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .definable import PRIME_FILTERS, PRIME_IDEALS, decompose_filters, decompose_ideals
from .errors import EulerCalcError, ParseError
from .euler import coweighting, euler_characteristic, nerve_counts, weighting
from .integration import FILTERS, IDEALS, integrate, pushforward
from .io import (
    decomposition_to_doc,
    function_from_doc,
    function_to_doc,
    load_category,
    load_json,
    load_map,
    load_network,
    validate_document,
)
from .rational import format_rational, parse_rational
from .sensor import count_by_level_sets, count_targets, counting_function, simulate


def _fmt(q):
    return None if q is None else format_rational(q)


def _emit(args, text_lines, payload):
    if args.output == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def cmd_chi(args):
    C = load_category(args.category)
    chi = euler_characteristic(C)
    _emit(args, ["absent" if chi is None else format_rational(chi)], {"chi": _fmt(chi)})


def cmd_weighting(args):
    C = load_category(args.category)
    w = coweighting(C) if args.co else weighting(C)
    key = "coweighting" if args.co else "weighting"
    if w is None:
        _emit(args, ["absent"], {key: None})
        return
    lines = [f"{x}: {format_rational(v)}" for x, v in w.as_dict().items()]
    lines.append(f"sum: {format_rational(w.total)}")
    _emit(args, lines, {key: {x: format_rational(v) for x, v in w.as_dict().items()},
                        "sum": format_rational(w.total)})


def cmd_nerve_chi(args):
    C = load_category(args.category)
    counts = nerve_counts(C)
    chi = sum((-1) ** k * c for k, c in enumerate(counts))
    _emit(args, [str(chi)], {"chi": str(chi), "simplices": counts})


def cmd_integrate(args):
    C = load_category(args.category)
    f = function_from_doc(C, load_json(args.function))
    value = integrate(f, args.side, strict=args.strict_measurable)
    _emit(args, [format_rational(value)], {"integral": format_rational(value), "side": args.side})


def cmd_decompose(args):
    C = load_category(args.category)
    f = function_from_doc(C, load_json(args.function))
    d = decompose_filters(f) if args.basis == PRIME_FILTERS else decompose_ideals(f)
    lines = [f"{rep}: {format_rational(c)}" for c, rep in d.terms]
    _emit(args, lines, decomposition_to_doc(d))


def cmd_pushforward(args):
    F = load_map(args.map)
    f = function_from_doc(F.source, load_json(args.function))
    g = pushforward(F, f)
    lines = [f"{d}: {format_rational(v)}" for d, v in g.as_dict().items()]
    _emit(args, lines, function_to_doc(g))


def cmd_count_targets(args):
    net, targets = load_network(args.network)
    h = counting_function(net, targets)
    total = count_targets(net, h)
    levels, level_total = count_by_level_sets(net, h)
    lines = [format_rational(total)]
    lines += [f"i={i}: {format_rational(c)}" for i, c in enumerate(levels, 1)]
    _emit(args, lines, {
        "count": format_rational(total),
        "levels": [format_rational(c) for c in levels],
        "level_total": format_rational(level_total),
        "placements": len(targets),
        "h": h.as_dict(),
    })


def _trial(job):
    nodes, targets, density, seed = job
    net, placed, h = simulate(nodes, targets, density, seed)
    count = count_targets(net, h)
    _, level_total = count_by_level_sets(net, h)
    return {
        "seed": seed,
        "nodes": len(net.nodes),
        "edges": len(net.hasse_edges),
        "targets": len(placed),
        "count": format_rational(count),
        "level_total": format_rational(level_total),
        "exact": count == len(placed) == level_total,
    }


def cmd_simulate(args):
    jobs = [(args.nodes, args.targets, args.density, args.seed + k) for k in range(args.trials)]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_trial, jobs, chunksize=max(1, len(jobs) // (4 * args.workers))))
    else:
        results = [_trial(j) for j in jobs]
    ok = all(r["exact"] for r in results)
    lines = [
        f"seed={r['seed']} nodes={r['nodes']} edges={r['edges']} targets={r['targets']} "
        f"count={r['count']} level_total={r['level_total']} {'ok' if r['exact'] else 'MISMATCH'}"
        for r in results
    ]
    lines.append(f"trials={len(results)} exact={str(ok).lower()}")
    _emit(args, lines, {"trials": results, "exact": ok})
    return 0 if ok else 1


def cmd_validate(args):
    problems = validate_document(args.document)
    _emit(args, problems, {"violations": problems})
    return 1 if problems else 0


def _density(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="eulercat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic of a category")
    p.add_argument("category")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("weighting", parents=[common], help="a weighting (or coweighting)")
    p.add_argument("category")
    p.add_argument("--co", action="store_true", help="solve for a coweighting instead")
    p.set_defaults(func=cmd_weighting)

    p = sub.add_parser("nerve-chi", parents=[common], help="alternating simplex count of the nerve")
    p.add_argument("category")
    p.set_defaults(func=cmd_nerve_chi)

    p = sub.add_parser("integrate", parents=[common], help="Euler integral of a definable function")
    p.add_argument("category")
    p.add_argument("function")
    p.add_argument("--side", choices=(FILTERS, IDEALS), default=FILTERS)
    p.add_argument("--strict-measurable", action="store_true",
                   help="require every filter and ideal to have an Euler characteristic")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("decompose", parents=[common], help="coordinates in a prime basis")
    p.add_argument("category")
    p.add_argument("function")
    p.add_argument("--basis", choices=(PRIME_FILTERS, PRIME_IDEALS), default=PRIME_FILTERS)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("pushforward", parents=[common], help="pushforward along an object map")
    p.add_argument("map")
    p.add_argument("function")
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("count-targets", parents=[common], help="count targets on a network")
    p.add_argument("network")
    p.set_defaults(func=cmd_count_targets)

    p = sub.add_parser("simulate", parents=[common], help="random networks, counted and checked")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--targets", type=int, required=True)
    p.add_argument("--density", type=_density, default=Fraction(1, 3))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("validate", parents=[common], help="list violated invariants of a document")
    p.add_argument("document")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return 2
    except EulerCalcError as exc:
        msg = str(exc)
        if not msg.startswith(exc.name):
            msg = f"{exc.name}: {msg}"
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
