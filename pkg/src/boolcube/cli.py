"""Command line interface.

Exit codes: 0 success, 2 usage or parse error, 3 width cap exceeded,
4 a verification sweep found counterexamples.
"""

from __future__ import annotations

import argparse
import sys

from .dotfmt import digraph_dot, state_graph_dot, validate_dot
from .dynamics import (
    asynchronous_state_graph,
    attractors,
    strong_convergence,
    weak_convergence,
)
from .hypercube import FormatError, format_code, parse_point
from .network import (
    ParityClass,
    WidthCapError,
    eosd_class,
    fixed_point_codes,
    is_conjugate_bijective,
    is_non_expansive,
    is_self_dual,
    load_bn,
    parity_class,
    random_network,
    render_bn,
)
from .siggraph import (
    CircularForm,
    and_net,
    circular_network,
    counting_condition,
    delocalizing_vertices,
    detect_circular,
    enumerate_cycles,
    global_interaction_graph,
    is_chordless,
    load_sg,
    local_interaction_graph,
    shih_dong_condition,
)
from .subnetwork import (
    all_subnetworks_fixed_point_census,
    criticality,
    find_eosd_subnetwork,
    subnetworks,
)
from .theorems import (
    AndNets,
    Circular,
    Exhaustive,
    NonExpansiveFiltered,
    OpenQuestion,
    Sample,
    Subsets,
    TheoremId,
    catalog_keys,
    open_question_search,
    sweep,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_COUNTEREXAMPLE = 4


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _point_set_text(codes, width: int) -> str:
    return "{" + ",".join(format_code(c, width) for c in sorted(codes)) + "}"


def _cmd_analyze(args: argparse.Namespace) -> int:
    f = load_bn(args.network)
    n = f.width
    atts = attractors(f)
    att_text = " ".join(_point_set_text(a.states, n) for a in atts)
    form = detect_circular(f)
    cls = eosd_class(f)
    witness = find_eosd_subnetwork(f)
    report = criticality(f)
    if report.two_critical:
        crit_text = "2-critical"
    elif report.zero_critical:
        crit_text = "0-critical"
    else:
        crit_text = "none"
    lines = {
        "attractors": att_text,
        "circular": "none" if form is None else ("positive" if form.sign == 1 else "negative"),
        "conjugate_bijective": _bool_text(is_conjugate_bijective(f)),
        "counting_condition": _bool_text(counting_condition(f)),
        "criticality": crit_text,
        "eosd_class": "none" if cls is None else ("EvenSelfDual" if cls is ParityClass.EVEN else "OddSelfDual"),
        "eosd_subnetwork": "none" if witness is None else str(witness[0]),
        "fixed_points": _point_set_text(fixed_point_codes(f), n),
        "non_expansive": _bool_text(is_non_expansive(f)),
        "parity_class": parity_class(f).value,
        "self_dual": _bool_text(is_self_dual(f)),
        "shih_dong": _bool_text(shih_dong_condition(f)),
        "strong_convergence": _bool_text(strong_convergence(f)),
        "weak_convergence": _bool_text(weak_convergence(f)),
    }
    for key in sorted(lines):
        print(f"{key}: {lines[key]}")
    return EXIT_OK


def _cmd_subnets(args: argparse.Namespace) -> int:
    f = load_bn(args.network)
    shown = 0
    for spec, sub in subnetworks(f, include_self=args.include_self):
        cls = eosd_class(sub)
        cls_text = "none" if cls is None else ("EvenSelfDual" if cls is ParityClass.EVEN else "OddSelfDual")
        if args.eosd_only and cls is None:
            continue
        fps = len(fixed_point_codes(sub))
        print(f"{spec} fixed_points={fps} eosd={cls_text}")
        shown += 1
    lo, hi = all_subnetworks_fixed_point_census(f)
    print(f"census: min={lo} max={hi}")
    print(f"listed: {shown}")
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    f = load_bn(args.network)
    if args.at is not None:
        g = local_interaction_graph(f, parse_point(args.at, f.components))
    else:
        g = global_interaction_graph(f)
    for src, sign, dst in g.arc_list():
        print(f"{src} {'+' if sign == 1 else '-'} {dst}")
    for cycle in enumerate_cycles(g):
        sign = "positive" if cycle.sign == 1 else "negative"
        chordless = _bool_text(is_chordless(g, cycle))
        deloc = delocalizing_vertices(g, cycle)
        deloc_text = "{" + ",".join(deloc) + "}"
        print(f"cycle {cycle} sign={sign} chordless={chordless} delocalizing={deloc_text}")
    return EXIT_OK


def _cmd_dynamics(args: argparse.Namespace) -> int:
    f = load_bn(args.network)
    n = f.width
    sg = asynchronous_state_graph(f)
    for src, dst in sg.arc_list():
        print(f"{format_code(src, n)} -> {format_code(dst, n)}")
    for a in attractors(f):
        kind = "cyclic" if a.cyclic else "punctual"
        print(f"attractor {_point_set_text(a.states, n)} {kind}")
    print(f"weak_convergence: {_bool_text(weak_convergence(f))}")
    print(f"strong_convergence: {_bool_text(strong_convergence(f))}")
    return EXIT_OK


def _build_generator(args: argparse.Namespace, for_lemma1: bool):
    if args.mode == "exhaustive":
        return Subsets(args.n) if for_lemma1 else Exhaustive(args.n)
    if for_lemma1:
        raise FormatError("LEMMA1_HYPERCUBE supports only --mode exhaustive")
    if args.mode == "sample":
        if args.seed is None:
            raise FormatError("--mode sample requires --seed")
        return Sample(args.n, args.count, args.seed)
    if args.family == "andnets":
        return AndNets(args.n)
    if args.family == "circular":
        return Circular(args.n)
    if args.family == "nonexpansive":
        if args.seed is None:
            raise FormatError("--family nonexpansive requires --seed")
        return NonExpansiveFiltered(args.n, args.count, args.seed)
    raise FormatError("--mode family requires --family andnets|circular|nonexpansive")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem not in catalog_keys():
        raise FormatError(f"unknown theorem {args.theorem!r}; known: {', '.join(catalog_keys())}")
    generator = _build_generator(args, args.theorem == TheoremId.LEMMA1_HYPERCUBE.name)
    report = sweep(args.theorem, generator, jobs=args.jobs)
    sys.stdout.write(report.text())
    return EXIT_COUNTEREXAMPLE if report.counterexample_count else EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    names = [q.name for q in OpenQuestion]
    if args.question not in names:
        raise FormatError(f"unknown question {args.question!r}; known: {', '.join(names)}")
    generator = _build_generator(args, for_lemma1=False)
    report = open_question_search(
        args.question, generator, budget=args.budget, jobs=args.jobs
    )
    sys.stdout.write(report.text())
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    what = args.what[0]
    if what not in ("gf", "gfx", "gamma"):
        raise FormatError("--what must be gf, gfx <point>, or gamma")
    if what == "gfx" and len(args.what) != 2:
        raise FormatError("--what gfx needs a point, e.g. --what gfx 010")
    if what != "gfx" and len(args.what) != 1:
        raise FormatError(f"--what {what} takes no point argument")
    if args.input.endswith(".sg"):
        if what != "gf":
            raise FormatError("graph files support only --what gf")
        text = digraph_dot(load_sg(args.input))
    else:
        f = load_bn(args.input)
        if what == "gf":
            text = digraph_dot(global_interaction_graph(f))
        elif what == "gfx":
            x = parse_point(args.what[1], f.components)
            text = digraph_dot(local_interaction_graph(f, x))
        else:
            text = state_graph_dot(asynchronous_state_graph(f), fixed_point_codes(f))
    validate_dot(text)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    chosen = [
        name
        for name, value in (
            ("--circular", args.circular),
            ("--andnet", args.andnet),
            ("--random", args.random),
        )
        if value
    ]
    if len(chosen) != 1:
        raise FormatError("gen needs exactly one of --circular, --andnet, --random")
    if args.circular:
        n_text, signs = args.circular
        try:
            n = int(n_text)
        except ValueError:
            raise FormatError(f"bad width {n_text!r}") from None
        if n < 1 or len(signs) != n or any(ch not in "+-" for ch in signs):
            raise FormatError("--circular needs a width n and a +/- string of length n")
        # the canonical cycle 1 -> 2 -> ... -> n -> 1; signs[k] is the sign of
        # the arc entering component k+1
        pred = tuple((i - 1) % n for i in range(n))
        constant = sum(1 << i for i, ch in enumerate(signs) if ch == "-")
        components = tuple(str(i) for i in range(1, n + 1))
        f = circular_network(CircularForm(components, pred, constant))
    elif args.andnet:
        f = and_net(load_sg(args.andnet))
    else:
        n_text, seed_text = args.random
        try:
            n = int(n_text)
            seed = int(seed_text)
        except ValueError:
            raise FormatError("--random needs integer width and seed") from None
        f = random_network(n, seed)
    sys.stdout.write(render_bn(f))
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolcube",
        description="Boolean networks: fixed points, subnetworks, dynamics, theorem sweeps.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("analyze", help="classify a network from a .bn file")
    p.add_argument("network")
    p.set_defaults(run=_cmd_analyze)

    p = commands.add_parser("subnets", help="list subnetworks with fixed-point counts")
    p.add_argument("network")
    p.add_argument("--include-self", action="store_true")
    p.add_argument("--eosd-only", action="store_true")
    p.set_defaults(run=_cmd_subnets)

    p = commands.add_parser("graph", help="print the interaction graph and its cycles")
    p.add_argument("network")
    p.add_argument("--at", help="point for the local graph, e.g. 010")
    p.set_defaults(run=_cmd_graph)

    p = commands.add_parser("dynamics", help="print the state graph and attractors")
    p.add_argument("network")
    p.set_defaults(run=_cmd_dynamics)

    p = commands.add_parser("verify", help="sweep a theorem over a candidate stream")
    p.add_argument("--theorem", required=True)
    p.add_argument("--mode", required=True, choices=["exhaustive", "sample", "family"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int)
    p.add_argument("--family", choices=["andnets", "circular", "nonexpansive"])
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=_cmd_verify)

    p = commands.add_parser("search", help="search an open question for discoveries")
    p.add_argument("--question", required=True)
    p.add_argument("--mode", required=True, choices=["exhaustive", "sample", "family"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int)
    p.add_argument("--family", choices=["andnets", "circular", "nonexpansive"])
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=_cmd_search)

    p = commands.add_parser("export-dot", help="write a graph in DOT format")
    p.add_argument("--input", required=True, help="a .bn network or .sg graph file")
    p.add_argument("--what", required=True, nargs="+", help="gf | gfx <point> | gamma")
    p.add_argument("--out", required=True)
    p.set_defaults(run=_cmd_export_dot)

    p = commands.add_parser("gen", help="emit a canonical .bn table")
    p.add_argument("--circular", nargs=2, metavar=("N", "SIGNS"))
    p.add_argument("--andnet", metavar="GRAPH.sg")
    p.add_argument("--random", nargs=2, metavar=("N", "SEED"))
    p.set_defaults(run=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except WidthCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
