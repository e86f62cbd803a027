"""Command-line front end.

Every subcommand reads JSON input files, computes, and prints exactly one
JSON document to standard output.  A boolean result of false is still a
result: the exit code is 0.  Exit code 2 flags a parse or validation
problem, exit code 3 a tripped size guard.  Report subcommands accept
--plot FILE to render a matplotlib figure alongside the JSON.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import asymptotics, covers, packing, plots, symbolic
from .complexes import is_matroid, stanley_reisner_complex, stanley_reisner_ideal
from .errors import InputError, SizeGuardExceeded
from .graphs import (
    edge_ideal,
    equality_threshold,
    is_bipartite,
    odd_cycle_witness,
    odd_girth,
    shortest_odd_cycle,
    verify_threshold,
)
from .hunt import HuntConfig, run_hunt
from .io import (
    complex_payload,
    dumps,
    fraction_payload,
    ideal_payload,
    load_complex,
    load_graph,
    load_ideal,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympow",
        description="Exact computations with symbolic powers of square-free monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_)

    def guard_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-primes", type=int, default=covers.DEFAULT_MAX_PRIMES,
                       help="abort if an ideal has more minimal primes than this")
        p.add_argument("--max-symbolic-gens", type=int,
                       default=symbolic.DEFAULT_MAX_SYMBOLIC_GENS,
                       help="abort if a symbolic power needs more candidate generators")

    p = add("power", "ordinary power I^n")
    p.add_argument("--ideal", required=True)
    p.add_argument("-n", type=int, required=True)

    p = add("symbolic", "symbolic power I^(n)")
    p.add_argument("--ideal", required=True)
    p.add_argument("-n", type=int, required=True)
    guard_flags(p)

    p = add("equal", "test I^(n) = I^n, with witness on failure")
    p.add_argument("--ideal", required=True)
    p.add_argument("-n", type=int, required=True)
    guard_flags(p)

    p = add("contain", "test I^(a) inside I^b")
    p.add_argument("--ideal", required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    guard_flags(p)

    p = add("koenig", "height, matching number, and the Koenig property")
    p.add_argument("--ideal", required=True)
    guard_flags(p)

    p = add("packing", "packing property over all minors")
    p.add_argument("--ideal", required=True)
    p.add_argument("--max-minors", type=int, default=packing.DEFAULT_MAX_MINOR_SUPPORT,
                   help="abort if more active variables than this (3^s minors)")
    guard_flags(p)

    p = add("kpacked", "k-packed property over all minors")
    p.add_argument("--ideal", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-minors", type=int, default=packing.DEFAULT_MAX_MINOR_SUPPORT)
    guard_flags(p)

    p = add("minor", "set variables to 0 or 1")
    p.add_argument("--ideal", required=True)
    p.add_argument("--zero", action="append", default=[], metavar="VAR")
    p.add_argument("--one", action="append", default=[], metavar="VAR")

    p = add("edge-analyze", "bipartiteness, odd girth, equality threshold of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--verify", type=int, default=None, metavar="K",
                   help="also compute I^(k) = I^k for k up to K and compare")
    p.add_argument("--force", action="store_true",
                   help="allow --verify beyond the default bound of 6")
    p.add_argument("--plot", default=None, metavar="FILE")
    guard_flags(p)

    p = add("sr-ideal", "Stanley-Reisner ideal of a complex")
    p.add_argument("--complex", required=True)

    p = add("sr-complex", "Stanley-Reisner complex of a square-free ideal")
    p.add_argument("--ideal", required=True)
    guard_flags(p)

    p = add("matroid", "facet exchange check for a complex")
    p.add_argument("--complex", required=True)

    p = add("alpha", "least generator degree")
    p.add_argument("--ideal", required=True)

    p = add("waldschmidt", "exact Waldschmidt constant via the covering LP")
    p.add_argument("--ideal", required=True)
    p.add_argument("-M", "--sequence", type=int, default=None, metavar="M",
                   help="also report alpha(I^(m))/m for m = 1..M")
    p.add_argument("--plot", default=None, metavar="FILE")
    guard_flags(p)

    p = add("resurgence", "certified resurgence bounds and containment failures")
    p.add_argument("--ideal", required=True)
    p.add_argument("-N", type=int, required=True,
                   help="sweep all containments I^(n) in I^m with m <= n <= N")
    p.add_argument("--plot", default=None, metavar="FILE")
    guard_flags(p)

    p = add("hunt", "seeded random search for packing/equality disagreements")
    p.add_argument("--family", choices=("edge_ideals", "cubic_ideals", "general_squarefree"),
                   default="edge_ideals")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--vars", type=int, default=6)
    p.add_argument("--max-gens", type=int, default=8)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", default=None, metavar="FILE")

    return parser


def _variable_indices(names: list[str], requested: list[str], path: str) -> tuple[int, ...]:
    indices = []
    for name in requested:
        if name not in names:
            raise InputError(f"variable {name!r} is not declared in {path}")
        indices.append(names.index(name))
    return tuple(indices)


def _finite_or_none(value: float) -> int | None:
    return None if value == math.inf else int(value)


def _cmd_power(args) -> dict:
    ideal, names = load_ideal(args.ideal)
    if args.n < 0:
        raise InputError("-n must be nonnegative")
    return ideal_payload(ideal.power(args.n), names)


def _cmd_symbolic(args) -> dict:
    ideal, names = load_ideal(args.ideal)
    result = symbolic.symbolic_power(
        ideal, args.n, max_generators=args.max_symbolic_gens, max_primes=args.max_primes
    )
    return ideal_payload(result, names)


def _cmd_equal(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    result = symbolic.equals_ordinary(
        ideal, args.n, max_generators=args.max_symbolic_gens, max_primes=args.max_primes
    )
    witness = None if result.witness is None else list(result.witness.exponents)
    return {"n": args.n, "equal": result.equal, "witness": witness}


def _cmd_contain(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    held = symbolic.containment(
        ideal, args.a, args.b,
        max_generators=args.max_symbolic_gens, max_primes=args.max_primes,
    )
    return {"a": args.a, "b": args.b, "contains": held}


def _cmd_koenig(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    matching, witness = packing.max_regular_sequence(ideal)
    if ideal.is_zero or ideal.is_unit:
        h = None
    else:
        h = covers.height(ideal, args.max_primes)
    return {
        "koenig": packing.is_koenig(ideal),
        "height": h,
        "matching": matching,
        "regular_sequence": [list(g.exponents) for g in witness],
    }


def _assignment_payload(names: list[str], assignment) -> dict | None:
    if assignment is None:
        return None
    return {
        "zero": [names[i] for i in assignment.zeros],
        "one": [names[i] for i in assignment.ones],
    }


def _cmd_packing(args) -> dict:
    ideal, names = load_ideal(args.ideal)
    result = packing.has_packing_property(ideal, max_support=args.max_minors)
    return {
        "packing": result.holds,
        "counterexample": _assignment_payload(names, result.counterexample),
    }


def _cmd_kpacked(args) -> dict:
    ideal, names = load_ideal(args.ideal)
    if args.k < 1:
        raise InputError("-k must be positive")
    result = packing.is_k_packed(ideal, args.k, max_support=args.max_minors)
    return {
        "k": args.k,
        "k_packed": result.holds,
        "counterexample": _assignment_payload(names, result.counterexample),
    }


def _cmd_minor(args) -> dict:
    ideal, names = load_ideal(args.ideal)
    zeros = _variable_indices(names, args.zero, args.ideal)
    ones = _variable_indices(names, args.one, args.ideal)
    try:
        assignment = packing.MinorAssignment.assign(ideal.num_vars, zeros, ones)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return ideal_payload(packing.minor(ideal, assignment), names)


def _cmd_edge_analyze(args) -> dict:
    graph = load_graph(args.graph)
    if not graph.edges:
        raise InputError(f"{args.graph}: graph has no edges")
    girth = odd_girth(graph)
    threshold = equality_threshold(graph)
    cycle = shortest_odd_cycle(graph)
    payload: dict = {
        "bipartite": is_bipartite(graph),
        "odd_girth": _finite_or_none(girth),
        "threshold": _finite_or_none(threshold),
        "witness_cycle": None if cycle is None else list(cycle),
        "witness_monomial": None,
        "verify": None,
    }
    if cycle is not None:
        t = int(threshold)
        payload["witness_monomial"] = list(odd_cycle_witness(graph, t).exponents)
    if args.verify is not None:
        report = verify_threshold(graph, args.verify, force=args.force)
        payload["verify"] = report
        if args.plot:
            plots.plot_threshold_report(
                report, args.plot, f"equality thresholds up to {args.verify}"
            )
    return payload


def _cmd_sr_ideal(args) -> dict:
    complex_ = load_complex(args.complex)
    ideal = stanley_reisner_ideal(complex_)
    return ideal_payload(ideal)


def _cmd_sr_complex(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    return complex_payload(stanley_reisner_complex(ideal))


def _cmd_matroid(args) -> dict:
    complex_ = load_complex(args.complex)
    result = is_matroid(complex_)
    counterexample = None
    if result.counterexample is not None:
        source, target, removed = result.counterexample
        counterexample = {
            "facet_from": list(source),
            "facet_to": list(target),
            "removed_vertex": removed,
        }
    return {"matroid": result.is_matroid, "counterexample": counterexample}


def _cmd_alpha(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    return {"alpha": asymptotics.alpha(ideal)}


def _cmd_waldschmidt(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    solution = asymptotics.waldschmidt_lp(ideal, max_primes=args.max_primes)
    payload: dict = {
        "waldschmidt": fraction_payload(solution.value),
        "point": [fraction_payload(x) for x in solution.point],
    }
    sequence = None
    if args.sequence is not None:
        if args.sequence < 1:
            raise InputError("-M must be positive")
        sequence = asymptotics.waldschmidt_sequence(
            ideal, args.sequence, max_generators=args.max_symbolic_gens
        )
        payload["sequence"] = [fraction_payload(q) for q in sequence]
    if args.plot:
        plots.plot_waldschmidt(sequence or [], solution.value, args.plot)
    return payload


def _cmd_resurgence(args) -> dict:
    ideal, _ = load_ideal(args.ideal)
    bounds = asymptotics.resurgence_report(
        ideal, args.N, max_generators=args.max_symbolic_gens
    )
    payload = {
        "alpha": bounds.alpha,
        "waldschmidt": fraction_payload(bounds.waldschmidt),
        "rho_lower": fraction_payload(bounds.rho_lower),
        "rho_upper": bounds.rho_upper,
        "failures": [list(pair) for pair in bounds.failures],
    }
    if args.plot:
        plots.plot_resurgence(payload, args.N, args.plot)
    return payload


def _cmd_hunt(args) -> dict:
    try:
        config = HuntConfig(
            num_vars=args.vars,
            max_generators=args.max_gens,
            k=args.k,
            family=args.family,
            seed=args.seed,
            instance_count=args.count,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = run_hunt(config)
    if args.plot:
        plots.plot_hunt(payload, args.plot)
    return payload


_HANDLERS = {
    "power": _cmd_power,
    "symbolic": _cmd_symbolic,
    "equal": _cmd_equal,
    "contain": _cmd_contain,
    "koenig": _cmd_koenig,
    "packing": _cmd_packing,
    "kpacked": _cmd_kpacked,
    "minor": _cmd_minor,
    "edge-analyze": _cmd_edge_analyze,
    "sr-ideal": _cmd_sr_ideal,
    "sr-complex": _cmd_sr_complex,
    "matroid": _cmd_matroid,
    "alpha": _cmd_alpha,
    "waldschmidt": _cmd_waldschmidt,
    "resurgence": _cmd_resurgence,
    "hunt": _cmd_hunt,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _HANDLERS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeGuardExceeded as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(dumps(payload))
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
