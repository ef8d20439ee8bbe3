"""Command-line front end.

Every command is a thin adapter over one library operation.  Exit
codes: 0 success or positive verdict, 1 negative verdict (bound
violated, above1, failed validation, trivial no-instance), 2 input or
usage error.  Output is byte-deterministic for fixed inputs and flags.
"""

import argparse
import sys
from typing import Optional

from . import io
from .compose import or_cross_compose
from .dpsolve import min_ds_dp, min_vc_dp
from .gadgets import (augmented_snaking_grid, halfgraph_cycle, reduce_3sat,
                      snaking_grid, validate_instance)
from .kernel import capvc_kernel, cvc_kernel_improved, cvc_kernel_quadratic
from .oracle import CapacitatedGraph, exact_twinwidth
from .recognize import recognize_tww1
from .sequence import verify
from .trigraph import Graph


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str) -> Graph:
    g, caps = io.parse_graph(_read(path))
    if caps:
        raise ValueError("%s: capacities only make sense for kernel --problem capvc" % path)
    return g


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    seq = io.parse_sequence(_read(args.sequence))
    report = verify(g, seq, bound=args.bound)
    print("width %d" % report.width)
    if report.ok:
        return 0
    step, vertex, degree = report.violation
    print("violation step %d vertex %d degree %d" % (step, vertex, degree))
    return 1


def cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    width, seq = exact_twinwidth(g)
    print("width %d" % width)
    if args.witness:
        _emit(io.write_sequence(seq), args.witness)
    return 0


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    result = recognize_tww1(g)
    print(result.verdict)
    if args.witness and result.witness is not None:
        _emit(io.write_sequence(result.witness), args.witness)
    return 0 if result.verdict in ("tww0", "tww1") else 1


def cmd_kernel(args) -> int:
    g, caps = io.parse_graph(_read(args.graph))
    if args.problem == "capvc":
        if set(caps) != g.vertices:
            raise ValueError("capvc needs a cap line for every vertex")
        out = capvc_kernel(CapacitatedGraph(g, caps), args.k)
    else:
        if caps:
            raise ValueError("capacities only make sense for --problem capvc")
        fn = cvc_kernel_quadratic if args.problem == "cvc2" else cvc_kernel_improved
        out = fn(g, args.k)
    if args.trace:
        lines = ["rule %d delete %d" % (rule, v) for rule, v, _ in out.trace]
        _emit("\n".join(lines) + ("\n" if lines else ""), args.trace)
    if out.trivial_no:
        print("trivial-no")
        return 1
    reduced = out.graph.graph if isinstance(out.graph, CapacitatedGraph) else out.graph
    compact, mapping = reduced.relabel_compact()
    red_caps = None
    if isinstance(out.graph, CapacitatedGraph):
        red_caps = {mapping[v]: c for v, c in out.graph.cap.items()}
    _emit(io.write_graph(compact, red_caps), args.out)
    print("n %d m %d k %d" % (compact.n, compact.edge_count(), out.k))
    return 0


def cmd_gen(args) -> int:
    if args.family == "snaking":
        g = snaking_grid(args.a, args.b).graph
    elif args.family == "hamcycle":
        g = augmented_snaking_grid(args.a, args.b)
    else:
        g, seq = halfgraph_cycle(args.a, args.b)
        if args.witness:
            _emit(io.write_sequence(seq), args.witness)
    _emit(io.write_graph(g), args.out)
    return 0


def cmd_reduce3sat(args) -> int:
    formula = io.parse_formula(_read(args.formula))
    red = reduce_3sat(formula)
    inst = red.instance
    _emit(io.write_instance(inst), args.out)
    print("n %d parts %d dims %d %d" % (inst.graph.n, inst.part_count, inst.p, inst.q))
    return 0


def cmd_compose(args) -> int:
    instances = [io.parse_instance(_read(path)) for path in args.instances]
    for inst in instances:
        validate_instance(inst)
    composed = or_cross_compose(instances)
    _emit(io.write_graph(composed.graph), args.out)
    _emit(io.write_sequence(composed.witness), args.witness)
    if args.provenance:
        _emit(io.write_provenance(composed.provenance), args.provenance)
    report = verify(composed.graph, composed.witness, bound=4)
    print("n %d parts %d width %d" % (composed.graph.n, composed.budget, report.width))
    return 0 if report.ok else 1


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    seq = io.parse_sequence(_read(args.sequence))
    fn = min_ds_dp if args.problem == "ds" else min_vc_dp
    print("value %d" % fn(g, seq, args.component_bound))
    return 0


def cmd_validate_instance(args) -> int:
    inst = io.parse_instance(_read(args.instance))
    try:
        validate_instance(inst)
    except ValueError as exc:
        print("invalid: %s" % exc)
        return 1
    print("ok")
    return 0


def cmd_pipeline(args) -> int:
    instances = []
    for path in args.formulas:
        red = reduce_3sat(io.parse_formula(_read(path)))
        validate_instance(red.instance)
        instances.append(red.instance)
    composed = or_cross_compose(instances)
    report = verify(composed.graph, composed.witness, bound=4)
    if args.out:
        _emit(io.write_graph(composed.graph), args.out)
    if args.witness:
        _emit(io.write_sequence(composed.witness), args.witness)
    if args.provenance:
        _emit(io.write_provenance(composed.provenance), args.provenance)
    print("instances %d parts %d n %d width %d"
          % (len(instances), composed.budget, composed.graph.n, report.width))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tww",
        description="Twin-width toolkit: verify witnesses, recognize low "
                    "width, build hardness instances, kernelize, solve.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a contraction sequence against a width bound")
    p.add_argument("-d", "--bound", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact twin-width by branch and bound")
    p.add_argument("graph")
    p.add_argument("--witness", help="write an optimal sequence here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("recognize", help="decide twin-width 0, 1, or above")
    p.add_argument("graph")
    p.add_argument("--witness", help="write the certifying sequence here")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("kernel", help="kernelize a vertex cover variant")
    p.add_argument("--problem", choices=("cvc2", "cvc15", "capvc"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("--out", help="reduced graph file (default stdout)")
    p.add_argument("--trace", help="write rule applications here")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("family", choices=("snaking", "halfcycle", "hamcycle"))
    p.add_argument("a", type=int, help="rows / layers")
    p.add_argument("b", type=int, help="columns / height")
    p.add_argument("--out", help="graph file (default stdout)")
    p.add_argument("--witness", help="halfcycle only: write its 3-sequence here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce3sat", help="planar 3-SAT to Dominating Set")
    p.add_argument("formula")
    p.add_argument("--out", help="instance file (default stdout)")
    p.set_defaults(func=cmd_reduce3sat)

    p = sub.add_parser("compose", help="OR-cross-composition of annotated instances")
    p.add_argument("instances", nargs="+")
    p.add_argument("--out", required=True, help="composed graph file")
    p.add_argument("--witness", required=True, help="composed sequence file")
    p.add_argument("--provenance", help="vertex origin tags")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("solve", help="DS/VC along a bounded-red-component sequence")
    p.add_argument("--problem", choices=("ds", "vc"), required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--component-bound", type=int, required=True)
    p.add_argument("graph")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate-instance", help="check an annotated instance file")
    p.add_argument("instance")
    p.set_defaults(func=cmd_validate_instance)

    p = sub.add_parser("pipeline", help="reduce3sat every formula, compose, verify")
    p.add_argument("formulas", nargs="+")
    p.add_argument("--out", help="composed graph file")
    p.add_argument("--witness", help="composed sequence file")
    p.add_argument("--provenance", help="vertex origin tags")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
