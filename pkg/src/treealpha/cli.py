"""Command-line surface.

Every command prints one machine-readable JSON report to stdout (rational
values appear as `p/q` strings, never floats) and is deterministic up to the
wall_time_s field. Exit codes: 0 success, 1 usage or unreadable input,
2 validation failure or violated precondition, 3 size cap exceeded.
"""

import argparse
import hashlib
import json
import sys
import time

from . import formats
from .decomposition import (
    compose_clique_cutset,
    independence_number,
    residual_independence_number,
    trivial_decomposition,
    validate,
    width,
)
from .errors import (
    CapExceededError,
    GraphError,
    InvalidDecompositionError,
    ParseError,
    ResidualBoundViolation,
)
from .generators import generate
from .mwis import solve_mwis
from .nice import make_nice
from .oracle import tin_exact, treewidth_exact
from .packing import (
    PackingInstance,
    derived_decomposition,
    derived_graph,
    enumerate_F_subgraphs,
    pattern_by_name,
    solve_packing,
)
from .weights import WeightMap

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_CAP = 3


def _rational(f):
    return f"{f.numerator}/{f.denominator}"


def _one_indexed(vertices):
    return [v + 1 for v in sorted(vertices)]


class _Inputs:
    """Tracks consumed input files and their content digests for the report."""

    def __init__(self):
        self.seen = {}

    def text(self, name, path):
        if path == "-":
            data = sys.stdin.read()
            shown = "<stdin>"
        else:
            data = formats.read_text(path)
            shown = str(path)
        self.seen[name] = {
            "path": shown,
            "sha256": hashlib.sha256(data.encode("utf-8")).hexdigest(),
        }
        return data, shown


def _report(command, inputs, parameters, results, artifacts, started):
    doc = {
        "command": command,
        "inputs": inputs.seen,
        "parameters": parameters,
        "results": results,
        "artifacts": artifacts,
        "wall_time_s": round(time.monotonic() - started, 6),
    }
    print(json.dumps(doc, indent=2))


def _load_graph(inputs, path):
    data, shown = inputs.text("graph", path)
    return formats.parse_graph(data, source=shown)


def _load_td(inputs, path, graph):
    data, shown = inputs.text("td", path)
    return formats.parse_td(data, graph, source=shown)


def _load_weights(inputs, path, n):
    if path is None:
        return WeightMap(n)
    data, shown = inputs.text("weights", path)
    return formats.parse_weights(data, n, source=shown)


def _cmd_validate(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    td = _load_td(inputs, args.td, g)
    report = validate(g, td)
    _report(
        "validate",
        inputs,
        {},
        {
            "ok": report.ok,
            "violations": [
                {"clause": v.clause, "detail": v.detail} for v in report.violations
            ],
        },
        {},
        started,
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_measure(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    td = _load_td(inputs, args.td, g)
    _require_ok(g, td)
    _report(
        "measure",
        inputs,
        {},
        {
            "width": width(td),
            "independence_number": independence_number(g, td),
            "residual_independence_number": residual_independence_number(g, td),
            "refinement_size": td.refinement_size,
            "nodes": td.node_count,
        },
        {},
        started,
    )
    return EXIT_OK


def _require_ok(g, td):
    report = validate(g, td)
    if not report.ok:
        raise InvalidDecompositionError(report)


def _cmd_nice(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    td = _load_td(inputs, args.td, g)
    nice = make_nice(g, td)
    formats.write_td(nice.td, args.output)
    kinds = {k: nice.kinds.count(k) for k in ("leaf", "introduce", "forget", "join")}
    _report(
        "nice",
        inputs,
        {},
        {
            "nodes": nice.node_count,
            "kinds": kinds,
            "width": width(nice.td),
            "residual_independence_number": residual_independence_number(g, nice.td),
        },
        {"td": str(args.output)},
        started,
    )
    return EXIT_OK


def _cmd_mwis(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    td = _load_td(inputs, args.td, g)
    _require_ok(g, td)
    w = _load_weights(inputs, args.weights, g.n)
    k = args.k if args.k is not None else residual_independence_number(g, td)
    value, chosen = solve_mwis(g, w, td, k)
    _report(
        "mwis",
        inputs,
        {"k": k},
        {"weight": _rational(value), "independent_set": _one_indexed(chosen)},
        {},
        started,
    )
    return EXIT_OK


def _cmd_pack(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    td = _load_td(inputs, args.td, g)
    _require_ok(g, td)
    if args.family is not None:
        data, shown = inputs.text("family", args.family)
        inst = formats.parse_family(data, g, source=shown)
    elif args.patterns is not None or args.pattern_file:
        pats = []
        if args.patterns is not None:
            pats += [pattern_by_name(p) for p in args.patterns.split(",") if p]
        for i, path in enumerate(args.pattern_file or ()):
            data, shown = inputs.text(f"pattern_{i}", path)
            pats.append(formats.parse_graph(data, source=shown))
        fam = enumerate_F_subgraphs(g, pats)
        w = _load_weights(inputs, args.weights, g.n)
        inst = PackingInstance(fam, tuple(w.total(s) for s in fam.members))
    else:
        raise GraphError("pack needs --family, --patterns, or --pattern-file")
    k = args.k if args.k is not None else independence_number(g, td)
    artifacts = {}
    if args.emit_derived or args.emit_derived_td:
        derived = derived_graph(g, inst.family)
        if args.emit_derived:
            formats.write_graph(derived, args.emit_derived)
            artifacts["derived_graph"] = str(args.emit_derived)
        if args.emit_derived_td:
            td2 = derived_decomposition(g, inst.family, td, derived=derived)
            formats.write_td(td2, args.emit_derived_td)
            artifacts["derived_td"] = str(args.emit_derived_td)
    value, chosen = solve_packing(inst, td, k)
    _report(
        "pack",
        inputs,
        {"k": k, "members": len(inst.family)},
        {
            "weight": _rational(value),
            "selected": [
                {"index": j + 1, "vertices": _one_indexed(inst.family.members[j])}
                for j in sorted(chosen)
            ],
        },
        artifacts,
        started,
    )
    return EXIT_OK


def _cmd_tin(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    cap = g.n if args.force else 20
    value, witness = tin_exact(g, cap=cap)
    artifacts = {}
    if args.output:
        formats.write_td(witness, args.output)
        artifacts["witness_td"] = str(args.output)
    _report(
        "tin",
        inputs,
        {"exact": True},
        {"tree_independence_number": value, "witness_nodes": witness.node_count},
        artifacts,
        started,
    )
    return EXIT_OK


def _cmd_tw(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    cap = g.n if args.force else 20
    value = treewidth_exact(g, cap=cap)
    _report("tw", inputs, {}, {"treewidth": value}, {}, started)
    return EXIT_OK


def _cmd_gen(args, inputs, started):
    base = None
    if args.kind == "double-join":
        if args.graph is None:
            raise GraphError("gen double-join needs --graph for the base graph")
        base = _load_graph(inputs, args.graph)
        params = ()
    else:
        params = tuple(args.params)
    g = generate(args.kind, params, base=base)
    text = formats.format_graph(g)
    artifacts = {}
    if args.emit_trivial_td:
        formats.write_td(trivial_decomposition(g), args.emit_trivial_td)
        artifacts["trivial_td"] = str(args.emit_trivial_td)
    if args.output:
        formats.write_text(args.output, text)
        artifacts["graph"] = str(args.output)
        _report(
            "gen",
            inputs,
            {"kind": args.kind, "params": list(args.params)},
            {"n": g.n, "m": g.m},
            artifacts,
            started,
        )
    else:
        # Raw graph on stdout so generators can be piped into other commands.
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_compose(args, inputs, started):
    g = _load_graph(inputs, args.graph)
    a_txt, a_src = inputs.text("cut_a", args.cut[0])
    b_txt, b_src = inputs.text("cut_b", args.cut[1])
    c_txt, c_src = inputs.text("cut_c", args.cut[2])
    a = formats.parse_vertex_set(a_txt, g.n, source=a_src)
    b = formats.parse_vertex_set(b_txt, g.n, source=b_src)
    c = formats.parse_vertex_set(c_txt, g.n, source=c_src)
    td_a_txt, sa = inputs.text("td_a", args.td_a)
    td_b_txt, sb = inputs.text("td_b", args.td_b)
    td_a = formats.parse_td(td_a_txt, g, source=sa)
    td_b = formats.parse_td(td_b_txt, g, source=sb)
    composed = compose_clique_cutset(g, a, b, c, td_a, td_b)
    formats.write_td(composed, args.output)
    _report(
        "compose",
        inputs,
        {},
        {
            "nodes": composed.node_count,
            "width": width(composed),
            "independence_number": independence_number(g, composed),
        },
        {"td": str(args.output)},
        started,
    )
    return EXIT_OK


def build_parser():
    top = argparse.ArgumentParser(
        prog="treealpha",
        description=(
            "Tree decompositions measured by bag independence number: "
            "validation, nice-form conversion, exact tree-independence "
            "number, and exact solvers for max weight independent set and "
            "independent subgraph packing."
        ),
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, td=True, weights=False, output=False):
        p.add_argument("--graph", required=True, help="graph file (.gr), `-` for stdin")
        if td:
            p.add_argument("--td", required=True, help="tree decomposition file (.td)")
        if weights:
            p.add_argument("--weights", help="vertex weight file, default all 1")
        if output:
            p.add_argument("-o", "--output", required=True, help="output path")
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="reserved; computations currently always run on one thread",
        )

    p = sub.add_parser(
        "validate",
        help="check the decomposition clauses; exit 2 on any violation",
        description=(
            "Checks vertex coverage, edge coverage, subtree connectivity, "
            "marked-set containment, and tree-ness, reporting the first "
            "witness of each violated clause."
        ),
    )
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser(
        "measure",
        help="width, independence number, and residual independence number",
        description=(
            "Reports width(T), the maximum independence number over bags, "
            "and the residual variant that ignores each bag's marked subset."
        ),
    )
    common(p)
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser(
        "nice",
        help="convert to a nice decomposition (introduce/forget/join nodes)",
        description=(
            "Rewrites the decomposition into nice form with empty root and "
            "leaf bags; bags only shrink and each marked set is the original "
            "one restricted to the new bag, so the residual independence "
            "number cannot grow."
        ),
    )
    common(p, output=True)
    p.set_defaults(func=_cmd_nice)

    p = sub.add_parser(
        "mwis",
        help="exact max weight independent set over the decomposition",
        description=(
            "Dynamic program over the nice form of the decomposition, "
            "indexing tables by bag subsets that combine any part of the "
            "marked set with at most k residual vertices. Runs in "
            "O(2^ell * n^(k+1) * |T|) for residual bound k."
        ),
    )
    common(p, weights=True)
    p.add_argument("-k", type=int, help="residual bound; default: measured value")
    p.set_defaults(func=_cmd_mwis)

    p = sub.add_parser(
        "pack",
        help="exact max weight independent packing of connected subgraphs",
        description=(
            "Builds the conflict graph of the family (members adjacent iff "
            "they share a vertex or an edge joins them), transfers the "
            "decomposition to it without increasing its independence number, "
            "and solves MWIS there. Member weights come from the family "
            "file; with --patterns, each member weighs the sum of its "
            "vertex weights (default 1 each)."
        ),
    )
    common(p, weights=True)
    p.add_argument("--family", help="explicit family file (.fam)")
    p.add_argument(
        "--patterns",
        help="comma-separated pattern names (k1,k2,k3,p3,p4,c3,...)",
    )
    p.add_argument(
        "--pattern-file",
        action="append",
        help="custom connected pattern as a .gr file; repeatable",
    )
    p.add_argument("-k", type=int, help="independence bound; default: measured value")
    p.add_argument("--emit-derived", help="write the conflict graph (.gr)")
    p.add_argument("--emit-derived-td", help="write the transferred decomposition (.td)")
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser(
        "tin",
        help="exact tree-independence number with witness decomposition",
        description=(
            "Subset dynamic programming over elimination orderings; exact "
            "for up to 20 vertices (--force to raise the cap). The witness "
            "decomposition attains the optimum."
        ),
    )
    common(p, td=False)
    p.add_argument("--exact", action="store_true", help="accepted; always exact")
    p.add_argument("--force", action="store_true", help="lift the n <= 20 cap")
    p.add_argument("-o", "--output", help="write the witness decomposition here")
    p.set_defaults(func=_cmd_tin)

    p = sub.add_parser(
        "tw",
        help="exact treewidth (same subset dynamic program, size cost)",
    )
    common(p, td=False)
    p.add_argument("--force", action="store_true", help="lift the n <= 20 cap")
    p.set_defaults(func=_cmd_tw)

    p = sub.add_parser(
        "gen",
        help="graph generators, including double-join and sharpness gadgets",
        description=(
            "Kinds: complete N, path N, cycle N, complete-bipartite M N, "
            "knn N, sharpness K (complete graph on K hubs, each edge "
            "replaced by K length-2 paths), double-join (--graph gives the "
            "base; two copies plus all cross edges). Without -o the graph "
            "text goes to stdout for piping."
        ),
    )
    p.add_argument("kind", help="generator id")
    p.add_argument("params", nargs="*", type=int, help="integer parameters")
    p.add_argument("--graph", help="base graph for double-join")
    p.add_argument("-o", "--output", help="output file; default stdout")
    p.add_argument(
        "--emit-trivial-td", help="also write the single-bag decomposition here"
    )
    p.add_argument("--threads", type=int, default=1, help="reserved")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "compose",
        help="join two decompositions along a clique cutset",
        description=(
            "Given a cut-partition (A, B, C) with C a clique and "
            "decompositions of G[A+C] and G[B+C] (host vertex ids), links a "
            "bag containing C on each side; the result's independence "
            "number is the max of the parts."
        ),
    )
    common(p, td=False, output=True)
    p.add_argument(
        "--cut",
        nargs=3,
        required=True,
        metavar=("A", "B", "C"),
        help="vertex set files for the cut-partition",
    )
    p.add_argument("--td-a", required=True, help="decomposition of G[A+C]")
    p.add_argument("--td-b", required=True, help="decomposition of G[B+C]")
    p.set_defaults(func=_cmd_compose)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_USAGE
    started = time.monotonic()
    inputs = _Inputs()
    try:
        return args.func(args, inputs, started)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidDecompositionError, ResidualBoundViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
