"""Command-line front end.

Exit codes: 0 success, 1 domain error or negative verdict, 2 input
error, 3 numerical or degeneracy error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from pathlib import Path

from . import compar, verify
from .corpus import RandomPosetSpec, connected_gnp, random_poset_graph
from .errors import DomainError, InputError, LapmaxError, NumericalError
from .graph import Graph, format_edge_list, read_edge_list
from .modular import canonical_partition
from .orientation import PartialOrientation, format_orientation, is_transitive, parse_orientation
from .spectral import ToleranceConfig, derive_seed, fibers, induce_orientation, max_eigenspace

SCHEMA = 1

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2, 3

FIBER_COLORS = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


# -- JSON with 17 significant digits -----------------------------------------

def _encode(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite number in report")
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return _encode(obj) + "\n"


# -- analysis ------------------------------------------------------------------

def analyze_graph(g: Graph, seed: int, cfg: ToleranceConfig) -> dict:
    """Spectral analysis report (schema 1) for a connected graph."""
    report = {"schema": SCHEMA, "n": g.n, "edge_count": g.edge_count, "seed": seed,
              "tolerances": cfg.as_dict()}
    if g.n == 1:
        report.update(lambda_max=0.0, eigenspace_dim=0, canonical_blocks=[[1]],
                      complement_connected=True, eigenvector=[0.0],
                      sampled_fibers=[{"vertices": [1], "value": 0.0}],
                      induced_arcs=[], unoriented_edges=[], transitive=True, attempts=0)
        return report
    if not g.is_connected():
        raise DomainError("analysis requires a connected graph")
    basis = max_eigenspace(g, cfg)
    dec = canonical_partition(g)
    x, attempts = compar.sample_nondegenerate(g, seed, cfg)
    fib = fibers(x, cfg)
    o = induce_orientation(g, x, cfg)
    op = induce_orientation(dec.copartition, x, cfg)
    report.update(
        lambda_max=basis.lambda_max,
        eigenspace_dim=basis.dim,
        canonical_blocks=dec.partition.sorted_blocks(),
        complement_connected=dec.complement_connected,
        eigenvector=[float(v) for v in x],
        sampled_fibers=[{"vertices": sorted(b), "value": val} for val, b in fib],
        induced_arcs=[list(a) for a in o.arcs],
        unoriented_edges=[list(e) for e in o.unoriented_edges],
        transitive=op.is_full and is_transitive(dec.copartition, op),
        attempts=attempts,
    )
    return report


def _certificate(o: PartialOrientation | None):
    return None if o is None else [list(a) for a in o.arcs]


# -- DOT -----------------------------------------------------------------------

def to_dot(g: Graph, o: PartialOrientation | None = None, report: dict | None = None) -> str:
    if report is not None and (report.get("n") != g.n or report.get("edge_count") != g.edge_count):
        raise InputError("report does not describe this graph")
    if o is None and report is not None:
        o = PartialOrientation.from_arcs(g, [tuple(a) for a in report.get("induced_arcs", [])])
    if o is not None and o.graph != g:
        raise InputError("orientation does not match the graph")
    color, value = {}, {}
    if report is not None:
        for k, fib in enumerate(report["sampled_fibers"]):
            for v in fib["vertices"]:
                color[v] = FIBER_COLORS[k % len(FIBER_COLORS)]
        for v, entry in enumerate(report.get("eigenvector") or [], start=1):
            value[v] = entry
    lines = ["digraph G {"]
    for v in g.vertices:
        attrs = []
        if v in value:
            attrs.append(f'label="{v}\\n{value[v]:.6g}"')
        if v in color:
            attrs.append(f'style=filled, fillcolor="{color[v]}"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    arcs = set(o.arcs) if o is not None else set()
    for i, j in g.edge_list:
        if (i, j) in arcs:
            lines.append(f"  {i} -> {j};")
        elif (j, i) in arcs:
            lines.append(f"  {j} -> {i};")
        else:
            lines.append(f"  {i} -> {j} [dir=none, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------

def _tolerances(args) -> ToleranceConfig:
    return ToleranceConfig(eig_group_tol=args.tol_eig, fiber_tol=args.tol_fiber, cone_tol=args.tol_cone)


def cmd_analyze(args, out) -> int:
    g = read_edge_list(args.input)
    report = analyze_graph(g, args.seed, _tolerances(args))
    out.write(to_dot(g, report=report) if args.format == "dot" else dumps(report))
    return EXIT_OK


def cmd_orient(args, out) -> int:
    g = read_edge_list(args.input)
    cfg = _tolerances(args)
    if not g.is_connected():
        raise DomainError("orientation requires a connected graph")
    counts: Counter = Counter()
    errors: list[dict] = []
    for t in range(args.trials):
        s = derive_seed(args.seed, t)
        try:
            counts[compar.spectral_orient(g, s, cfg)] += 1
        except LapmaxError as exc:
            errors.append({"trial": t, "seed": s, "error": type(exc).__name__, "message": str(exc)})
    table = sorted(counts.items(), key=lambda kv: kv[0].sort_key())
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for k, (o, _) in enumerate(table, start=1):
            (d / f"orientation_{k:04d}.txt").write_text(format_orientation(o), encoding="utf-8")
    if args.format == "edges":
        for o, c in table:
            out.write(f"# trials {c}\n" + format_orientation(o))
    else:
        out.write(dumps({
            "schema": SCHEMA,
            "n": g.n,
            "trials": args.trials,
            "seed": args.seed,
            "tolerances": cfg.as_dict(),
            "distinct": len(table),
            "orientations": [
                {"arcs": [list(a) for a in o.arcs], "count": c, "frequency": c / args.trials}
                for o, c in table
            ],
            "errors": errors,
        }))
    if any(e["error"] in ("DegeneracyError", "NumericalError") for e in errors) and not any(
        e["error"] == "ConsistencyError" for e in errors
    ):
        return EXIT_NUMERICAL
    return EXIT_DOMAIN if errors else EXIT_OK


def cmd_recognize(args, out) -> int:
    g = read_edge_list(args.input)
    cfg = _tolerances(args)
    if g.n == 1:
        result = compar.RecognitionResult(True, PartialOrientation.unoriented(g), args.method)
    elif args.method == "bruteforce":
        result = compar.recognize_bruteforce(g)
    elif args.method == "cone":
        result = compar.recognize_cone(g, cfg)
    else:
        result = compar.recognize_spectral(g, args.trials, args.seed, cfg)
    out.write(dumps({
        "schema": SCHEMA,
        "n": g.n,
        "method": result.method,
        "requested_method": args.method,
        "is_comparability": result.is_comparability,
        "certificate": _certificate(result.certificate),
    }))
    return EXIT_OK if result.is_comparability else EXIT_DOMAIN


def cmd_verify(args, out) -> int:
    reports = verify.run_suite(args.suite, args.seed, args.count)
    passed = all(r.passed for r in reports)
    out.write(json.dumps({"passed": passed, "suites": [r.to_dict() for r in reports]}, indent=2) + "\n")
    return EXIT_OK if passed else EXIT_DOMAIN


def cmd_gen(args, out) -> int:
    if args.kind == "poset":
        g = random_poset_graph(RandomPosetSpec(args.n, args.density, args.seed))
    else:
        if args.n < 1 or not 0 < args.density < 1:
            raise InputError("need n >= 1 and 0 < density < 1")
        g = connected_gnp(args.n, args.density, args.seed)
    text = to_dot(g) if args.format == "dot" else format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_export_dot(args, out) -> int:
    g = read_edge_list(args.input)
    o = None
    if args.orientation:
        o = parse_orientation(Path(args.orientation).read_text(encoding="utf-8"), g)
    report = None
    if args.report:
        try:
            report = json.loads(Path(args.report).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"report is not valid JSON: {exc}") from None
    out.write(to_dot(g, o, report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lapmax", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def tol_flags(p):
        d = ToleranceConfig()
        p.add_argument("--tol-eig", type=float, default=d.eig_group_tol)
        p.add_argument("--tol-fiber", type=float, default=d.fiber_tol)
        p.add_argument("--tol-cone", type=float, default=d.cone_tol)

    p = sub.add_parser("analyze", help="spectral analysis report")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    tol_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orient", help="sample transitive orientations spectrally")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--out-dir")
    p.add_argument("--format", choices=("json", "edges"), default="json")
    tol_flags(p)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("recognize", help="decide whether the graph is a comparability graph")
    p.add_argument("input")
    p.add_argument("--method", choices=("spectral", "bruteforce", "cone"), default="spectral")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    tol_flags(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random connected graph")
    p.add_argument("--kind", choices=("poset", "gnp"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edges", "dot"), default="edges")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="render a graph, orientation or report as DOT")
    p.add_argument("input")
    p.add_argument("--orientation")
    p.add_argument("--report")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"lapmax: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"lapmax: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, LapmaxError) as exc:
        print(f"lapmax: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry():
    sys.exit(main())
