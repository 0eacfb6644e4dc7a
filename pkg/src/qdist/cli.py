"""Command-line front end: build families, compute spectra, counts and
invariants, run verification campaigns, emit reports.

Exit codes: 0 success, 1 verification failure found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exact, spectral, sweeps, verify
from .graph6 import graph6_decode, graph6_encode
from .graphs import FamilyKind, FamilySpec, Graph, GraphError, make_family
from .invariants import invariant_bundle
from .spectral import m_count, parse_interval


def _family_spec_from_args(args: argparse.Namespace) -> FamilySpec:
    kind = FamilyKind(args.kind)
    params = {}
    for name in ("n", "d", "t", "r", "a", "k"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    inner = None
    if kind is FamilyKind.K_COPIES:
        if args.of is None:
            raise GraphError("kcopies needs --of INNER_KIND")
        inner_params = {k: v for k, v in params.items() if k != "k"}
        inner = FamilySpec(FamilyKind(args.of), inner_params)
        params = {"k": params["k"]}
    return FamilySpec(kind, params, inner)


def _parse_family_string(text: str) -> FamilySpec:
    """Compact family syntax: kind,key=value,... e.g. 'gndt,n=9,d=3,t=2'."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise GraphError(f"empty family spec {text!r}")
    kind = FamilyKind(parts[0])
    params = {}
    for p in parts[1:]:
        if "=" not in p:
            raise GraphError(f"family parameter {p!r} is not key=value")
        key, val = p.split("=", 1)
        params[key.strip()] = int(val)
    return FamilySpec(kind, params)


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    if getattr(args, "graph6", None):
        return [graph6_decode(args.graph6)]
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return [graph6_decode(line) for line in fh if line.strip()]
    if getattr(args, "family", None):
        return [make_family(_parse_family_string(args.family))]
    if not sys.stdin.isatty():
        return [graph6_decode(line) for line in sys.stdin if line.strip()]
    raise GraphError("no graph input: use --graph6, --file, --family, or pipe graph6 lines")


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--file", help="file with one graph6 string per line")
    p.add_argument("--family", help="family spec, e.g. 'gndt,n=9,d=3,t=2'")


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        if isinstance(obj, dict):
            for k, v in obj.items():
                print(f"{k}: {v}")
        else:
            print(obj)


def cmd_family(args: argparse.Namespace) -> int:
    spec = _family_spec_from_args(args)
    g = make_family(spec)
    if args.format == "json":
        _emit({"family": spec.describe(), "n": g.n, "graph6": graph6_encode(g), "edges": g.edges()}, "json")
    else:
        print(graph6_encode(g))
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    thresholds = [Fraction(t) for t in args.threshold or []]
    for g in _input_graphs(args):
        rep = spectral.spectrum_report(g, args.matrix, thresholds)
        if args.format == "json":
            print(json.dumps(rep, sort_keys=True))
        else:
            vals = " ".join(f"{v:.10g}" for v in rep["eigenvalues"])
            print(f"{rep['graph']} {args.matrix}: {vals}")
            for t, c in rep["exact_counts"].items():
                print(f"  count below {t}: {c}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    sym = parse_interval(args.interval)
    for g in _input_graphs(args):
        iv = sym.resolve(g.n)
        c = m_count(g, iv, matrix=args.matrix)
        if args.format == "json":
            _emit({"graph6": graph6_encode(g), "interval": str(iv), "count": c, "matrix": args.matrix}, "json")
        else:
            print(c)
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    for g in _input_graphs(args):
        bundle = invariant_bundle(g)
        if args.format == "json":
            print(json.dumps({"graph6": graph6_encode(g), **json.loads(bundle.to_json())}, sort_keys=True))
        else:
            print(f"{graph6_encode(g)}: {bundle.to_json()}")
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    blocks = [[int(v) for v in block.split(",") if v != ""] for block in args.blocks.split(";")]
    partition = exact.Partition.of(blocks)
    for g in _input_graphs(args):
        B = exact.quotient_matrix(g, partition)
        obj = {
            "graph6": graph6_encode(g),
            "blocks": [list(b) for b in partition.blocks],
            "matrix": [[str(x) for x in row] for row in B.rows],
            "equitable": exact.is_equitable(g, partition),
        }
        _emit(obj, args.format)
    return 0


def _theorem_list(name: str) -> list[str]:
    if name == "all":
        return list(verify.ALL_THEOREM_IDS)
    return [verify.canonical_theorem_id(name)]


def cmd_verify(args: argparse.Namespace) -> int:
    jobs = args.jobs or sweeps.default_jobs()
    print(f"# qdist verify --theorem {args.theorem} --exhaustive {args.exhaustive} "
          f"--family-max {args.family_max} --jobs {jobs}", file=sys.stderr)
    failures: list[verify.TheoremReport] = []
    lines: list[str] = []
    for tid in _theorem_list(args.theorem):
        if tid in verify.GRAPH_THEOREMS:
            for n in range(1, args.exhaustive + 1):
                result = sweeps.exhaustive_failures(tid, n, jobs=jobs)
                lines.append(result.summary())
                failures.extend(result.failures)
        else:
            reports = verify.family_grid_reports(tid, 7, args.family_max)
            bad = [r for r in reports if r.applicable and not r.passed]
            lines.append(f"{tid} grid n<={args.family_max}: {len(reports)} instances, {len(bad)} failures")
            failures.extend(bad)
    if args.output == "csv":
        print("theorem,instance,passed")
        for rep in failures:
            print(f"{rep.theorem_id},{rep.instance},{rep.passed}")
    elif args.output == "jsonl":
        for rep in failures:
            print(rep.to_json_line())
    else:
        for line in lines:
            print(line)
        for rep in failures:
            print("FAIL " + rep.to_json_line())
    return 1 if failures else 0


def cmd_search(args: argparse.Namespace) -> int:
    jobs = args.jobs or sweeps.default_jobs()
    print(f"# qdist search --theorem {args.theorem} --n-min {args.n_min} --n-max {args.n_max} "
          f"--budget {args.budget} --seed {args.seed} --jobs {jobs}", file=sys.stderr)
    failures = verify.search_counterexamples(
        args.theorem, (args.n_min, args.n_max), budget=args.budget, seed=args.seed, jobs=jobs
    )
    for rep in failures:
        print(rep.to_json_line())
    print(f"# {len(failures)} failures", file=sys.stderr)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qdist", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("family", help="construct a named family member, print graph6")
    p.add_argument("--kind", required=True, choices=[k.value for k in FamilyKind])
    for name in ("n", "d", "t", "r", "a", "k"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--of", choices=[k.value for k in FamilyKind], help="inner kind for kcopies")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("spectrum", help="eigenvalues and exact counts")
    _add_graph_input(p)
    p.add_argument("--matrix", choices=["Q", "L"], default="Q")
    p.add_argument("--threshold", action="append", help="exact count below this rational, repeatable")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("count", help="exact eigenvalue count in an interval")
    _add_graph_input(p)
    p.add_argument("--interval", required=True, help="e.g. \"[0,1)\" or \"[0,n-3)\" or \"(2,2n-2]\"")
    p.add_argument("--matrix", choices=["Q", "L"], default="Q")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("invariants", help="matching, independence, domination, diameter, longest path")
    _add_graph_input(p)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("quotient", help="partition quotient matrix of the signless Laplacian")
    _add_graph_input(p)
    p.add_argument("--blocks", required=True, help="semicolon-separated blocks, e.g. '0;1,2;3'")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", help="run theorem checkers exhaustively")
    p.add_argument("--theorem", required=True, help="theorem id or 'all'")
    p.add_argument("--exhaustive", type=int, default=6, help="max n for exhaustive sweeps")
    p.add_argument("--family-max", type=int, default=12, help="max n for family grids")
    p.add_argument("--jobs", type=int, help="worker processes (default: QDIST_JOBS or cpu count)")
    p.add_argument("--output", choices=["text", "jsonl", "csv"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample search over exhaustive and sampled streams")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--budget", type=int, default=2000, help="samples per order for n >= 8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_search)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, exact.MatrixError, spectral.IntervalError, KeyError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
