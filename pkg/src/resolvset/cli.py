"""Command-line front end.

Exit codes: 0 success / verdict true, 1 verdict false or audit mismatches,
2 usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import audit as audit_mod
from .generators import build_hc, build_sp, hc_profile, sp_profile, validate_structure
from .graph import GraphError, LabeledGraph, VertexLabel, all_pairs_distances, parse_edgelist, to_dot, to_edgelist
from .resolvability import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    Variant,
    code,
    elements,
    is_independent,
    is_resolving,
    min_dimension,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser, families=("hc", "sp", "file")) -> None:
    p.add_argument("family", choices=families)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--input", help="edge-list file (family 'file')")
    p.add_argument("--layout", choices=("verbatim", "hexagonal"), default="verbatim",
                   help="HC family sizes: as printed, or opposite sides equal")
    p.add_argument("--output", "-o", help="write to this path instead of stdout")


def _params(args) -> tuple[int, int, int]:
    if None in (args.a, args.b, args.c):
        raise UsageError(f"family {args.family} needs --a, --b and --c")
    return args.a, args.b, args.c


def load_graph(args) -> LabeledGraph:
    if args.family == "file":
        if not args.input:
            raise UsageError("family 'file' needs --input")
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
        g = parse_edgelist(text, name=args.input)
        if not g.is_connected():
            raise UsageError("input graph is not connected")
        return g
    a, b, c = _params(args)
    if args.family == "hc":
        return build_hc(a, b, c, layout=args.layout)
    return build_sp(a, b, c)


def parse_set(g: LabeledGraph, text: str | None) -> list[int]:
    if not text:
        raise UsageError("--set is required")
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.isdigit():
            v = int(tok)
            if not 0 <= v < g.n:
                raise UsageError(f"vertex id {v} out of range")
            out.append(v)
        else:
            out.append(g.vertex(VertexLabel.parse(tok)))
    if len(set(out)) != len(out):
        raise UsageError("landmarks must be distinct")
    return out


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _instance(args, g: LabeledGraph) -> dict:
    d = {"family": args.family, "n": g.n, "m": g.m}
    if args.family != "file":
        d.update(zip("abc", _params(args)))
        if args.family == "hc":
            d["layout"] = args.layout
    else:
        d["input"] = args.input
    return d


def _element_label(g: LabeledGraph, x) -> str:
    return g.edge_label(x) if isinstance(x, tuple) else g.label(x)


# -- subcommands ----------------------------------------------------------------


def cmd_generate(args) -> int:
    g = load_graph(args)
    if args.format == "edgelist":
        _emit(args, to_edgelist(g))
    elif args.format == "dot":
        _emit(args, to_dot(g))
    else:
        report = None
        if args.family != "file":
            prof = hc_profile(*_params(args), args.layout) if args.family == "hc" else sp_profile(*_params(args))
            report = validate_structure(g, prof).to_dict()
        doc = {"instance": _instance(args, g), "structure": report}
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_dims(args) -> int:
    g = load_graph(args)
    try:
        res = min_dimension(
            g,
            Variant.parse(args.variant),
            cap=args.cap,
            certify=args.certify,
            require_independent=args.independent,
            budget=args.budget,
            threads=args.threads,
            prune=args.prune,
            trust_lower_bounds=not args.from_one,
            start=args.start,
        )
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    doc = res.to_dict(g)
    if not args.timing:
        doc.pop("metadata")
    doc["instance"] = _instance(args, g)
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        value = doc["value"]
        lines = [
            f"{args.variant} dimension of {g.name or args.family}: {value}",
            f"witness: {', '.join(doc['witness']) if doc['witness'] else '-'}",
            f"certified: {doc['certified']} (sizes refuted: {doc['refuted_sizes']}, lower bound {doc['lower_bound']})",
            f"subsets tested: {doc['stats']['subsets_tested']}, pruned: {doc['stats']['subsets_pruned']}",
        ]
        if doc["dependent_only_sizes"]:
            lines.append(f"sizes with only non-independent resolving sets: {doc['dependent_only_sizes']}")
        if args.timing:
            lines.append(f"elapsed: {doc['metadata']['elapsed_seconds']:.3f}s")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if res.found else EXIT_FALSE


def cmd_verify(args) -> int:
    g = load_graph(args)
    s = parse_set(g, args.set)
    dm = all_pairs_distances(g)
    variant = Variant.parse(args.variant)
    ok, pair = is_resolving(g, dm, s, variant)
    doc = {
        "instance": _instance(args, g),
        "variant": variant.value,
        "set": [g.label(v) for v in s],
        "resolving": ok,
        "violating_pair": [_element_label(g, x) for x in pair] if pair else None,
    }
    verdict = ok
    if args.independent:
        doc["independent"] = is_independent(g, s)
        verdict = verdict and doc["independent"]
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"resolving ({variant.value}): {str(ok).lower()}"]
        if pair:
            lines.append(f"violating pair: {doc['violating_pair'][0]} / {doc['violating_pair'][1]}")
        if args.independent:
            lines.append(f"independent: {str(doc['independent']).lower()}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_audit(args) -> int:
    if args.family == "hc444":
        report = audit_mod.fixture_check_hc444(args.fixture)
    else:
        a, b, c = _params(args)
        if args.family == "hc":
            report = audit_mod.audit_hc(a, b, c, threads=args.threads)
        else:
            report = audit_mod.audit_sp(a, b, c)
    if args.format == "json":
        _emit(args, report.to_json())
    else:
        _emit(args, report.to_text(only_mismatches=args.mismatches_only))
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_codes(args) -> int:
    g = load_graph(args)
    s = parse_set(g, args.set)
    dm = all_pairs_distances(g)
    variant = Variant.parse(args.variant)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["element_kind", "element"] + [f"c{i + 1}" for i in range(len(s))])
    for x in elements(g, variant):
        c = code(dm, x, s)
        if variant is Variant.MULTISET:
            c = tuple(sorted(c))
        w.writerow(["edge" if isinstance(x, tuple) else "vertex", _element_label(g, x), *c])
    _emit(args, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resolvset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph")
    _add_graph_args(p)
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dims", help="minimum resolving-set size by exhaustive search")
    _add_graph_args(p)
    p.add_argument("--variant", default="mixed", choices=[v.value for v in Variant])
    p.add_argument("--certify", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--start", type=int, help="first size to try (only with --no-certify)")
    p.add_argument("--from-one", action="store_true", help="ignore known lower bounds and search from size 1")
    p.add_argument("--independent", action="store_true", help="accept only independent witnesses")
    p.add_argument("--cap", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identical output)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", help="check a landmark set")
    _add_graph_args(p)
    p.add_argument("--variant", default="mixed", choices=[v.value for v in Variant])
    p.add_argument("--set", required=True, help='labels like "p1:1,r1:1,p2:1" or vertex ids')
    p.add_argument("--independent", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="compare published codes with BFS distances")
    p.add_argument("family", choices=("hc", "sp", "hc444"))
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--fixture", help="alternative table CSV (hc444 only)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--mismatches-only", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("codes", help="code table CSV for a landmark list")
    _add_graph_args(p)
    p.add_argument("--variant", default="mixed", choices=[v.value for v in Variant])
    p.add_argument("--set", required=True)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_codes)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
