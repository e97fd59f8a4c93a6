"""Command-line front end.

Exit codes: 0 success, 1 counterexample or golden mismatch, 2 usage or I/O error.
Environment: ``WIENERKIT_OUTPUT_DIR`` resolves relative ``--out`` paths and is
the default directory for ``tables``; ``WIENERKIT_THREADS`` is the default
worker count for ``search`` and ``verify-djw``.
"""

from __future__ import annotations

import argparse
import difflib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import tables
from .blocks import block_cut_tree
from .canon import canonical_code
from .enumeration import FamilyFilter, enumerate_connected_graphs, enumerate_trees
from .errors import NoClosedForm, WienerKitError
from .extremal import (
    SearchReport,
    diametral_path_cover_check,
    edge_minimal_classes,
    improvement_step,
    is_reducible_to_tree,
    merge_reports,
    search,
    verify_djw,
)
from .families import build, closed_form_wiener, parse_spec
from .graph import Graph
from .graph6 import decode, encode, read_graph6, write_graph6
from .metrics import center_median, distances

OUTPUT_ENV = "WIENERKIT_OUTPUT_DIR"
THREADS_ENV = "WIENERKIT_THREADS"


def _shard(text: str) -> tuple[int, int]:
    try:
        i, t = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError("shard must look like i/t") from None
    if not 0 <= i < t:
        raise argparse.ArgumentTypeError("shard index must satisfy 0 <= i < t")
    return i, t


def _out_path(name: str | None) -> Path | None:
    if name is None or name == "-":
        return None
    p = Path(name)
    base = os.environ.get(OUTPUT_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit(text: str, out: str | None) -> None:
    p = _out_path(out)
    if p is None:
        sys.stdout.write(text)
    else:
        p.write_text(text)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    return max(1, int(os.environ.get(THREADS_ENV, "1")))


def _graphs_from_args(args) -> list[tuple[str | None, Graph]]:
    if args.family:
        s = parse_spec(args.family)
        return [(str(s), build(s))]
    if args.g6:
        return [(None, decode(args.g6))]
    return [(None, g) for g in read_graph6(args.file)]


def _describe(label: str | None, g: Graph) -> dict:
    dm = distances(g)
    bct = block_cut_tree(g)
    prof = center_median(g)
    row = {
        "graph6": encode(g),
        "n": g.n,
        "m": g.m,
        "wiener": dm.wiener,
        "diameter": dm.diameter,
        "cut_vertices": list(bct.cut_vertices),
        "blocks": [list(b) for b in bct.blocks],
        "pendant_flags": list(bct.pendant_flags),
        "center": list(prof.center),
        "median": list(prof.median),
        "center_median_distance": prof.center_median_distance,
    }
    if label is not None:
        row["family"] = label
        try:
            row["closed_form"] = closed_form_wiener(parse_spec(label))
        except NoClosedForm:
            row["closed_form"] = None
    return row


def cmd_wiener(args) -> int:
    lines = [json.dumps(_describe(label, g), sort_keys=True) for label, g in _graphs_from_args(args)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _run_shards(fn, kwargs: dict, jobs: int, shard: tuple[int, int]) -> SearchReport:
    if jobs == 1 or shard != (0, 1):
        return fn(shard=shard, **kwargs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_call, fn, dict(kwargs, shard=(i, jobs))) for i in range(jobs)]
        return merge_reports(f.result() for f in futures)


def _call(fn, kwargs):
    return fn(**kwargs)


def _report_out(report: SearchReport, args) -> None:
    if args.no_timing:
        report.elapsed_ms = 0
    _emit(report.to_json(), args.out)


def cmd_search(args) -> int:
    flt = FamilyFilter(args.n, diameter=args.diameter, cut_vertices=args.cut_vertices)
    report = _run_shards(search, {"flt": flt, "trees": args.trees, "source": args.source},
                         _jobs(args), args.shard)
    _report_out(report, args)
    return 0


def cmd_verify_djw(args) -> int:
    report = _run_shards(verify_djw, {"d": args.d, "source": args.source, "trees_only": args.trees},
                         _jobs(args), args.shard)
    _report_out(report, args)
    return 1 if report.counterexamples else 0


def cmd_edge_minimal(args) -> int:
    classes = edge_minimal_classes(args.n, args.k, args.d, exclude_tree_reducible=args.not_tree_reducible)
    rows = []
    for g in classes:
        rows.append({"graph6": encode(g), "code": canonical_code(g).hex,
                     "wiener": distances(g).wiener,
                     "tree_reducible": is_reducible_to_tree(g, args.d)[0]})
    out = {"n": args.n, "cut_vertices": args.k, "diameter": args.d,
           "not_tree_reducible_only": args.not_tree_reducible, "classes": rows}
    _emit(json.dumps(out, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def cmd_improve(args) -> int:
    (label, t), *rest = _graphs_from_args(args)
    if rest:
        raise WienerKitError("improve takes a single tree")
    dm = distances(t)
    out = {"before": {"graph6": encode(t), "wiener": dm.wiener, "diameter": dm.diameter}, "steps": []}
    while True:
        step = improvement_step(t)
        t = step.tree
        out["steps"].append({
            "case": step.case, "mirrored": step.mirrored, "vertex": step.vertex,
            "articulation": step.articulation, "target": step.target,
            "wiener_before": step.wiener_before, "wiener_after": step.wiener_after,
            "graph6": encode(t),
        })
        if not args.until_covered:
            break
        if diametral_path_cover_check(t).covered:
            break
    _emit(json.dumps(out, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def cmd_tables(args) -> int:
    ids = tables.TABLE_IDS if args.id == "all" else (args.id,)
    status = 0
    outdir = args.out_dir or os.environ.get(OUTPUT_ENV)
    for table_id in ids:
        if args.write_golden:
            fresh, ok = tables.fresh_text(table_id), True
            target = Path(__file__).parent / "golden" / f"{table_id}.json"
            target.parent.mkdir(exist_ok=True)
            target.write_text(fresh)
        else:
            ok, fresh = tables.check(table_id)
        if outdir:
            Path(outdir).mkdir(parents=True, exist_ok=True)
            (Path(outdir) / f"{table_id}.json").write_text(fresh)
        else:
            sys.stdout.write(fresh)
        if not ok:
            status = 1
            diff = difflib.unified_diff(tables.golden_text(table_id).splitlines(True), fresh.splitlines(True),
                                        f"golden/{table_id}.json", "fresh")
            sys.stderr.write("".join(diff))
        print(f"{table_id}: {'matches golden' if ok else 'DIFFERS from golden'}", file=sys.stderr)
    return status


def cmd_merge(args) -> int:
    reports = [SearchReport.from_json(Path(p).read_text()) for p in args.reports]
    merged = merge_reports(reports)
    _report_out(merged, args)
    return 1 if merged.counterexamples else 0


def cmd_g6cat(args) -> int:
    flt = None
    if args.n is not None:
        flt = FamilyFilter(args.n, diameter=args.diameter, cut_vertices=args.cut_vertices)
    elif args.diameter is not None or args.cut_vertices is not None or args.generate:
        raise WienerKitError("--n is required with --diameter, --cut-vertices or --generate")
    if args.generate:
        stream = enumerate_trees(flt) if args.trees else enumerate_connected_graphs(flt)
    else:
        def stream_files():
            for name in args.files or ["-"]:
                for g in read_graph6(name):
                    if flt is not None and not flt.matches(g):
                        continue
                    if args.trees and not g.is_tree():
                        continue
                    yield g
        stream = stream_files()
    if args.count:
        print(sum(1 for _ in stream))
        return 0
    p = _out_path(args.out)
    write_graph6(stream, p if p is not None else "-")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wienerkit", description="Wiener index workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--family", help="family spec such as lollipop:n=9,g=7")
        g.add_argument("--g6", help="one graph6 record")
        g.add_argument("--file", help="graph6 file, '-' for stdin")

    def filters(p, need_n=True):
        p.add_argument("--n", type=int, required=need_n)
        p.add_argument("--diameter", type=int)
        p.add_argument("--cut-vertices", type=int)
        p.add_argument("--trees", action="store_true", help="trees only")

    def run_opts(p):
        p.add_argument("--source", default=None, help="'generated' (default) or a graph6 catalog")
        p.add_argument("--shard", type=_shard, default=(0, 1), help="i/t: run shard i of t")
        p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${THREADS_ENV} or 1)")
        p.add_argument("--out", default=None)
        p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0")

    p = sub.add_parser("wiener", help="Wiener index and structure of a graph")
    graph_source(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("search", help="exhaustive maximum Wiener search")
    filters(p)
    run_opts(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-djw", help="check W(G) <= W(C_2d+1) at diameter d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trees", action="store_true")
    run_opts(p)
    p.set_defaults(func=cmd_verify_djw)

    p = sub.add_parser("edge-minimal", help="edge-minimal classes with n vertices, k cut vertices, diameter d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--not-tree-reducible", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_edge_minimal)

    p = sub.add_parser("improve", help="move an off-path branch to raise W at fixed diameter")
    graph_source(p)
    p.add_argument("--until-covered", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("tables", help="rebuild the reference tables and diff against golden copies")
    p.add_argument("--id", default="all", choices=list(tables.TABLE_IDS) + ["all"])
    p.add_argument("--out-dir", default=None)
    p.add_argument("--write-golden", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("merge", help="combine shard reports")
    p.add_argument("reports", nargs="+")
    p.add_argument("--out", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("g6cat", help="filter, count or generate graph6 streams")
    p.add_argument("files", nargs="*")
    filters(p, need_n=False)
    p.add_argument("--generate", action="store_true", help="generate instead of reading")
    p.add_argument("--count", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_g6cat)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WienerKitError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
