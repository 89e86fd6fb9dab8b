"""Command-line front end.

Exit codes: 0 positive verdict or successful generation, 1 negative
verdict, 2 usage or input error, 3 size guard refusal.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bipath, exact, reach, reductions
from .core import NON_STRICT, STRICT, ParseError, TemporalGraph, classify, parse_temporal_graph, serialize_temporal_graph, to_dot

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", help="journeys use increasing labels")
    mode.add_argument("--non-strict", dest="strict", action="store_false", help="journeys use non-decreasing labels (default)")
    p.add_argument("-o", "--output", type=Path, help="write output here instead of stdout")
    p.add_argument("--format", choices=("text", "jsonl", "dot"), default="text")
    p.add_argument("--max-n", type=int, default=exact.DEFAULT_MAX_N, help="vertex limit for spanning tree search")
    p.add_argument("--max-edges", type=int, default=exact.DEFAULT_MAX_FREE_EDGES, help="non-critical edge limit for bi-spanner search")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="tgreach", description="Reachability, bi-paths and spanners in temporal graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("graph", type=Path, help="temporal graph in .tg format")
        return p

    graph_cmd("classify", "report simple / proper / happy")
    graph_cmd("connected", "temporal connectivity")
    graph_cmd("pivots", "list pivot vertices with witness times")
    p = graph_cmd("bipaths", "dump triplet sets from a source")
    p.add_argument("source", type=int)
    graph_cmd("biconnected", "bidirectional connectivity")
    graph_cmd("bispanner", "union of one bi-path per vertex pair")
    graph_cmd("tst", "exhaustive temporal spanning tree search")
    p = graph_cmd("min-bispanner", "minimum bi-spanner by exhaustive search")
    p.add_argument("-k", type=int, default=None, help="only accept bi-spanners with at most k edges")
    graph_cmd("critical-edges", "edges every bi-spanner must keep")
    graph_cmd("dot", "Graphviz export")
    for name, kind in (("gen-sat-gadget", "DIMACS CNF"), ("gen-setcover-gadget", "Set Cover")):
        p = sub.add_parser(name, parents=[common], help=f"reduction gadget from a {kind} file")
        p.add_argument("instance", type=Path)
    for name, kind in (("verify-sat-reduction", "DIMACS CNF"), ("verify-setcover-reduction", "Set Cover")):
        p = sub.add_parser(name, parents=[common], help=f"check the reduction on a {kind} file")
        p.add_argument("instance", type=Path)
    return parser


def _num(x):
    if x is None or (isinstance(x, float) and math.isinf(x)):
        return None
    return int(x)


def _fmt_time(x) -> str:
    if x == -math.inf:
        return "-inf"
    if x == math.inf:
        return "inf"
    return str(int(x))


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []

    def record(self, text: str, **data):
        self.lines.append(json.dumps(data, sort_keys=True) if self.fmt == "jsonl" else text)

    def graph(self, G: TemporalGraph, **data):
        if self.fmt == "dot":
            self.lines.append(to_dot(G).rstrip("\n"))
        elif self.fmt == "jsonl":
            edges = [[u, v, list(labs)] for (u, v), labs in G.edges.items()]
            self.lines.append(json.dumps({**data, "n": G.n, "edges": edges}, sort_keys=True))
        else:
            self.lines.append(serialize_temporal_graph(G))

    def text(self) -> str:
        return "\n".join(self.lines) + "\n" if self.lines else ""


def _cmd_graph(args, out: _Out) -> int:
    G = parse_temporal_graph(args.graph.read_text())
    setting = STRICT if args.strict else NON_STRICT
    cmd = args.command

    if cmd == "classify":
        c = classify(G)
        out.record(f"simple={str(c.simple).lower()} proper={str(c.proper).lower()} happy={str(c.happy).lower()}",
                   simple=c.simple, proper=c.proper, happy=c.happy)
        return EXIT_OK
    if cmd == "dot":
        out.lines.append(to_dot(G).rstrip("\n"))
        return EXIT_OK
    if cmd == "connected":
        ok = reach.is_temporally_connected(G, setting)
        out.record("connected" if ok else "not connected", connected=ok)
        return EXIT_OK if ok else EXIT_NEGATIVE
    if cmd == "pivots":
        pivots = reach.find_pivots(G, setting)
        for p, t in pivots:
            out.record(f"pivot {p} {t}", pivot=p, time=t)
        if not pivots:
            out.record("no pivot", pivot=None)
        return EXIT_OK if pivots else EXIT_NEGATIVE
    if cmd == "bipaths":
        if not 0 <= args.source < G.n:
            raise _UsageError(f"source {args.source} out of range [0, {G.n})")
        res = bipath.compute_bipaths(G, args.source, setting)
        for v in G.vertices():
            trips = list(res[v])
            text = f"{v}: " + " ".join(
                f"({'-' if t.via is None else t.via},{_fmt_time(t.arrive)},{_fmt_time(t.depart)})" for t in trips
            )
            out.record(text.rstrip(), vertex=v, triplets=[[t.via, _num(t.arrive), _num(t.depart)] for t in trips])
        return EXIT_OK
    if cmd == "biconnected":
        ok = bipath.is_bidirectionally_connected(G, setting)
        out.record("bidirectionally connected" if ok else "not bidirectionally connected", biconnected=ok)
        return EXIT_OK if ok else EXIT_NEGATIVE
    if cmd == "bispanner":
        H = bipath.build_bispanner(G, setting)
        if H is None:
            out.record("not bidirectionally connected", bispanner=None)
            return EXIT_NEGATIVE
        out.graph(H, edges_kept=H.num_edges())
        return EXIT_OK
    if cmd == "tst":
        res = exact.tst_bruteforce(G, setting, max_n=args.max_n)
        if not res.exists:
            out.record(f"verdict {res.verdict.value}", verdict=res.verdict.value)
            return EXIT_NEGATIVE
        if out.fmt == "text":
            out.record(f"verdict {res.verdict.value}")
        out.graph(res.tree, verdict=res.verdict.value)
        return EXIT_OK
    if cmd == "min-bispanner":
        found = exact.min_bispanner_bruteforce(G, setting, max_k=args.k, max_free_edges=args.max_edges)
        if found is None:
            out.record("no bi-spanner" + (f" with at most {args.k} edges" if args.k is not None else ""), k=None)
            return EXIT_NEGATIVE
        k, H = found
        if out.fmt == "text":
            out.record(f"k {k}")
        out.graph(H, k=k)
        return EXIT_OK
    if cmd == "critical-edges":
        if not bipath.is_bidirectionally_connected(G, setting):
            out.record("not bidirectionally connected", edges=None)
            return EXIT_NEGATIVE
        for u, v in exact.critical_bispanner_edges(G, setting):
            out.record(f"{u} {v}", edge=[u, v])
        return EXIT_OK
    raise AssertionError(cmd)


def _write_gadget(G, meta, args, out: _Out) -> None:
    out.graph(G, kind=meta.kind)
    if args.output is not None:
        Path(str(args.output) + ".meta").write_text(meta.to_text())


def _cmd_instance(args, out: _Out) -> int:
    text = args.instance.read_text()
    cmd = args.command
    if cmd == "gen-sat-gadget":
        G, meta = reductions.sat_to_tst_gadget(reductions.parse_dimacs(text))
        _write_gadget(G, meta, args, out)
        return EXIT_OK
    if cmd == "gen-setcover-gadget":
        G, meta = reductions.setcover_to_kbs_gadget(reductions.parse_setcover(text))
        _write_gadget(G, meta, args, out)
        return EXIT_OK
    if cmd == "verify-sat-reduction":
        phi = reductions.parse_dimacs(text)
        sat = reductions.sat_bruteforce(phi) is not None
        G, _ = reductions.sat_to_tst_gadget(phi)
        verdicts = {s.value: exact.tst_bruteforce(G, s, max_n=args.max_n).exists for s in (STRICT, NON_STRICT)}
        ok = all(v == sat for v in verdicts.values())
        out.record(
            f"satisfiable={str(sat).lower()} tst-strict={str(verdicts['strict']).lower()} "
            f"tst-non-strict={str(verdicts['non-strict']).lower()} verified={str(ok).lower()}",
            satisfiable=sat, tst=verdicts, verified=ok,
        )
        return EXIT_OK if ok else EXIT_NEGATIVE
    if cmd == "verify-setcover-reduction":
        inst = reductions.parse_setcover(text)
        k_star, cover = reductions.setcover_bruteforce(inst)
        G, meta = reductions.setcover_to_kbs_gadget(inst)
        found = exact.min_bispanner_bruteforce(G, NON_STRICT, max_free_edges=args.max_edges)
        size = None if found is None else found[0]
        ok = size == meta.expected_size(k_star)
        out.record(
            f"cover={k_star} bispanner={size} expected={meta.expected_size(k_star)} verified={str(ok).lower()}",
            cover=k_star, cover_witness=list(cover), bispanner=size, expected=meta.expected_size(k_star), verified=ok,
        )
        return EXIT_OK if ok else EXIT_NEGATIVE
    raise AssertionError(cmd)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"tgreach: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    out = _Out(args.format)
    try:
        if hasattr(args, "graph"):
            code = _cmd_graph(args, out)
        else:
            code = _cmd_instance(args, out)
    except exact.SizeGuardError as exc:
        print(f"tgreach: refused: {exc}", file=stderr)
        return EXIT_GUARD
    except (ParseError, reductions.InstanceError, _UsageError, OSError, ValueError) as exc:
        print(f"tgreach: {exc}", file=stderr)
        return EXIT_USAGE
    text = out.text()
    if args.output is not None:
        args.output.write_text(text)
    else:
        stdout.write(text)
    if code == EXIT_NEGATIVE and out.lines:
        print(f"tgreach: {args.command}: {out.lines[0].splitlines()[0]}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())
