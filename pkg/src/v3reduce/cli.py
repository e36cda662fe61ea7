"""Command-line interface.

Graphs travel as graph6 lines on stdin/stdout; reports are JSON. Exit
status is 0 on success, 1 for malformed input or usage, 2 when a graph
invariant or a theorem check fails. Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import TextIO

from .census import (
    classify,
    count_configurations,
    enumerate_census,
    verify_oracle,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    write_census,
)
from .codec import config_from_levi, levi_from_config, parse_config, parse_graph6, parse_lcf, write_config, write_dot, write_graph6
from .errors import ConfigurationError, FormatError, InvalidGraph, InvalidMove, ParameterOutOfRange, TheoremViolation, V3Error
from .families import d_graph, gp, heawood, pappus, t_graph, tutte_coxeter
from .graph import WHITE, Graph, V3Graph, girth, validate_v3
from .reduce import AugmentationMove, augment, iter_reductions, reduce_to_terminal

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="v3reduce", description="Reductions of (v_3) configurations and their Levi graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="emit a named graph as graph6")
    s.add_argument("spec", help="heawood | pappus | tutte-coxeter | d:N | t1:N | t2:N | t3:N | gp:N,K | lcf:CODE")

    sub.add_parser("girth", help="girth of each graph6 line on stdin")

    s = sub.add_parser("validate", help="check each graph6 line is a (v_3) graph")
    s.add_argument("--min-girth", type=int, default=6)

    s = sub.add_parser("convert", help="convert between graph6, configuration text and DOT")
    s.add_argument("--from", dest="src", choices=("graph6", "config"), required=True)
    s.add_argument("--to", dest="dst", choices=("graph6", "config", "dot"), required=True)
    s.add_argument("--dual", action="store_true", help="swap the roles of points and lines")

    s = sub.add_parser("reduce", help="list reductions or reduce to a terminal graph")
    s.add_argument("--mode", choices=("A", "B"), default="B")
    s.add_argument("--min-girth", type=int, default=6)
    s.add_argument("--to-terminal", action="store_true")
    s.add_argument("--trace", metavar="OUT.json")

    s = sub.add_parser("classify", help="A-/B-irreducibility report as JSON")
    s.add_argument("--min-girth", type=int, default=6)

    s = sub.add_parser("augment", help="apply an A- or B-augmentation")
    s.add_argument("--edges", required=True, help='disjoint edges, e.g. "3-10,5-12"')
    s.add_argument("--variant", choices=("a", "b"))
    s.add_argument("--min-girth", type=int, default=6)

    s = sub.add_parser("census", help="write the census of connected (v_3) graphs")
    s.add_argument("--max-v", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("verify", help="check a theorem over the census")
    s.add_argument("what", choices=("thm1", "thm2", "thm3", "oracle"))
    s.add_argument("--max-v", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    return p


def gen_graph(spec: str) -> Graph:
    named = {"heawood": heawood, "pappus": pappus, "tutte-coxeter": tutte_coxeter}
    if spec in named:
        return named[spec]().graph
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise UsageError(f"unknown graph spec {spec!r}")
    if kind == "lcf":
        return parse_lcf(arg.strip().strip("\"'"))
    try:
        if kind == "d":
            return d_graph(int(arg)).graph
        if kind in ("t1", "t2", "t3"):
            return t_graph(int(kind[1]), int(arg)).graph
        if kind == "gp":
            n, k = (int(t) for t in arg.split(","))
            return gp(n, k)
    except ValueError as exc:
        if isinstance(exc, ParameterOutOfRange):
            raise
        raise UsageError(f"bad parameters in {spec!r}") from None
    raise UsageError(f"unknown graph spec {spec!r}")


def _read_graphs(stdin: TextIO) -> list[Graph]:
    out = []
    for line in stdin:
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(parse_graph6(line))
    return out


def _parse_edges(text: str) -> list[tuple[int, int]]:
    nums = [int(t) for t in re.findall(r"\d+", text)]
    if not nums or len(nums) % 2:
        raise UsageError(f"--edges needs an even number of vertex ids, got {text!r}")
    return list(zip(nums[::2], nums[1::2]))


def _orient(g: V3Graph, edges) -> tuple[tuple[int, int], ...]:
    out = []
    for a, b in edges:
        if not (0 <= a < g.n and 0 <= b < g.n):
            raise InvalidMove(f"vertex out of range in edge {a}-{b}")
        out.append((a, b) if g.colors[a] == WHITE else (b, a))
    return tuple(out)


def _emit_json(doc: dict, stdout: TextIO) -> None:
    stdout.write(json.dumps(doc) + "\n")


def _cmd(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    status = 0
    if args.command == "gen":
        stdout.write(write_graph6(gen_graph(args.spec)) + "\n")

    elif args.command == "girth":
        for g in _read_graphs(stdin):
            stdout.write(f"{girth(g)}\n")

    elif args.command == "validate":
        for g in _read_graphs(stdin):
            try:
                validate_v3(g, args.min_girth)
                stdout.write("valid\n")
            except InvalidGraph as exc:
                stdout.write(f"invalid {type(exc).__name__}: {exc}\n")
                status = 2

    elif args.command == "convert":
        if args.src == "config":
            graphs = [levi_from_config(parse_config(stdin.read()))]
        else:
            graphs = _read_graphs(stdin)
        for g in graphs:
            if args.dst == "graph6":
                stdout.write(write_graph6(g.graph if isinstance(g, V3Graph) else g) + "\n")
                continue
            vg = g if isinstance(g, V3Graph) else validate_v3(g, 6)
            if args.dst == "config":
                stdout.write(write_config(config_from_levi(vg, dual=args.dual)))
            else:
                if args.dual:
                    vg = V3Graph(vg.graph, tuple(1 - c for c in vg.colors), vg.min_girth)
                stdout.write(write_dot(vg))

    elif args.command == "reduce":
        if args.to_terminal and (args.mode != "B" or args.min_girth != 6):
            raise UsageError("--to-terminal uses B-reductions at girth 6")
        traces = []
        for g in _read_graphs(stdin):
            vg = validate_v3(g, args.min_girth)
            if args.to_terminal:
                trace = reduce_to_terminal(vg)
                traces.append(trace.to_dict())
                if args.trace:
                    last = trace.steps[-1][1] if trace.steps else write_graph6(vg.graph)
                    stdout.write(last + "\n")
                else:
                    _emit_json(trace.to_dict(), stdout)
            else:
                for _, h in iter_reductions(vg, args.min_girth, args.mode):
                    stdout.write(write_graph6(h.graph) + "\n")
        if args.trace:
            if not args.to_terminal:
                raise UsageError("--trace requires --to-terminal")
            doc = traces[0] if len(traces) == 1 else {"schema_version": SCHEMA_VERSION, "traces": traces}
            with open(args.trace, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")

    elif args.command == "classify":
        for g in _read_graphs(stdin):
            _emit_json(classify(validate_v3(g, args.min_girth), args.min_girth).to_dict(), stdout)

    elif args.command == "augment":
        pairs = _parse_edges(args.edges)
        want = {"a": 2, "b": 3}.get(args.variant, len(pairs))
        if len(pairs) != want or want not in (2, 3):
            raise UsageError(f"variant {args.variant or '?'} needs {want} edges, got {len(pairs)}")
        for g in _read_graphs(stdin):
            vg = validate_v3(g, args.min_girth)
            h = augment(vg, AugmentationMove(_orient(vg, pairs)), args.min_girth)
            stdout.write(write_graph6(h.graph) + "\n")

    elif args.command == "census":
        levels = enumerate_census(args.max_v, args.jobs)
        files = write_census(levels, args.out)
        for level in levels:
            print(f"v={level.v}: {len(level)} graphs", file=stderr)
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "levels": [{"v": lv.v, "count": len(lv), "configurations": count_configurations(lv)} for lv in levels],
                "files": [str(f) for f in files],
            },
            stdout,
        )

    elif args.command == "verify":
        fn = {"thm1": verify_theorem1, "thm2": verify_theorem2, "thm3": verify_theorem3, "oracle": verify_oracle}[args.what]
        report = fn(args.max_v, jobs=args.jobs)
        _emit_json(report, stdout)
        if not report["pass"]:
            print(f"{args.what} verification FAILED", file=stderr)
            status = 2
    return status


def run(argv: list[str], stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _cmd(args, stdin, stdout, stderr)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except (InvalidGraph, TheoremViolation) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 2
    except (FormatError, ConfigurationError, InvalidMove, ParameterOutOfRange) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except V3Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
