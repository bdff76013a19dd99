"""Command-line driver: ingestion, enumeration modes, verification, traces.

Graphs come from edge-list files (``u v`` per line, optional ``n N``
header, ``#`` comments), DIMACS files (``p edge N M`` then ``e u v``
lines), or generator specs passed straight to ``--input``:
``gnp:N:P`` (seeded by ``--seed``), ``moon-moser:N``, ``complete:N``.

Cliques stream to stdout one per line as ascending 1-based vertex ids;
diagnostics go to stderr.  Emission order is deterministic given
(graph, kernel, capacity, mode).  ``--trace`` writes one CSV row per
printed clique: print_ordinal, cost_units, queue_size, stack_cliques.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import delay_scheduler, oracle, rs_tree
from .batch_dfs import CLIQUE_COLLECTED, TRAVERSAL_ENDED, TraversalStats
from .graph import Graph, VertexSet
from .oracle import OracleLimitError

TRACE_SCHEMA = "# cliquestream trace v1"
TRACE_HEADER = "print_ordinal,cost_units,queue_size,stack_cliques"


class ParseError(ValueError):
    """Malformed graph input; message carries the offending line number."""


@dataclass
class IngestReport:
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0
    warnings: list[str] = field(default_factory=list)


def _finish_edges(
    pairs: list[tuple[int, int]], n: int, report: IngestReport | None
) -> Graph:
    seen: set[tuple[int, int]] = set()
    clean: list[tuple[int, int]] = []
    loops = 0
    dups = 0
    for u, v in pairs:
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dups += 1
            continue
        seen.add(key)
        clean.append(key)
    if report is not None:
        report.self_loops_dropped += loops
        report.duplicates_dropped += dups
    return Graph.from_edges(n, clean)


def parse_edge_list(text: str, report: IngestReport | None = None) -> Graph:
    """Parse ``u v`` lines; an optional ``n N`` header declares the vertex
    count (otherwise the largest id wins).  Self-loops and duplicates are
    dropped and counted."""
    declared = None
    pairs: list[tuple[int, int]] = []
    max_id = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None:
                raise ParseError(f"line {lineno}: duplicate 'n' header")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            try:
                declared = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if declared < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertex ids must be >= 1")
        if declared is not None and (u > declared or v > declared):
            raise ParseError(
                f"line {lineno}: vertex id exceeds declared count {declared}"
            )
        pairs.append((u, v))
        max_id = max(max_id, u, v)
    n = declared if declared is not None else max_id
    if n == 0:
        raise ParseError("no vertices: empty input without an 'n' header")
    return _finish_edges(pairs, n, report)


def parse_dimacs(text: str, report: IngestReport | None = None) -> Graph:
    """Parse DIMACS: one ``p edge N M`` header, then ``e u v`` lines.

    ``c`` comment lines are skipped.  A mismatch between declared and seen
    edge counts is a warning, not an error; a missing header is fatal.
    """
    n = None
    declared_m = 0
    seen_m = 0
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge N M'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad header numbers") from None
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        if parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex id") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex id outside 1..{n}")
            pairs.append((u, v))
            seen_m += 1
            continue
        raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("missing 'p edge N M' header")
    if seen_m != declared_m:
        msg = f"header declares {declared_m} edges but {seen_m} were found"
        if report is not None:
            report.warnings.append(msg)
    return _finish_edges(pairs, n, report)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


@dataclass
class RunConfig:
    input: str
    fmt: str = "edges"
    kernel: str = "bitset"
    capacity: int | None = None
    mode: str = "plain"
    first: int | None = None
    verify: bool = False
    trace: str | None = None
    tau: int | None = None
    boot_target: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.first is not None and self.first < 1:
            raise ValueError("--first must be at least 1")
        if self.capacity is not None and self.capacity < 1:
            raise ValueError("--batch must be at least 1")
        if self.tau is not None and self.tau < 1:
            raise ValueError("--tau must be at least 1")
        if self.boot_target is not None and self.boot_target < 1:
            raise ValueError("--boot-target must be at least 1")


def load_graph(cfg: RunConfig, report: IngestReport) -> Graph:
    """Read the input path, or build a generator graph from a spec string."""
    spec = cfg.input
    if spec.startswith("gnp:"):
        _, n, p = spec.split(":")
        return Graph.gnp(int(n), float(p), seed=cfg.seed)
    if spec.startswith("moon-moser:"):
        return Graph.complete_multipartite_triples(int(spec.split(":")[1]))
    if spec.startswith("complete:"):
        return Graph.complete(int(spec.split(":")[1]))
    with open(spec, "r", encoding="utf-8") as fh:
        text = fh.read()
    if cfg.fmt == "dimacs":
        return parse_dimacs(text, report)
    return parse_edge_list(text, report)


def _format_clique(c: VertexSet) -> str:
    return " ".join(map(str, c))


def _plain_emissions(g: Graph, cfg: RunConfig, stats: TraversalStats):
    """(clique, cost-since-last-print, queue_size, stack) tuples for plain mode."""
    cost = 0
    ordinal = 0
    for event in delay_scheduler.list_mc(
        g, kernel=cfg.kernel, capacity=cfg.capacity, stats=stats
    ):
        cost += event.cost
        if event.kind == CLIQUE_COLLECTED:
            ordinal += 1
            yield event.clique, cost, 0, stats.stack_cliques
            cost = 0
        elif event.kind == TRAVERSAL_ENDED:
            return


def _strict_emissions(g: Graph, cfg: RunConfig, stats: TraversalStats):
    delay_cfg = None
    if cfg.tau is not None or cfg.boot_target is not None:
        base = delay_scheduler.calibrate(g, kernel=cfg.kernel, capacity=cfg.capacity)
        delay_cfg = delay_scheduler.DelayConfig(
            tau_delay=cfg.tau if cfg.tau is not None else base.tau_delay,
            boot_target=(
                cfg.boot_target if cfg.boot_target is not None else base.boot_target
            ),
        )
    report = delay_scheduler.StrictRunReport(stats=stats)
    for em in delay_scheduler.run_strict(
        g, cfg=delay_cfg, kernel=cfg.kernel, capacity=cfg.capacity, report=report
    ):
        yield em.clique, em.cost_units, em.queue_size, em.stack_cliques


def _verify(g: Graph, emitted: list[VertexSet], prefix_only: bool, err) -> bool:
    reference = oracle.all_maximal_cliques(g)
    ref_set = {c.bits for c in reference}
    emitted_bits = [c.bits for c in emitted]
    duplicates = len(emitted_bits) - len(set(emitted_bits))
    not_maximal = sum(
        1 for c in emitted if not rs_tree.is_maximal_clique(g, c)
    )
    extra = sum(1 for b in set(emitted_bits) if b not in ref_set)
    missing = 0 if prefix_only else sum(
        1 for b in ref_set if b not in set(emitted_bits)
    )
    ok = duplicates == 0 and not_maximal == 0 and extra == 0 and missing == 0
    scope = f"first {len(emitted)}" if prefix_only else f"all {len(reference)}"
    if ok:
        print(f"VERIFY PASS: {scope} cliques match the oracle", file=err)
    else:
        print(
            "VERIFY FAIL: "
            f"missing={missing} extra={extra} duplicates={duplicates} "
            f"non_maximal={not_maximal}",
            file=err,
        )
    return ok


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one configured run.  Returns a process exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    report = IngestReport()
    try:
        g = load_graph(cfg, report)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    for warning in report.warnings:
        print(f"warning: {warning}", file=err)
    if report.self_loops_dropped or report.duplicates_dropped:
        print(
            f"normalized input: dropped {report.self_loops_dropped} self-loops, "
            f"{report.duplicates_dropped} duplicate edges",
            file=err,
        )
    stats = TraversalStats()
    emit = _plain_emissions if cfg.mode == "plain" else _strict_emissions
    emitted: list[VertexSet] = []
    trace_rows: list[tuple[int, int, int, int]] = []
    try:
        for clique, cost, queue_size, stack_cliques in emit(g, cfg, stats):
            emitted.append(clique)
            print(_format_clique(clique), file=out)
            trace_rows.append((len(emitted), cost, queue_size, stack_cliques))
            if cfg.first is not None and len(emitted) >= cfg.first:
                break
    except OracleLimitError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if cfg.trace:
        with open(cfg.trace, "w", encoding="utf-8") as fh:
            fh.write(TRACE_SCHEMA + "\n")
            fh.write(TRACE_HEADER + "\n")
            for row in trace_rows:
                fh.write(",".join(map(str, row)) + "\n")
    if cfg.verify:
        try:
            ok = _verify(g, emitted, prefix_only=cfg.first is not None, err=err)
        except OracleLimitError as exc:
            print(f"error: {exc}", file=err)
            return 2
        if not ok:
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cliquestream",
        description="List all maximal cliques of a graph, optionally with a "
        "strict bounded-delay output schedule.",
    )
    p.add_argument(
        "--input",
        required=True,
        help="graph file path, or generator spec gnp:N:P | moon-moser:N | complete:N",
    )
    p.add_argument("--format", dest="fmt", choices=["edges", "dimacs"], default="edges")
    p.add_argument("--kernel", choices=["naive", "rect", "bitset"], default="bitset")
    p.add_argument("--batch", type=int, default=None, help="batch capacity (default n^2)")
    p.add_argument("--mode", choices=["plain", "strict"], default="plain")
    p.add_argument("--first", type=int, default=None, help="stop after X cliques")
    p.add_argument(
        "--verify",
        action="store_true",
        help="check the output against the brute-force oracle",
    )
    p.add_argument("--trace", default=None, help="write a CSV trace to this path")
    p.add_argument("--tau", type=int, default=None, help="strict-mode delay override")
    p.add_argument(
        "--boot-target", type=int, default=None, help="strict-mode boot queue target"
    )
    p.add_argument("--seed", type=int, default=None, help="seed for gnp generation")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            input=args.input,
            fmt=args.fmt,
            kernel=args.kernel,
            capacity=args.batch,
            mode=args.mode,
            first=args.first,
            verify=args.verify,
            trace=args.trace,
            tau=args.tau,
            boot_target=args.boot_target,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
