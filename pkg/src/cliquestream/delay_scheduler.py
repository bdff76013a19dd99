"""Bounded-delay emission on top of the batch traversal.

``list_mc`` drives the traversal with the batched children kernel and
yields the raw step-event stream.  ``run_strict`` replays that stream
through a FIFO queue: a bootstrapping phase first banks ``boot_target``
cliques without printing anything, then the listing phase dequeues one
clique whenever at least ``tau_delay`` work units accrued since the last
print (or the queue overflows ``boot_target + n^2``), and a final drain
empties the queue once the traversal ends.

Work units are the operation counts charged by the kernels: every
children invocation reports its word-op/multiply-add count and every pop
reports its completion cost.  Default configs come from a calibration
pass that measures the first batch; the c0/c1 multipliers default to 2 so
the printing rate stays safely below the collection rate and the queue
never starves between boot and drain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .batch_dfs import (
    BATCH_COMPLETED,
    CLIQUE_COLLECTED,
    TRAVERSAL_ENDED,
    StepEvent,
    TraversalStats,
    step_events,
)
from .graph import Graph, VertexSet
from .kernels import children_batch
from .rs_tree import OpCounter, root


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class DelayConfig:
    """Scheduler knobs: work units per guaranteed print, boot queue target,
    and the calibration multipliers that produced them."""

    tau_delay: int
    boot_target: int
    c0: int = 2
    c1: int = 2

    def __post_init__(self) -> None:
        if self.tau_delay < 1:
            raise ValueError("tau_delay must be at least 1")
        if self.boot_target < 1:
            raise ValueError("boot_target must be at least 1")


class EmissionQueue:
    """FIFO of cliques with a high-water mark."""

    __slots__ = ("_items", "high_water")

    def __init__(self) -> None:
        self._items: deque[VertexSet] = deque()
        self.high_water = 0

    def __len__(self) -> int:
        return len(self._items)

    def append(self, clique: VertexSet) -> None:
        self._items.append(clique)
        if len(self._items) > self.high_water:
            self.high_water = len(self._items)

    def popleft(self) -> VertexSet:
        return self._items.popleft()


@dataclass(frozen=True)
class Emission:
    """One printed clique with its scheduling context."""

    clique: VertexSet
    ordinal: int
    cost_units: int
    queue_size: int
    stack_cliques: int


@dataclass
class StrictRunReport:
    """Observability for one strict-mode run (filled as the run proceeds)."""

    config: DelayConfig | None = None
    stats: TraversalStats = field(default_factory=TraversalStats)
    boot_exhausted: bool = False
    boot_collected: int = 0
    queue_peak: int = 0
    max_event_cost: int = 0
    starved_checks: int = 0
    emitted: int = 0


def list_mc(
    g: Graph,
    kernel: str = "bitset",
    capacity: int | None = None,
    stats: TraversalStats | None = None,
) -> Iterator[StepEvent]:
    """Event stream of the full listing: construct the root, then batch-DFS
    with the chosen children kernel.  Default capacity is n^2."""
    cap = capacity if capacity is not None else max(1, g.n * g.n)
    counter = OpCounter()

    def children_fn(cliques: list[VertexSet]):
        before = counter.ops
        specs = children_batch(g, cliques, kernel=kernel, counter=counter)
        return specs, counter.delta(before)

    root_counter = OpCounter()
    root_clique = root(g, root_counter)
    return step_events(
        g, root_clique, children_fn, cap, stats=stats, root_cost=root_counter.ops
    )


def calibrate(
    g: Graph,
    kernel: str = "bitset",
    capacity: int | None = None,
    c0: int = 2,
    c1: int = 2,
) -> DelayConfig:
    """Derive a DelayConfig by measuring the first batch of a throwaway run.

    tau_delay = c0 * ceil(first-batch cost / first-batch size) and
    boot_target = c1 * n * ceil(first-batch cost / tau_delay).  The first
    batch holds only the root, whose children computation carries the full
    per-batch overhead, so the resulting tau_delay upper-bounds the
    per-clique cost of later batches.
    """
    batch_cost = 0
    batch_size = 0
    for event in list_mc(g, kernel=kernel, capacity=capacity):
        if event.kind == CLIQUE_COLLECTED:
            batch_size += 1
        elif event.kind == BATCH_COMPLETED:
            batch_cost = event.cost
            break
        else:
            break
    batch_cost = max(1, batch_cost)
    batch_size = max(1, batch_size)
    tau = max(1, c0 * _ceil_div(batch_cost, batch_size))
    boot_target = max(1, c1 * g.n * _ceil_div(batch_cost, tau))
    return DelayConfig(tau_delay=tau, boot_target=boot_target, c0=c0, c1=c1)


def boot(events: Iterator[StepEvent], q: EmissionQueue, boot_target: int) -> bool:
    """Bank cliques into ``q`` until it holds ``boot_target`` of them and the
    current batch iteration has completed.  Prints nothing.  Returns True
    when the stream ran out first (the queue then holds every clique).
    """
    at_boundary = False
    while len(q) < boot_target or not at_boundary:
        event = next(events, None)
        if event is None:
            return True
        if event.kind == CLIQUE_COLLECTED:
            q.append(event.clique)
        elif event.kind == TRAVERSAL_ENDED:
            return True
        at_boundary = event.kind == BATCH_COMPLETED
    return False


def run_strict(
    g: Graph,
    cfg: DelayConfig | None = None,
    kernel: str = "bitset",
    capacity: int | None = None,
    report: StrictRunReport | None = None,
) -> Iterator[Emission]:
    """Boot, then print one queued clique per tau_delay work units.

    Yields every maximal clique exactly once, in queue-insertion (i.e.
    collection) order.  The queue never exceeds boot_target + n^2 + 1
    entries thanks to the forced-drain guard, and nothing is printed
    before boot returns.
    """
    if cfg is None:
        cfg = calibrate(g, kernel=kernel, capacity=capacity)
    if report is None:
        report = StrictRunReport()
    report.config = cfg
    stats = report.stats
    events = list_mc(g, kernel=kernel, capacity=capacity, stats=stats)
    q = EmissionQueue()
    exhausted = boot(events, q, cfg.boot_target)
    report.boot_exhausted = exhausted
    report.boot_collected = len(q)
    overflow = cfg.boot_target + g.n * g.n
    counter = 0
    ordinal = 0
    if not exhausted:
        for event in events:
            counter += event.cost
            if event.cost > report.max_event_cost:
                report.max_event_cost = event.cost
            if event.kind == CLIQUE_COLLECTED:
                q.append(event.clique)
            if (len(q) > 0 and counter >= cfg.tau_delay) or len(q) > overflow:
                clique = q.popleft()
                ordinal += 1
                yield Emission(clique, ordinal, counter, len(q), stats.stack_cliques)
                counter = 0
            elif (
                counter >= cfg.tau_delay
                and len(q) == 0
                and event.kind != TRAVERSAL_ENDED
            ):
                report.starved_checks += 1
    while len(q):
        # final drain; the first drained clique inherits the residual counter
        clique = q.popleft()
        ordinal += 1
        yield Emission(clique, ordinal, counter, len(q), stats.stack_cliques)
        counter = 0
    report.queue_peak = q.high_water
    report.emitted = ordinal
