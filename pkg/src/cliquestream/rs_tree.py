"""Reverse-search tree primitives over the maximal cliques of a graph.

The tree is rooted at the lexicographically greatest maximal clique.  Every
other maximal clique ``C`` has an *index* ``i(C)`` (the greatest vertex ``i``
such that completing the prefix ``C_{<i}`` does not give back ``C``) and a
*parent* (the completion of that prefix), which is always lexicographically
greater than ``C``.  Children are reconstructed from a parent ``P`` and an
index ``i`` as the completion of ``(P_{<i} & N(i)) | {i}``.

All operations are pure functions of ``(Graph, inputs)`` and safe to call
concurrently.  Functions accept an optional :class:`OpCounter` that gets
charged with a word-level operation count; the model charges ``words(n)``
per n-bit mask operation, matching a packed bit-vector machine.
"""

from __future__ import annotations

from .graph import Graph, VertexSet, below_mask, iter_bits, vbit


class OpCounter:
    """Accumulator for abstract work units (word ops + multiply-adds)."""

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def add(self, n: int) -> None:
        self.ops += n

    def delta(self, since: int) -> int:
        return self.ops - since


def words(n: int) -> int:
    """Machine words needed for an n-bit mask (64-bit words)."""
    return (n + 63) // 64


def is_clique(g: Graph, s: VertexSet) -> bool:
    bits = s.bits
    for v in iter_bits(bits):
        if (bits & ~vbit(v)) & ~g.adj[v - 1]:
            return False
    return True


def common_neighbors(g: Graph, bits: int) -> int:
    """Mask of vertices adjacent to every member of ``bits``."""
    cand = g.full_mask
    for v in iter_bits(bits):
        cand &= g.adj[v - 1]
    return cand


def is_maximal_clique(g: Graph, s: VertexSet) -> bool:
    if not is_clique(g, s):
        return False
    if s.bits == 0:
        return g.n == 0
    return common_neighbors(g, s.bits) & ~s.bits == 0


def _lc_bits(g: Graph, kbits: int, counter: OpCounter | None = None) -> int:
    """Greedy ascending completion of the clique mask ``kbits``."""
    adj = g.adj
    w = words(g.n)
    if kbits == 0:
        scan = g.full_mask
        cand = g.full_mask
    else:
        # any extension is adjacent to every member, so scanning the
        # minimum member's neighborhood suffices
        vhat = (kbits & -kbits).bit_length()
        scan = adj[vhat - 1]
        cand = common_neighbors(g, kbits)
    s = kbits
    scanned = 0
    inserted = 0
    rest = scan & ~kbits
    while rest:
        low = rest & -rest
        rest ^= low
        scanned += 1
        if cand & low:
            s |= low
            cand &= adj[low.bit_length() - 1]
            inserted += 1
    if counter is not None:
        counter.add(scanned + (inserted + kbits.bit_count()) * w)
    return s


def lex_completion(g: Graph, k: VertexSet, counter: OpCounter | None = None) -> VertexSet:
    """Lexicographically greatest maximal clique containing clique ``k``.

    ``k`` may be empty, in which case the result is the overall
    lexicographically greatest maximal clique.
    """
    assert is_clique(g, k), "input must be a clique"
    return VertexSet(_lc_bits(g, k.bits, counter))


def root(g: Graph, counter: OpCounter | None = None) -> VertexSet:
    """The lexicographically greatest maximal clique (tree root)."""
    return VertexSet(_lc_bits(g, 0, counter))


def clique_index(g: Graph, c: VertexSet, counter: OpCounter | None = None) -> int | None:
    """Index of the maximal clique ``c``; ``None`` for the root.

    Runs the descending degree-counter scan: keep ``d[z] = |N(z) & C_{<v}|``
    up to date while sweeping ``v`` from ``n`` down to 1, and report ``v``
    as soon as some smaller non-member is adjacent to the whole current
    prefix.  When the prefix below ``v`` is empty the witness condition
    degenerates to "any vertex below v exists"; that case is live (isolated
    vertices, cliques whose index equals their own minimum) and must report
    ``v`` rather than fall through.
    """
    assert is_maximal_clique(g, c), "input must be a maximal clique"
    adj = g.adj
    cbits = c.bits
    n = g.n
    d = [0] * (n + 1)
    work = n
    for z in range(1, n + 1):
        d[z] = (adj[z - 1] & cbits).bit_count()
    size = cbits.bit_count()
    for v in range(n, 0, -1):
        if not (cbits >> (v - 1)) & 1:
            continue
        outside = adj[v - 1] & ~cbits
        for u in iter_bits(outside):
            d[u] -= 1
            work += 1
        size -= 1
        prefix_members = cbits & below_mask(v)
        if prefix_members == 0:
            if v > 1:
                if counter is not None:
                    counter.add(work)
                return v
            continue
        uhat = prefix_members.bit_length()
        for z in iter_bits(adj[uhat - 1] & ~cbits):
            work += 1
            if z < v and d[z] >= size:
                if counter is not None:
                    counter.add(work)
                return v
    if counter is not None:
        counter.add(work)
    return None


def clique_index_scan(g: Graph, c: VertexSet) -> int | None:
    """Definitional index: greatest ``i`` whose prefix does not complete
    back to ``c``.  Slow differential reference for :func:`clique_index`.
    """
    assert is_maximal_clique(g, c)
    for i in range(g.n, 0, -1):
        if VertexSet(_lc_bits(g, c.bits & below_mask(i))) != c:
            return i
    return None


def parent(g: Graph, c: VertexSet, counter: OpCounter | None = None) -> VertexSet:
    """Parent of a non-root maximal clique; raises on the root."""
    idx = clique_index(g, c, counter)
    if idx is None:
        raise ValueError("the root clique has no parent")
    return VertexSet(_lc_bits(g, c.bits & below_mask(idx), counter))


def child(g: Graph, p: VertexSet, i: int, counter: OpCounter | None = None) -> VertexSet:
    """Completion of ``(P_{<i} & N(i)) | {i}``.

    Always a maximal clique containing ``i``; it is an actual child of
    ``p`` only when the caller has verified ``i`` is a good index.
    """
    assert i not in p, "child index must not belong to the parent"
    base = (p.bits & below_mask(i) & g.adj[i - 1]) | vbit(i)
    return VertexSet(_lc_bits(g, base, counter))
