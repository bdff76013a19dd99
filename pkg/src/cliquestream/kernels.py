"""Children generation for batches of maximal cliques.

A pair ``(i, j)`` is *good* for a parent ``P`` when some vertex of
``P_{<i} & N(i)`` is a non-neighbor of ``j``.  The good-pair table for a
whole batch can be read off one rectangular matrix product: stack the
parents' characteristic vectors into ``M_B`` (|B| x n), put the
characteristic vector of ``A_i \\ N(j)`` with ``A_i = V_{<i} & N(i)`` into
column ``(i, j)`` of ``M_G`` (n x n^2), and test entries of ``M_B @ M_G``
for positivity.  An equivalent bitset kernel answers the same queries with
packed AND tests, materializing the ``A_i \\ N(j)`` family one i-row at a
time so memory stays at O(n^2) bits.

From the good table, an index ``i`` yields a child of ``P`` exactly when no
``j < i`` witnesses a violation of either reconstructability direction;
``filter_children`` encodes that test, and ``children_naive`` re-derives it
from first principles with direct completion calls for differential
testing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matmul
from .graph import Graph, VertexSet, below_mask, vbit
from .rs_tree import (
    OpCounter,
    clique_index,
    is_maximal_clique,
    lex_completion,
    words,
)

KERNELS = ("naive", "rect", "bitset")


@dataclass(frozen=True)
class ChildSpec:
    """A parent clique and the ascending list of its good child indices."""

    parent: VertexSet
    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)


@dataclass
class GoodTable:
    """Good-pair tensor for a batch, stored as per-(k, i) bitmasks over j."""

    n: int
    rows: list[list[int]]

    def is_good(self, k: int, i: int, j: int) -> bool:
        """Entry for batch position ``k`` (0-based) and vertices ``i, j``."""
        return (self.rows[k][i - 1] >> (j - 1)) & 1 == 1

    def row(self, k: int) -> list[int]:
        return self.rows[k]

    def to_array(self) -> np.ndarray:
        """Dense boolean tensor of shape (|B|, n, n)."""
        out = np.zeros((len(self.rows), self.n, self.n), dtype=bool)
        for k, masks in enumerate(self.rows):
            for i0, mask in enumerate(masks):
                while mask:
                    low = mask & -mask
                    out[k, i0, low.bit_length() - 1] = True
                    mask ^= low
        return out


def _mask_to_row(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def _assert_batch(g: Graph, cliques) -> None:
    assert len(cliques) >= 1, "batch must be non-empty"
    assert len({c.bits for c in cliques}) == len(cliques), "batch elements must be distinct"


def build_batch_matrices(g: Graph, cliques) -> tuple[np.ndarray, np.ndarray]:
    """Characteristic matrices (M_B, M_G) for the rectangular reduction.

    ``M_B`` is |B| x n with row k the characteristic vector of the k-th
    parent.  ``M_G`` is n x n^2; its column for the pair ``(i, j)`` sits at
    flat position ``(i-1)*n + (j-1)`` (row-major, i outermost) and holds the
    characteristic vector of ``A_i \\ N(j)``.
    """
    _assert_batch(g, cliques)
    n = g.n
    mb = np.stack([_mask_to_row(c.bits, n) for c in cliques])
    a_rows = np.stack(
        [_mask_to_row(g.adj[i - 1] & below_mask(i), n) for i in range(1, n + 1)]
    )
    non_adj = np.stack(
        [1 - _mask_to_row(g.adj[j - 1], n) for j in range(1, n + 1)]
    ).astype(np.uint8)
    cols = np.einsum("iv,jv->ijv", a_rows, non_adj)
    mg = cols.reshape(n * n, n).T.copy()
    return mb, mg


def _pack_good_rows(thresh: np.ndarray, batch_size: int, n: int) -> list[list[int]]:
    cube = thresh.reshape(batch_size, n, n)
    packed = np.packbits(cube.astype(np.uint8), axis=2, bitorder="little")
    rows: list[list[int]] = []
    for k in range(batch_size):
        rows.append([int.from_bytes(packed[k, i].tobytes(), "little") for i in range(n)])
    return rows


def good_table_rectangular(
    g: Graph,
    cliques,
    backend: str = matmul.BITPACKED,
    counter: OpCounter | None = None,
) -> GoodTable:
    """Good table via the |B| x n by n x n^2 matrix product."""
    n = g.n
    mb, mg = build_batch_matrices(g, cliques)
    thresh = matmul.multiply_boolean_threshold(mb, mg, backend=backend)
    if counter is not None:
        w = words(n)
        counter.add(len(cliques) * w + n * n * 2 * w + len(cliques) * n * n * w)
    return GoodTable(n=n, rows=_pack_good_rows(thresh, len(cliques), n))


def good_table_bitset(
    g: Graph, cliques, counter: OpCounter | None = None
) -> GoodTable:
    """Good table via packed set intersections, one i-row of the
    ``A_i \\ N(j)`` family in memory at a time."""
    _assert_batch(g, cliques)
    n = g.n
    adj = g.adj
    pbits = [c.bits for c in cliques]
    rows: list[list[int]] = [[0] * n for _ in cliques]
    live_rows = 0
    for i in range(1, n + 1):
        a_i = adj[i - 1] & below_mask(i)
        if a_i == 0:
            continue  # no witness can exist for this i, row stays all-false
        live_rows += 1
        family = [a_i & ~adj[j - 1] for j in range(1, n + 1)]
        for k, pb in enumerate(pbits):
            mask = 0
            bit = 1
            for s in family:
                if pb & s:
                    mask |= bit
                bit <<= 1
            rows[k][i - 1] = mask
    if counter is not None:
        w = words(n)
        counter.add(n * w + live_rows * n * 2 * w + len(cliques) * live_rows * n * w)
    return GoodTable(n=n, rows=rows)


def adjacent_to_own_prefix(g: Graph, p: VertexSet) -> int:
    """Mask of vertices j adjacent to every member of ``P_{<j}``."""
    pb = p.bits
    out = 0
    bit = 1
    for j in range(1, g.n + 1):
        if pb & below_mask(j) & ~g.adj[j - 1] == 0:
            out |= bit
        bit <<= 1
    return out


def filter_children(
    g: Graph,
    p: VertexSet,
    good_row: list[int],
    counter: OpCounter | None = None,
) -> ChildSpec:
    """Accept the indices above ``i(p)`` that no ``j`` disqualifies.

    ``good_row`` is the parent's slice of the good table.  An index ``i`` is
    rejected when some ``j < i`` has a non-good pair together with either a
    neighbor-of-i outside ``P_{<i} & N(i)`` (child-side reconstruction
    breaks) or a non-member adjacent to its own prefix of ``P``
    (parent-side reconstruction breaks).
    """
    n = g.n
    adj = g.adj
    pb = p.bits
    i_p = clique_index(g, p, counter)
    start = 1 if i_p is None else i_p + 1
    jp = adjacent_to_own_prefix(g, p)
    indices = []
    scanned = 0
    for i in range(start, n + 1):
        if (pb >> (i - 1)) & 1:
            continue
        scanned += 1
        bel = below_mask(i)
        ai = adj[i - 1]
        pig = pb & bel & ai
        bad = ~good_row[i - 1] & ((ai & ~pig) | (jp & ~pb)) & bel
        if bad == 0:
            indices.append(i)
    if counter is not None:
        w = words(n)
        counter.add(n * 2 * w + scanned * 6 * w)
    return ChildSpec(parent=p, indices=tuple(indices))


def children_naive(g: Graph, p: VertexSet, counter: OpCounter | None = None) -> ChildSpec:
    """Child indices of ``p`` by direct completion calls.

    For each candidate ``i`` above the parent's index, checks both
    reconstructability equations with explicit lexicographic completions.
    Slow but independent of the good-table machinery.
    """
    assert is_maximal_clique(g, p), "parent must be a maximal clique"
    n = g.n
    pb = p.bits
    i_p = clique_index(g, p, counter)
    start = 1 if i_p is None else i_p + 1
    indices = []
    for i in range(start, n + 1):
        if (pb >> (i - 1)) & 1:
            continue
        bel = below_mask(i)
        pig = pb & bel & g.adj[i - 1]
        back = lex_completion(g, VertexSet(pig), counter)
        if back.bits & bel != pb & bel:
            continue
        forward = lex_completion(g, VertexSet(pig | vbit(i)), counter)
        if forward.bits & bel == pig:
            indices.append(i)
    return ChildSpec(parent=p, indices=tuple(indices))


def children_batch(
    g: Graph,
    cliques,
    kernel: str = "bitset",
    counter: OpCounter | None = None,
) -> list[ChildSpec]:
    """One ChildSpec per batch element, in batch order.

    ``kernel`` picks how good pairs are decided: "rect" goes through the
    matrix product, "bitset" through packed intersections, "naive" through
    per-parent completion calls.  All three agree extensionally.
    """
    _assert_batch(g, cliques)
    if kernel == "naive":
        return [children_naive(g, p, counter) for p in cliques]
    if kernel == "rect":
        table = good_table_rectangular(g, cliques, counter=counter)
    elif kernel == "bitset":
        table = good_table_bitset(g, cliques, counter=counter)
    else:
        raise ValueError(f"unknown kernel {kernel!r}")
    return [
        filter_children(g, p, table.rows[k], counter) for k, p in enumerate(cliques)
    ]
