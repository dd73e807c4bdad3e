"""Brute-force ground truth: exhaustive Motzkin-tree enumeration and vertex statistics.

A Motzkin tree is a rooted plane tree in which every vertex has 0, 1 or 2
ordered children. This module enumerates all trees of a given size and tallies
exact per-vertex statistics (rank, protection, balance), providing the oracle
that the generating-function module is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class TreeNode:
    """An immutable rooted plane tree with out-degree 0, 1 or 2."""

    children: tuple["TreeNode", ...] = ()

    def __post_init__(self):
        if len(self.children) > 2:
            raise ValueError("a Motzkin tree vertex has at most 2 children")
        for c in self.children:
            if not isinstance(c, TreeNode):
                raise TypeError("children must be TreeNode instances")

    def is_leaf(self) -> bool:
        return not self.children


#: The unique one-vertex tree.
LEAF = TreeNode()


def tree_size(t: TreeNode) -> int:
    """Number of vertices (iterative; safe for deep paths)."""
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(node.children)
    return n


@dataclass(frozen=True)
class VertexStats:
    """Per-vertex statistics.

    rank: length of the shortest strictly-descending path to a leaf (0 for a
    leaf). max_depth: length of the longest such path. A vertex is balanced
    exactly when every descending path to a leaf has the same length, i.e.
    rank == max_depth.
    """

    rank: int
    max_depth: int
    balanced: bool


def _rank_depth(t: TreeNode) -> list[tuple[int, int]]:
    # one iterative post-order pass; returns (rank, max_depth) per vertex
    # occurrence, root last
    out: list[tuple[int, int]] = []
    vals: list[tuple[int, int]] = []
    stack: list[tuple[TreeNode, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if ready:
            k = len(node.children)
            if k == 0:
                st = (0, 0)
            else:
                ch = vals[-k:]
                del vals[-k:]
                st = (1 + min(c[0] for c in ch), 1 + max(c[1] for c in ch))
            vals.append(st)
            out.append(st)
        else:
            stack.append((node, True))
            for c in reversed(node.children):
                stack.append((c, False))
    return out


def vertex_stats(t: TreeNode) -> list[VertexStats]:
    """Statistics for every vertex, in post-order (the root is last)."""
    return [VertexStats(r, d, r == d) for r, d in _rank_depth(t)]


_TREES_CACHE: dict[int, tuple[TreeNode, ...]] = {1: (LEAF,)}


def _all_trees(n: int) -> tuple[TreeNode, ...]:
    # canonical order: root arity 0, then arity 1 (recursing on n-1), then
    # arity 2 with left-subtree size ascending; subtree objects are shared
    cached = _TREES_CACHE.get(n)
    if cached is not None:
        return cached
    out: list[TreeNode] = []
    for c in _all_trees(n - 1):
        out.append(TreeNode((c,)))
    for left_size in range(1, n - 1):
        rights = _all_trees(n - 1 - left_size)
        for a in _all_trees(left_size):
            for b in rights:
                out.append(TreeNode((a, b)))
    result = tuple(out)
    _TREES_CACHE[n] = result
    return result


def enumerate_trees(n: int) -> Iterator[TreeNode]:
    """Yield every Motzkin tree with exactly n vertices, in canonical order.

    The order (leaf, then unary root, then binary roots with left size
    ascending) matches the unranking order used by the sampler module, which
    is what makes rank/unrank round trips testable.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    yield from _all_trees(n)


@dataclass(frozen=True)
class AggregateCounts:
    """Exact totals over all Motzkin trees of one size.

    protected_total[k] counts vertices of rank >= k for 0 <= k <= k_max.
    balanced_rank_total[k] counts balanced vertices of rank exactly k for
    0 <= k <= n-1. eb is the sum of rank over all balanced vertices, and
    balanced_root_trees counts trees whose root is balanced.
    """

    n: int
    trees: int
    leaves_total: int
    protected_total: tuple[int, ...]
    balanced_rank_total: tuple[int, ...]
    balanced_total: int
    balanced_root_trees: int
    eb: int


def aggregate(n: int, k_max: int = 8) -> AggregateCounts:
    """Tally exact vertex statistics over every tree of size n.

    A k-protected vertex heads a subtree with at least k+1 vertices, so counts
    above k_max = 8 are zero for the small sizes this oracle is meant for.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    trees = 0
    rank_hist = [0] * n  # vertices by rank, ranks 0..n-1
    balanced_rank = [0] * n
    leaves = 0
    balanced = 0
    balanced_roots = 0
    eb = 0
    for t in enumerate_trees(n):
        trees += 1
        stats = _rank_depth(t)
        for rank, depth in stats:
            rank_hist[rank] += 1
            if depth == 0:
                leaves += 1
            if rank == depth:
                balanced += 1
                balanced_rank[rank] += 1
                eb += rank
        root_rank, root_depth = stats[-1]
        if root_rank == root_depth:
            balanced_roots += 1
    # protected_total[k] = #vertices with rank >= k (suffix sums of the histogram)
    protected = [0] * (k_max + 1)
    running = 0
    for rank in range(n - 1, -1, -1):
        running += rank_hist[rank]
        if rank <= k_max:
            protected[rank] = running
    return AggregateCounts(
        n=n,
        trees=trees,
        leaves_total=leaves,
        protected_total=tuple(protected),
        balanced_rank_total=tuple(balanced_rank),
        balanced_total=balanced,
        balanced_root_trees=balanced_roots,
        eb=eb,
    )
