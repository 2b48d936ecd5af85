"""The q = 1 signed expansion for arbitrary graphs via no-broken-circuit trees,
and the two-part coefficient helpers for natural unit interval graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence

from .foresttriples import composition_rank_sum, cross_inversions, set_partitions, tree_list_poly
from .graphs import Graph, Nuig
from .oracle import check_limit
from .qpoly import ONE, ZERO, QPoly, q_int
from .symfunc import ESym

Edge = tuple[int, int]


class EdgeOrder:
    """A total order on the edge set, as a rank per edge."""

    def __init__(self, ranked: Sequence[Edge]):
        self.ranked = tuple((min(e), max(e)) for e in ranked)
        self.rank = {e: i for i, e in enumerate(self.ranked, start=1)}
        if len(self.rank) != len(self.ranked):
            raise ValueError("edge order lists an edge twice")

    @classmethod
    def lex(cls, g: Graph | Nuig) -> "EdgeOrder":
        return cls(g.sorted_edges())

    @classmethod
    def random(cls, g: Graph | Nuig, seed: int) -> "EdgeOrder":
        edges = g.sorted_edges()
        random.Random(seed).shuffle(edges)
        return cls(edges)

    @classmethod
    def parse(cls, g: Graph | Nuig, text: str) -> "EdgeOrder":
        if text == "lex":
            return cls.lex(g)
        if text.startswith("random:"):
            return cls.random(g, int(text.split(":", 1)[1]))
        raise ValueError(f"unknown edge order {text!r} (use lex or random:<seed>)")

    def __call__(self, e: Edge) -> int:
        return self.rank[(min(e), max(e))]


def _tree_path(tree_edges: Iterable[Edge], u: int, v: int) -> list[Edge]:
    nbrs: dict[int, list[int]] = {}
    for a, b in tree_edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in nbrs.get(x, ()):
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = []
    x = v
    while prev[x] is not None:
        path.append((min(x, prev[x]), max(x, prev[x])))
        x = prev[x]
    return path


def is_nbc(tree_edges: Iterable[Edge], g: Graph | Nuig, order: EdgeOrder) -> bool:
    """No broken circuit in the tree.

    A broken circuit inside a tree is the tree path closing a cycle with a
    non-tree edge that is the cycle's maximum, so checking the fundamental
    cycle of each chord suffices.
    """
    tedges = {(min(e), max(e)) for e in tree_edges}
    verts = {v for e in tedges for v in e}
    for e in g.sorted_edges():
        if e in tedges or e[0] not in verts or e[1] not in verts:
            continue
        if all(order(p) < order(e) for p in _tree_path(tedges, *e)):
            return False
    return True


def _is_spanning_tree(vertices: Sequence[int], edges: Sequence[Edge]) -> bool:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return len(edges) == len(vertices) - 1


def spanning_trees(g: Graph | Nuig, vertices: Sequence[int]):
    vertices = tuple(sorted(vertices))
    if len(vertices) == 1:
        yield ()
        return
    for chosen in combinations(g.induced_edges(vertices), len(vertices) - 1):
        if _is_spanning_tree(vertices, chosen):
            yield chosen


def nbc_trees(g: Graph | Nuig, vertices: Sequence[int], order: EdgeOrder) -> list[tuple[Edge, ...]]:
    return [t for t in spanning_trees(g, vertices) if is_nbc(t, g, order)]


def signed_e_sum_nbc(g: Graph | Nuig, order: EdgeOrder | None = None,
                     limit: int | None = None) -> ESym:
    """Sum of sign(F) e_type(F) over NBC forest triples; no q.

    Unbounded by default: the cost is the Bell number of n, not forest count.
    """
    if limit is not None:
        check_limit(g.n, limit, "vertex count")
    order = order or EdgeOrder.lex(g)
    counts: dict[tuple[int, ...], int] = {}

    def count(block):
        if block not in counts:
            counts[block] = len(nbc_trees(g, block, order))
        return counts[block]

    by_sizes: dict[tuple[int, ...], int] = {}
    for blocks in set_partitions(range(1, g.n + 1)):
        w = 1
        for b in blocks:
            w *= count(b)
            if not w:
                break
        if w:
            key = tuple(sorted((len(b) for b in blocks), reverse=True))
            by_sizes[key] = by_sizes.get(key, 0) + w
    total = ESym()
    for sizes, w in by_sizes.items():
        term = ESym({(): w})
        for s in sizes:
            term = term * composition_rank_sum(s).at_q(1)
        total = total + term
    return total


# -- two-part coefficients ----------------------------------------------------


def s_all(g: Nuig) -> QPoly:
    p = ONE
    for b in g.b:
        p = p * q_int(b)
    return p


def s_k(g: Nuig, k: int) -> QPoly:
    """q-count of pairs of decreasing trees (T1 containing 1, |T2| = k) covering [n]."""
    n = g.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    total = ZERO
    for v2 in combinations(range(2, n + 1), k):
        v1 = tuple(v for v in range(1, n + 1) if v not in v2)
        w = tree_list_poly(g, v1) * tree_list_poly(g, v2)
        if w:
            total = total + w.shift(cross_inversions(g, (v1, v2)))
    return total


def two_part_coefficient(g: Nuig, k: int) -> QPoly:
    """Coefficient of e_{(n-k)k} for 1 <= k <= n/2."""
    n = g.n
    if not (1 <= k and 2 * k <= n):
        raise ValueError(f"k={k} must satisfy 1 <= k <= n/2 (n={n})")
    s = s_all(g)
    first = q_int(n - k) * (q_int(k) * s_k(g, k) - s)
    if 2 * k == n:
        return first
    return first + q_int(k) * (q_int(n - k) * s_k(g, n - k) - s)
