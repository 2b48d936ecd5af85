"""Decreasing trees, tree lists and forest triples.

A decreasing subtree is carried around as its tree list (the reading order
that starts at the smallest vertex and always takes the smallest unread
neighbour).  The two are in bijection, so a :class:`TreeTriple` stores the
list directly and :class:`DecTree` is only needed at the boundary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .graphs import Graph, GraphError, Nuig
from .oracle import check_limit
from .qpoly import ONE, ZERO, QPoly, q_int
from .symfunc import ESym, Partition, compositions, sort_to_partition

FOREST_LIMIT = 9


class TreeListError(ValueError):
    def __init__(self, condition: str, index: int, detail: str = ""):
        msg = f"{condition} condition fails at index {index}"
        super().__init__(msg + (f": {detail}" if detail else ""))
        self.condition = condition
        self.index = index


class InvolutionError(ValueError):
    pass


def fmt_list(seq: Sequence[int]) -> str:
    if all(v <= 9 for v in seq):
        return "".join(map(str, seq))
    return "[" + ",".join(map(str, seq)) + "]"


# -- decreasing trees and tree lists ----------------------------------------


@dataclass(frozen=True)
class DecTree:
    """Decreasing tree stored as child -> parent (parent is the unique larger neighbour)."""

    vertices: frozenset
    parent: tuple  # sorted ((child, parent), ...)

    @classmethod
    def from_parents(cls, vertices, parent: dict[int, int]) -> "DecTree":
        return cls(frozenset(vertices), tuple(sorted(parent.items())))

    @classmethod
    def from_edges(cls, edges) -> "DecTree":
        verts = {v for e in edges for v in e}
        parent = {}
        for u, v in edges:
            lo, hi = min(u, v), max(u, v)
            if lo in parent:
                raise GraphError(f"vertex {lo} has two larger neighbours")
            parent[lo] = hi
        tree = cls.from_parents(verts, parent)
        tree.validate()
        return tree

    @classmethod
    def single(cls, v: int) -> "DecTree":
        return cls(frozenset({v}), ())

    @property
    def parent_map(self) -> dict[int, int]:
        return dict(self.parent)

    def edges(self) -> set[tuple[int, int]]:
        return {(c, p) for c, p in self.parent}

    def validate(self, g: Graph | Nuig | None = None) -> None:
        top = max(self.vertices)
        par = self.parent_map
        if set(par) != self.vertices - {top}:
            raise GraphError("every vertex but the largest needs exactly one parent")
        for c, p in par.items():
            if p <= c or p not in self.vertices:
                raise GraphError(f"parent {p} of {c} is not a larger tree vertex")
            if g is not None and not g.adjacent(c, p):
                raise GraphError(f"tree edge {{{c},{p}}} is not an edge of the graph")


def decreasing_trees(g: Graph | Nuig, support: Sequence[int]) -> Iterator[DecTree]:
    """Every decreasing tree of g on the given vertices, by choosing parents directly."""
    verts = sorted(support)
    options = [[p for p in verts if p > v and g.adjacent(v, p)] for v in verts[:-1]]
    for parents in product(*options):
        yield DecTree.from_parents(verts, dict(zip(verts, parents)))


def list_of(tree: DecTree) -> tuple[int, ...]:
    """Read from the minimum, always taking the smallest unread tree-neighbour."""
    nbrs: dict[int, list[int]] = {v: [] for v in tree.vertices}
    for c, p in tree.parent:
        nbrs[c].append(p)
        nbrs[p].append(c)
    start = min(tree.vertices)
    out = []
    seen = {start}
    heap = [start]
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)
    return tuple(out)


def check_tree_list(sigma: Sequence[int], g: Graph | Nuig) -> None:
    """Raise TreeListError unless sigma is a tree list of g."""
    if not sigma:
        raise TreeListError("nonempty", 0)
    if len(set(sigma)) != len(sigma):
        raise TreeListError("distinct-entries", 0)
    if sigma[0] != min(sigma):
        raise TreeListError("minimum-first", 0, f"{sigma[0]} is not the minimum")
    top = sigma[0]
    for i in range(1, len(sigma)):
        a, b = sigma[i - 1], sigma[i]
        if a > b and not g.adjacent(a, b):
            raise TreeListError("descent", i, f"{{{b},{a}}} is not an edge")
        if b > top:
            if not g.adjacent(top, b):
                raise TreeListError("LR-maxima", i, f"{{{top},{b}}} is not an edge")
            top = b


def is_tree_list(sigma: Sequence[int], g: Graph | Nuig) -> bool:
    try:
        check_tree_list(sigma, g)
    except TreeListError:
        return False
    return True


def tree_from_list(sigma: Sequence[int], g: Graph | Nuig) -> DecTree:
    check_tree_list(sigma, g)
    parent: dict[int, int] = {}
    lr_max = []
    top = 0
    for j, v in enumerate(sigma):
        if v > top:
            lr_max.append(v)
            top = v
            continue
        for i in range(j - 1, -1, -1):
            if sigma[i] > v:
                parent[v] = sigma[i]
                break
    for a, b in zip(lr_max, lr_max[1:]):
        parent[a] = b
    tree = DecTree.from_parents(sigma, parent)
    tree.validate(g)
    return tree


def inv_g(sigma: Sequence[int], g: Graph | Nuig) -> int:
    """Inverted pairs sigma_i > sigma_j (i < j) that are edges of g."""
    count = 0
    for j in range(1, len(sigma)):
        v = sigma[j]
        for i in range(j):
            u = sigma[i]
            if u > v and g.adjacent(u, v):
                count += 1
    return count


@lru_cache(maxsize=None)
def tree_lists(g: Graph | Nuig, support: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All tree lists of g with the given support, lexicographically."""
    verts = sorted(support)
    out: list[tuple[int, ...]] = []
    seq = [verts[0]]
    rest = verts[1:]

    def rec(top: int):
        if not rest:
            out.append(tuple(seq))
            return
        last = seq[-1]
        for idx, x in enumerate(list(rest)):
            if x < last and not g.adjacent(x, last):
                continue
            if x > top and not g.adjacent(top, x):
                continue
            rest.pop(idx)
            seq.append(x)
            rec(max(top, x))
            seq.pop()
            rest.insert(idx, x)

    rec(verts[0])
    return tuple(out)


@lru_cache(maxsize=None)
def tree_list_poly(g: Graph | Nuig, support: tuple[int, ...]) -> QPoly:
    """Sum of q^inv_G over tree lists with the given support."""
    counts: dict[int, int] = {}
    for sigma in tree_lists(g, support):
        k = inv_g(sigma, g)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return ZERO
    return QPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def tree_list_product_check(g: Nuig, support) -> tuple[QPoly, QPoly]:
    """(sum over tree lists of q^inv, product of [b_i(A)]_q over non-minimal i in A)."""
    A = tuple(sorted(support))
    if not A:
        raise ValueError("support must be nonempty")
    lhs = tree_list_poly(g, A)
    rhs = ONE
    for i in A[1:]:
        rhs = rhs * q_int(sum(1 for j in A if j < i and g.adjacent(i, j)))
    return lhs, rhs


# -- tree and forest triples --------------------------------------------------


@dataclass(frozen=True)
class TreeTriple:
    tree: tuple[int, ...]  # tree list
    alpha: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "tree", tuple(self.tree))
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if sum(self.alpha) != len(self.tree) or any(a < 1 for a in self.alpha):
            raise ValueError(f"composition {self.alpha} does not fit a tree of size {len(self.tree)}")
        if not 1 <= self.r <= self.alpha[0]:
            raise ValueError(f"r={self.r} outside 1..{self.alpha[0]}")

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.tree)

    @property
    def size(self) -> int:
        return len(self.tree)

    @property
    def breakable(self) -> bool:
        return len(self.alpha) >= 2

    def shifted(self, x: int) -> "TreeTriple":
        return TreeTriple(tuple(v + x for v in self.tree), self.alpha, self.r)

    def __str__(self) -> str:
        return f"({fmt_list(self.tree)},{fmt_list(self.alpha)},{self.r})"


@dataclass(frozen=True)
class ForestTriple:
    triples: tuple[TreeTriple, ...]

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(self.triples))
        mins = [t.tree[0] for t in self.triples]
        if any(a >= b for a, b in zip(mins, mins[1:])):
            raise ValueError("tree minima must increase")

    def __iter__(self):
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __getitem__(self, i) -> TreeTriple:
        return self.triples[i]

    @property
    def type(self) -> Partition:
        return sort_to_partition(p for t in self.triples for p in t.alpha)

    @property
    def sign(self) -> int:
        return -1 if sum(len(t.alpha) - 1 for t in self.triples) % 2 else 1

    @property
    def sigma(self) -> tuple[int, ...]:
        return tuple(v for t in self.triples for v in t.tree)

    def weight(self, g: Graph | Nuig) -> int:
        return inv_g(self.sigma, g) + sum(t.r - 1 for t in self.triples)

    @property
    def is_atom(self) -> bool:
        return not any(t.breakable for t in self.triples)

    @property
    def is_simple(self) -> bool:
        return self.triple_containing(1).r == 1

    def triple_containing(self, v: int) -> TreeTriple:
        for t in self.triples:
            if v in t.tree:
                return t
        raise KeyError(v)

    def index_containing(self, v: int) -> int:
        for i, t in enumerate(self.triples):
            if v in t.tree:
                return i
        raise KeyError(v)

    @property
    def alpha11(self) -> int:
        return self.triple_containing(1).alpha[0]

    def is_valid_for(self, g: Graph | Nuig) -> bool:
        verts = sorted(v for t in self.triples for v in t.tree)
        if verts != list(range(1, g.n + 1)):
            return False
        return all(is_tree_list(t.tree, g) for t in self.triples)

    def __str__(self) -> str:
        return ",".join(str(t) for t in self.triples)


def set_partitions(vertices: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions with blocks listed by increasing minimum."""
    vertices = sorted(vertices)
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    k = len(rest)
    # subsets of rest in a fixed order: by bitmask
    for mask in range(1 << k):
        block = (first,) + tuple(rest[i] for i in range(k) if mask >> i & 1)
        remaining = [rest[i] for i in range(k) if not mask >> i & 1]
        for tail in set_partitions(remaining):
            yield (block,) + tail


@lru_cache(maxsize=None)
def _alpha_r_choices(size: int, atoms_only: bool, simple: bool) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for alpha in compositions(size):
        if atoms_only and len(alpha) > 1:
            continue
        for r in range(1, (1 if simple else alpha[0]) + 1):
            out.append((alpha, r))
    return tuple(out)


def enumerate_forest_triples(g: Graph | Nuig, type_filter: Partition | None = None,
                             atoms_only: bool = False, simple_only: bool = False,
                             limit: int = FOREST_LIMIT) -> Iterator[ForestTriple]:
    """Every forest triple of g exactly once.

    Order: set partition, then tree lists per block (lexicographic), then
    compositions, then r.
    """
    check_limit(g.n, limit, "vertex count")
    target = tuple(type_filter) if type_filter is not None else None
    for blocks in set_partitions(range(1, g.n + 1)):
        if target is not None and len(blocks) > len(target):
            continue
        lists = [tree_lists(g, b) for b in blocks]
        if any(not ls for ls in lists):
            continue
        choices = [_alpha_r_choices(len(b), atoms_only, simple_only and i == 0)
                   for i, b in enumerate(blocks)]
        comp_choices = list(product(*choices))
        if target is not None:
            comp_choices = [c for c in comp_choices
                            if sort_to_partition(p for a, _ in c for p in a) == target]
            if not comp_choices:
                continue
        for trees in product(*lists):
            for combo in comp_choices:
                yield ForestTriple(tuple(TreeTriple(t, a, r) for t, (a, r) in zip(trees, combo)))


@lru_cache(maxsize=None)
def composition_rank_sum(size: int) -> ESym:
    """Sum over (alpha, r) for one tree of the given size of sign * q^(r-1) * e_sort(alpha)."""
    terms = []
    for alpha, r in _alpha_r_choices(size, False, False):
        terms.append((alpha, QPoly.monomial(r - 1, (-1) ** (len(alpha) - 1))))
    return ESym(terms)


def cross_inversions(g: Graph | Nuig, blocks: Sequence[Sequence[int]]) -> int:
    """G-inversions between blocks: u in an earlier block, v in a later one, u > v."""
    count = 0
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1:]:
            for u in bi:
                for v in bj:
                    if u > v and g.adjacent(u, v):
                        count += 1
    return count


def signed_e_sum(g: Nuig, limit: int = FOREST_LIMIT) -> ESym:
    """Sum of sign * q^weight * e_type over all forest triples of g.

    Terms are grouped by set partition: the G-inversions of the concatenated
    list split into within-tree and between-tree parts, the latter fixed by
    the blocks alone, and (alpha, r) choices are independent per tree.
    """
    check_limit(g.n, limit, "vertex count")
    by_sizes: dict[tuple[int, ...], QPoly] = {}
    for blocks in set_partitions(range(1, g.n + 1)):
        w = ONE
        for b in blocks:
            w = w * tree_list_poly(g, b)
            if not w:
                break
        if not w:
            continue
        w = w.shift(cross_inversions(g, blocks))
        key = tuple(sorted((len(b) for b in blocks), reverse=True))
        by_sizes[key] = by_sizes.get(key, ZERO) + w
    total = ESym()
    for sizes, w in by_sizes.items():
        term = ESym({(): w})
        for s in sizes:
            term = term * composition_rank_sum(s)
        total = total + term
    return total


def signed_e_sum_enumerated(g: Nuig, limit: int = FOREST_LIMIT) -> ESym:
    """Same sum, one forest triple at a time (slow; for cross-checks)."""
    acc: dict[Partition, dict[int, int]] = {}
    for f in enumerate_forest_triples(g, limit=limit):
        row = acc.setdefault(f.type, {})
        w = f.weight(g)
        row[w] = row.get(w, 0) + f.sign
    return ESym({mu: QPoly(row.get(k, 0) for k in range(max(row) + 1)) for mu, row in acc.items()})


# -- start rebalancing, easy break/join --------------------------------------


def indstart(sigma: Sequence[int]) -> int:
    return sorted(sigma).index(sigma[0]) + 1


def _swap_values(seq: list[int], a: int, b: int) -> None:
    i, j = seq.index(a), seq.index(b)
    seq[i], seq[j] = b, a


def startmin(sigma: Sequence[int]) -> tuple[int, ...]:
    """Apply w_1 w_2 ... w_{r-1} (rightmost first), w_i swapping values a_i and a_{i+1}."""
    a = sorted(sigma)
    r = indstart(sigma)
    seq = list(sigma)
    for i in range(r - 1, 0, -1):
        _swap_values(seq, a[i - 1], a[i])
    return tuple(seq)


def startr(sigma: Sequence[int], r: int) -> tuple[int, ...]:
    """Inverse of startmin: move the r-th smallest value to the front."""
    a = sorted(sigma)
    if sigma[0] != a[0]:
        raise ValueError("startr needs a sequence starting with its minimum")
    if not 1 <= r <= len(sigma):
        raise ValueError(f"r={r} out of range 1..{len(sigma)}")
    seq = list(sigma)
    for i in range(1, r):
        _swap_values(seq, a[i - 1], a[i])
    return tuple(seq)


def _all_adjacent(g, vertices) -> bool:
    vs = sorted(vertices)
    return all(g.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def easybreak(t: TreeTriple, g: Graph | Nuig) -> tuple[TreeTriple, TreeTriple]:
    if not t.breakable:
        raise InvolutionError(f"{t} is not breakable")
    if not _all_adjacent(g, t.tree):
        raise InvolutionError(f"vertices of {t} are not pairwise adjacent")
    cut = t.size - t.alpha[-1]
    head, tail = t.tree[:cut], t.tree[cut:]
    s1 = TreeTriple(head, t.alpha[:-1], t.r)
    s2 = TreeTriple(startmin(tail), (t.alpha[-1],), indstart(tail))
    assert inv_g(t.tree, g) == inv_g(s1.tree + s2.tree, g) + (s2.r - 1)
    return s1, s2


def easyjoin(s1: TreeTriple, s2: TreeTriple, g: Graph | Nuig) -> TreeTriple:
    if len(s2.alpha) != 1:
        raise InvolutionError(f"{s2} must have a one-part composition")
    if s1.tree[0] >= s2.tree[0]:
        raise InvolutionError("easyjoin needs min(S1) < min(S2)")
    if not _all_adjacent(g, s1.tree + s2.tree):
        raise InvolutionError("vertices are not pairwise adjacent")
    t = TreeTriple(s1.tree + startr(s2.tree, s2.r), s1.alpha + s2.alpha, s1.r)
    assert inv_g(t.tree, g) == inv_g(s1.tree + s2.tree, g) + (s2.r - 1)
    return t


# -- the two worked involutions ---------------------------------------------


def _is_path(g: Nuig) -> bool:
    return all(x == 1 for x in g.b)


def path_involution(f: ForestTriple, g: Nuig) -> ForestTriple:
    """Scan right to left for a triple to break (two or more parts) or join (r = 1)."""
    if not isinstance(g, Nuig) or not _is_path(g):
        raise InvolutionError("path_involution needs a path graph")
    ts = list(f.triples)
    for j in range(len(ts) - 1, -1, -1):
        t = ts[j]
        if t.breakable:
            last = t.alpha[-1]
            s1 = TreeTriple(t.tree[:-last], t.alpha[:-1], t.r)
            s2 = TreeTriple(t.tree[-last:], (last,), 1)
            return ForestTriple(tuple(ts[:j]) + (s1, s2) + tuple(ts[j + 1:]))
        if j >= 1 and t.r == 1:
            prev = ts[j - 1]
            joined = TreeTriple(prev.tree + t.tree, prev.alpha + t.alpha, prev.r)
            return ForestTriple(tuple(ts[:j - 1]) + (joined,) + tuple(ts[j + 1:]))
    return f


def path_fixed(f: ForestTriple) -> bool:
    return f.is_atom and all(t.r >= 2 for t in f.triples[1:])


def _is_complete(g: Nuig) -> bool:
    return g.b == tuple(range(1, g.n))


def complete_involution(f: ForestTriple, g: Nuig) -> ForestTriple:
    if not isinstance(g, Nuig) or not _is_complete(g):
        raise InvolutionError("complete_involution needs a complete graph")
    if not f.is_simple:
        raise InvolutionError("complete_involution is defined on simple forest triples")
    ts = list(f.triples)
    last = ts[-1]
    if last.breakable:
        return ForestTriple(tuple(ts[:-1]) + easybreak(last, g))
    if len(ts) >= 2:
        return ForestTriple(tuple(ts[:-2]) + (easyjoin(ts[-2], last, g),))
    return f


def complete_fixed(f: ForestTriple) -> bool:
    return f.is_atom and len(f) == 1


# -- restriction across a cut vertex -----------------------------------------


def split_at(g: Nuig, a: int) -> tuple[Nuig, Nuig]:
    """g = g1 + g2 with vertex a glued."""
    if not g.is_cut(a):
        raise GraphError(f"vertex {a} does not split the graph")
    return Nuig(g.b[:a - 1]), Nuig(g.b[a - 1:])


def _segment_index(alpha: Sequence[int], k: int) -> int:
    acc = 0
    for j, part in enumerate(alpha, start=1):
        acc += part
        if k <= acc:
            return j
    raise ValueError("k exceeds the composition size")


def _restriction_data(f: ForestTriple, a: int, g: Nuig):
    if not g.is_cut(a):
        raise GraphError(f"vertex {a} is not a cut vertex")
    if not f.is_simple:
        raise InvolutionError("restriction is defined for simple forest triples")
    i = f.index_containing(a)
    ti = f.triples[i]
    k = sum(1 for v in ti.tree if v <= a)
    i_last = max(t for t, tr in enumerate(f.triples) if min(tr.tree) <= a)
    return i, ti, k, i_last


def seg_count(f: ForestTriple, a: int, g: Nuig) -> int:
    i, ti, k, i_last = _restriction_data(f, a, g)
    return _segment_index(ti.alpha, k) + sum(
        len(f.triples[t].alpha) for t in range(i_last + 1) if t != i)


def restrict_ge(f: ForestTriple, a: int, g: Nuig) -> ForestTriple:
    """The part of f living on the vertices >= a, relabelled to start at 1."""
    i, ti, k, i_last = _restriction_data(f, a, g)
    sigma = ti.tree
    if any(v > a for v in sigma[:k]) or any(v <= a for v in sigma[k:]):
        raise AssertionError(f"tree list {sigma} does not split at cut vertex {a}")
    j = _segment_index(ti.alpha, k)
    first = sum(ti.alpha[:j]) - k + 1
    head = TreeTriple((a,) + sigma[k:], (first,) + ti.alpha[j:], 1)
    rest = [head] + list(f.triples[i_last + 1:])
    return ForestTriple(tuple(t.shifted(-(a - 1)) for t in rest))


def splits_at_cut(sigma: Sequence[int], c: int) -> bool:
    """Entries <= c all precede entries > c."""
    seen_big = False
    for v in sigma:
        if v > c:
            seen_big = True
        elif seen_big:
            return False
    return True


def parse_triple(text: str) -> TreeTriple:
    """Parse "(15632478,72,1)" (digits) or "([10,11],[2],1)"."""
    body = text.strip().strip("()")
    fields = _split_top(body)
    if len(fields) != 3:
        raise ValueError(f"bad tree triple {text!r}")
    return TreeTriple(_parse_seq(fields[0]), _parse_seq(fields[1]), int(fields[2]))


def parse_forest(text: str) -> ForestTriple:
    parts, depth, cur = [], 0, ""
    for ch in text.strip():
        if ch == "(":
            depth += 1
        if depth:
            cur += ch
        if ch == ")":
            depth -= 1
            if depth == 0:
                parts.append(cur)
                cur = ""
    return ForestTriple(tuple(parse_triple(p) for p in parts))


def _split_top(body: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [s.strip() for s in out]


def _parse_seq(s: str) -> tuple[int, ...]:
    s = s.strip()
    if s.startswith("["):
        return tuple(int(x) for x in s.strip("[]").split(",") if x.strip())
    return tuple(int(ch) for ch in s if not ch.isspace())
