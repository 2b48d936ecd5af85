"""Natural unit interval graphs and plain labelled graphs.

A natural unit interval graph on [n] is stored by its smaller-neighbour
counts b_2..b_n: vertex j is adjacent to exactly the vertices j-b_j..j-1.
Vertices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class NotNuigError(GraphError):
    def __init__(self, triple: tuple[int, int, int]):
        i, j, k = triple
        super().__init__(f"not a natural unit interval graph: {{{i},{k}}} is an edge "
                         f"but the triple ({i},{j},{k}) lacks {{{i},{j}}} or {{{j},{k}}}")
        self.triple = triple


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 1..n."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {{{u},{v}}} out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return [e for e in self.sorted_edges() if e[0] in vs and e[1] in vs]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class Nuig:
    """Natural unit interval graph given by b = (b_2, ..., b_n)."""

    b: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "b", b)
        prev = 1
        for j, bj in enumerate(b, start=2):
            if not 0 <= bj <= j - 1:
                raise GraphError(f"b_{j}={bj} out of range [0,{j - 1}]")
            if j - bj < prev:
                raise GraphError(f"j - b_j must be weakly increasing; fails at j={j}")
            prev = j - bj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Nuig":
        return validate_nuig(Graph(n, frozenset(edges)))

    @property
    def n(self) -> int:
        return len(self.b) + 1

    def smaller_count(self, j: int) -> int:
        return 0 if j == 1 else self.b[j - 2]

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        if u > v:
            u, v = v, u
        return u >= v - self.smaller_count(v)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset((i, j) for j in range(2, self.n + 1)
                         for i in range(j - self.smaller_count(j), j))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        return self.graph.induced_edges(vertices)

    @property
    def edge_count(self) -> int:
        return sum(self.b)

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    @property
    def adjacency(self):
        return self.graph.adjacency

    def is_cut(self, a: int) -> bool:
        """No edge jumps over a, so the graph splits as G[1..a] + G[a..n]."""
        if not 1 <= a <= self.n:
            return False
        return all(j - self.smaller_count(j) >= a for j in range(a + 1, self.n + 1))

    def b_string(self) -> str:
        return ",".join(map(str, self.b))

    def __str__(self) -> str:
        return f"Nuig(n={self.n}, b={self.b_string() or '-'})"


def validate_nuig(g: Graph) -> Nuig:
    """Return the b-sequence of g, or raise naming the first bad triple (i,j,k)."""
    n = g.n
    for i in range(1, n + 1):
        for k in range(i + 2, n + 1):
            if g.adjacent(i, k):
                for j in range(i + 1, k):
                    if not (g.adjacent(i, j) and g.adjacent(j, k)):
                        raise NotNuigError((i, j, k))
    b = []
    for j in range(2, n + 1):
        b.append(sum(1 for i in range(1, j) if g.adjacent(i, j)))
    nu = Nuig(tuple(b))
    if nu.edges != g.edges:
        raise GraphError("edge set does not round-trip through the b-sequence")
    return nu


def graph_sum(g1: Nuig, g2: Nuig) -> Nuig:
    """Glue vertex n1 of g1 to vertex 1 of g2."""
    return Nuig(g1.b + g2.b)


def reverse_graph(g: Nuig) -> Nuig:
    n = g.n
    edges = {_norm_edge(n + 1 - i, n + 1 - j) for i, j in g.edges}
    return Nuig.from_edges(n, edges)


# -- families ----------------------------------------------------------


def path(n: int) -> Nuig:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Nuig((1,) * (n - 1))


def complete(n: int) -> Nuig:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Nuig(tuple(range(1, n)))


def almost_complete(a: int) -> Nuig:
    """K_a with the edge {1,a} removed (a >= 3)."""
    if a < 3:
        raise GraphError("almost-complete graph needs a >= 3")
    return Nuig(tuple(range(1, a - 1)) + (a - 2,))


def ladder(n: int) -> Nuig:
    """Triangular ladder: i ~ j iff 1 <= j - i <= 2."""
    if n < 1:
        raise GraphError("ladder needs n >= 1")
    return Nuig(tuple(min(j - 1, 2) for j in range(2, n + 1)))


@dataclass(frozen=True)
class KChainSpec:
    gamma: tuple[int, ...]
    epsilon: tuple[int, ...] = ()

    def __post_init__(self):
        gamma = tuple(int(x) for x in self.gamma)
        eps = tuple(int(x) for x in self.epsilon) if self.epsilon else (0,) * len(gamma)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "epsilon", eps)
        if not gamma:
            raise GraphError("gamma must be nonempty")
        if len(eps) != len(gamma):
            raise GraphError("gamma and epsilon must have the same length")
        for t, (g, e) in enumerate(zip(gamma, eps), start=1):
            if g < 2:
                raise GraphError(f"gamma_{t}={g} < 2")
            if e not in (0, 1):
                raise GraphError(f"epsilon_{t}={e} is not 0/1")
            if e == 1 and g < 3:
                raise GraphError(f"epsilon_{t}=1 needs gamma_{t} >= 3")

    @property
    def length(self) -> int:
        return len(self.gamma)

    @property
    def n(self) -> int:
        return sum(self.gamma) - len(self.gamma) + 1

    def graph(self) -> Nuig:
        b: tuple[int, ...] = ()
        for g, e in zip(self.gamma, self.epsilon):
            b += (almost_complete(g) if e else complete(g)).b
        return Nuig(b)

    def __str__(self) -> str:
        s = "K_" + ",".join(map(str, self.gamma))
        if any(self.epsilon):
            s += "^" + "".join(map(str, self.epsilon))
        return s


def kchain(gamma: Sequence[int], epsilon: Sequence[int] = ()) -> Nuig:
    return KChainSpec(tuple(gamma), tuple(epsilon)).graph()


def make_family(name: str, *args) -> Nuig:
    builders = {
        "path": path,
        "complete": complete,
        "almostcomplete": almost_complete,
        "ladder": ladder,
        "kchain": kchain,
    }
    key = name.replace("_", "").replace("-", "").lower()
    if key not in builders:
        raise GraphError(f"unknown family {name!r}")
    return builders[key](*args)


def bowtie() -> Nuig:
    return kchain((3, 3))


def enumerate_nuigs(n: int) -> Iterator[Nuig]:
    """All natural unit interval graphs on [n], b-sequences in lexicographic order."""
    if n < 1:
        raise GraphError("n must be >= 1")

    def rec(j: int, prev: int, acc: list[int]):
        if j > n:
            yield Nuig(tuple(acc))
            return
        # j - b_j ranges over [prev, j]
        for bj in range(0, j - prev + 1):
            acc.append(bj)
            yield from rec(j + 1, j - bj, acc)
            acc.pop()

    yield from rec(2, 1, [])


# -- text formats ------------------------------------------------------


def parse_b_sequence(text: str) -> Nuig:
    text = text.strip()
    if not text:
        return Nuig(())
    return Nuig(tuple(int(x) for x in text.replace(" ", "").split(",") if x))


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list file")
    n = int(lines[0])
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.add(_norm_edge(int(parts[0]), int(parts[1])))
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph | Nuig) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
