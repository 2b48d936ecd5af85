"""Partitions, compositions and symmetric functions in the elementary basis.

An :class:`ESym` maps partitions (weakly decreasing tuples of positive ints)
to :class:`QPoly` coefficients.  ``e_()`` is the empty partition, i.e. 1.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .qpoly import ONE, ZERO, QPoly, q_int

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def sort_to_partition(parts: Iterable[int]) -> Partition:
    """Sort decreasingly and drop zero parts (e_0 = 1)."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int) -> Iterator[Composition]:
    """Compositions of n, first part descending, then recursively."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first,) + rest


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > i) for i in range(mu[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


class ESym:
    """Finite linear combination of e_mu with QPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, QPoly] | Iterable[tuple[Partition, QPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, QPoly] = {}
        for mu, c in items:
            mu = sort_to_partition(mu)
            if isinstance(c, int):
                c = QPoly.const(c)
            acc[mu] = acc.get(mu, ZERO) + c
        object.__setattr__(self, "terms", {mu: c for mu, c in sorted(acc.items(), reverse=True) if c})

    def __setattr__(self, name, value):
        raise AttributeError("ESym is immutable")

    @classmethod
    def e(cls, *parts: int, coeff: QPoly | int = 1) -> "ESym":
        return cls({sort_to_partition(parts): coeff})

    def __getitem__(self, mu) -> QPoly:
        return self.terms.get(sort_to_partition(mu), ZERO)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ESym):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def degrees(self) -> set[int]:
        return {sum(mu) for mu in self.terms}

    def __add__(self, other: "ESym") -> "ESym":
        if not isinstance(other, ESym):
            return NotImplemented
        return ESym(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "ESym":
        return ESym({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "ESym") -> "ESym":
        return self + (-other)

    def scale(self, p: QPoly | int) -> "ESym":
        if isinstance(p, int):
            p = QPoly.const(p)
        return ESym({mu: c * p for mu, c in self.terms.items()})

    def __mul__(self, other) -> "ESym":
        if isinstance(other, (QPoly, int)):
            return self.scale(other)
        if not isinstance(other, ESym):
            return NotImplemented
        out: list[tuple[Partition, QPoly]] = []
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                out.append((mu + nu, a * b))
        return ESym(out)

    __rmul__ = __mul__

    def map_coeffs(self, f) -> "ESym":
        return ESym({mu: f(c) for mu, c in self.terms.items()})

    def at_q(self, value: int) -> "ESym":
        """Specialize q to an integer, keeping constant coefficients."""
        return self.map_coeffs(lambda c: QPoly.const(c(value)))

    def evaluate(self, xs: Iterable, q=None):
        """Numeric value at x = xs (finitely many variables)."""
        xs = list(xs)
        ev = _elementary_values(xs, max((sum(mu) for mu in self.terms), default=0))
        total = 0
        for mu, c in self.terms.items():
            if q is None and (c.degree or 0) > 0:
                raise ValueError("q value required for non-constant coefficients")
            term = c(q if q is not None else 0)
            for part in mu:
                term = term * ev[part]
            total += term
        return total

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*e[{','.join(map(str, mu))}]" for mu, c in self.terms.items())

    def __repr__(self) -> str:
        return f"ESym({self})"

    def to_json(self) -> list[dict]:
        return [{"partition": list(mu), "coeff": c.to_json()} for mu, c in self.terms.items()]

    @classmethod
    def from_json(cls, data) -> "ESym":
        return cls({tuple(d["partition"]): QPoly.from_json(d["coeff"]) for d in data})


def _elementary_values(xs: list, top: int) -> list:
    # e_0..e_top at xs by the usual product expansion
    ev = [1] + [0] * top
    for x in xs:
        for k in range(top, 0, -1):
            ev[k] = ev[k] + ev[k - 1] * x
    return ev


ZERO_E = ESym()
ONE_E = ESym({(): ONE})


# -- basis changes -------------------------------------------------------


@lru_cache(maxsize=None)
def p_to_e(n: int) -> ESym:
    """p_n = sum over compositions a of n of (-1)^(n - len a) * a_1 * e_sort(a)."""
    if n < 1:
        raise ValueError("p_to_e needs n >= 1")
    return ESym([(a, QPoly.const((-1) ** (n - len(a)) * a[0])) for a in compositions(n)])


@lru_cache(maxsize=None)
def h_to_e(n: int) -> ESym:
    if n < 0:
        raise ValueError("h_to_e needs n >= 0")
    return ESym([(a, QPoly.const((-1) ** (n - len(a)))) for a in compositions(n)])


@lru_cache(maxsize=None)
def e_pleth_qm1(n: int) -> ESym:
    """e_n[(q-1)x] / (q-1) = sum over compositions a of (-1)^(len a - 1) [a_1]_q e_sort(a)."""
    if n < 1:
        raise ValueError("e_pleth_qm1 needs n >= 1")
    return ESym([(a, q_int(a[0]) * (-1) ** (len(a) - 1)) for a in compositions(n)])


def _zero_one_matrices(rows: Partition, cols: Partition) -> int:
    """Number of 0/1 matrices with the given row and column sums."""
    cols = tuple(cols)

    @lru_cache(maxsize=None)
    def count(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(rows):
            return int(not any(remaining))
        total = 0
        for chosen in combinations(range(len(remaining)), rows[i]):
            if all(remaining[j] for j in chosen):
                nxt = list(remaining)
                for j in chosen:
                    nxt[j] -= 1
                total += count(i + 1, tuple(nxt))
        return total

    return count(0, cols)


_table_lock = threading.Lock()
_e_to_m_tables: dict[int, dict[Partition, dict[Partition, int]]] = {}


def e_to_m_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """table[mu][lam] = coefficient of m_lam in e_mu."""
    with _table_lock:
        table = _e_to_m_tables.get(n)
        if table is None:
            parts = list(partitions(n))
            table = {}
            for mu in parts:
                row = {}
                for lam in parts:
                    c = _zero_one_matrices(mu, lam)
                    if c:
                        row[lam] = c
                table[mu] = row
            _e_to_m_tables[n] = table
        return table


def e_to_m(f: ESym, n: int) -> dict[Partition, QPoly]:
    table = e_to_m_table(n)
    out: dict[Partition, QPoly] = {}
    for mu, c in f.terms.items():
        if sum(mu) != n:
            raise ValueError(f"term e{mu} is not homogeneous of degree {n}")
        for lam, k in table[mu].items():
            out[lam] = out.get(lam, ZERO) + c * k
    return {lam: c for lam, c in out.items() if c}


class NotSymmetricError(ValueError):
    pass


def m_to_e(m_coeffs: Mapping[Partition, QPoly | int], n: int) -> ESym:
    """Invert the e -> m transition.

    e_{lam'} = m_lam + (terms strictly below lam in dominance), so sweeping
    lam in lexicographically decreasing order peels off one e at a time.
    """
    table = e_to_m_table(n)
    residue: dict[Partition, QPoly] = {}
    for lam, c in m_coeffs.items():
        lam = tuple(lam)
        if lam != sort_to_partition(lam) or sum(lam) != n:
            raise NotSymmetricError(f"{lam} is not a partition of {n}")
        c = QPoly.const(c) if isinstance(c, int) else c
        if c:
            residue[lam] = c
    result: dict[Partition, QPoly] = {}
    for lam in partitions(n):
        c = residue.pop(lam, ZERO)
        if not c:
            continue
        mu = conjugate(lam)
        result[mu] = c
        for nu, k in table[mu].items():
            if nu == lam:
                continue
            left = residue.get(nu, ZERO) - c * k
            if left:
                residue[nu] = left
            else:
                residue.pop(nu, None)
    if residue:
        raise NotSymmetricError(f"nonzero residue after back-substitution: {residue}")
    return ESym(result)


def e_monomial_expansion(mu: Partition) -> dict[Partition, int]:
    return dict(e_to_m_table(sum(mu))[tuple(mu)])
