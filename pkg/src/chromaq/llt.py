"""X_G via the e-expansion of the shifted LLT polynomial.

LLT_G(x; q+1) = sum over edge subsets theta of q^|theta| e_lambda(theta), and
X_G = LLT_G[(q-1)x] / (q-1)^n.  Substituting q -> q-1 and applying the
plethysm factor by factor gives

    X_G = sum_theta (q-1)^(|theta| - n + len(lambda)) prod_j e_{lambda_j}[(q-1)x]/(q-1).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .graphs import Nuig
from .oracle import check_limit
from .qpoly import ZERO, QPoly
from .symfunc import ESym, Partition, e_pleth_qm1

EDGE_LIMIT = 24


def _mask_edges(g: Nuig, theta) -> list[tuple[int, int]]:
    if isinstance(theta, int):
        edges = g.sorted_edges()
        return [edges[i] for i in range(len(edges)) if theta >> i & 1]
    return sorted((min(e), max(e)) for e in theta)


def lrv(g: Nuig, theta, u: int) -> int:
    """Smallest vertex reachable from u along a decreasing path in theta."""
    return _lrv_all(g.n, _mask_edges(g, theta))[u]


def _lrv_all(n: int, edges: list[tuple[int, int]]) -> list[int]:
    down: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in edges:
        down[j].append(i)
    rep = list(range(n + 1))
    for v in range(1, n + 1):
        for w in down[v]:
            if rep[w] < rep[v]:
                rep[v] = rep[w]
    return rep


def lambda_of_theta(g: Nuig, theta) -> Partition:
    rep = _lrv_all(g.n, _mask_edges(g, theta))
    sizes: dict[int, int] = {}
    for v in range(1, g.n + 1):
        sizes[rep[v]] = sizes.get(rep[v], 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def _theta_table(g: Nuig, limit: int) -> dict[tuple[Partition, int], int]:
    """Counts of edge subsets by (lambda(theta), |theta|)."""
    edges = g.sorted_edges()
    check_limit(len(edges), limit, "edge count")
    n = g.n
    table: dict[tuple[Partition, int], int] = {}
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        rep = _lrv_all(n, chosen)
        sizes: dict[int, int] = {}
        for v in range(1, n + 1):
            sizes[rep[v]] = sizes.get(rep[v], 0) + 1
        lam = tuple(sorted(sizes.values(), reverse=True))
        if len(chosen) < n - len(lam):
            raise AssertionError(f"theta={chosen} has too few edges for lambda={lam}")
        key = (lam, len(chosen))
        table[key] = table.get(key, 0) + 1
    return table


def llt_shifted(g: Nuig, limit: int = EDGE_LIMIT) -> ESym:
    """LLT_G(x; q+1) in the e-basis."""
    acc: dict[Partition, dict[int, int]] = {}
    for (lam, size), count in _theta_table(g, limit).items():
        row = acc.setdefault(lam, {})
        row[size] = row.get(size, 0) + count
    return ESym({lam: QPoly(row.get(k, 0) for k in range(max(row) + 1)) for lam, row in acc.items()})


@lru_cache(maxsize=None)
def _q_minus_1_power(k: int) -> QPoly:
    if k < 0:
        raise ArithmeticError("negative power of (q-1): the plethystic quotient is not polynomial")
    return QPoly(comb(k, i) * (-1) ** (k - i) for i in range(k + 1))


def x_from_llt(g: Nuig, limit: int = EDGE_LIMIT) -> ESym:
    n = g.n
    by_lambda: dict[Partition, QPoly] = {}
    for (lam, size), count in _theta_table(g, limit).items():
        p = _q_minus_1_power(size - (n - len(lam))) * count
        by_lambda[lam] = by_lambda.get(lam, ZERO) + p
    total = ESym()
    for lam, coeff in by_lambda.items():
        term = ESym({(): coeff})
        for part in lam:
            term = term * e_pleth_qm1(part)
        total = total + term
    return total
