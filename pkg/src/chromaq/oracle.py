"""Chromatic (quasi)symmetric functions straight from the definition.

The coefficient of the monomial x_1^lam_1 x_2^lam_2 ... is the q-count of
proper colourings using colour c exactly lam_c times.  Those coefficients are
then converted to the elementary basis.  Nothing here depends on the other
computation paths, which is the point.
"""

from __future__ import annotations

import os
from typing import Sequence

from .graphs import Graph, Nuig
from .qpoly import QPoly
from .symfunc import ESym, m_to_e, partitions

DEFAULT_LIMIT = 8


class LimitError(RuntimeError):
    pass


def limits_lifted() -> bool:
    return os.environ.get("CHROMAQ_LIMIT_OVERRIDE") == "1"


def check_limit(value: int, limit: int, what: str) -> None:
    if value > limit and not limits_lifted():
        raise LimitError(f"{what} = {value} exceeds the limit {limit} "
                         f"(set CHROMAQ_LIMIT_OVERRIDE=1 to lift)")


def ascents(g: Graph | Nuig, kappa: Sequence[int]) -> int:
    """Edges {i<j} with kappa(i) < kappa(j); kappa is indexed from vertex 1."""
    return sum(1 for i, j in g.edges if kappa[i - 1] < kappa[j - 1])


def content_coefficient(g: Graph | Nuig, content: Sequence[int]) -> list[int]:
    """Coefficients (by q-power) of x^content in X_G(x;q).

    Colours are assigned vertex by vertex; each vertex only needs checking
    against its already-coloured (smaller) neighbours.
    """
    n = g.n
    adj = g.adjacency
    lower = [sorted(u for u in adj[v] if u < v) for v in range(n + 1)]
    remaining = list(content)
    kappa = [0] * (n + 1)
    counts = [0] * (len(g.edges) + 1)

    def rec(v: int, asc: int):
        if v > n:
            counts[asc] += 1
            return
        for c in range(len(remaining)):
            if not remaining[c]:
                continue
            add = 0
            ok = True
            for u in lower[v]:
                cu = kappa[u]
                if cu == c:
                    ok = False
                    break
                if cu < c:
                    add += 1
            if not ok:
                continue
            remaining[c] -= 1
            kappa[v] = c
            rec(v + 1, asc + add)
            remaining[c] += 1
        kappa[v] = 0

    rec(1, 0)
    return counts


def monomial_coefficients(g: Graph | Nuig, q_weighted: bool = True) -> dict[tuple, QPoly]:
    out = {}
    for lam in partitions(g.n):
        counts = content_coefficient(g, lam)
        c = QPoly(counts) if q_weighted else QPoly.const(sum(counts))
        if c:
            out[lam] = c
    return out


def x_brute_force(g: Nuig, limit: int = DEFAULT_LIMIT, check_symmetry: bool = False) -> ESym:
    """X_G(x;q) in the e-basis by enumerating proper colourings."""
    check_limit(g.n, limit, "vertex count")
    m = monomial_coefficients(g)
    if check_symmetry:
        _check_symmetric(g, m, q_weighted=True)
    return m_to_e(m, g.n)


def chrom_sym_q1(g: Graph | Nuig, limit: int = DEFAULT_LIMIT, check_symmetry: bool = False) -> ESym:
    """X_G(x) = X_G(x;1) for any graph, in the e-basis."""
    check_limit(g.n, limit, "vertex count")
    m = monomial_coefficients(g, q_weighted=False)
    if check_symmetry:
        _check_symmetric(g, m, q_weighted=False)
    return m_to_e(m, g.n)


def _check_symmetric(g, m: dict, q_weighted: bool) -> None:
    # permuted contents must give the same coefficient
    for lam, c in m.items():
        for content in (tuple(reversed(lam)), lam[1:] + lam[:1]):
            counts = content_coefficient(g, content)
            other = QPoly(counts) if q_weighted else QPoly.const(sum(counts))
            if other != c:
                raise ArithmeticError(f"x^{content} and x^{lam} coefficients differ: {other} vs {c}")
