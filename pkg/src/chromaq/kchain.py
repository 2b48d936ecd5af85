"""Almost-K-chains: fixed forest triples, the index set A, and the product formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .foresttriples import FOREST_LIMIT, ForestTriple, enumerate_forest_triples
from .graphs import KChainSpec
from .qpoly import ONE, QPoly, is_log_concave, is_nonnegative, is_palindromic, is_unimodal, q_factorial, q_int
from .symfunc import ESym, sort_to_partition, weak_compositions


def cut_vertices(spec: KChainSpec) -> tuple[int, ...]:
    """c_0 = 1, c_t = gamma_1 + ... + gamma_t - t + 1."""
    out = [1]
    for g in spec.gamma:
        out.append(out[-1] + g - 1)
    return tuple(out)


def is_fixed(f: ForestTriple, spec: KChainSpec) -> bool:
    if not f.is_atom:
        return False
    c = cut_vertices(spec)
    for t in range(1, spec.length + 1):
        lo, hi = c[t - 1], c[t]
        i = f.index_containing(hi)
        tree = f.triples[i]
        # (C1) at most one other tree meets [c_{t-1}, c_t]
        others = sum(1 for k, tr in enumerate(f.triples)
                     if k != i and any(lo <= v <= hi for v in tr.tree))
        if others > 1:
            return False
        g_t, e_t = spec.gamma[t - 1], spec.epsilon[t - 1]
        if lo not in tree.tree:
            # (C2)
            if tree.r < g_t - e_t:
                return False
        elif sum(1 for v in tree.tree if v >= lo) < g_t:
            # (C3)
            return False
    return True


def fixed_points(spec: KChainSpec, limit: int = FOREST_LIMIT) -> Iterator[ForestTriple]:
    g = spec.graph()
    for f in enumerate_forest_triples(g, atoms_only=True, limit=limit):
        if is_fixed(f, spec):
            yield f


def fixed_sum(spec: KChainSpec, limit: int = FOREST_LIMIT) -> ESym:
    g = spec.graph()
    acc: dict[tuple, dict[int, int]] = {}
    for f in fixed_points(spec, limit):
        row = acc.setdefault(f.type, {})
        w = f.weight(g)
        row[w] = row.get(w, 0) + 1
    return ESym({mu: QPoly(row.get(k, 0) for k in range(max(row) + 1)) for mu, row in acc.items()})


def _tail_bounds(spec: KChainSpec) -> list[int]:
    # bound[i] = gamma_i + ... + gamma_l - (l - i), 1-based i in 2..l+1
    ell = spec.length
    bound = [0] * (ell + 2)
    for i in range(2, ell + 2):
        bound[i] = sum(spec.gamma[i - 1:]) - (ell - i)
    return bound


def in_a(alpha: tuple[int, ...], spec: KChainSpec) -> bool:
    ell = spec.length
    if len(alpha) != ell + 1 or alpha[0] < 1 or any(a < 0 for a in alpha):
        return False
    if sum(alpha) != spec.n:
        return False
    bound = _tail_bounds(spec)
    for i in range(2, ell + 2):
        a_i = alpha[i - 1]
        tail = sum(alpha[i - 1:])
        thresh = spec.gamma[i - 2] - spec.epsilon[i - 2]
        below = a_i < thresh - 1 and tail < bound[i]
        above = a_i >= thresh and tail >= bound[i]
        if not (below or above):
            return False
    return True


def enumerate_a(spec: KChainSpec) -> Iterator[tuple[int, ...]]:
    for alpha in weak_compositions(spec.n, spec.length + 1):
        if in_a(alpha, spec):
            yield alpha


def summand(alpha: tuple[int, ...], spec: KChainSpec) -> QPoly:
    """[alpha_1]_q prod_i q^{m_i} [|alpha_i - (gamma_{i-1} - 1 - eps_{i-1})|]_q."""
    p = q_int(alpha[0])
    for i in range(2, spec.length + 2):
        d = spec.gamma[i - 2] - 1 - spec.epsilon[i - 2]
        a_i = alpha[i - 1]
        p = p * q_int(abs(a_i - d)).shift(min(a_i, d))
    return p


def summand_twice_center(spec: KChainSpec) -> int:
    return 2 * sum(spec.gamma) - 3 * spec.length - sum(spec.epsilon)


def prefactor(spec: KChainSpec) -> QPoly:
    p = ONE
    for g in spec.gamma:
        p = p * q_factorial(g - 2)
    return p


def explicit_formula(spec: KChainSpec) -> ESym:
    terms = [(sort_to_partition(alpha), summand(alpha, spec)) for alpha in enumerate_a(spec)]
    return ESym(terms).scale(prefactor(spec))


def two_clique_formula(a: int, b: int) -> ESym:
    if a < 2 or b < 2:
        raise ValueError("clique sizes must be at least 2")
    n = a + b - 1
    terms = [((k, n - k), q_int(2 * k - n).shift(n - k)) for k in range(max(a, b), n + 1)]
    return ESym(terms).scale(q_factorial(a - 1) * q_factorial(b - 1))


@dataclass
class CoefficientVerdict:
    partition: tuple[int, ...]
    coeff: QPoly
    nonnegative: bool
    palindromic: bool
    unimodal: bool
    log_concave: bool


@dataclass
class PositivityReport:
    edge_count: int
    verdicts: list[CoefficientVerdict] = field(default_factory=list)

    @property
    def e_positive(self) -> bool:
        return all(v.nonnegative for v in self.verdicts)

    @property
    def palindromic(self) -> bool:
        return all(v.palindromic for v in self.verdicts)

    @property
    def e_unimodal(self) -> bool:
        return all(v.unimodal for v in self.verdicts)

    @property
    def e_log_concave(self) -> bool:
        return all(v.log_concave for v in self.verdicts)

    def summary(self) -> dict:
        return {"e_positive": self.e_positive, "palindromic": self.palindromic,
                "e_unimodal": self.e_unimodal, "e_log_concave": self.e_log_concave}


def positivity_report(e: ESym, edge_count: int) -> PositivityReport:
    rep = PositivityReport(edge_count)
    for mu, c in e:
        rep.verdicts.append(CoefficientVerdict(
            mu, c, is_nonnegative(c), is_palindromic(c, edge_count), is_unimodal(c), is_log_concave(c)))
    return rep
