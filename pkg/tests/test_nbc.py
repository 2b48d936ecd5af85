import random

import pytest

from chromaq.cli import random_connected_graph
from chromaq.foresttriples import signed_e_sum
from chromaq.graphs import Graph, bowtie, complete, enumerate_nuigs, path
from chromaq.nbc import (EdgeOrder, is_nbc, nbc_trees, s_all, s_k, signed_e_sum_nbc, spanning_trees,
                         two_part_coefficient)
from chromaq.oracle import chrom_sym_q1
from chromaq.qpoly import ONE
from chromaq.symfunc import ESym
from conftest import BOWTIE_X, CLAW, CLAW_X, P


def test_is_nbc_triangle():
    k3 = complete(3)
    lex = EdgeOrder.lex(k3)
    # the cycle's largest edge is 23, so {12, 13} is a broken circuit
    assert not is_nbc([(1, 2), (1, 3)], k3, lex)
    assert is_nbc([(1, 2), (2, 3)], k3, lex)
    assert is_nbc([(1, 3), (2, 3)], k3, lex)
    assert is_nbc([], k3, lex)


def test_claw_trees_all_nbc():
    lex = EdgeOrder.lex(CLAW)
    assert all(is_nbc(t, CLAW, lex) for t in spanning_trees(CLAW, (1, 2, 3, 4)))


def _has_broken_circuit_slow(tree, g, order):
    # every cycle of g, by brute force over edge subsets
    from itertools import combinations
    edges = g.sorted_edges()
    tset = set(tree)
    for k in range(3, len(edges) + 1):
        for cyc in combinations(edges, k):
            deg = {}
            for u, v in cyc:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected 2-regular edge set is a cycle
            verts = list(deg)
            seen, stack = {verts[0]}, [verts[0]]
            while stack:
                x = stack.pop()
                for u, v in cyc:
                    for a, b in ((u, v), (v, u)):
                        if a == x and b not in seen:
                            seen.add(b)
                            stack.append(b)
            if len(seen) != len(verts):
                continue
            top = max(cyc, key=order)
            if set(cyc) - {top} <= tset:
                return True
    return False


def test_fundamental_cycle_check_matches_all_cycles():
    rng = random.Random(3)
    for _ in range(15):
        g = random_connected_graph(5, rng, p=0.6)
        order = EdgeOrder.random(g, rng.randrange(1000))
        for t in spanning_trees(g, range(1, 6)):
            assert is_nbc(t, g, order) == (not _has_broken_circuit_slow(t, g, order))


def test_signed_sum_examples():
    assert signed_e_sum_nbc(CLAW) == CLAW_X
    assert signed_e_sum_nbc(Graph(4, frozenset())) == ESym.e(1, 1, 1, 1)
    assert signed_e_sum_nbc(bowtie().graph) == BOWTIE_X.at_q(1)


def test_order_independence():
    rng = random.Random(11)
    for n in (4, 5):
        for _ in range(10):
            g = random_connected_graph(n, rng)
            ref = chrom_sym_q1(g)
            for seed in range(4):
                assert signed_e_sum_nbc(g, EdgeOrder.random(g, seed)) == ref


def test_lex_nbc_trees_on_nuig_are_decreasing():
    from chromaq.foresttriples import decreasing_trees
    for g in enumerate_nuigs(5):
        lex = EdgeOrder.lex(g)
        want = sorted(sorted(t.edges()) for t in decreasing_trees(g, range(1, 6)))
        got = sorted(sorted(t) for t in nbc_trees(g, range(1, 6), lex))
        assert got == want


def test_edge_order_parsing():
    g = bowtie()
    assert EdgeOrder.parse(g, "lex").ranked == tuple(g.sorted_edges())
    assert EdgeOrder.parse(g, "random:5").ranked == EdgeOrder.random(g, 5).ranked
    with pytest.raises(ValueError):
        EdgeOrder.parse(g, "sideways")


def test_s_values():
    g = bowtie()
    assert s_all(g) == P(1, 2, 1)
    assert s_all(path(7)) == ONE
    assert s_k(g, 2) == P(1, 1)
    assert s_k(g, 2) + s_k(g, 3) == P(2, 2)


def test_two_part_bowtie():
    g = bowtie()
    assert two_part_coefficient(g, 2) == P(0, 0, 1, 2, 1)
    assert two_part_coefficient(g, 1) == P(0, 1, 3, 4, 3, 1)
    with pytest.raises(ValueError):
        two_part_coefficient(g, 3)


def test_two_part_all_small():
    for n in range(2, 7):
        for g in enumerate_nuigs(n):
            e = signed_e_sum(g)
            for k in range(1, n // 2 + 1):
                assert two_part_coefficient(g, k) == e[(n - k, k)]
