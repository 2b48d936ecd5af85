import pytest

from chromaq.graphs import Graph, Nuig, bowtie, complete, path
from chromaq.oracle import LimitError, ascents, chrom_sym_q1, content_coefficient, x_brute_force
from chromaq.qpoly import QPoly, q_factorial, q_int
from chromaq.symfunc import ESym
from conftest import BOWTIE_X, CLAW, CLAW_X, P


def test_ascents():
    k2 = complete(2)
    assert ascents(k2, (1, 2)) == 1
    assert ascents(k2, (2, 1)) == 0
    assert ascents(bowtie(), (1, 2, 3, 4, 5)) == 6


def test_ascents_ignore_non_edges():
    # 1 and 3 are not adjacent in P3, so the pair does not count
    assert ascents(path(3), (1, 3, 2)) == 1


def test_bowtie():
    assert x_brute_force(bowtie(), check_symmetry=True) == BOWTIE_X


def test_single_vertex():
    assert x_brute_force(Nuig(())) == ESym.e(1)


def test_p6():
    q2, q3, q4 = q_int(2), q_int(3), q_int(4)
    expected = ESym({
        (2, 2, 2): q2.shift(2),
        (3, 2, 1): (q2 * 2).shift(2),
        (3, 3): (q3 * q2).shift(1),
        (4, 2): (q2 * q3 + q4).shift(1),
        (5, 1): q4.shift(1),
        (6,): q_int(6),
    })
    assert x_brute_force(path(6)) == expected


def test_q1_specialization():
    assert chrom_sym_q1(CLAW, check_symmetry=True) == CLAW_X
    assert chrom_sym_q1(Graph(3, frozenset())) == ESym.e(1, 1, 1)
    assert chrom_sym_q1(complete(3)) == ESym.e(3, coeff=6)


def test_complete_graphs():
    for n in range(1, 6):
        assert x_brute_force(complete(n)) == ESym.e(n, coeff=q_factorial(n))


def test_content_coefficient_symmetric_in_content():
    g = bowtie()
    assert content_coefficient(g, (2, 2, 1)) == content_coefficient(g, (1, 2, 2))


def test_limit():
    with pytest.raises(LimitError):
        x_brute_force(path(9))


def test_limit_override(monkeypatch):
    monkeypatch.setenv("CHROMAQ_LIMIT_OVERRIDE", "1")
    assert x_brute_force(path(2), limit=1) == ESym.e(2, coeff=P(1, 1))
