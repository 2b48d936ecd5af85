import pytest

from chromaq.graphs import Nuig, bowtie, complete, enumerate_nuigs, path
from chromaq.llt import lambda_of_theta, llt_shifted, lrv, x_from_llt
from chromaq.oracle import LimitError, x_brute_force
from chromaq.qpoly import q_factorial
from chromaq.symfunc import ESym
from conftest import BOWTIE_X, P


def test_lrv():
    g = bowtie()
    for u in range(1, 6):
        assert lrv(g, 0, u) == u
    assert lrv(g, {(1, 3), (3, 5)}, 5) == 1
    assert lrv(g, {(4, 5)}, 3) == 3


def test_lambda_of_theta():
    g = bowtie()
    assert lambda_of_theta(g, set()) == (1, 1, 1, 1, 1)
    assert lambda_of_theta(complete(4), set(complete(4).edges)) == (4,)
    assert lambda_of_theta(g, {(1, 2), (4, 5)}) == (2, 2, 1)


def test_lrv_uses_smallest_representative_below():
    # 2-3 and 1-3 both point down from 3; 3 joins 1, and 2 has nothing below it
    g = complete(3)
    assert lrv(g, {(2, 3), (1, 3)}, 3) == 1
    assert lrv(g, {(2, 3), (1, 3)}, 2) == 2
    assert lambda_of_theta(g, {(2, 3), (1, 3)}) == (2, 1)


def test_llt_shifted():
    assert llt_shifted(path(2)) == ESym({(1, 1): P(1), (2,): P(0, 1)})
    assert llt_shifted(Nuig(())) == ESym.e(1)
    assert llt_shifted(path(3)) == ESym({(1, 1, 1): P(1), (2, 1): P(0, 2), (3,): P(0, 0, 1)})


def test_x_from_llt():
    assert x_from_llt(path(2)) == ESym.e(2, coeff=P(1, 1))
    assert x_from_llt(bowtie()) == BOWTIE_X
    assert x_from_llt(complete(3)) == ESym.e(3, coeff=q_factorial(3))


def test_agrees_with_brute_force_n5():
    for g in enumerate_nuigs(5):
        assert x_from_llt(g) == x_brute_force(g)


def test_edge_limit():
    with pytest.raises(LimitError):
        x_from_llt(complete(8))
