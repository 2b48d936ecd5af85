import pytest

from chromaq.graphs import (Graph, GraphError, KChainSpec, NotNuigError, Nuig, almost_complete, bowtie,
                            complete, enumerate_nuigs, format_edge_list, graph_sum, kchain, ladder,
                            make_family, parse_b_sequence, parse_edge_list, path, reverse_graph,
                            validate_nuig)

BOWTIE_EDGES = {(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)}


def test_bowtie_b_sequence():
    g = validate_nuig(Graph(5, frozenset(BOWTIE_EDGES)))
    assert g.b == (1, 2, 1, 2)
    assert g.edges == frozenset(BOWTIE_EDGES)
    assert bowtie() == g


def test_validate_reports_first_bad_triple():
    assert validate_nuig(path(4).graph).b == (1, 1, 1)
    with pytest.raises(NotNuigError) as info:
        validate_nuig(Graph(3, frozenset({(1, 3)})))
    assert info.value.triple == (1, 2, 3)


def test_bad_b_sequences_rejected():
    with pytest.raises(GraphError):
        Nuig((1, 3))
    with pytest.raises(GraphError):
        Nuig((1, 2, 0, 3))  # 5 - 3 < 3 - 2... j - b_j must not decrease


def test_graph_sum():
    assert graph_sum(complete(3), complete(3)) == bowtie()
    assert graph_sum(path(2), path(2)) == path(3)
    k64 = graph_sum(complete(6), complete(4))
    assert k64.n == 9 and k64 == kchain((6, 4))
    assert k64.is_cut(6)


def test_families():
    assert make_family("path", 6).b == (1, 1, 1, 1, 1)
    assert make_family("ladder", 8).b == (1, 2, 2, 2, 2, 2, 2)
    assert ladder(8) == make_family("ladder", 8)
    assert almost_complete(4).edge_count == 5
    k66 = make_family("kchain", (6, 6), (0, 0))
    assert k66.n == 11 and k66.edge_count == 30


def test_kchain_spec_validation():
    assert KChainSpec((3, 4), (1, 0)).n == 6
    with pytest.raises(GraphError):
        KChainSpec((2, 3), (1, 0))
    with pytest.raises(GraphError):
        KChainSpec((1,))


def test_enumeration_is_catalan():
    assert [sum(1 for _ in enumerate_nuigs(n)) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    bs = [g.b for g in enumerate_nuigs(4)]
    assert bs == sorted(bs)


def test_every_enumerated_graph_validates():
    for n in range(1, 7):
        for g in enumerate_nuigs(n):
            assert validate_nuig(g.graph) == g


def test_reverse():
    assert reverse_graph(bowtie()) == bowtie()
    assert reverse_graph(Nuig((1, 1, 2))).b == (1, 2, 1)
    assert reverse_graph(path(5)) == path(5)
    for g in enumerate_nuigs(5):
        assert reverse_graph(reverse_graph(g)) == g


def test_text_formats():
    g = bowtie()
    assert parse_edge_list(format_edge_list(g)).edges == g.edges
    assert parse_b_sequence("1,2,1,2") == g
    assert parse_b_sequence("").n == 1
    with pytest.raises(GraphError):
        parse_edge_list("3\n1 2 3\n")
