"""Graph/trigraph basics and the contraction rule."""

import random

import pytest

from twinwidth.trigraph import (
    Graph,
    Trigraph,
    contract,
    is_module,
    quotient,
    validate_partition,
)


def test_graph_construction_and_accessors():
    g = Graph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    assert g.n == 4
    assert g.neighbors(2) == {1, 3}
    assert g.degree(1) == 1
    assert g.has_edge(3, 2)
    assert not g.has_edge(1, 4)
    assert list(g.edges()) == [(1, 2), (2, 3), (3, 4)]
    assert g.edge_count() == 3
    assert g.closed_neighborhood(2) == {1, 2, 3}


def test_graph_rejects_loops_and_unknown_endpoints():
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 3)])


def test_graph_families():
    assert Graph.complete(4).edge_count() == 6
    assert Graph.path(5).edge_count() == 4
    assert Graph.cycle(5).edge_count() == 5
    with pytest.raises(ValueError):
        Graph.cycle(2)


def test_induced_without_complement():
    g = Graph.cycle(5)
    h = g.induced([1, 2, 3])
    assert h.vertices == {1, 2, 3}
    assert list(h.edges()) == [(1, 2), (2, 3)]
    assert g.without([4]).vertices == {1, 2, 3, 5}
    c = Graph.path(4).complement()
    assert list(c.edges()) == [(1, 3), (1, 4), (2, 4)]


def test_components_and_relabel():
    g = Graph([1, 2, 5, 7, 9], [(5, 7), (9, 7)])
    assert g.components() == [{1}, {2}, {5, 7, 9}]
    assert not g.is_connected()
    h, names = g.relabel_compact()
    assert h.vertices == {1, 2, 3, 4, 5}
    assert names == {1: 1, 2: 2, 5: 3, 7: 4, 9: 5}
    assert h.has_edge(3, 4) and h.has_edge(4, 5)


def test_trigraph_validation():
    t = Trigraph([1, 2, 3], black_edges=[(1, 2)], red_edges=[(2, 3)])
    assert t.red_degree(2) == 1
    assert t.max_red_degree() == 1
    with pytest.raises(ValueError):
        Trigraph([1, 2], black_edges=[(1, 2)], red_edges=[(1, 2)])
    with pytest.raises(ValueError):
        Trigraph([1, 2], bags={1: frozenset([1])})


def test_from_graph_round_trip():
    g = Graph.cycle(4)
    t = Trigraph.from_graph(g)
    assert t.red_edges() == []
    assert t.total_graph() == g
    assert t.bag_partition() == [frozenset([v]) for v in [1, 2, 3, 4]]


def test_contract_merges_neighborhoods():
    # one shared black neighbor, one private each
    g = Graph([1, 2, 3, 4, 5], [(1, 3), (2, 3), (1, 4), (2, 5)])
    t = contract(Trigraph.from_graph(g), 1, 2)
    z = 6
    assert t.vertices == {3, 4, 5, z}
    assert t.black[z] == {3}
    assert t.red[z] == {4, 5}
    assert t.bags[z] == frozenset([1, 2])
    assert t.retired == {1, 2, 6}


def test_contract_shared_neighbor_goes_red_unless_black_on_both_sides():
    # x is black to u but red to v, so the merged edge must be red
    t = Trigraph([1, 2, 3], black_edges=[(1, 3)], red_edges=[(2, 3)])
    t2 = contract(t, 1, 2)
    assert t2.red[4] == {3}
    assert t2.black[4] == set()


def test_contract_drops_edge_between_contracted_pair():
    t = Trigraph.from_graph(Graph([1, 2], [(1, 2)]))
    t2 = contract(t, 1, 2)
    assert t2.vertices == {3}
    assert t2.red_degree(3) == 0


def test_contract_rejects_dead_or_reused_ids():
    t = Trigraph.from_graph(Graph.path(3))
    t2 = contract(t, 1, 2)
    with pytest.raises(ValueError):
        contract(t2, 4, 3, z=1)  # 1 is retired
    with pytest.raises(ValueError):
        contract(t2, 1, 3)  # 1 is gone
    with pytest.raises(ValueError):
        contract(t2, 3, 3)


def test_contract_mixed_neighborhood_example():
    # u: black to 4,7,8,10,12,13 and red to 3,9,11
    # v: black to 7,8,9,12,13,5 and red to 10,11,6
    black = [(1, 4), (1, 7), (1, 8), (1, 10), (1, 12), (1, 13),
             (2, 7), (2, 8), (2, 9), (2, 12), (2, 13), (2, 5)]
    red = [(1, 3), (1, 9), (1, 11), (2, 10), (2, 11), (2, 6)]
    t = Trigraph(range(1, 14), black_edges=black, red_edges=red)
    t2 = contract(t, 1, 2)
    z = 14
    assert t2.black[z] == {7, 8, 12, 13}
    assert t2.red[z] == {3, 4, 5, 6, 9, 10, 11}
    assert t2.red_degree(z) == 7


def test_contract_against_naive_recomputation():
    rng = random.Random(4821)
    for _ in range(40):
        n = rng.randint(4, 9)
        verts = list(range(1, n + 1))
        black, red = [], []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                r = rng.random()
                if r < 0.3:
                    black.append((i, j))
                elif r < 0.45:
                    red.append((i, j))
        t = Trigraph(verts, black_edges=black, red_edges=red)
        u, v = rng.sample(verts, 2)
        t2 = contract(t, u, v)
        z = n + 1
        expect_black = set()
        expect_red = set()
        for x in (t.neighbors(u) | t.neighbors(v)) - {u, v}:
            if x in t.black[u] and x in t.black[v]:
                expect_black.add(x)
            else:
                expect_red.add(x)
        assert t2.black[z] == expect_black
        assert t2.red[z] == expect_red
        # untouched vertices keep their relations
        for x in verts:
            if x in (u, v):
                continue
            assert t2.black[x] - {z} == t.black[x] - {u, v}
            assert t2.red[x] - {z} == t.red[x] - {u, v}


def test_is_module():
    g = Graph([1, 2, 3, 4], [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert is_module(g, {1, 2})
    assert not is_module(g, {2, 3})
    assert is_module(g, {1, 2}, relative_to={4})
    with pytest.raises(ValueError):
        is_module(g, {1, 5})
    with pytest.raises(ValueError):
        is_module(g, {1, 2}, relative_to={2, 3})


def test_validate_partition():
    validate_partition({1, 2, 3}, [{1}, {2, 3}])
    with pytest.raises(ValueError):
        validate_partition({1, 2, 3}, [{1}, {2}])
    with pytest.raises(ValueError):
        validate_partition({1, 2}, [{1}, {1, 2}])
    with pytest.raises(ValueError):
        validate_partition({1, 2}, [{1}, {2}, set()])


def test_quotient_colors():
    g = Graph.cycle(6)
    q = quotient(g, [{1, 4}, {2, 5}, {3, 6}])
    assert q.vertices == {1, 2, 3}
    assert q.black_edges() == []
    assert sorted(q.red_edges()) == [(1, 2), (1, 3), (2, 3)]
    assert q.bags[1] == frozenset([1, 4])


def test_quotient_of_modules_has_no_red():
    g = Graph([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)])
    q = quotient(g, [{1}, {2, 3, 4}])
    assert q.red_edges() == []
    assert q.black_edges() == [(1, 2)]


def test_quotient_order_independent():
    g = Graph.path(6)
    a = quotient(g, [{1, 2}, {3, 4}, {5, 6}])
    b = quotient(g, [{5, 6}, {1, 2}, {3, 4}])
    # classes are numbered by position, so compare the multiset of
    # colored relations between bags
    def canon(t):
        rel = {}
        for x in t.vertices:
            for y in t.black[x]:
                rel[frozenset([t.bags[x], t.bags[y]])] = "black"
            for y in t.red[x]:
                rel[frozenset([t.bags[x], t.bags[y]])] = "red"
        return rel
    assert canon(a) == canon(b)


def test_same_structure_ignores_bags():
    t1 = quotient(Graph.path(4), [{1, 2}, {3}, {4}])
    t2 = Trigraph([1, 2, 3], black_edges=[(2, 3)], red_edges=[(1, 2)])
    assert t1.same_structure(t2)
