"""Generators: snaking grids, half-graph cycles, and the 3-SAT reduction."""

import pytest

from twinwidth.trigraph import Graph, Trigraph
from twinwidth.sequence import verify
from twinwidth.oracle import all_min_dominating_sets, is_dominating_set, min_dominating_set
from twinwidth.gadgets import (
    LayoutClause,
    LayoutFormula,
    augmented_snaking_grid,
    column_of,
    fine_dims,
    grid_subdivision_collapse,
    halfgraph_cycle,
    hamiltonian_cycle,
    lift_assignment,
    reduce_3sat,
    removal_ordering,
    snaking_grid,
    validate_instance,
    variable_wire,
)


def test_fine_dims():
    assert fine_dims(2, 2) == (4, 4)
    assert fine_dims(5, 10) == (13, 28)
    assert fine_dims(1, 4) == (1, 10)


def test_snaking_grid_counts():
    sg = snaking_grid(5, 10)
    assert sg.graph.n == 364
    assert sg.graph.edge_count() == 327
    for s, t, n, m in [(2, 2, 16, 14), (3, 3, 49, 44), (4, 2, 40, 36),
                       (1, 2, 4, 3), (1, 4, 10, 9)]:
        g = snaking_grid(s, t).graph
        assert (g.n, g.edge_count()) == (n, m)


def test_snaking_grid_structure():
    sg = snaking_grid(3, 3)
    rows, cols = sg.fine_rows, sg.fine_cols
    at = sg.vertex_at
    g = sg.graph
    # bottom row is fully wired, other rows only in their parity pattern
    for c in range(1, cols):
        assert g.has_edge(at[1, c], at[1, c + 1])
    assert not g.has_edge(at[2, 1], at[2, 2])
    # sparse columns carry full verticals
    for c in (1, 4, 7):
        for r in range(1, rows):
            assert g.has_edge(at[r, c], at[r + 1, c])
    assert not g.has_edge(at[1, 2], at[2, 2])
    assert max(g.degree(v) for v in g.vertices) <= 3
    # fill vertices away from the wall pattern are isolated
    assert g.degree(at[2, 2]) == 0


def test_snaking_grid_rejects_bad_dims():
    with pytest.raises(ValueError):
        snaking_grid(0, 3)
    with pytest.raises(ValueError):
        snaking_grid(2, 1)


def test_hamiltonian_cycle_small():
    assert hamiltonian_cycle(2, 2) == [
        (1, 1), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (4, 4), (4, 3),
        (3, 3), (2, 3), (2, 2), (3, 2), (4, 2), (4, 1), (3, 1), (2, 1)]


def test_hamiltonian_cycle_covers_grid():
    cyc = hamiltonian_cycle(3, 4)
    rows, cols = fine_dims(3, 4)
    assert len(cyc) == rows * cols
    assert len(set(cyc)) == len(cyc)
    assert cyc[0] == (1, 1) and cyc[1] == (1, 2)


def test_hamiltonian_cycle_needs_even_q():
    with pytest.raises(ValueError):
        hamiltonian_cycle(2, 3)
    with pytest.raises(ValueError):
        hamiltonian_cycle(1, 2)


def test_augmented_grid_stays_subcubic():
    for p, q in [(2, 2), (3, 4)]:
        aug = augmented_snaking_grid(p, q)
        assert max(aug.degree(v) for v in aug.vertices) == 3


def test_halfgraph_cycle_widths():
    g, seq = halfgraph_cycle(5, 6)
    assert g.n == 30
    rep = verify(g, seq, bound=3)
    assert rep.ok and rep.width == 3
    assert seq.is_full
    # height 1 gives no edges at all
    g, seq = halfgraph_cycle(4, 1)
    assert verify(g, seq, bound=0).ok
    with pytest.raises(ValueError):
        halfgraph_cycle(2, 3)


def test_grid_subdivision_collapse_red_grid():
    # a fully red 3x3 grid folds column by column within width 4
    red = [(3 * (r - 1) + c, 3 * r + c) for r in range(1, 3) for c in range(1, 4)]
    red += [(3 * (r - 1) + c, 3 * (r - 1) + c + 1) for r in range(1, 4) for c in range(1, 3)]
    t = Trigraph(range(1, 10), red_edges=red)
    embedding = {3 * (r - 1) + c: (r, c) for r in range(1, 4) for c in range(1, 4)}
    seq = grid_subdivision_collapse(t, embedding)
    rep = verify(Graph(range(1, 10), red), seq, bound=4)
    assert rep.ok and rep.width == 4
    assert seq.is_full


def test_grid_subdivision_collapse_path():
    g = Graph.path(5)
    seq = grid_subdivision_collapse(Trigraph.from_graph(g), {c: (1, c) for c in range(1, 6)})
    assert verify(g, seq, bound=2).ok


def test_grid_subdivision_collapse_rejects_bad_embeddings():
    g = Graph([1, 2], [(1, 2)])
    with pytest.raises(ValueError):
        grid_subdivision_collapse(Trigraph.from_graph(g), {1: (1, 1), 2: (1, 3)})
    with pytest.raises(ValueError):
        # diagonal neighbors are not grid-adjacent
        grid_subdivision_collapse(Trigraph.from_graph(g), {1: (1, 1), 2: (2, 2)})
    with pytest.raises(ValueError):
        grid_subdivision_collapse(Trigraph.from_graph(g), {1: (1, 1), 2: (1, 1)})


def test_removal_ordering():
    assert removal_ordering([(1, 2, 3)]) == [0]
    assert removal_ordering([(1, 2, 3), (4, 5, 6)]) == [0, 1]
    # shared middle blocks both orders
    assert removal_ordering([(1, 2, 3), (4, 2, 5)]) is None
    # the wide clause must wait for the narrow one
    assert removal_ordering([(1, 3, 5), (3, 4, 5)]) == [1, 0]


def test_layout_formula_validation():
    with pytest.raises(ValueError):
        LayoutClause("+", 1, (2, 1, 3)) and LayoutFormula(3, [LayoutClause("+", 1, (2, 1, 3))])
    with pytest.raises(ValueError):
        LayoutFormula(3, [LayoutClause("*", 1, (1, 2, 3))])
    with pytest.raises(ValueError):
        LayoutFormula(2, [LayoutClause("+", 1, (1, 2, 3))])
    with pytest.raises(ValueError):  # ranks must be 1..k per family
        LayoutFormula(3, [LayoutClause("+", 2, (1, 2, 3))])
    with pytest.raises(ValueError):  # middle reused later in the family
        LayoutFormula(5, [LayoutClause("+", 1, (1, 2, 3)),
                          LayoutClause("+", 2, (2, 4, 5))])
    with pytest.raises(ValueError):  # enclosed variable still live
        LayoutFormula(5, [LayoutClause("+", 1, (1, 3, 5)),
                          LayoutClause("+", 2, (2, 4, 5))])
    # opposite families do not constrain each other
    LayoutFormula(5, [LayoutClause("+", 1, (1, 3, 5)),
                      LayoutClause("-", 1, (2, 4, 5))])


F1 = LayoutFormula(3, [LayoutClause("+", 1, (1, 2, -3))])
F2 = LayoutFormula(3, [LayoutClause("-", 1, (1, 2, -3))])
F3 = LayoutFormula(4, [LayoutClause("+", 1, (-1, 3, 4)),
                       LayoutClause("-", 1, (1, 2, 4))])
F4 = LayoutFormula(4, [LayoutClause("+", 1, (2, 3, 4)),
                       LayoutClause("+", 2, (1, 2, 4))])
F5 = LayoutFormula(5, [LayoutClause("+", 1, (1, 2, 3)),
                       LayoutClause("-", 1, (3, 4, 5)),
                       LayoutClause("+", 2, (1, 3, 5))])

MICRO = [
    # formula, parts, vertices, edges, steps, satisfying, falsifying
    (F1, 40, 113, 127, 73, {1: True, 2: False, 3: False}, {1: False, 2: False, 3: True}),
    (F2, 40, 97, 99, 57, {1: True, 2: False, 3: False}, {1: False, 2: False, 3: True}),
    (F3, 70, 228, 277, 158, {1: False, 2: True, 3: True, 4: False},
     {1: True, 2: False, 3: False, 4: False}),
    (F4, 70, 244, 305, 174, {1: True, 2: True, 3: True, 4: True},
     {1: False, 2: False, 3: False, 4: False}),
    (F5, 160, 411, 440, 251, {1: True, 2: False, 3: True, 4: False, 5: False},
     {1: False, 2: False, 3: False, 4: False, 5: False}),
]


@pytest.mark.parametrize("f,parts,n,m,steps,good,bad", MICRO)
def test_reduce_3sat_micro(f, parts, n, m, steps, good, bad):
    red = reduce_3sat(f)
    inst = red.instance
    assert len(inst.parts) == parts
    assert inst.graph.n == n
    assert inst.graph.edge_count() == m
    assert len(inst.witness.steps) == steps
    validate_instance(inst)
    rep = verify(inst.graph, inst.witness, bound=4)
    assert rep.ok and rep.width == 4
    lifted = lift_assignment(red, good)
    assert len(lifted) == parts
    assert is_dominating_set(inst.graph, lifted)
    assert not is_dominating_set(inst.graph, lift_assignment(red, bad))


def test_reduce_3sat_layout_details():
    red = reduce_3sat(F1)
    # variable row at the bottom when no lower clauses exist
    assert red.variable_row == 1
    assert red.gadgets[1, column_of(1)].kind == "initial"
    assert red.gadgets[1, column_of(4)].kind == "initial"  # padding variable
    # the clause sits one row under its nominal row, above its middle
    assert red.gadgets[3, column_of(2)].kind == "clause"
    red2 = reduce_3sat(F2)
    assert red2.variable_row == 4
    assert red2.gadgets[1, column_of(2)].kind == "clause"


def test_lift_assignment_padding_defaults_true():
    red = reduce_3sat(F1)
    full = lift_assignment(red, {1: True, 2: True, 3: True})
    tops = red.gadgets[1, column_of(4)].members["top"]
    assert tops in full


@pytest.mark.parametrize("parents", [
    [None, 0],
    [None, 0, 1], [None, 0, 0],
    [None, 0, 1, 2], [None, 0, 0, 0], [None, 0, 1, 1], [None, 0, 0, 1],
])
def test_wire_has_two_min_dominating_sets(parents):
    w = variable_wire(parents)
    size, _ = min_dominating_set(w.graph)
    assert size == len(parents)
    mins = all_min_dominating_sets(w.graph)
    tops = frozenset(mem["top"] for mem in w.gadgets)
    bots = frozenset(mem["bot"] for mem in w.gadgets)
    assert sorted(mins, key=sorted) == sorted([tops, bots], key=sorted)


def test_single_gadget_wire_is_symmetric():
    # a lone triangle has three optimum dominating sets, not two
    w = variable_wire([None])
    assert len(all_min_dominating_sets(w.graph)) == 3
