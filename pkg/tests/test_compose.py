"""OR-composition: dummy rows, position schedule, and OR-semantics."""

from collections import Counter

import pytest

from twinwidth.trigraph import Graph
from twinwidth.sequence import ContractionSequence, verify
from twinwidth.oracle import min_dominating_set
from twinwidth.gadgets import (
    AnnotatedInstance,
    LayoutClause,
    LayoutFormula,
    fine_dims,
    hamiltonian_cycle,
    reduce_3sat,
    validate_instance,
)
from twinwidth.compose import (
    classify_positions,
    make_dummy,
    or_cross_compose,
    stage2_order,
)


def _singleton_instance(p, q):
    """Budget-N yes-instance: N isolated vertices, one per class."""
    rows, cols = fine_dims(p, q)
    n = rows * cols
    cyc = hamiltonian_cycle(p, q)
    return AnnotatedInstance(
        Graph(range(1, n + 1)),
        tuple(frozenset([v]) for v in range(1, n + 1)),
        p, q,
        {j: cyc[j] for j in range(n)},
        ContractionSequence(n, []),
    )


def test_make_dummy_is_a_no_instance():
    inst = make_dummy(16, 2, 2)
    validate_instance(inst)
    assert inst.graph.n == 32
    assert all(len(part) == 2 for part in inst.parts)
    # every vertex is isolated, so domination needs all of them
    size, _ = min_dominating_set(inst.graph, cap=32)
    assert size == 32
    with pytest.raises(ValueError):
        make_dummy(15, 2, 2)


def test_classify_positions_frozen_counts():
    def hist(p, q):
        return Counter(v if isinstance(v, str) else "path"
                       for v in classify_positions(p, q).values())

    assert hist(2, 2) == {"blue": 14, "purple": 2}
    assert hist(2, 4) == {"blue": 28, "purple": 10, "orange": 2}
    assert hist(3, 4) == {"blue": 40, "purple": 12, "orange": 2, "path": 16}


def test_stage2_order_is_a_permutation_by_class():
    for p, q in [(2, 2), (2, 4), (3, 4)]:
        classes = classify_positions(p, q)
        order = stage2_order(p, q)
        assert sorted(order) == sorted(classes)
        seen_rank = {"blue": 0, "purple": 1, "orange": 2, "path": 3}
        ranks = [seen_rank[c if isinstance(c, str) else "path"]
                 for c in (classes[pt] for pt in order)]
        assert ranks == sorted(ranks)
        # band positions come in their snake order
        band = [classes[pt][1] for pt in order if isinstance(classes[pt], tuple)]
        assert band == sorted(band)


def test_compose_rejects_mismatched_inputs():
    with pytest.raises(ValueError):
        or_cross_compose([])
    with pytest.raises(ValueError):
        or_cross_compose([_singleton_instance(2, 2), make_dummy(160, 2, 4)])


def test_compose_or_semantics_synthetic():
    n = 16
    yes = _singleton_instance(2, 2)
    no = make_dummy(n, 2, 2)

    pos = or_cross_compose([yes, no])
    assert pos.graph.n == 80
    rep = verify(pos.graph, pos.witness, bound=4)
    assert rep.ok and rep.width == 3
    blocks = pos.forced_parts()
    assert len(blocks) == n
    assert sorted(map(len, blocks)) == [5] * n
    assert set().union(*blocks) == set(pos.graph.vertices)
    size, ds = min_dominating_set(pos.graph, forced_hit_parts=blocks, max_size=n)
    assert size == n
    assert all(len(set(ds) & b) == 1 for b in blocks)

    neg = or_cross_compose([no, no])
    assert verify(neg.graph, neg.witness, bound=4).ok
    size, _ = min_dominating_set(neg.graph, forced_hit_parts=neg.forced_parts(),
                                 max_size=n)
    assert size is None


def test_compose_edge_taxonomy():
    comp = or_cross_compose([_singleton_instance(2, 2), make_dummy(16, 2, 2)])
    n_cols = comp.budget
    for u, v in comp.graph.edges():
        (ru, cu), (rv, cv) = comp.provenance[u], comp.provenance[v]
        if ru == rv:
            continue  # edge inside one stacked instance
        lo, hi = ((ru, cu), (rv, cv)) if ru < rv else ((rv, cv), (ru, cu))
        assert hi[1] == lo[1] % n_cols + 1  # deeper endpoint one column on


def test_compose_columns_cover_real_rows():
    comp = or_cross_compose([_singleton_instance(2, 2)])
    real = {v for v, (row, _) in comp.provenance.items() if row < comp.rows}
    assert set().union(*comp.columns) == real
    assert len(comp.columns) == comp.budget


def test_compose_reduced_formulas():
    f1 = LayoutFormula(3, [LayoutClause("+", 1, (1, 2, -3))])
    f2 = LayoutFormula(3, [LayoutClause("-", 1, (1, 2, -3))])
    comp = or_cross_compose([reduce_3sat(f1).instance, reduce_3sat(f2).instance])
    assert comp.graph.n == 290
    rep = verify(comp.graph, comp.witness, bound=4)
    assert rep.ok and rep.width == 4
    assert comp.witness.is_full
    # both formulas are satisfiable, so the composition is positive
    size, _ = min_dominating_set(comp.graph, forced_hit_parts=comp.forced_parts(),
                                 max_size=comp.budget)
    assert size == comp.budget


@pytest.mark.parametrize("p,q", [(2, 2), (2, 4), (3, 4)])
def test_compose_degree_audit_across_dims(p, q):
    rows, cols = fine_dims(p, q)
    n = rows * cols
    for t in (1, 2, 3):
        comp = or_cross_compose([make_dummy(n, p, q) for _ in range(t)])
        assert verify(comp.graph, comp.witness, bound=4).ok
