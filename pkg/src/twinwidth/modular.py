"""Maximal modular partitions and trace classes.

A module of G is a vertex set whose members are indistinguishable from
outside: every other vertex sees all of it or none of it.  For a graph
with at least two vertices the maximal modular partition is

  * the connected components, when G is disconnected,
  * the co-components, when the complement is disconnected,
  * the maximal proper modules, when both are connected; in that case
    the quotient is prime (only trivial modules) and all-red edges play
    no role since distinct maximal modules see each other homogeneously.

Width composes over this partition: the width of G is the larger of the
quotient's width and the worst width among the parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple

from .trigraph import Graph, Trigraph, is_module, quotient, validate_partition


@dataclass(frozen=True)
class ModularPartition:
    parts: Tuple[FrozenSet[int], ...]
    kind: str  # "components" | "cocomponents" | "maximal"

    @property
    def is_trivial(self) -> bool:
        """All classes are singletons (the graph is prime or too small)."""
        return all(len(p) == 1 for p in self.parts)


def _closure(g: Graph, seed: Set[int]) -> Set[int]:
    """Smallest module containing seed: repeatedly absorb splitters."""
    mod = set(seed)
    changed = True
    while changed:
        changed = False
        for w in g.vertices - mod:
            inter = g.adj[w] & mod
            if inter and inter != mod:
                mod.add(w)
                changed = True
                break
    return mod


def _maximal_proper_module(g: Graph, v: int) -> Set[int]:
    """Largest module containing v that is not all of V (may be {v})."""
    best = {v}
    for u in sorted(g.vertices - {v}):
        cand = _closure(g, best | {u})
        if cand != g.vertices:
            best = cand
    return best


def maximal_modular_partition(g: Graph) -> ModularPartition:
    if g.n <= 1:
        raise ValueError("modular partition needs at least two vertices")
    comps = g.components()
    if len(comps) > 1:
        parts = tuple(frozenset(c) for c in sorted(comps, key=min))
        return ModularPartition(parts, "components")
    cocomps = g.complement().components()
    if len(cocomps) > 1:
        parts = tuple(frozenset(c) for c in sorted(cocomps, key=min))
        return ModularPartition(parts, "cocomponents")

    # both connected: grow a maximal proper module from each uncovered vertex
    parts_list: List[Set[int]] = []
    covered: Set[int] = set()
    for v in sorted(g.vertices):
        if v in covered:
            continue
        m = _maximal_proper_module(g, v)
        assert is_module(g, m), "grown set is not a module"
        assert not (m & covered), "maximal modules overlapped"
        parts_list.append(m)
        covered |= m
    assert covered == g.vertices
    parts = tuple(frozenset(p) for p in sorted(parts_list, key=min))
    validate_partition(g.vertices, [set(p) for p in parts])
    return ModularPartition(parts, "maximal")


def partition_quotient(g: Graph, mp: ModularPartition) -> Trigraph:
    """Quotient trigraph of the partition; modules make every edge black."""
    q = quotient(g, [set(p) for p in mp.parts])
    assert not q.red_edges(), "module quotient produced a red edge"
    return q


def is_prime(g: Graph) -> bool:
    """No module other than singletons, V, and the empty set.

    Prime graphs have at least 4 vertices (P4 is the smallest).
    """
    if g.n <= 3:
        return False
    mp = maximal_modular_partition(g)
    return mp.kind == "maximal" and mp.is_trivial


def trace_classes(g: Graph, x: Set[int]) -> Dict[FrozenSet[int], List[int]]:
    """Group the vertices outside x by their neighbourhood inside x.

    Returned keys are trace sets (frozen subsets of x), values sorted
    vertex lists.  Vertices with empty trace are included under
    frozenset().
    """
    if not x <= g.vertices:
        raise ValueError("trace base is not a subset of the vertices")
    out: Dict[FrozenSet[int], List[int]] = {}
    for v in sorted(g.vertices - x):
        key = frozenset(g.adj[v] & x)
        out.setdefault(key, []).append(v)
    return out
